#include "fpsrev/graded_matrix.hpp"

#include "fpsrev/error.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace fpsrev {

GradedBlock::GradedBlock(unsigned nvars, unsigned row_weight, unsigned col_weight)
    : nvars_(nvars),
      row_weight_(row_weight),
      col_weight_(col_weight),
      rows_(count_weight(nvars, row_weight)),
      cols_(count_weight(nvars, col_weight)),
      entries_(rows_ * cols_)
{}

GradedBlock GradedBlock::identity(unsigned nvars, unsigned weight)
{
    GradedBlock out(nvars, weight, weight);
    for (std::size_t i = 0; i < out.rows_; ++i) {
        out.at(i, i) = Rational::one();
    }
    return out;
}

const Rational& GradedBlock::at(const MultiIndex& row, const MultiIndex& col) const
{
    if (row.weight() != row_weight_ || col.weight() != col_weight_) {
        throw Error(ErrorCode::InvalidArgument, "index weight does not match the block");
    }
    return at(rank_in_weight(row), rank_in_weight(col));
}

Rational& GradedBlock::at(const MultiIndex& row, const MultiIndex& col)
{
    if (row.weight() != row_weight_ || col.weight() != col_weight_) {
        throw Error(ErrorCode::InvalidArgument, "index weight does not match the block");
    }
    return at(rank_in_weight(row), rank_in_weight(col));
}

bool GradedBlock::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

void GradedBlock::require_same_shape(const GradedBlock& o) const
{
    if (nvars_ != o.nvars_ || row_weight_ != o.row_weight_ || col_weight_ != o.col_weight_) {
        throw Error(ErrorCode::ContextMismatch, "blocks of different shape");
    }
}

GradedBlock& GradedBlock::operator+=(const GradedBlock& o)
{
    require_same_shape(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += o.entries_[k];
    }
    return *this;
}

GradedBlock& GradedBlock::operator-=(const GradedBlock& o)
{
    require_same_shape(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= o.entries_[k];
    }
    return *this;
}

GradedBlock& GradedBlock::operator*=(const Rational& c)
{
    for (auto& e : entries_) {
        e *= c;
    }
    return *this;
}

GradedBlock odot_block(const GradedBlock& a, const GradedBlock& b)
{
    if (a.nvars() != b.nvars()) {
        throw Error(ErrorCode::ContextMismatch, "symmetric product of blocks over different n");
    }
    const unsigned n = a.nvars();
    GradedBlock c(n, a.row_weight() + b.row_weight(), a.col_weight() + b.col_weight());

    const auto a_rows = enumerate_weight(n, a.row_weight());
    const auto a_cols = enumerate_weight(n, a.col_weight());
    const auto b_rows = enumerate_weight(n, b.row_weight());
    const auto b_cols = enumerate_weight(n, b.col_weight());

    // Row ranks of every β' + γ' pair, computed once.
    std::vector<std::size_t> row_target(a_rows.size() * b_rows.size());
    for (std::size_t r1 = 0; r1 < a_rows.size(); ++r1) {
        for (std::size_t r2 = 0; r2 < b_rows.size(); ++r2) {
            row_target[r1 * b_rows.size() + r2] = rank_in_weight(add(a_rows[r1], b_rows[r2]));
        }
    }

    Rational term;
    for (std::size_t c1 = 0; c1 < a_cols.size(); ++c1) {
        for (std::size_t c2 = 0; c2 < b_cols.size(); ++c2) {
            const MultiIndex alpha = add(a_cols[c1], b_cols[c2]);
            const std::size_t col = rank_in_weight(alpha);
            const Rational weight(mi_binomial(alpha, a_cols[c1]));
            for (std::size_t r1 = 0; r1 < a_rows.size(); ++r1) {
                const Rational& x = a.at(r1, c1);
                if (x.is_zero()) {
                    continue;
                }
                term = weight * x;
                for (std::size_t r2 = 0; r2 < b_rows.size(); ++r2) {
                    const Rational& y = b.at(r2, c2);
                    if (y.is_zero()) {
                        continue;
                    }
                    c.at(row_target[r1 * b_rows.size() + r2], col).add_product(term, y);
                }
            }
        }
    }
    return c;
}

GradedBlock odot_power(const GradedBlock& a, unsigned m)
{
    GradedBlock out = GradedBlock::identity(a.nvars(), 0);
    for (unsigned i = 0; i < m; ++i) {
        out = odot_block(out, a);
    }
    return out;
}

GradedBlock matmul(const GradedBlock& a, const GradedBlock& b)
{
    if (a.nvars() != b.nvars() || a.col_weight() != b.row_weight()) {
        throw Error(ErrorCode::ContextMismatch, "block product with mismatched inner weight");
    }
    GradedBlock c(a.nvars(), a.row_weight(), b.col_weight());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& x = a.at(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& y = b.at(k, j);
                if (!y.is_zero()) {
                    c.at(i, j).add_product(x, y);
                }
            }
        }
    }
    return c;
}

BlockMatrix BlockMatrix::mat_one(const SeriesContext& ctx)
{
    BlockMatrix out(ctx);
    out.set_block(GradedBlock::identity(ctx.nvars, 0));
    return out;
}

BlockMatrix BlockMatrix::e_one(const SeriesContext& ctx)
{
    BlockMatrix out(ctx);
    out.set_block(GradedBlock::identity(ctx.nvars, 1));
    return out;
}

BlockMatrix BlockMatrix::e_infinity(const SeriesContext& ctx)
{
    BlockMatrix out(ctx);
    for (unsigned p = 0; p <= ctx.degree_cap; ++p) {
        out.set_block(GradedBlock::identity(ctx.nvars, p));
    }
    return out;
}

GradedBlock BlockMatrix::block(unsigned row_weight, unsigned col_weight) const
{
    if (auto it = blocks_.find({row_weight, col_weight}); it != blocks_.end()) {
        return it->second;
    }
    return GradedBlock(ctx_.nvars, row_weight, col_weight);
}

bool BlockMatrix::has_block(unsigned row_weight, unsigned col_weight) const
{
    return blocks_.contains({row_weight, col_weight});
}

void BlockMatrix::set_block(GradedBlock b)
{
    if (b.nvars() != ctx_.nvars) {
        throw Error(ErrorCode::ContextMismatch, "block over the wrong number of variables");
    }
    const Key key{b.row_weight(), b.col_weight()};
    if (key.first > ctx_.degree_cap || key.second > ctx_.degree_cap || b.is_zero()) {
        blocks_.erase(key);
        return;
    }
    blocks_.insert_or_assign(key, std::move(b));
}

void BlockMatrix::add_to_block(const GradedBlock& b)
{
    if (b.row_weight() > ctx_.degree_cap || b.col_weight() > ctx_.degree_cap) {
        return;
    }
    auto it = blocks_.find({b.row_weight(), b.col_weight()});
    if (it == blocks_.end()) {
        set_block(b);
        return;
    }
    it->second += b;
    if (it->second.is_zero()) {
        blocks_.erase(it);
    }
}

BlockMatrix& BlockMatrix::operator+=(const BlockMatrix& o)
{
    require_same_context(ctx_, o.ctx_);
    for (const auto& [key, b] : o.blocks_) {
        add_to_block(b);
    }
    return *this;
}

BlockMatrix& BlockMatrix::operator-=(const BlockMatrix& o)
{
    require_same_context(ctx_, o.ctx_);
    for (const auto& [key, b] : o.blocks_) {
        add_to_block(b * Rational(-1));
    }
    return *this;
}

BlockMatrix& BlockMatrix::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        blocks_.clear();
        return *this;
    }
    for (auto& [key, b] : blocks_) {
        b *= c;
    }
    return *this;
}

BlockMatrix odot(const BlockMatrix& a, const BlockMatrix& b)
{
    require_same_context(a.context(), b.context());
    const unsigned cap = a.context().degree_cap;
    BlockMatrix out(a.context());
    for (const auto& [ka, ba] : a.blocks()) {
        for (const auto& [kb, bb] : b.blocks()) {
            if (ka.first + kb.first > cap || ka.second + kb.second > cap) {
                continue;
            }
            out.add_to_block(odot_block(ba, bb));
        }
    }
    return out;
}

BlockMatrix odot_power(const BlockMatrix& a, unsigned m)
{
    BlockMatrix out = BlockMatrix::mat_one(a.context());
    for (unsigned i = 0; i < m; ++i) {
        out = odot(out, a);
    }
    return out;
}

BlockMatrix odot_exp(const BlockMatrix& a)
{
    for (const auto& [key, b] : a.blocks()) {
        if (key.first == 0 || key.second == 0) {
            throw Error(ErrorCode::InvalidArgument, "odot_exp needs blocks with positive row and column weight; found ("
                                                        + std::to_string(key.first) + ","
                                                        + std::to_string(key.second) + ")");
        }
    }
    BlockMatrix sum = BlockMatrix::mat_one(a.context());
    BlockMatrix power = BlockMatrix::mat_one(a.context());
    Integer fact = 1;
    for (unsigned i = 1;; ++i) {
        power = odot(power, a);
        if (power.empty()) {
            break;
        }
        fact *= i;
        sum += power * Rational(Integer(1), fact);
    }
    return sum;
}

BlockMatrix block_mul(const BlockMatrix& a, const BlockMatrix& b)
{
    require_same_context(a.context(), b.context());
    BlockMatrix out(a.context());
    for (const auto& [ka, ba] : a.blocks()) {
        auto lo = b.blocks().lower_bound({ka.second, 0});
        for (auto it = lo; it != b.blocks().end() && it->first.first == ka.second; ++it) {
            out.add_to_block(matmul(ba, it->second));
        }
    }
    return out;
}

BlockMatrix block_power(const BlockMatrix& a, unsigned m)
{
    BlockMatrix out = BlockMatrix::e_infinity(a.context());
    for (unsigned i = 0; i < m; ++i) {
        out = block_mul(out, a);
    }
    return out;
}

BlockMatrix from_series(const TruncatedSeriesMap& phi)
{
    const auto& ctx = phi.context();
    std::map<unsigned, GradedBlock> columns;
    for (std::size_t j = 0; j < ctx.nvars; ++j) {
        for (const auto& [a, c] : phi.component(j).terms()) {
            const unsigned w = a.weight();
            auto it = columns.try_emplace(w, ctx.nvars, w, 1U).first;
            it->second.at(rank_in_weight(a), j) = c;
        }
    }
    BlockMatrix out(ctx);
    for (auto& [w, b] : columns) {
        out.set_block(std::move(b));
    }
    return out;
}

TruncatedSeriesMap to_series(const BlockMatrix& m)
{
    const auto& ctx = m.context();
    TruncatedSeriesMap out(ctx);
    for (const auto& [key, b] : m.blocks()) {
        if (key.second != 1) {
            throw Error(ErrorCode::InvalidArgument, "to_series needs blocks in column weight 1 only; found ("
                                                        + std::to_string(key.first) + ","
                                                        + std::to_string(key.second) + ")");
        }
        if (key.first == 0) {
            throw Error(ErrorCode::ConstantTerm, "block (0,1) would give a constant term");
        }
        const auto rows = enumerate_weight(ctx, key.first);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t j = 0; j < ctx.nvars; ++j) {
                out.add_term(j, rows[r], b.at(r, j));
            }
        }
    }
    return out;
}

TruncatedSeriesMap compose_via_matrix(const TruncatedSeriesMap& outer, const TruncatedSeriesMap& inner)
{
    require_same_context(outer.context(), inner.context());
    return to_series(block_mul(odot_exp(from_series(inner)), from_series(outer)));
}

BlockMatrix matrix_power_of_iterate(const TruncatedSeriesMap& phi, unsigned m)
{
    if (m == 0) {
        throw Error(ErrorCode::InvalidArgument, "iterate matrix needs m >= 1");
    }
    const BlockMatrix e = odot_exp(from_series(phi));
    BlockMatrix out = BlockMatrix::e_one(phi.context());
    for (unsigned i = 0; i < m; ++i) {
        out = block_mul(e, out);
    }
    return out;
}

namespace {

void write_index(std::ostream& os, const MultiIndex& a)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i != 0) {
            os << ' ';
        }
        os << a[i];
    }
}

} // namespace

void dump(std::ostream& os, const BlockMatrix& m)
{
    const unsigned n = m.context().nvars;
    for (const auto& [key, b] : m.blocks()) {
        const auto rows = enumerate_weight(n, key.first);
        const auto cols = enumerate_weight(n, key.second);
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) {
                const Rational& v = b.at(r, c);
                if (v.is_zero()) {
                    continue;
                }
                os << key.first << ' ' << key.second << " | ";
                write_index(os, rows[r]);
                os << " | ";
                write_index(os, cols[c]);
                os << " | " << v << '\n';
            }
        }
    }
}

} // namespace fpsrev
