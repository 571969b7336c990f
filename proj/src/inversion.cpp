#include "fpsrev/inversion.hpp"

#include "fpsrev/error.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace fpsrev {

namespace {

// Linear coefficients as a matrix: entry (i, j) is the coefficient of x_i in φ_j.
std::vector<std::vector<Rational>> linear_part(const TruncatedSeriesMap& phi)
{
    const auto n = phi.nvars();
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i][j] = phi.coefficient(j, MultiIndex::unit(n, i));
        }
    }
    return out;
}

std::string format_matrix(const std::vector<std::vector<Rational>>& m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i != 0) {
            os << "; ";
        }
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (j != 0) {
                os << ' ';
            }
            os << m[i][j];
        }
    }
    os << ']';
    return os.str();
}

} // namespace

const TruncatedSeriesMap& require_unit_tangent(const TruncatedSeriesMap& phi)
{
    const auto lin = linear_part(phi);
    for (std::size_t i = 0; i < lin.size(); ++i) {
        for (std::size_t j = 0; j < lin.size(); ++j) {
            if (lin[i][j] != Rational(i == j ? 1 : 0)) {
                throw Error(ErrorCode::NonIdentityLinearPart,
                            "linear part is not the identity: " + format_matrix(lin));
            }
        }
    }
    return phi;
}

PhiSequence::PhiSequence(TruncatedSeriesMap phi) : base_(std::move(phi))
{
    terms_.push_back(identity_map(base_.context()));
}

TruncatedSeriesMap PhiSequence::term(unsigned m) const
{
    std::lock_guard lock(mutex_);
    while (terms_.size() <= m) {
        const TruncatedSeriesMap& last = terms_.back();
        terms_.push_back(last - compose(last, base_));
    }
    return terms_[m];
}

std::size_t PhiSequence::materialized() const
{
    std::lock_guard lock(mutex_);
    return terms_.size();
}

TruncatedSeriesMap phi_term(const PhiSequence& seq, unsigned m)
{
    return seq.term(m);
}

TruncatedSeriesMap invert_neumann(const TruncatedSeriesMap& phi)
{
    require_unit_tangent(phi);
    const unsigned cap = phi.degree_cap();
    PhiSequence seq(phi);
    TruncatedSeriesMap out = identity_map(phi.context());
    for (unsigned m = 1; m <= cap; ++m) {
        const TruncatedSeriesMap term = seq.term(m);
        const auto ord = order(term);
        if (ord && *ord < m + 1) {
            throw Error(ErrorCode::VerificationMismatch,
                        "order(Phi_" + std::to_string(m) + ") = " + std::to_string(*ord) + " < " + std::to_string(m + 1));
        }
        if (m < cap) {
            out += term;
        } else if (!term.is_zero()) {
            throw Error(ErrorCode::VerificationMismatch, "Phi_D does not vanish under truncation");
        }
    }
    return out;
}

namespace {

// Partitions of total into exactly parts positive parts, each at most
// max_part, as multiplicity vectors indexed by part size (slot 0 unused).
void for_each_partition(unsigned total, unsigned parts, unsigned max_part,
                        const std::function<void(const std::vector<unsigned>&)>& visit)
{
    std::vector<unsigned> mult(max_part + 1, 0);
    std::function<void(unsigned, unsigned, unsigned)> rec = [&](unsigned remaining, unsigned left, unsigned largest) {
        if (left == 0) {
            if (remaining == 0) {
                visit(mult);
            }
            return;
        }
        // Each remaining part is at least 1 and at most largest.
        if (remaining < left || remaining > left * largest) {
            return;
        }
        for (unsigned part = std::min(largest, remaining - (left - 1)); part >= 1; --part) {
            ++mult[part];
            rec(remaining - part, left - 1, part);
            --mult[part];
        }
    };
    rec(total, parts, max_part);
}

class ColumnBlockPowers {
public:
    explicit ColumnBlockPowers(const BlockMatrix& m) : m_(m) {}

    const GradedBlock& power(unsigned j, unsigned e)
    {
        const auto key = std::make_pair(j, e);
        if (auto it = cache_.find(key); it != cache_.end()) {
            return it->second;
        }
        GradedBlock value = e == 0 ? GradedBlock::identity(m_.context().nvars, 0)
                                   : odot_block(power(j, e - 1), m_.block(j, 1));
        return cache_.emplace(key, std::move(value)).first->second;
    }

private:
    const BlockMatrix& m_;
    std::map<std::pair<unsigned, unsigned>, GradedBlock> cache_;
};

} // namespace

TruncatedSeriesMap invert_recurrence(const TruncatedSeriesMap& phi)
{
    require_unit_tangent(phi);
    const auto& ctx = phi.context();
    const unsigned cap = ctx.degree_cap;
    const BlockMatrix m = from_series(phi);
    ColumnBlockPowers powers(m);

    std::vector<GradedBlock> inverse_blocks;
    inverse_blocks.reserve(cap + 1);
    inverse_blocks.emplace_back(ctx.nvars, 0, 1);
    inverse_blocks.push_back(m.block(1, 1));

    for (unsigned target = 2; target <= cap; ++target) {
        GradedBlock acc(ctx.nvars, target, 1);
        for (unsigned k = 1; k < target; ++k) {
            if (inverse_blocks[k].is_zero()) {
                continue;
            }
            GradedBlock exp_block(ctx.nvars, target, k);
            for_each_partition(target, k, target - k + 1, [&](const std::vector<unsigned>& mult) {
                GradedBlock product = GradedBlock::identity(ctx.nvars, 0);
                Integer denom = 1;
                for (unsigned j = 1; j < mult.size(); ++j) {
                    if (mult[j] == 0) {
                        continue;
                    }
                    if (!m.has_block(j, 1)) {
                        return;
                    }
                    product = odot_block(product, powers.power(j, mult[j]));
                    denom *= factorial(mult[j]);
                }
                exp_block += product * Rational(Integer(1), denom);
            });
            acc += matmul(exp_block, inverse_blocks[k]);
        }
        acc *= Rational(-1);
        inverse_blocks.push_back(std::move(acc));
    }

    BlockMatrix assembled(ctx);
    for (unsigned w = 1; w <= cap; ++w) {
        assembled.set_block(inverse_blocks[w]);
    }
    return to_series(assembled);
}

TruncatedSeriesMap invert_fixpoint(const TruncatedSeriesMap& phi)
{
    require_unit_tangent(phi);
    const TruncatedSeriesMap id = identity_map(phi.context());
    const TruncatedSeriesMap tail = phi - id;
    TruncatedSeriesMap psi = id;
    for (unsigned round = 0; round < phi.degree_cap(); ++round) {
        psi = id - compose(tail, psi);
    }
    return psi;
}

namespace {

std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> a)
{
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        inv[i][i] = Rational::one();
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            throw Error(ErrorCode::NonIdentityLinearPart, "linear part is singular: " + format_matrix(a));
        }
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) {
                continue;
            }
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

TruncatedSeriesMap invert_general(const TruncatedSeriesMap& phi)
{
    const auto& ctx = phi.context();
    const auto n = ctx.nvars;
    // A linear map x ↦ xL has inverse x ↦ xL^{-1}; component j of that is
    // Σ_i (L^{-1})_{ij} x_i.
    const auto inv = invert_matrix(linear_part(phi));
    TruncatedSeriesMap lin_inv(ctx);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            lin_inv.add_term(j, MultiIndex::unit(n, i), inv[i][j]);
        }
    }
    const TruncatedSeriesMap normalized = compose(lin_inv, phi);
    return compose(invert_neumann(normalized), lin_inv);
}

TailIdentityResult check_tail_identity(const PhiSequence& seq, unsigned m0)
{
    const auto& phi = seq.base();
    require_unit_tangent(phi);
    const unsigned cap = phi.degree_cap();
    TailIdentityResult out{false, seq.term(m0), zero_map(phi.context()), zero_map(phi.context())};
    // Φ_m ∘ φ has order >= m+1, so terms with m >= D vanish.
    for (unsigned m = m0; m < cap; ++m) {
        out.tail_sum += compose(seq.term(m), phi);
    }
    out.difference = out.phi_m0 - out.tail_sum;
    out.holds = out.difference.is_zero();
    return out;
}

TailIdentityResult check_tail_identity(const TruncatedSeriesMap& phi, unsigned m0)
{
    require_unit_tangent(phi);
    const PhiSequence seq(phi);
    return check_tail_identity(seq, m0);
}

BlockMatrix neumann_matrix_term(const TruncatedSeriesMap& phi, unsigned m)
{
    const auto& ctx = phi.context();
    const BlockMatrix deficit = BlockMatrix::e_infinity(ctx) - odot_exp(from_series(phi));
    BlockMatrix out = BlockMatrix::e_one(ctx);
    for (unsigned i = 0; i < m; ++i) {
        out = block_mul(deficit, out);
    }
    return out;
}

} // namespace fpsrev
