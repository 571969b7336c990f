#include "fpsrev/series.hpp"

#include "fpsrev/error.hpp"

#include <algorithm>
#include <string>

namespace fpsrev {

TruncatedSeriesMap::TruncatedSeriesMap(const SeriesContext& ctx)
    : ctx_(ctx), components_(ctx.nvars, Polynomial(ctx.nvars))
{}

TruncatedSeriesMap::TruncatedSeriesMap(const SeriesContext& ctx, std::vector<Polynomial> components) : ctx_(ctx)
{
    if (components.size() != ctx.nvars) {
        throw Error(ErrorCode::ContextMismatch, "component count " + std::to_string(components.size())
                                                    + " does not match nvars " + std::to_string(ctx.nvars));
    }
    components_.reserve(components.size());
    for (auto& c : components) {
        if (c.nvars() != ctx.nvars) {
            throw Error(ErrorCode::ContextMismatch, "component over the wrong number of variables");
        }
        if (!c.coefficient(MultiIndex(ctx.nvars)).is_zero()) {
            throw Error(ErrorCode::ConstantTerm, "series maps must have zero constant term");
        }
        components_.push_back(c.truncated(ctx.degree_cap));
    }
}

TruncatedSeriesMap TruncatedSeriesMap::identity(const SeriesContext& ctx)
{
    TruncatedSeriesMap out(ctx);
    for (std::size_t j = 0; j < ctx.nvars; ++j) {
        out.components_[j] = Polynomial::variable(ctx.nvars, j);
    }
    return out;
}

Rational TruncatedSeriesMap::coefficient(std::size_t j, const MultiIndex& a) const
{
    return components_.at(j).coefficient(a);
}

void TruncatedSeriesMap::add_term(std::size_t j, const MultiIndex& a, const Rational& c)
{
    const unsigned w = a.weight();
    if (w == 0) {
        throw Error(ErrorCode::ConstantTerm, "series maps must have zero constant term");
    }
    if (w > ctx_.degree_cap) {
        return;
    }
    components_.at(j).add_term(a, c);
}

bool TruncatedSeriesMap::is_zero() const
{
    return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::size_t TruncatedSeriesMap::term_count() const
{
    std::size_t total = 0;
    for (const auto& c : components_) {
        total += c.term_count();
    }
    return total;
}

TruncatedSeriesMap& TruncatedSeriesMap::operator+=(const TruncatedSeriesMap& o)
{
    require_same_context(ctx_, o.ctx_);
    for (std::size_t j = 0; j < components_.size(); ++j) {
        components_[j] += o.components_[j];
    }
    return *this;
}

TruncatedSeriesMap& TruncatedSeriesMap::operator-=(const TruncatedSeriesMap& o)
{
    require_same_context(ctx_, o.ctx_);
    for (std::size_t j = 0; j < components_.size(); ++j) {
        components_[j] -= o.components_[j];
    }
    return *this;
}

TruncatedSeriesMap& TruncatedSeriesMap::operator*=(const Rational& c)
{
    for (auto& comp : components_) {
        comp *= c;
    }
    return *this;
}

TruncatedSeriesMap identity_map(const SeriesContext& ctx)
{
    return TruncatedSeriesMap::identity(ctx);
}

TruncatedSeriesMap zero_map(const SeriesContext& ctx)
{
    return TruncatedSeriesMap::zero(ctx);
}

TruncatedSeriesMap scale(const TruncatedSeriesMap& f, const Rational& c)
{
    return f * c;
}

TruncatedSeriesMap compose(const TruncatedSeriesMap& outer, const TruncatedSeriesMap& inner)
{
    require_same_context(outer.context(), inner.context());
    auto comps = substitute(outer.components(), inner.components(), outer.degree_cap());
    return TruncatedSeriesMap(outer.context(), std::move(comps));
}

TruncatedSeriesMap iterate(const TruncatedSeriesMap& f, unsigned k)
{
    TruncatedSeriesMap out = identity_map(f.context());
    for (unsigned i = 0; i < k; ++i) {
        out = compose(f, out);
    }
    return out;
}

std::optional<unsigned> order(const TruncatedSeriesMap& f)
{
    std::optional<unsigned> best;
    for (const auto& c : f.components()) {
        if (auto o = c.order(); o && (!best || *o < *best)) {
            best = o;
        }
    }
    return best;
}

JacobianSeriesMatrix::JacobianSeriesMatrix(unsigned nvars, unsigned entry_cap)
    : nvars_(nvars), entry_cap_(entry_cap), entries_(std::size_t{nvars} * nvars, Polynomial(nvars))
{}

JacobianSeriesMatrix JacobianSeriesMatrix::identity(unsigned nvars, unsigned entry_cap)
{
    JacobianSeriesMatrix out(nvars, entry_cap);
    for (std::size_t i = 0; i < nvars; ++i) {
        out.set(i, i, Polynomial::constant(nvars, Rational::one()));
    }
    return out;
}

void JacobianSeriesMatrix::set(std::size_t row, std::size_t col, Polynomial value)
{
    if (value.nvars() != nvars_) {
        throw Error(ErrorCode::ContextMismatch, "grid entry over the wrong number of variables");
    }
    entries_.at(row * nvars_ + col) = value.truncated(entry_cap_);
}

bool JacobianSeriesMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

void JacobianSeriesMatrix::require_compatible(const JacobianSeriesMatrix& o) const
{
    if (nvars_ != o.nvars_ || entry_cap_ != o.entry_cap_) {
        throw Error(ErrorCode::ContextMismatch, "series grids of different shape or truncation");
    }
}

JacobianSeriesMatrix& JacobianSeriesMatrix::operator+=(const JacobianSeriesMatrix& o)
{
    require_compatible(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += o.entries_[k];
    }
    return *this;
}

JacobianSeriesMatrix& JacobianSeriesMatrix::operator-=(const JacobianSeriesMatrix& o)
{
    require_compatible(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= o.entries_[k];
    }
    return *this;
}

JacobianSeriesMatrix& JacobianSeriesMatrix::operator*=(const Rational& c)
{
    for (auto& e : entries_) {
        e *= c;
    }
    return *this;
}

JacobianSeriesMatrix operator*(const JacobianSeriesMatrix& a, const JacobianSeriesMatrix& b)
{
    a.require_compatible(b);
    const auto n = a.nvars_;
    JacobianSeriesMatrix out(n, a.entry_cap_);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial acc(n);
            for (std::size_t k = 0; k < n; ++k) {
                acc += multiply(a.at(i, k), b.at(k, j), a.entry_cap_);
            }
            out.entries_[i * n + j] = std::move(acc);
        }
    }
    return out;
}

JacobianSeriesMatrix jacobian(const TruncatedSeriesMap& phi)
{
    const auto n = phi.nvars();
    const unsigned cap = phi.degree_cap() - 1;
    JacobianSeriesMatrix out(n, cap);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.set(i, j, derivative(phi.component(j), i));
        }
    }
    return out;
}

JacobianSeriesMatrix substitute(const JacobianSeriesMatrix& m, const TruncatedSeriesMap& inner)
{
    if (inner.nvars() != m.nvars()) {
        throw Error(ErrorCode::ContextMismatch, "grid and map over different numbers of variables");
    }
    const auto n = m.nvars();
    std::vector<Polynomial> flat;
    flat.reserve(std::size_t{n} * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            flat.push_back(m.at(i, j));
        }
    }
    const auto evaluated = substitute(flat, inner.components(), m.entry_cap());
    JacobianSeriesMatrix out(n, m.entry_cap());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.set(i, j, evaluated[i * n + j]);
        }
    }
    return out;
}

} // namespace fpsrev
