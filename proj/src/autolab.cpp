#include "fpsrev/autolab.hpp"

#include "fpsrev/error.hpp"
#include "fpsrev/multiindex.hpp"

#include <algorithm>
#include <string>

namespace fpsrev {

PolynomialMap::PolynomialMap(unsigned nvars) : nvars_(nvars), components_(nvars, Polynomial(nvars)) {}

PolynomialMap::PolynomialMap(std::vector<Polynomial> components)
    : nvars_(static_cast<unsigned>(components.size())), components_(std::move(components))
{
    for (const auto& c : components_) {
        if (c.nvars() != nvars_) {
            throw Error(ErrorCode::ContextMismatch, "polynomial map component over the wrong number of variables");
        }
        if (!c.coefficient(MultiIndex(nvars_)).is_zero()) {
            throw Error(ErrorCode::ConstantTerm, "polynomial maps must have zero constant term");
        }
    }
}

PolynomialMap PolynomialMap::identity(unsigned nvars)
{
    std::vector<Polynomial> comps;
    comps.reserve(nvars);
    for (std::size_t j = 0; j < nvars; ++j) {
        comps.push_back(Polynomial::variable(nvars, j));
    }
    return PolynomialMap(std::move(comps));
}

PolynomialMap PolynomialMap::from_series(const TruncatedSeriesMap& f)
{
    return PolynomialMap(f.components());
}

bool PolynomialMap::is_zero() const
{
    return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool PolynomialMap::is_identity() const
{
    return *this == identity(nvars_);
}

bool PolynomialMap::has_unit_tangent() const
{
    for (std::size_t j = 0; j < nvars_; ++j) {
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (components_[j].coefficient(MultiIndex::unit(nvars_, i)) != Rational(i == j ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

std::optional<unsigned> PolynomialMap::degree() const
{
    std::optional<unsigned> best;
    for (const auto& c : components_) {
        if (auto d = c.degree(); d && (!best || *d > *best)) {
            best = d;
        }
    }
    return best;
}

std::size_t PolynomialMap::term_count() const
{
    std::size_t total = 0;
    for (const auto& c : components_) {
        total += c.term_count();
    }
    return total;
}

TruncatedSeriesMap PolynomialMap::truncate(const SeriesContext& ctx) const
{
    return TruncatedSeriesMap(ctx, components_);
}

PolynomialMap& PolynomialMap::operator+=(const PolynomialMap& o)
{
    if (o.nvars_ != nvars_) {
        throw Error(ErrorCode::ContextMismatch, "polynomial maps over different n");
    }
    for (std::size_t j = 0; j < nvars_; ++j) {
        components_[j] += o.components_[j];
    }
    return *this;
}

PolynomialMap& PolynomialMap::operator-=(const PolynomialMap& o)
{
    if (o.nvars_ != nvars_) {
        throw Error(ErrorCode::ContextMismatch, "polynomial maps over different n");
    }
    for (std::size_t j = 0; j < nvars_; ++j) {
        components_[j] -= o.components_[j];
    }
    return *this;
}

PolynomialMap compose(const PolynomialMap& outer, const PolynomialMap& inner, const ResourceLimits& limits)
{
    if (outer.nvars() != inner.nvars()) {
        throw Error(ErrorCode::ContextMismatch, "polynomial maps over different n");
    }
    return PolynomialMap(substitute(outer.components(), inner.components(), std::nullopt, limits));
}

std::vector<std::optional<unsigned>> TailReport::degrees() const
{
    std::vector<std::optional<unsigned>> out;
    out.reserve(records.size());
    for (const auto& r : records) {
        out.push_back(r.degree);
    }
    return out;
}

TailReport tail_vanishing_test(const PolynomialMap& phi, unsigned m_max, const ResourceLimits& limits)
{
    if (m_max == 0) {
        throw Error(ErrorCode::InvalidArgument, "tail test needs m_max >= 1");
    }
    if (!phi.has_unit_tangent()) {
        throw Error(ErrorCode::NonIdentityLinearPart, "tail test needs an identity linear part");
    }
    TailReport report;
    report.searched_upto = m_max;
    PolynomialMap inverse = PolynomialMap::identity(phi.nvars());
    PolynomialMap current = inverse;
    for (unsigned m = 1; m <= m_max; ++m) {
        current = current - compose(current, phi, limits);
        if (report.vanishing_m0) {
            if (!current.is_zero()) {
                throw Error(ErrorCode::VerificationMismatch,
                            "Phi_" + std::to_string(m) + " is nonzero after Phi_" + std::to_string(*report.vanishing_m0)
                                + " vanished");
            }
        }
        TailRecord rec;
        rec.m = m;
        rec.degree = current.degree();
        rec.terms = current.term_count();
        rec.zero = current.is_zero();
        report.records.push_back(rec);
        if (rec.zero && !report.vanishing_m0) {
            report.vanishing_m0 = m;
            report.certificate_inverse = inverse;
        }
        if (!report.vanishing_m0) {
            inverse += current;
        }
    }
    if (report.certificate_inverse) {
        const auto& cert = *report.certificate_inverse;
        if (!compose(phi, cert, limits).is_identity() || !compose(cert, phi, limits).is_identity()) {
            throw Error(ErrorCode::VerificationMismatch, "certificate inverse does not compose to the identity");
        }
    }
    return report;
}

JacobianCheck jacobian_form_check(const PolynomialMap& phi, unsigned m, unsigned degree_cap)
{
    if (m == 0) {
        throw Error(ErrorCode::InvalidArgument, "jacobian check needs m >= 1");
    }
    const SeriesContext ctx(phi.nvars(), degree_cap);
    const TruncatedSeriesMap f = phi.truncate(ctx);
    const JacobianSeriesMatrix jac = jacobian(f);
    const unsigned n = ctx.nvars;
    const auto eye = JacobianSeriesMatrix::identity(n, jac.entry_cap());

    JacobianSeriesMatrix inner = eye * Rational(static_cast<std::int64_t>(m));
    JacobianSeriesMatrix chain = eye;
    TruncatedSeriesMap iterate_k = identity_map(ctx);
    for (unsigned k = 2; k <= m; ++k) {
        iterate_k = compose(f, iterate_k);  // φ^{∘(k−1)}
        chain = chain * substitute(jac, iterate_k);
        // (−1)^{k−1} C(m,k)
        Rational c(binomial(m, k));
        if (k % 2 == 0) {
            c = -c;
        }
        inner += chain * c;
    }
    JacobianCheck out{false, jac * inner, JacobianSeriesMatrix(n, jac.entry_cap())};
    out.residual = out.lhs - eye;
    out.holds = out.residual.is_zero();
    return out;
}

PolynomialMap elementary_automorphism(unsigned nvars, std::size_t var, const Polynomial& g)
{
    if (var >= nvars) {
        throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    }
    if (g.nvars() != nvars) {
        throw Error(ErrorCode::ContextMismatch, "shift polynomial over the wrong number of variables");
    }
    if (g.involves(var)) {
        throw Error(ErrorCode::InvalidArgument, "shift polynomial involves the shifted variable");
    }
    std::vector<Polynomial> comps;
    comps.reserve(nvars);
    for (std::size_t j = 0; j < nvars; ++j) {
        comps.push_back(Polynomial::variable(nvars, j));
    }
    comps[var] += g;
    return PolynomialMap(std::move(comps));
}

namespace {

Rational random_nonzero(std::int64_t bound, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::int64_t> mag(1, bound);
    std::bernoulli_distribution negative(0.5);
    const std::int64_t v = mag(rng);
    return Rational(negative(rng) ? -v : v);
}

} // namespace

TameMap random_tame(unsigned nvars, unsigned steps, std::uint64_t seed, const RandomTameOptions& options)
{
    if (nvars < 2) {
        throw Error(ErrorCode::InvalidArgument, "elementary automorphisms need at least two variables");
    }
    if (options.min_degree < 2 || options.max_degree < options.min_degree || options.coef_bound < 1
        || options.max_shift_terms < 1) {
        throw Error(ErrorCode::InvalidArgument, "invalid random tame options");
    }
    std::mt19937_64 rng(seed);
    TameMap out{PolynomialMap::identity(nvars), PolynomialMap::identity(nvars), {}};
    std::uniform_int_distribution<std::size_t> pick_var(0, nvars - 1);
    std::uniform_int_distribution<unsigned> pick_degree(options.min_degree, options.max_degree);
    std::uniform_int_distribution<unsigned> pick_count(1, options.max_shift_terms);
    for (unsigned s = 0; s < steps; ++s) {
        const std::size_t var = pick_var(rng);
        Polynomial g(nvars);
        const unsigned count = pick_count(rng);
        for (unsigned t = 0; t < count; ++t) {
            std::vector<MultiIndex> candidates;
            for (auto& a : enumerate_weight(nvars, pick_degree(rng))) {
                if (a[var] == 0) {
                    candidates.push_back(std::move(a));
                }
            }
            std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
            g.add_term(candidates[pick(rng)], random_nonzero(options.coef_bound, rng));
        }
        const PolynomialMap sigma = elementary_automorphism(nvars, var, g);
        const PolynomialMap sigma_inv = elementary_automorphism(nvars, var, -g);
        out.map = compose(sigma, out.map);
        out.inverse = compose(out.inverse, sigma_inv);
        out.steps.push_back({var, std::move(g)});
    }
    return out;
}

PolynomialMap random_unit_map(const RandomMapOptions& options, std::mt19937_64& rng)
{
    if (options.nvars == 0 || options.min_degree < 2 || options.max_degree < options.min_degree
        || options.coef_bound < 1) {
        throw Error(ErrorCode::InvalidArgument, "invalid random map options");
    }
    PolynomialMap out = PolynomialMap::identity(options.nvars);
    std::vector<Polynomial> comps = out.components();
    std::bernoulli_distribution keep(std::clamp(options.density, 0.0, 1.0));
    for (auto& comp : comps) {
        for (unsigned d = options.min_degree; d <= options.max_degree; ++d) {
            for (const auto& a : enumerate_weight(options.nvars, d)) {
                if (keep(rng)) {
                    comp.add_term(a, random_nonzero(options.coef_bound, rng));
                }
            }
        }
    }
    return PolynomialMap(std::move(comps));
}

} // namespace fpsrev
