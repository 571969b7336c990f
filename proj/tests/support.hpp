// Helpers and independent oracles shared by the unit and acceptance suites.
// Nothing in here calls the composition or matrix code it is used to check.
#ifndef FPSREV_TESTS_SUPPORT_HPP
#define FPSREV_TESTS_SUPPORT_HPP

#include "fpsrev/autolab.hpp"
#include "fpsrev/graded_matrix.hpp"
#include "fpsrev/multiindex.hpp"
#include "fpsrev/rational.hpp"
#include "fpsrev/series.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <tuple>
#include <vector>

namespace fpsrev::testing {

struct TermSpec {
    std::size_t component;  // 0-based
    std::vector<MultiIndex::value_type> exponent;
    Rational coefficient;
};

inline TruncatedSeriesMap make_series(const SeriesContext& ctx, const std::vector<TermSpec>& terms)
{
    TruncatedSeriesMap out(ctx);
    for (const auto& t : terms) {
        out.add_term(t.component, MultiIndex(t.exponent), t.coefficient);
    }
    return out;
}

inline PolynomialMap make_polymap(unsigned nvars, const std::vector<TermSpec>& terms)
{
    std::vector<Polynomial> comps(nvars, Polynomial(nvars));
    for (const auto& t : terms) {
        comps[t.component].add_term(MultiIndex(t.exponent), t.coefficient);
    }
    return PolynomialMap(std::move(comps));
}

// n = 1 map from its coefficients c_1..c_D.
inline TruncatedSeriesMap univariate(unsigned degree, const std::vector<Rational>& coefs)
{
    TruncatedSeriesMap out(SeriesContext(1, degree));
    for (std::size_t k = 0; k < coefs.size(); ++k) {
        out.add_term(0, MultiIndex{static_cast<MultiIndex::value_type>(k + 1)}, coefs[k]);
    }
    return out;
}

inline Rational random_rational(std::mt19937_64& rng, std::int64_t bound = 3, std::int64_t den_bound = 1)
{
    std::uniform_int_distribution<std::int64_t> num(-bound, bound);
    std::uniform_int_distribution<std::int64_t> den(1, den_bound);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, std::int64_t bound = 3, std::int64_t den_bound = 1)
{
    Rational r;
    do {
        r = random_rational(rng, bound, den_bound);
    } while (r.is_zero());
    return r;
}

inline GradedBlock random_block(unsigned n, unsigned row_weight, unsigned col_weight, std::mt19937_64& rng,
                                double density = 0.7)
{
    GradedBlock b(n, row_weight, col_weight);
    std::bernoulli_distribution keep(density);
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            if (keep(rng)) {
                b.at(r, c) = random_rational(rng, 4, 3);
            }
        }
    }
    return b;
}

inline GradedBlock random_nonzero_block(unsigned n, unsigned row_weight, unsigned col_weight, std::mt19937_64& rng)
{
    GradedBlock b = random_block(n, row_weight, col_weight, rng);
    while (b.is_zero()) {
        b = random_block(n, row_weight, col_weight, rng);
    }
    return b;
}

// Random map with zero constant term and arbitrary (possibly singular) linear part.
inline TruncatedSeriesMap random_series(const SeriesContext& ctx, std::mt19937_64& rng, unsigned max_degree = 3,
                                        double density = 0.4)
{
    TruncatedSeriesMap out(ctx);
    std::bernoulli_distribution keep(density);
    for (std::size_t j = 0; j < ctx.nvars; ++j) {
        for (unsigned d = 1; d <= std::min(max_degree, ctx.degree_cap); ++d) {
            for (const auto& a : enumerate_weight(ctx, d)) {
                if (keep(rng)) {
                    out.add_term(j, a, random_rational(rng, 3, 2));
                }
            }
        }
    }
    return out;
}

inline TruncatedSeriesMap random_unit_series(const SeriesContext& ctx, std::mt19937_64& rng, unsigned max_degree = 3,
                                             double density = 0.3)
{
    RandomMapOptions opt;
    opt.nvars = ctx.nvars;
    opt.min_degree = 2;
    opt.max_degree = std::max(2U, max_degree);
    opt.coef_bound = 3;
    opt.density = density;
    return random_unit_map(opt, rng).truncate(ctx);
}

// ---------------------------------------------------------------------------
// Naive polynomial arithmetic on plain maps, used as an oracle for
// composition: full products, then a filter on total degree.

using NaivePoly = std::map<std::vector<unsigned>, Rational>;

inline NaivePoly naive_from(const Polynomial& p)
{
    NaivePoly out;
    for (const auto& [a, c] : p.terms()) {
        out[std::vector<unsigned>(a.entries().begin(), a.entries().end())] = c;
    }
    return out;
}

inline NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b)
{
    NaivePoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<unsigned> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out[e] += ca * cb;
        }
    }
    return out;
}

inline NaivePoly naive_truncate(const NaivePoly& a, unsigned cap)
{
    NaivePoly out;
    for (const auto& [e, c] : a) {
        unsigned w = 0;
        for (auto x : e) {
            w += x;
        }
        if (w <= cap && !c.is_zero()) {
            out[e] = c;
        }
    }
    return out;
}

// Π_j inner_j^{α_j} by repeated multiplication, one factor at a time.
inline NaivePoly naive_power(const std::vector<NaivePoly>& inner, const MultiIndex& alpha, unsigned cap)
{
    NaivePoly acc;
    acc[std::vector<unsigned>(alpha.size(), 0)] = Rational::one();
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        for (unsigned k = 0; k < alpha[j]; ++k) {
            acc = naive_truncate(naive_mul(acc, inner[j]), cap);
        }
    }
    return naive_truncate(acc, cap);
}

inline TruncatedSeriesMap naive_compose(const TruncatedSeriesMap& outer, const TruncatedSeriesMap& inner)
{
    const auto& ctx = outer.context();
    std::vector<NaivePoly> in;
    for (const auto& c : inner.components()) {
        in.push_back(naive_from(c));
    }
    TruncatedSeriesMap out(ctx);
    for (std::size_t j = 0; j < ctx.nvars; ++j) {
        for (const auto& [a, c] : outer.component(j).terms()) {
            for (const auto& [e, v] : naive_power(in, a, ctx.degree_cap)) {
                out.add_term(j, MultiIndex(std::vector<MultiIndex::value_type>(e.begin(), e.end())), c * v);
            }
        }
    }
    return out;
}

// Block (p', p) of e^{⊙M_φ} built from its closed form: entry (α', α) is the
// coefficient of x^{α'} in φ^α.
inline GradedBlock exp_block_oracle(const TruncatedSeriesMap& phi, unsigned row_weight, unsigned col_weight)
{
    const unsigned n = phi.nvars();
    std::vector<NaivePoly> in;
    for (const auto& c : phi.components()) {
        in.push_back(naive_from(c));
    }
    GradedBlock out(n, row_weight, col_weight);
    const auto rows = enumerate_weight(n, row_weight);
    const auto cols = enumerate_weight(n, col_weight);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto pw = naive_power(in, cols[c], phi.degree_cap());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::vector<unsigned> key(rows[r].entries().begin(), rows[r].entries().end());
            if (auto it = pw.find(key); it != pw.end()) {
                out.at(r, c) = it->second;
            }
        }
    }
    return out;
}

// Inverse of x + x^2 from the quadratic formula: (−1 + sqrt(1 + 4y)) / 2.
// The coefficient of y^k is binom(1/2, k) 4^k / 2.
inline std::vector<Rational> quadratic_formula_inverse(unsigned degree)
{
    std::vector<Rational> out;
    Rational gen_binom = Rational::one();  // binom(1/2, k)
    Rational four_pow = Rational::one();
    for (unsigned k = 1; k <= degree; ++k) {
        gen_binom = gen_binom * (Rational(1, 2) - Rational(k - 1)) / Rational(k);
        four_pow *= Rational(4);
        out.push_back(gen_binom * four_pow / Rational(2));
    }
    return out;
}

// Φ_m = Σ_k (−1)^k C(m,k) φ^{∘k} straight from the binomial definition.
inline TruncatedSeriesMap phi_binomial_form(const TruncatedSeriesMap& phi, unsigned m)
{
    TruncatedSeriesMap out = zero_map(phi.context());
    for (unsigned k = 0; k <= m; ++k) {
        Rational c(binomial(m, k));
        if (k % 2 == 1) {
            c = -c;
        }
        out += iterate(phi, k) * c;
    }
    return out;
}

} // namespace fpsrev::testing

#endif
