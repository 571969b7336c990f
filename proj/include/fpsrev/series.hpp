#ifndef FPSREV_SERIES_HPP
#define FPSREV_SERIES_HPP

#include "fpsrev/multiindex.hpp"
#include "fpsrev/polynomial.hpp"
#include "fpsrev/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fpsrev {

// An n-component map F^n -> F^n given by power series with zero constant
// term, truncated at total degree ctx.degree_cap. Components only ever hold
// coefficients of weight 1..D.
class TruncatedSeriesMap {
public:
    explicit TruncatedSeriesMap(const SeriesContext& ctx);

    // Components are truncated to the context; a constant term is rejected.
    TruncatedSeriesMap(const SeriesContext& ctx, std::vector<Polynomial> components);

    static TruncatedSeriesMap identity(const SeriesContext& ctx);
    static TruncatedSeriesMap zero(const SeriesContext& ctx) { return TruncatedSeriesMap(ctx); }

    const SeriesContext& context() const { return ctx_; }
    unsigned nvars() const { return ctx_.nvars; }
    unsigned degree_cap() const { return ctx_.degree_cap; }

    const std::vector<Polynomial>& components() const { return components_; }
    const Polynomial& component(std::size_t j) const { return components_.at(j); }

    // Coefficient of x^a in component j (0-based).
    Rational coefficient(std::size_t j, const MultiIndex& a) const;
    void add_term(std::size_t j, const MultiIndex& a, const Rational& c);

    bool is_zero() const;
    std::size_t term_count() const;

    TruncatedSeriesMap& operator+=(const TruncatedSeriesMap& o);
    TruncatedSeriesMap& operator-=(const TruncatedSeriesMap& o);
    TruncatedSeriesMap& operator*=(const Rational& c);

    friend TruncatedSeriesMap operator+(TruncatedSeriesMap a, const TruncatedSeriesMap& b) { return a += b; }
    friend TruncatedSeriesMap operator-(TruncatedSeriesMap a, const TruncatedSeriesMap& b) { return a -= b; }
    friend TruncatedSeriesMap operator*(TruncatedSeriesMap a, const Rational& c) { return a *= c; }

    friend bool operator==(const TruncatedSeriesMap& a, const TruncatedSeriesMap& b)
    {
        return a.ctx_ == b.ctx_ && a.components_ == b.components_;
    }

private:
    SeriesContext ctx_;
    std::vector<Polynomial> components_;
};

TruncatedSeriesMap identity_map(const SeriesContext& ctx);
TruncatedSeriesMap zero_map(const SeriesContext& ctx);
TruncatedSeriesMap scale(const TruncatedSeriesMap& f, const Rational& c);

// (outer ∘ inner) truncated at degree D, by direct substitution.
TruncatedSeriesMap compose(const TruncatedSeriesMap& outer, const TruncatedSeriesMap& inner);

// k-fold self-composition; iterate(f, 0) is the identity.
TruncatedSeriesMap iterate(const TruncatedSeriesMap& f, unsigned k);

// Minimum total degree over all stored coefficients; nullopt for the zero map.
std::optional<unsigned> order(const TruncatedSeriesMap& f);

// n×n grid of scalar truncated series (constant terms allowed), used for
// Jacobians. Every entry is truncated at entry_cap.
class JacobianSeriesMatrix {
public:
    JacobianSeriesMatrix(unsigned nvars, unsigned entry_cap);

    static JacobianSeriesMatrix identity(unsigned nvars, unsigned entry_cap);

    unsigned nvars() const { return nvars_; }
    unsigned entry_cap() const { return entry_cap_; }

    const Polynomial& at(std::size_t row, std::size_t col) const { return entries_.at(row * nvars_ + col); }
    void set(std::size_t row, std::size_t col, Polynomial value);

    bool is_zero() const;

    JacobianSeriesMatrix& operator+=(const JacobianSeriesMatrix& o);
    JacobianSeriesMatrix& operator-=(const JacobianSeriesMatrix& o);
    JacobianSeriesMatrix& operator*=(const Rational& c);

    friend JacobianSeriesMatrix operator+(JacobianSeriesMatrix a, const JacobianSeriesMatrix& b) { return a += b; }
    friend JacobianSeriesMatrix operator-(JacobianSeriesMatrix a, const JacobianSeriesMatrix& b) { return a -= b; }
    friend JacobianSeriesMatrix operator*(JacobianSeriesMatrix a, const Rational& c) { return a *= c; }

    // Matrix product over the truncated series ring.
    friend JacobianSeriesMatrix operator*(const JacobianSeriesMatrix& a, const JacobianSeriesMatrix& b);

    friend bool operator==(const JacobianSeriesMatrix&, const JacobianSeriesMatrix&) = default;

private:
    void require_compatible(const JacobianSeriesMatrix& o) const;

    unsigned nvars_;
    unsigned entry_cap_;
    std::vector<Polynomial> entries_;
};

// Entry (i, j) is ∂_i φ_j, truncated at D-1.
JacobianSeriesMatrix jacobian(const TruncatedSeriesMap& phi);

// Every entry evaluated at inner (entries of the result stay at the grid's cap).
JacobianSeriesMatrix substitute(const JacobianSeriesMatrix& m, const TruncatedSeriesMap& inner);

} // namespace fpsrev

#endif
