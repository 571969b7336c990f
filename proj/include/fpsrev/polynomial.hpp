#ifndef FPSREV_POLYNOMIAL_HPP
#define FPSREV_POLYNOMIAL_HPP

#include "fpsrev/multiindex.hpp"
#include "fpsrev/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace fpsrev {

// Bounds for exact (untruncated) arithmetic. Exceeding either aborts with
// ErrorCode::ResourceLimit instead of silently dropping terms.
struct ResourceLimits {
    std::size_t max_terms = 2'000'000;
    unsigned max_degree = 4096;
};

// Sparse multivariate polynomial over the rationals. Terms are kept in the
// graded order of IndexOrder and never hold a zero coefficient. A constant
// term is allowed here; map types built on top decide whether to forbid it.
class Polynomial {
public:
    using TermMap = std::map<MultiIndex, Rational, IndexOrder>;

    explicit Polynomial(unsigned nvars = 1) : nvars_(nvars) {}

    static Polynomial constant(unsigned nvars, const Rational& c);
    static Polynomial variable(unsigned nvars, std::size_t i);
    static Polynomial monomial(const MultiIndex& a, const Rational& c);

    unsigned nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const MultiIndex& a) const;

    // Adds c to the coefficient of x^a, erasing the term if it cancels.
    void add_term(const MultiIndex& a, const Rational& c);

    // Highest / lowest total degree carrying a nonzero coefficient.
    std::optional<unsigned> degree() const;
    std::optional<unsigned> order() const;

    // Drops every term with total degree above cap.
    Polynomial truncated(unsigned cap) const;

    // True when some term involves variable i.
    bool involves(std::size_t i) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator-(const Polynomial& a);

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    unsigned nvars_;
    TermMap terms_;
};

// Product with every term of total degree above cap discarded as it is formed.
// Without a cap the product is exact and subject to limits.
Polynomial multiply(const Polynomial& a, const Polynomial& b, std::optional<unsigned> cap,
                    const ResourceLimits& limits = {});

// Formal partial derivative by variable i.
Polynomial derivative(const Polynomial& f, std::size_t i);

// Substitutes inner[j] for x_j in every outer polynomial. Inner polynomials
// must have zero constant term. Powers Π_j inner_j^{α_j} are memoized per α
// and shared across the outer polynomials.
std::vector<Polynomial> substitute(std::span<const Polynomial> outer, std::span<const Polynomial> inner,
                                   std::optional<unsigned> cap, const ResourceLimits& limits = {});

} // namespace fpsrev

#endif
