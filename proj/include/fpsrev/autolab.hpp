#ifndef FPSREV_AUTOLAB_HPP
#define FPSREV_AUTOLAB_HPP

#include "fpsrev/polynomial.hpp"
#include "fpsrev/series.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace fpsrev {

// Polynomial map F^n -> F^n with zero constant term and no degree cap.
class PolynomialMap {
public:
    explicit PolynomialMap(unsigned nvars);
    explicit PolynomialMap(std::vector<Polynomial> components);

    static PolynomialMap identity(unsigned nvars);
    static PolynomialMap from_series(const TruncatedSeriesMap& f);

    unsigned nvars() const { return nvars_; }
    const std::vector<Polynomial>& components() const { return components_; }
    const Polynomial& component(std::size_t j) const { return components_.at(j); }

    bool is_zero() const;
    bool is_identity() const;
    bool has_unit_tangent() const;
    std::optional<unsigned> degree() const;
    std::size_t term_count() const;

    // Drops terms above degree_cap.
    TruncatedSeriesMap truncate(const SeriesContext& ctx) const;

    PolynomialMap& operator+=(const PolynomialMap& o);
    PolynomialMap& operator-=(const PolynomialMap& o);

    friend PolynomialMap operator+(PolynomialMap a, const PolynomialMap& b) { return a += b; }
    friend PolynomialMap operator-(PolynomialMap a, const PolynomialMap& b) { return a -= b; }

    friend bool operator==(const PolynomialMap&, const PolynomialMap&) = default;

private:
    unsigned nvars_;
    std::vector<Polynomial> components_;
};

// Exact outer ∘ inner.
PolynomialMap compose(const PolynomialMap& outer, const PolynomialMap& inner, const ResourceLimits& limits = {});

struct TailRecord {
    unsigned m = 0;
    std::optional<unsigned> degree;  // nullopt when Φ_m ≡ 0
    std::size_t terms = 0;
    bool zero = false;
};

struct TailReport {
    unsigned searched_upto = 0;
    std::optional<unsigned> vanishing_m0;
    std::vector<TailRecord> records;  // Φ_1 .. Φ_{searched_upto}
    std::optional<PolynomialMap> certificate_inverse;

    // Exact degrees of Φ_1..Φ_{searched_upto}.
    std::vector<std::optional<unsigned>> degrees() const;
};

// Computes Φ_1..Φ_{m_max} exactly. When some Φ_{m0} ≡ 0, checks that every
// later term up to m_max also vanishes and emits x + Σ_{m<m0} Φ_m, verified
// to be a two-sided inverse by exact composition.
TailReport tail_vanishing_test(const PolynomialMap& phi, unsigned m_max, const ResourceLimits& limits = {});

struct JacobianCheck {
    bool holds = false;
    JacobianSeriesMatrix lhs;
    JacobianSeriesMatrix residual;  // lhs − identity
};

// Evaluates (∂φ)(x)·(m·E + Σ_{k=2}^m (−1)^{k−1} C(m,k) Π_{i=1}^{k−1} (∂φ)(φ^{∘i}(x)))
// over series truncated with the map at degree D (grid entries at D−1) and
// compares it with the identity grid.
JacobianCheck jacobian_form_check(const PolynomialMap& phi, unsigned m, unsigned degree_cap);

// x_var ↦ x_var + g, every other coordinate fixed. var is 0-based.
PolynomialMap elementary_automorphism(unsigned nvars, std::size_t var, const Polynomial& g);

struct ElementaryStep {
    std::size_t var = 0;
    Polynomial shift;
};

struct TameMap {
    PolynomialMap map;
    PolynomialMap inverse;
    std::vector<ElementaryStep> steps;  // in application order: map = σ_last ∘ ... ∘ σ_first
};

struct RandomTameOptions {
    unsigned min_degree = 2;
    unsigned max_degree = 2;
    std::int64_t coef_bound = 3;
    unsigned max_shift_terms = 2;
};

TameMap random_tame(unsigned nvars, unsigned steps, std::uint64_t seed, const RandomTameOptions& options = {});

struct RandomMapOptions {
    unsigned nvars = 2;
    unsigned min_degree = 2;
    unsigned max_degree = 3;
    std::int64_t coef_bound = 3;
    // Probability that a given monomial of degree min..max appears in a component.
    double density = 0.3;
};

// Identity plus random higher-degree terms with nonzero integer coefficients in
// [−coef_bound, coef_bound]. With density 1 every monomial is present.
PolynomialMap random_unit_map(const RandomMapOptions& options, std::mt19937_64& rng);

} // namespace fpsrev

#endif
