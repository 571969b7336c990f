#ifndef FPSREV_INVERSION_HPP
#define FPSREV_INVERSION_HPP

#include "fpsrev/graded_matrix.hpp"
#include "fpsrev/series.hpp"

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

namespace fpsrev {

// Returns phi unchanged when its linear part is the identity; otherwise
// throws ErrorCode::NonIdentityLinearPart naming the offending linear block.
const TruncatedSeriesMap& require_unit_tangent(const TruncatedSeriesMap& phi);

// The sequence Φ_0 = id, Φ_{m+1} = Φ_m − Φ_m ∘ φ, materialized on demand.
// Extension is guarded, so a shared sequence may be read from several threads.
class PhiSequence {
public:
    explicit PhiSequence(TruncatedSeriesMap phi);

    const SeriesContext& context() const { return base_.context(); }
    const TruncatedSeriesMap& base() const { return base_; }

    // Copy of Φ_m.
    TruncatedSeriesMap term(unsigned m) const;

    std::size_t materialized() const;

private:
    TruncatedSeriesMap base_;
    mutable std::mutex mutex_;
    mutable std::vector<TruncatedSeriesMap> terms_;
};

TruncatedSeriesMap phi_term(const PhiSequence& seq, unsigned m);

// x + Σ_{m=1}^{D-1} Φ_m. Checks order(Φ_m) >= m+1 for every summed term and
// that Φ_D vanishes, so the truncated sum is exact through degree D.
TruncatedSeriesMap invert_neumann(const TruncatedSeriesMap& phi);

// Block recurrence N^m_1 = −Σ_{k<m} e^{⊙M_φ}(m,k) N^k_1 with the (m,k) block
// of the exponential expanded over partitions of m into k parts.
TruncatedSeriesMap invert_recurrence(const TruncatedSeriesMap& phi);

// ψ ← id − H∘ψ with H = φ − id, D rounds starting from ψ = id.
TruncatedSeriesMap invert_fixpoint(const TruncatedSeriesMap& phi);

// Extension beyond the unit-tangent contract: for an invertible linear part L,
// returns invert(L^{-1}∘φ) ∘ L^{-1}.
TruncatedSeriesMap invert_general(const TruncatedSeriesMap& phi);

struct TailIdentityResult {
    bool holds = false;
    TruncatedSeriesMap phi_m0;
    TruncatedSeriesMap tail_sum;
    TruncatedSeriesMap difference;
};

// Compares Φ_{m0} with Σ_{m=m0}^{D-1} Φ_m ∘ φ.
TailIdentityResult check_tail_identity(const TruncatedSeriesMap& phi, unsigned m0);
TailIdentityResult check_tail_identity(const PhiSequence& seq, unsigned m0);

// (E_∞ − e^{⊙M_φ})^m E_1.
BlockMatrix neumann_matrix_term(const TruncatedSeriesMap& phi, unsigned m);

} // namespace fpsrev

#endif
