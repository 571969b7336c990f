#ifndef FPSREV_GRADED_MATRIX_HPP
#define FPSREV_GRADED_MATRIX_HPP

#include "fpsrev/multiindex.hpp"
#include "fpsrev/rational.hpp"
#include "fpsrev/series.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

namespace fpsrev {

// A dense block of M(p', p; F): rows are indexed by multi-indices of weight
// p' and columns by multi-indices of weight p, both in rank_in_weight order.
class GradedBlock {
public:
    GradedBlock(unsigned nvars, unsigned row_weight, unsigned col_weight);

    static GradedBlock identity(unsigned nvars, unsigned weight);

    unsigned nvars() const { return nvars_; }
    unsigned row_weight() const { return row_weight_; }
    unsigned col_weight() const { return col_weight_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(const MultiIndex& row, const MultiIndex& col) const;
    Rational& at(const MultiIndex& row, const MultiIndex& col);

    bool is_zero() const;

    GradedBlock& operator+=(const GradedBlock& o);
    GradedBlock& operator-=(const GradedBlock& o);
    GradedBlock& operator*=(const Rational& c);

    friend GradedBlock operator+(GradedBlock a, const GradedBlock& b) { return a += b; }
    friend GradedBlock operator-(GradedBlock a, const GradedBlock& b) { return a -= b; }
    friend GradedBlock operator*(GradedBlock a, const Rational& c) { return a *= c; }
    friend GradedBlock operator*(const Rational& c, GradedBlock a) { return a *= c; }

    friend bool operator==(const GradedBlock&, const GradedBlock&) = default;

private:
    void require_same_shape(const GradedBlock& o) const;

    unsigned nvars_;
    unsigned row_weight_;
    unsigned col_weight_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

// Symmetric product A ⊙ B ∈ M(p'+q', p+q).
GradedBlock odot_block(const GradedBlock& a, const GradedBlock& b);

// m-fold symmetric power of a block; m = 0 gives the 1×1 unit block of M(0,0).
GradedBlock odot_power(const GradedBlock& a, unsigned m);

// Ordinary matrix product; requires a.col_weight() == b.row_weight().
GradedBlock matmul(const GradedBlock& a, const GradedBlock& b);

// Element of the truncated block ring: blocks (p', p) with 0 <= p', p <= D.
// Absent blocks are zero, and no all-zero block is ever stored.
class BlockMatrix {
public:
    using Key = std::pair<unsigned, unsigned>;

    explicit BlockMatrix(const SeriesContext& ctx) : ctx_(ctx) {}

    // Unit of the ⊙ product: scalar 1 in block (0,0).
    static BlockMatrix mat_one(const SeriesContext& ctx);
    // Single identity block at (1,1).
    static BlockMatrix e_one(const SeriesContext& ctx);
    // Identity block at every (p,p), 0 <= p <= D.
    static BlockMatrix e_infinity(const SeriesContext& ctx);

    const SeriesContext& context() const { return ctx_; }
    const std::map<Key, GradedBlock>& blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }

    // Zero block of the right shape when absent.
    GradedBlock block(unsigned row_weight, unsigned col_weight) const;
    bool has_block(unsigned row_weight, unsigned col_weight) const;

    // Stores b, dropping it if it is zero or lies outside the truncation.
    void set_block(GradedBlock b);
    void add_to_block(const GradedBlock& b);

    BlockMatrix& operator+=(const BlockMatrix& o);
    BlockMatrix& operator-=(const BlockMatrix& o);
    BlockMatrix& operator*=(const Rational& c);

    friend BlockMatrix operator+(BlockMatrix a, const BlockMatrix& b) { return a += b; }
    friend BlockMatrix operator-(BlockMatrix a, const BlockMatrix& b) { return a -= b; }
    friend BlockMatrix operator*(BlockMatrix a, const Rational& c) { return a *= c; }

    friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

private:
    SeriesContext ctx_;
    std::map<Key, GradedBlock> blocks_;
};

// Graded ⊙ convolution C(p',p) = Σ A(q',q) ⊙ B(p'-q', p-q), truncated to D.
BlockMatrix odot(const BlockMatrix& a, const BlockMatrix& b);
BlockMatrix odot_power(const BlockMatrix& a, unsigned m);

// e^{⊙A} = Σ A^{⊙i}/i!. A must have blocks only at p' >= 1 and p >= 1 so the
// sum terminates under truncation.
BlockMatrix odot_exp(const BlockMatrix& a);

// Ordinary product C(p',p) = Σ_q A(p',q) B(q,p).
BlockMatrix block_mul(const BlockMatrix& a, const BlockMatrix& b);

// m-th ordinary power; m = 0 gives E_∞.
BlockMatrix block_power(const BlockMatrix& a, unsigned m);

// The matrix M_φ: block (p',1) holds the degree-p' coefficients of φ, entry
// (α', e_j) being the coefficient of x^{α'} in φ_j.
BlockMatrix from_series(const TruncatedSeriesMap& phi);
TruncatedSeriesMap to_series(const BlockMatrix& m);

// ψ ∘ φ through M_{ψ∘φ} = e^{⊙M_φ} M_ψ.
TruncatedSeriesMap compose_via_matrix(const TruncatedSeriesMap& outer, const TruncatedSeriesMap& inner);

// (e^{⊙M_φ})^m E_1, the matrix of the m-fold iterate.
BlockMatrix matrix_power_of_iterate(const TruncatedSeriesMap& phi, unsigned m);

// One line per nonzero entry: "p' p | alpha' | alpha | value".
void dump(std::ostream& os, const BlockMatrix& m);

} // namespace fpsrev

#endif
