#ifndef FPSREV_MULTIINDEX_HPP
#define FPSREV_MULTIINDEX_HPP

#include "fpsrev/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace fpsrev {

// Number of variables and the inclusive total-degree cap shared by every
// value taking part in one computation.
struct SeriesContext {
    unsigned nvars = 1;
    unsigned degree_cap = 1;

    SeriesContext() = default;
    SeriesContext(unsigned n, unsigned d);

    friend bool operator==(const SeriesContext&, const SeriesContext&) = default;
};

void require_same_context(const SeriesContext& a, const SeriesContext& b);

// An n-tuple of nonnegative exponents (α_1, ..., α_n).
class MultiIndex {
public:
    using value_type = std::uint32_t;

    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : entries_(n, 0) {}
    MultiIndex(std::initializer_list<value_type> entries) : entries_(entries) {}
    explicit MultiIndex(std::vector<value_type> entries) : entries_(std::move(entries)) {}

    static MultiIndex unit(std::size_t n, std::size_t i);

    std::size_t size() const { return entries_.size(); }
    value_type operator[](std::size_t i) const { return entries_[i]; }
    value_type& operator[](std::size_t i) { return entries_[i]; }
    std::span<const value_type> entries() const { return entries_; }

    unsigned weight() const;
    bool is_zero() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<value_type> entries_;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& a);

unsigned weight(const MultiIndex& a);

// Graded order on I_n: lower weight first; within a weight, the index with
// the larger leading entry comes first (ties broken by the next entry).
std::strong_ordering compare(const MultiIndex& b, const MultiIndex& a);

struct IndexOrder {
    bool operator()(const MultiIndex& b, const MultiIndex& a) const { return compare(b, a) < 0; }
};

// Number of multi-indices of weight p in n variables, C(p+n-1, n-1).
std::size_t count_weight(unsigned nvars, unsigned p);

// All indices of weight p, ascending under compare.
std::vector<MultiIndex> enumerate_weight(const SeriesContext& ctx, unsigned p);
std::vector<MultiIndex> enumerate_weight(unsigned nvars, unsigned p);

// 0-based position of a inside enumerate_weight(|a|).
std::size_t rank_in_weight(const MultiIndex& a);
MultiIndex unrank(const SeriesContext& ctx, unsigned p, std::size_t r);
MultiIndex unrank(unsigned nvars, unsigned p, std::size_t r);

// β ≪ α
bool leq_componentwise(const MultiIndex& b, const MultiIndex& a);
MultiIndex add(const MultiIndex& a, const MultiIndex& b);
MultiIndex sub(const MultiIndex& a, const MultiIndex& b);

Integer mi_factorial(const MultiIndex& a);
Integer mi_binomial(const MultiIndex& a, const MultiIndex& b);

} // namespace fpsrev

#endif
