#include "fpsrev/multiindex.hpp"

#include "fpsrev/error.hpp"

#include <numeric>
#include <ostream>
#include <string>

namespace fpsrev {

SeriesContext::SeriesContext(unsigned n, unsigned d) : nvars(n), degree_cap(d)
{
    if (n == 0 || d == 0) {
        throw Error(ErrorCode::InvalidArgument, "series context needs nvars >= 1 and degree_cap >= 1");
    }
}

void require_same_context(const SeriesContext& a, const SeriesContext& b)
{
    if (!(a == b)) {
        throw Error(ErrorCode::ContextMismatch, "context mismatch: (n=" + std::to_string(a.nvars) + ", D="
                                                    + std::to_string(a.degree_cap) + ") vs (n="
                                                    + std::to_string(b.nvars) + ", D="
                                                    + std::to_string(b.degree_cap) + ")");
    }
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i)
{
    MultiIndex out(n);
    out.entries_.at(i) = 1;
    return out;
}

unsigned MultiIndex::weight() const
{
    return std::accumulate(entries_.begin(), entries_.end(), 0U);
}

bool MultiIndex::is_zero() const
{
    for (auto e : entries_) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& a)
{
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i != 0) {
            os << ',';
        }
        os << a[i];
    }
    return os << ')';
}

unsigned weight(const MultiIndex& a)
{
    return a.weight();
}

namespace {

void require_same_length(const MultiIndex& a, const MultiIndex& b)
{
    if (a.size() != b.size()) {
        throw Error(ErrorCode::LengthMismatch, "multi-index length mismatch");
    }
}

} // namespace

std::strong_ordering compare(const MultiIndex& b, const MultiIndex& a)
{
    require_same_length(a, b);
    const unsigned wb = b.weight();
    const unsigned wa = a.weight();
    if (wb != wa) {
        return wb <=> wa;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] != a[i]) {
            // Larger leading entry sorts first.
            return a[i] <=> b[i];
        }
    }
    return std::strong_ordering::equal;
}

std::size_t count_weight(unsigned nvars, unsigned p)
{
    if (nvars == 0) {
        return p == 0 ? 1 : 0;
    }
    const Integer c = binomial(p + nvars - 1, nvars - 1);
    if (!c.fits_ulong_p()) {
        throw Error(ErrorCode::InvalidArgument, "weight class too large to enumerate");
    }
    return static_cast<std::size_t>(c.get_ui());
}

std::vector<MultiIndex> enumerate_weight(unsigned nvars, unsigned p)
{
    std::vector<MultiIndex> out;
    out.reserve(count_weight(nvars, p));
    if (nvars == 0) {
        return out;
    }
    // Reverse-lexicographic walk: start at (p,0,...,0) and step to the next
    // smaller tuple in lexicographic order.
    MultiIndex cur(nvars);
    cur[0] = p;
    while (true) {
        out.push_back(cur);
        // Rightmost positive entry before the last slot; everything between it
        // and the last slot is zero.
        std::size_t i = nvars - 1;
        while (i > 0 && cur[i - 1] == 0) {
            --i;
        }
        if (i == 0) {
            break;
        }
        --i;
        const auto tail = cur[nvars - 1];
        cur[nvars - 1] = 0;
        cur[i] -= 1;
        cur[i + 1] = tail + 1;
    }
    return out;
}

std::vector<MultiIndex> enumerate_weight(const SeriesContext& ctx, unsigned p)
{
    return enumerate_weight(ctx.nvars, p);
}

std::size_t rank_in_weight(const MultiIndex& a)
{
    const std::size_t n = a.size();
    std::size_t r = 0;
    unsigned remaining = a.weight();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto rest_vars = static_cast<unsigned>(n - i - 1);
        // Tuples with a larger entry at position i come first.
        for (unsigned t = remaining; t > a[i]; --t) {
            r += count_weight(rest_vars, remaining - t);
        }
        remaining -= a[i];
    }
    return r;
}

MultiIndex unrank(unsigned nvars, unsigned p, std::size_t r)
{
    if (r >= count_weight(nvars, p)) {
        throw Error(ErrorCode::RankOutOfRange, "rank " + std::to_string(r) + " out of range for weight "
                                                   + std::to_string(p));
    }
    MultiIndex out(nvars);
    unsigned remaining = p;
    for (std::size_t i = 0; i + 1 < nvars; ++i) {
        const auto rest_vars = static_cast<unsigned>(nvars - i - 1);
        unsigned t = remaining;
        while (true) {
            const std::size_t block = count_weight(rest_vars, remaining - t);
            if (r < block) {
                break;
            }
            r -= block;
            --t;
        }
        out[i] = t;
        remaining -= t;
    }
    out[nvars - 1] = remaining;
    return out;
}

MultiIndex unrank(const SeriesContext& ctx, unsigned p, std::size_t r)
{
    return unrank(ctx.nvars, p, r);
}

bool leq_componentwise(const MultiIndex& b, const MultiIndex& a)
{
    require_same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) {
            return false;
        }
    }
    return true;
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b)
{
    require_same_length(a, b);
    MultiIndex out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

MultiIndex sub(const MultiIndex& a, const MultiIndex& b)
{
    if (!leq_componentwise(b, a)) {
        throw Error(ErrorCode::NotDominated, "subtraction would leave a negative entry");
    }
    MultiIndex out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

Integer mi_factorial(const MultiIndex& a)
{
    Integer out = 1;
    for (auto e : a.entries()) {
        out *= factorial(e);
    }
    return out;
}

Integer mi_binomial(const MultiIndex& a, const MultiIndex& b)
{
    if (!leq_componentwise(b, a)) {
        throw Error(ErrorCode::NotDominated, "binomial of a non-dominated pair");
    }
    Integer out = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        out *= binomial(a[i], b[i]);
    }
    return out;
}

} // namespace fpsrev
