#include "fpsrev/polynomial.hpp"

#include "fpsrev/error.hpp"

#include <string>
#include <unordered_map>

namespace fpsrev {

namespace {

void require_same_nvars(const Polynomial& a, const Polynomial& b)
{
    if (a.nvars() != b.nvars()) {
        throw Error(ErrorCode::ContextMismatch, "polynomials over different numbers of variables");
    }
}

void check_limits(const Polynomial& p, const ResourceLimits& limits)
{
    if (p.term_count() > limits.max_terms) {
        throw Error(ErrorCode::ResourceLimit,
                    "term count " + std::to_string(p.term_count()) + " exceeds cap " + std::to_string(limits.max_terms));
    }
    if (auto d = p.degree(); d && *d > limits.max_degree) {
        throw Error(ErrorCode::ResourceLimit,
                    "degree " + std::to_string(*d) + " exceeds cap " + std::to_string(limits.max_degree));
    }
}

} // namespace

Polynomial Polynomial::constant(unsigned nvars, const Rational& c)
{
    Polynomial out(nvars);
    out.add_term(MultiIndex(nvars), c);
    return out;
}

Polynomial Polynomial::variable(unsigned nvars, std::size_t i)
{
    Polynomial out(nvars);
    out.add_term(MultiIndex::unit(nvars, i), Rational::one());
    return out;
}

Polynomial Polynomial::monomial(const MultiIndex& a, const Rational& c)
{
    Polynomial out(static_cast<unsigned>(a.size()));
    out.add_term(a, c);
    return out;
}

Rational Polynomial::coefficient(const MultiIndex& a) const
{
    const auto it = terms_.find(a);
    return it == terms_.end() ? Rational::zero() : it->second;
}

void Polynomial::add_term(const MultiIndex& a, const Rational& c)
{
    if (a.size() != nvars_) {
        throw Error(ErrorCode::LengthMismatch, "exponent length does not match the number of variables");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

std::optional<unsigned> Polynomial::degree() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.rbegin()->first.weight();
}

std::optional<unsigned> Polynomial::order() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first.weight();
}

Polynomial Polynomial::truncated(unsigned cap) const
{
    Polynomial out(nvars_);
    for (const auto& [a, c] : terms_) {
        if (a.weight() > cap) {
            break;
        }
        out.terms_.emplace_hint(out.terms_.end(), a, c);
    }
    return out;
}

bool Polynomial::involves(std::size_t i) const
{
    for (const auto& [a, c] : terms_) {
        if (a[i] != 0) {
            return true;
        }
    }
    return false;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    require_same_nvars(*this, o);
    for (const auto& [a, c] : o.terms_) {
        add_term(a, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    require_same_nvars(*this, o);
    for (const auto& [a, c] : o.terms_) {
        add_term(a, -c);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, v] : terms_) {
        v *= c;
    }
    return *this;
}

Polynomial operator-(const Polynomial& a)
{
    Polynomial out = a;
    out *= Rational(-1);
    return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b, std::optional<unsigned> cap,
                    const ResourceLimits& limits)
{
    require_same_nvars(a, b);
    const auto n = a.nvars();
    Polynomial::TermMap acc;
    MultiIndex key(n);
    for (const auto& [ea, ca] : a.terms()) {
        const unsigned wa = ea.weight();
        if (cap && wa > *cap) {
            break;
        }
        for (const auto& [eb, cb] : b.terms()) {
            // Terms of b are ordered by weight, so the rest are too heavy too.
            if (cap && wa + eb.weight() > *cap) {
                break;
            }
            for (std::size_t i = 0; i < n; ++i) {
                key[i] = ea[i] + eb[i];
            }
            auto it = acc.find(key);
            if (it == acc.end()) {
                acc.emplace(key, ca * cb);
            } else {
                it->second.add_product(ca, cb);
            }
        }
    }
    Polynomial out(n);
    for (auto& [e, c] : acc) {
        out.add_term(e, c);
    }
    if (!cap) {
        check_limits(out, limits);
    }
    return out;
}

Polynomial derivative(const Polynomial& f, std::size_t i)
{
    Polynomial out(f.nvars());
    for (const auto& [a, c] : f.terms()) {
        if (a[i] == 0) {
            continue;
        }
        MultiIndex lowered = a;
        lowered[i] -= 1;
        out.add_term(lowered, c * Rational(static_cast<std::int64_t>(a[i])));
    }
    return out;
}

namespace {

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& a) const noexcept
    {
        std::size_t h = 0;
        for (auto e : a.entries()) {
            h = h * 1000003U + e;
        }
        return h;
    }
};

class PowerCache {
public:
    PowerCache(std::span<const Polynomial> inner, std::optional<unsigned> cap, const ResourceLimits& limits)
        : inner_(inner), cap_(cap), limits_(limits)
    {}

    const Polynomial& get(const MultiIndex& a)
    {
        if (auto it = cache_.find(a); it != cache_.end()) {
            return it->second;
        }
        Polynomial value(static_cast<unsigned>(a.size()));
        if (a.is_zero()) {
            value = Polynomial::constant(static_cast<unsigned>(a.size()), Rational::one());
        } else {
            // Peel one factor off the last nonzero slot.
            std::size_t j = a.size();
            while (a[j - 1] == 0) {
                --j;
            }
            MultiIndex lower = a;
            lower[j - 1] -= 1;
            const Polynomial& base = get(lower);
            value = multiply(base, inner_[j - 1], cap_, limits_);
        }
        return cache_.emplace(a, std::move(value)).first->second;
    }

private:
    std::span<const Polynomial> inner_;
    std::optional<unsigned> cap_;
    const ResourceLimits& limits_;
    std::unordered_map<MultiIndex, Polynomial, MultiIndexHash> cache_;
};

} // namespace

std::vector<Polynomial> substitute(std::span<const Polynomial> outer, std::span<const Polynomial> inner,
                                   std::optional<unsigned> cap, const ResourceLimits& limits)
{
    const auto n = static_cast<unsigned>(inner.size());
    for (const auto& g : inner) {
        if (g.nvars() != n) {
            throw Error(ErrorCode::ContextMismatch, "inner map component has the wrong number of variables");
        }
        if (!g.coefficient(MultiIndex(n)).is_zero()) {
            throw Error(ErrorCode::InvalidArgument, "inner map must have zero constant term");
        }
    }
    PowerCache powers(inner, cap, limits);
    std::vector<Polynomial> out;
    out.reserve(outer.size());
    for (const auto& f : outer) {
        if (f.nvars() != n) {
            throw Error(ErrorCode::ContextMismatch, "outer polynomial has the wrong number of variables");
        }
        Polynomial acc(n);
        for (const auto& [a, c] : f.terms()) {
            // Inner maps have order >= 1, so x^a maps to order >= |a|.
            if (cap && a.weight() > *cap) {
                break;
            }
            const Polynomial& pw = powers.get(a);
            for (const auto& [e, v] : pw.terms()) {
                acc.add_term(e, c * v);
            }
        }
        if (!cap) {
            check_limits(acc, limits);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

} // namespace fpsrev
