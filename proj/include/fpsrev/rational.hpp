#ifndef FPSREV_RATIONAL_HPP
#define FPSREV_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fpsrev {

// Arbitrary-precision integer used for every exact integer result.
using Integer = mpz_class;

// Exact rational number, always stored in lowest terms with a positive
// denominator. Zero is uniquely 0/1.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t k);            // NOLINT(google-explicit-constructor)
    Rational(const Integer& k);          // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    Rational(std::int64_t num, std::int64_t den);

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    // Accepts "[+-]p" or "[+-]p/q" with decimal digits only.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational inverse() const;

    // "p/q", or "p" when the denominator is one.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    // this += a * b without a temporary Rational.
    void add_product(const Rational& a, const Rational& b);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_{0};
};

Integer factorial(unsigned k);
Integer binomial(unsigned top, unsigned bottom);

} // namespace fpsrev

#endif
