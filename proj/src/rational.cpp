#include "fpsrev/rational.hpp"

#include "fpsrev/error.hpp"

#include <cctype>
#include <ostream>

namespace fpsrev {

namespace {

Integer integer_from(std::int64_t k)
{
    // mpz_class has no int64 constructor on every platform; go through a string.
    return Integer(std::to_string(k));
}

bool parse_digits(std::string_view s, Integer& out)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    out = Integer(std::string(s));
    return true;
}

} // namespace

Rational::Rational(std::int64_t k) : value_(integer_from(k)) {}

Rational::Rational(const Integer& k) : value_(k) {}

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(integer_from(num), integer_from(den)) {}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Integer num;
    Integer den = 1;
    const auto slash = body.find('/');
    bool ok = false;
    if (slash == std::string_view::npos) {
        ok = parse_digits(body, num);
    } else {
        ok = parse_digits(body.substr(0, slash), num) && parse_digits(body.substr(slash + 1), den);
    }
    if (!ok) {
        throw Error(ErrorCode::FormatError, "malformed rational '" + std::string(text) + "'");
    }
    if (negative) {
        num = -num;
    }
    return Rational(num, den);
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    }
    return Rational(mpq_class(1) / value_);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "division by zero");
    }
    value_ /= o.value_;
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b)
{
    thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational operator-(const Rational& a)
{
    return Rational(mpq_class(-a.value_));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const int c = cmp(a.value_, b.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

Integer factorial(unsigned k)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

Integer binomial(unsigned top, unsigned bottom)
{
    if (bottom > top) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), top, bottom);
    return out;
}

} // namespace fpsrev
