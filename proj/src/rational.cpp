#include "tbcalc/rational.hpp"

#include "tbcalc/error.hpp"

#include <cctype>
#include <ostream>

namespace tbcalc {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

BigInt parse_integer(std::string_view s)
{
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(std::int64_t value)
{
    // mpq_class has no int64 constructor on every platform; go through the string-free mpz path.
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(value));
    value_ = mpq_class(z);
}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw Error(ErrorCode::zero_denominator, "rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text)) {
            throw Error(ErrorCode::malformed_document, "not a rational: '" + std::string(text) + "'");
        }
        return Rational(parse_integer(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
        throw Error(ErrorCode::malformed_document, "not a rational: '" + std::string(text) + "'");
    }
    return Rational(parse_integer(num), parse_integer(den));
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::reciprocal() const
{
    if (is_zero()) {
        throw Error(ErrorCode::zero_denominator, "reciprocal of zero");
    }
    Rational r;
    r.value_ = 1 / value_;
    return r;
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw Error(ErrorCode::zero_denominator, "division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

}  // namespace tbcalc
