#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace tbcalc {

using BigInt = mpz_class;

/*
 * Exact rational number in lowest terms with a positive denominator.
 *
 * Every invariant the library reports (Thurston-Bennequin values, arm
 * weights, linking-matrix entries) is a Rational; there is no floating point
 * path anywhere. Text form is "p/q", or "p" when q = 1.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value);  // NOLINT(google-explicit-constructor)
    /// Throws Error(zero_denominator) when den == 0.
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p", "-p" or "p/q"; throws Error(malformed_document) otherwise.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    std::string to_string() const;

    /// Throws Error(zero_denominator) when this is zero.
    Rational reciprocal() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws Error(zero_denominator) when rhs is zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
    {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tbcalc
