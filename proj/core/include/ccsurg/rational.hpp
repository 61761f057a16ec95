#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ccsurg {

using Integer = mpz_class;

/// Raised when an operation receives input outside its documented domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& a);
/// Floor division; the divisor must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);
std::int64_t to_int64(const Integer& a);
Integer parse_integer(std::string_view text);

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const Integer& value) : value_(value) {}
    Rational(const Integer& num, const Integer& den);

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    Integer floor() const;

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;
    /// Accepts "n", "n/d" and "-n/d" (sign on either part), with optional surrounding spaces.
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    mpq_class value_{0};
};

}  // namespace ccsurg
