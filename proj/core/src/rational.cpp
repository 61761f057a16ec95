#include "ccsurg/rational.hpp"

#include <cctype>

namespace ccsurg {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw DomainError("division by zero");
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::int64_t to_int64(const Integer& a) {
    static_assert(sizeof(long) == sizeof(std::int64_t));
    if (!a.fits_slong_p())
        throw DomainError("integer out of 64-bit range: " + a.get_str());
    return a.get_si();
}

Integer parse_integer(std::string_view text) {
    auto s = trim(text);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    bool digits = !s.empty();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (i == 0 && c == '-' && s.size() > 1) continue;
        if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
    }
    if (!digits) throw DomainError("not an integer: '" + std::string(text) + "'");
    return Integer(std::string(s), 10);
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Integer Rational::floor() const { return floor_div(num(), den()); }

std::string Rational::to_string() const { return value_.get_str(10); }

Rational Rational::parse(std::string_view text) {
    const auto s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s));
    return Rational(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace ccsurg
