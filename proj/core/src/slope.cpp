#include "ccsurg/slope.hpp"

namespace ccsurg {

Rational Slope::value() const {
    if (is_meridian()) throw DomainError("the meridian slope 1/0 has no rational value");
    return Rational(p_, q_);
}

std::string Slope::to_string() const {
    if (q_ == 1) return p_.get_str();
    return p_.get_str() + "/" + q_.get_str();
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (const int c = cmp(a.p_, b.p_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    const int c = cmp(a.q_, b.q_);
    if (c == 0) return std::strong_ordering::equal;
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Slope reduce(const Integer& p, const Integer& q) {
    if (p == 0 && q == 0) throw DomainError("0/0 is not a slope");
    Slope s;
    if (q == 0) {
        s.p_ = 1;
        s.q_ = 0;
        return s;
    }
    const Integer g = gcd(p, q);
    s.p_ = p / g;
    s.q_ = q / g;
    if (s.q_ < 0) {
        s.p_ = -s.p_;
        s.q_ = -s.q_;
    }
    return s;
}

Slope parse_slope(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return reduce(parse_integer(text), 1);
    return reduce(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Integer distance(const Slope& a, const Slope& b) { return abs(Integer(a.p() * b.q() - b.p() * a.q())); }

Slope mirror(const Slope& a) {
    if (a.is_meridian()) return a;
    return reduce(-a.p(), a.q());
}

SlopePair::SlopePair(Slope first, Slope second) : first_(std::move(first)), second_(std::move(second)) {
    if (abs(first_.p()) != abs(second_.p()))
        throw DomainError("slopes " + first_.to_string() + " and " + second_.to_string() +
                          " have different first homology orders");
}

std::string SlopePair::to_string() const { return "(" + first_.to_string() + ", " + second_.to_string() + ")"; }

std::strong_ordering operator<=>(const SlopePair& a, const SlopePair& b) {
    if (auto c = a.first_ <=> b.first_; c != 0) return c;
    return a.second_ <=> b.second_;
}

}  // namespace ccsurg
