#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "ccsurg/rational.hpp"

namespace ccsurg {

/// Surgery coefficient p/q in lowest terms. The sign is carried by p and q >= 1,
/// except for the meridian, which is stored as 1/0.
class Slope {
public:
    /// The zero slope 0/1.
    Slope() = default;

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }

    bool is_meridian() const { return q_ == 0; }
    Rational value() const;

    /// "p" when q is 1, "1/0" for the meridian, "p/q" otherwise.
    std::string to_string() const;

    friend bool operator==(const Slope&, const Slope&) = default;
    /// Orders by (p, q) of the canonical form.
    friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

private:
    friend Slope reduce(const Integer& p, const Integer& q);
    Integer p_{0};
    Integer q_{1};
};

/// Canonical form of p/q; (n, 0) for n != 0 gives the meridian 1/0.
Slope reduce(const Integer& p, const Integer& q);

/// Lenient parser: "9", "9/2", "-1/3", "9/-2".
Slope parse_slope(std::string_view text);

/// Minimal geometric intersection |a.p b.q - b.p a.q|.
Integer distance(const Slope& a, const Slope& b);

Slope mirror(const Slope& a);

/// Two slopes with the same order of first homology (|p| equal), written p/q and p/q'
/// over a shared positive numerator p. The second denominator may be negative.
class SlopePair {
public:
    SlopePair(Slope first, Slope second);

    const Slope& first() const { return first_; }
    const Slope& second() const { return second_; }

    /// Shared numerator p >= 0 with first = p/q and second = p/q'.
    Integer numerator() const { return abs(first_.p()); }
    /// q in the shared-numerator form (sign adjusted so that p >= 0).
    Integer first_q() const { return first_.p() < 0 ? Integer(-first_.q()) : first_.q(); }
    Integer second_q() const { return second_.p() < 0 ? Integer(-second_.q()) : second_.q(); }

    Integer distance() const { return ccsurg::distance(first_, second_); }
    /// True when the pair is {r, -r}.
    bool is_mirror_pair() const { return second_ == mirror(first_); }

    std::string to_string() const;

    friend bool operator==(const SlopePair&, const SlopePair&) = default;
    friend std::strong_ordering operator<=>(const SlopePair& a, const SlopePair& b);

private:
    Slope first_;
    Slope second_;
};

}  // namespace ccsurg
