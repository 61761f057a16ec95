#include <random>

#include "ccsurg/rational.hpp"
#include "ccsurg/slope.hpp"
#include "doctest.h"

using namespace ccsurg;

TEST_CASE("rational canonical form and exact arithmetic") {
    CHECK(Rational(18, 4).to_string() == "9/2");
    CHECK(Rational(9, -2).to_string() == "-9/2");
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("37/2") == Rational(37, 2));
    CHECK(Rational::parse("-4/7") == Rational(-4, 7));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
    CHECK_THROWS_AS(Rational::parse(""), DomainError);
}

TEST_CASE("integers beyond 64 bits stay exact") {
    const Integer big = parse_integer("123456789012345678901234567890");
    CHECK((Rational(big) / Rational(big * 3)) == Rational(1, 3));
    CHECK_THROWS_AS(to_int64(big), DomainError);
}

TEST_CASE("reduce canonicalizes slopes") {
    CHECK(reduce(18, 4).to_string() == "9/2");
    const Slope s = reduce(9, -2);
    CHECK(s.p() == -9);
    CHECK(s.q() == 2);
    CHECK(reduce(0, 5).to_string() == "0");
    CHECK(reduce(0, 5).q() == 1);
    CHECK(reduce(-3, 0).is_meridian());
    CHECK(reduce(-3, 0).to_string() == "1/0");
    CHECK_THROWS_AS(reduce(0, 0), DomainError);
}

TEST_CASE("slope parsing is lenient") {
    CHECK(parse_slope("9") == reduce(9, 1));
    CHECK(parse_slope("9/2") == reduce(9, 2));
    CHECK(parse_slope("-1/3") == reduce(-1, 3));
    CHECK(parse_slope("9/-2") == reduce(-9, 2));
    CHECK(parse_slope(" 4 ") == reduce(4, 1));
    CHECK_THROWS_AS(parse_slope("0/0"), DomainError);
}

TEST_CASE("distance examples") {
    CHECK(distance(reduce(9, 1), reduce(9, 2)) == 9);
    CHECK(distance(reduce(1, 1), reduce(-1, 1)) == 2);
    CHECK(distance(reduce(7, 1), reduce(7, -2)) == 21);
}

TEST_CASE("mirror examples") {
    CHECK(mirror(reduce(4, 1)) == reduce(-4, 1));
    CHECK(mirror(reduce(1, 2)) == reduce(-1, 2));
    CHECK(mirror(reduce(0, 1)) == reduce(0, 1));
}

TEST_CASE("slope properties over random inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-40, 40);
    for (int i = 0; i < 2000; ++i) {
        long p1 = d(rng), q1 = d(rng), p2 = d(rng), q2 = d(rng);
        if ((p1 == 0 && q1 == 0) || (p2 == 0 && q2 == 0)) continue;
        const Slope a = reduce(p1, q1);
        const Slope b = reduce(p2, q2);
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, a) == 0);
        CHECK(mirror(mirror(a)) == a);
        // scaling the representatives does not change the reduced form
        CHECK(reduce(3 * p1, 3 * q1) == a);
        // distance from raw representatives, divided by the gcds, matches the canonical one
        const Integer raw = abs(Integer(p1) * q2 - Integer(p2) * q1);
        CHECK(raw == distance(a, b) * gcd(p1, q1) * gcd(p2, q2));
    }
    for (long p = 1; p <= 12; ++p)
        for (long q = 1; q <= 12; ++q) {
            if (gcd(p, q) != 1) continue;
            CHECK(distance(reduce(p, q), reduce(p, -q)) == 2 * p * q);
        }
}

TEST_CASE("slope pairs share |p|") {
    const SlopePair pair(reduce(4, 1), reduce(-4, 1));
    CHECK(pair.numerator() == 4);
    CHECK(pair.first_q() == 1);
    CHECK(pair.second_q() == -1);
    CHECK(pair.is_mirror_pair());
    CHECK(pair.distance() == 8);
    CHECK(pair.to_string() == "(4, -4)");
    CHECK_THROWS_AS(SlopePair(reduce(4, 1), reduce(3, 1)), DomainError);
    CHECK_FALSE(SlopePair(reduce(9, 1), reduce(9, 2)).is_mirror_pair());
}
