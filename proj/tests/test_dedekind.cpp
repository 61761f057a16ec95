#include "ccsurg/dedekind.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ccsurg;

TEST_CASE("dedekind_sum examples match the defining sum") {
    CHECK(dedekind_sum(1, 9) == Rational(14, 27));
    CHECK(oracle::dedekind_sawtooth(1, 9) == Rational(14, 27));
    CHECK(dedekind_sum(2, 9) == Rational(4, 27));
    CHECK(oracle::dedekind_sawtooth(2, 9) == Rational(4, 27));
    CHECK(dedekind_sum(5, 1) == Rational(0));
    CHECK(dedekind_sum(1, 3) == Rational(1, 18));
    CHECK(dedekind_sum(-3, 11) == Rational(-3, 22));
}

TEST_CASE("dedekind_sum rejects bad input") {
    CHECK_THROWS_AS(dedekind_sum(2, 4), DomainError);
    CHECK_THROWS_AS(dedekind_sum(1, 0), DomainError);
    CHECK_THROWS_AS(dedekind_sum(1, -5), DomainError);
}

TEST_CASE("dedekind_sum agrees with the sawtooth sum") {
    for (long p = 1; p <= 60; ++p)
        for (long q = -p; q <= 2 * p; ++q) {
            if (gcd(q, p) != 1) continue;
            CHECK(dedekind_sum(q, p) == oracle::dedekind_sawtooth(q, p));
        }
}

TEST_CASE("reciprocity holds for p, q <= 500") {
    for (long p = 1; p <= 500; p += 7)
        for (long q = 1; q <= 500; q += 3) {
            if (gcd(p, q) != 1) continue;
            const Rational lhs = dedekind_sum(q, p) + dedekind_sum(p, q);
            const Rational rhs = Rational(-1, 4) + (Rational(p, q) + Rational(q, p) + Rational(1, p * q)) / Rational(12);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("dedekind_sum is odd in q") {
    for (long p = 2; p <= 80; ++p)
        for (long q = 1; q < p; ++q)
            if (gcd(q, p) == 1) CHECK(dedekind_sum(-q, p) == -dedekind_sum(q, p));
}

TEST_CASE("closed forms") {
    CHECK(s1_closed_form(9) == Rational(14, 27));
    CHECK(s1_closed_form(1) == Rational(0));
    CHECK(s1_closed_form(3) == Rational(1, 18));
    CHECK(s2_closed_form(9) == Rational(4, 27));
    CHECK(s2_closed_form(5) == Rational(0));
    CHECK(s2_closed_form(1) == Rational(0));
    CHECK_THROWS_AS(s2_closed_form(4), DomainError);
    CHECK_THROWS_AS(s1_closed_form(0), DomainError);
    for (long p = 1; p <= 1000; p += 2) {
        CHECK(dedekind_sum(1, p) == s1_closed_form(p));
        CHECK(dedekind_sum(2, p) == s2_closed_form(p));
    }
}

TEST_CASE("required a2 from the surgery formula") {
    CHECK(a2_required_by_surgery(9).closed_form == Rational(1));
    CHECK(a2_required_by_surgery(1).closed_form == Rational(0));
    CHECK(a2_required_by_surgery(3).closed_form == Rational(0));
    CHECK(a2_required_by_surgery(7).closed_form == Rational(1, 2));
    CHECK_THROWS_AS(a2_required_by_surgery(8), DomainError);
    for (long p = 1; p <= 1000; p += 2) {
        const auto r = a2_required_by_surgery(p);
        CHECK(r.closed_form == Rational((p - 1) * (p - 3), 48));
        CHECK(Rational(6) * r.closed_form ==
              Rational(p) * (oracle::dedekind_sawtooth(1, p) + oracle::dedekind_sawtooth(2, p)));
    }
}
