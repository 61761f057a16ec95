#pragma once

#include "ccsurg/rational.hpp"

namespace ccsurg {

/// Dedekind sum s(q, p) = sum_{i=1}^{p-1} ((i/p)) ((qi/p)) for gcd(q, p) = 1, p >= 1.
///
/// Evaluated with the reciprocity law s(q,p) + s(p,q) = -1/4 + (p/q + q/p + 1/(pq))/12,
/// which runs in O(log p) steps like the Euclidean algorithm.
Rational dedekind_sum(const Integer& q, const Integer& p);

/// (p-1)(p-2)/(12p), the value of s(1, p). Requires p >= 1.
Rational s1_closed_form(const Integer& p);

/// (p-1)(p-5)/(24p), the value of s(2, p). Requires p odd and p >= 1.
Rational s2_closed_form(const Integer& p);

/// The value of a_2 forced by a chirally cosmetic pair p, p/2, computed two ways.
struct RequiredA2 {
    /// (p-1)(p-3)/48.
    Rational closed_form;
    /// p (s(1,p) + s(2,p)) / 6, with the sums evaluated by dedekind_sum.
    Rational casson_identity;
};

/// Requires p odd and p >= 1. Throws std::logic_error if the two routes disagree.
RequiredA2 a2_required_by_surgery(const Integer& p);

}  // namespace ccsurg
