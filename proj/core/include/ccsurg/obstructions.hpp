#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ccsurg/provenance.hpp"
#include "ccsurg/rational.hpp"
#include "ccsurg/slope.hpp"

namespace ccsurg {

// Necessary conditions for K(p) = -K(p/2) on a knot of genus g.

struct Thm1Verdict {
    bool p_positive_odd = false;
    /// L-space surgery forces a2 != 0.
    bool a2_nonzero = false;
    /// a2 = (p-1)(p-3)/48.
    bool a2_matches = false;
    /// a2 <= g^2.
    bool a2_within_genus_bound = false;
    /// p <= 7g + 2.
    bool p_within_bound = false;
    /// (p-1)(p-3)/48 when p is positive and odd.
    Rational required_a2;
    std::vector<std::string> reasons;
    std::vector<Axiom> provenance;

    bool passes() const {
        return p_positive_odd && a2_nonzero && a2_matches && a2_within_genus_bound && p_within_bound;
    }
};

Thm1Verdict thm1_check(const Integer& genus, const Integer& a2, const Integer& p);

struct Thm1Candidate {
    Integer p;
    Integer required_a2;
    friend bool operator==(const Thm1Candidate&, const Thm1Candidate&) = default;
};

/// Odd p in [1, 7g+2] where (p-1)(p-3)/48 is a nonzero integer at most g^2.
std::vector<Thm1Candidate> thm1_candidate_ps(const Integer& genus);

// Exceptional chirally cosmetic slopes p/q, p/q' with p, q > 0 and q' < q.

struct ExcludedCandidate {
    Integer p;
    Integer q;
    Integer q_prime;
    Integer distance;
    std::string reason;
    Axiom rule;
};

struct Thm3Report {
    /// Surviving pairs (p/q, p/q'), sorted by the first slope.
    std::vector<SlopePair> pairs;
    /// Every other candidate within the distance bound, with the argument that removes it.
    std::vector<ExcludedCandidate> excluded;
    std::vector<Axiom> provenance;
};

/// Scans p >= 1, 1 <= q <= q_scan, q' < q with gcd(p,q) = gcd(p,q') = 1 and
/// p |q' - q| <= delta_max. q_scan = 0 means delta_max, which already covers every candidate.
/// p_min is the lower bound on p for pairs other than q' = -q.
Thm3Report thm3_enumerate(long delta_max = 8, long p_min = 3, long q_scan = 0);

/// First slopes of thm3_enumerate() with defaults: 1, 2, 3, 4, 1/2, 1/3, 1/4.
std::vector<Slope> thm3_slope_set();

struct P7Distance {
    long s;
    Integer distance;
};

/// For |s| <= s_range, the distance p |q' - q| of both p = 7 families, checked to equal
/// 7 |14 s + 3| and to exceed 8. Throws std::logic_error if either check fails.
std::vector<P7Distance> p7_family_distances(long s_range);

struct PairClassification {
    bool irreducible = false;
    bool infinite_pi1 = false;
    bool toroidal_possible = false;
    Integer distance;
    std::vector<std::string> notes;
    std::vector<Axiom> provenance;
};

/// Parses "4,-4" or "1/2, -1/2". Zero slopes and the meridian are rejected.
SlopePair parse_pair(std::string_view text);

/// Structure of the manifolds from a pair {r, -r} admitted by thm3_enumerate().
/// Throws DomainError for other pairs.
PairClassification cor6_classify(const SlopePair& pair);

}  // namespace ccsurg
