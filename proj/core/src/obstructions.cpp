#include "ccsurg/obstructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "ccsurg/dedekind.hpp"

namespace ccsurg {

Thm1Verdict thm1_check(const Integer& genus, const Integer& a2, const Integer& p) {
    if (genus < 1) throw DomainError("thm1_check: genus must be at least 1");
    Thm1Verdict v;
    v.provenance = {Axiom::positive_pair_is_lspace, Axiom::lspace_a2_nonzero, Axiom::casson_surgery_formula,
                    Axiom::lspace_knot_fibered};

    v.p_positive_odd = p > 0 && p % 2 != 0;
    if (!v.p_positive_odd) v.reasons.push_back("p must be a positive odd integer");

    v.a2_nonzero = a2 != 0;
    if (!v.a2_nonzero) v.reasons.push_back("L-space surgery forces a2 != 0");

    if (v.p_positive_odd) {
        v.required_a2 = a2_required_by_surgery(p).closed_form;
        v.a2_matches = v.required_a2 == Rational(a2);
        if (!v.a2_matches)
            v.reasons.push_back("a2 = " + a2.get_str() + " but the surgery requires (p-1)(p-3)/48 = " +
                                v.required_a2.to_string());
    }

    v.a2_within_genus_bound = a2 <= genus * genus;
    if (!v.a2_within_genus_bound) v.reasons.push_back("a2 exceeds g^2 = " + Integer(genus * genus).get_str());

    const Integer bound = 7 * genus + 2;
    v.p_within_bound = p <= bound;
    if (!v.p_within_bound) v.reasons.push_back("p exceeds 7g+2 = " + bound.get_str());
    return v;
}

std::vector<Thm1Candidate> thm1_candidate_ps(const Integer& genus) {
    if (genus < 1) throw DomainError("thm1_candidate_ps: genus must be at least 1");
    std::vector<Thm1Candidate> out;
    const Integer limit = 7 * genus + 2;
    for (Integer p = 1; p <= limit; p += 2) {
        const Rational need = a2_required_by_surgery(p).closed_form;
        if (need.is_integer() && !need.is_zero() && need <= Rational(genus * genus))
            out.push_back({p, need.num()});
    }
    return out;
}

namespace {

bool in_p7_family(const Integer& p, const Integer& q, const Integer& qp) {
    if (p != 7) return false;
    const Integer r = q - floor_div(q, 7) * 7;
    return (r == 1 && qp == -q - 1) || (r == 2 && qp == -q + 1);
}

}  // namespace

Thm3Report thm3_enumerate(long delta_max, long p_min, long q_scan) {
    if (delta_max < 1) throw DomainError("thm3_enumerate: delta_max must be positive");
    if (p_min < 1) throw DomainError("thm3_enumerate: p_min must be positive");
    if (q_scan == 0) q_scan = delta_max;
    if (q_scan < 0) throw DomainError("thm3_enumerate: q_scan must be nonnegative");

    Thm3Report report;
    report.provenance = {Axiom::exceptional_distance_bound, Axiom::asymmetric_pair_p_gt_2,
                         Axiom::positive_pair_is_lspace, Axiom::lspace_a2_nonzero, Axiom::casson_p7_families};

    for (long p = 1; p <= delta_max; ++p) {
        const long max_gap = delta_max / p;  // |q' - q| <= delta_max / p
        for (long q = 1; q <= q_scan; ++q) {
            if (gcd(p, q) != 1) continue;
            for (long qp = q - max_gap; qp < q; ++qp) {
                if (gcd(Integer(p), Integer(qp)) != 1) continue;
                const Integer dist = Integer(p) * (q - qp);
                const auto exclude = [&](std::string reason, Axiom rule) {
                    report.excluded.push_back({p, q, qp, dist, std::move(reason), rule});
                };
                if (qp == 0) {
                    exclude("second slope is the meridian 1/0", Axiom::exceptional_distance_bound);
                } else if (qp > 0) {
                    // Both slopes positive: K is an L-space knot with a2 != 0, so the pair must lie in a
                    // p = 7 family, whose members sit at distance 7|14s+3| >= 21.
                    if (in_p7_family(p, q, qp) && dist <= delta_max)
                        throw std::logic_error("p = 7 family member within the distance bound");
                    exclude("q' > 0 forces an L-space knot; only the p = 7 families survive the a2 constraint, "
                            "and they have distance 7|14s+3| > 8",
                            Axiom::casson_p7_families);
                } else if (qp != -q && p < p_min) {
                    exclude("q' < 0 with q' != -q gives |q'-q| >= 3, so p <= " + std::to_string(delta_max / 3) +
                                ", below the bound p >= " + std::to_string(p_min),
                            Axiom::asymmetric_pair_p_gt_2);
                } else {
                    report.pairs.emplace_back(reduce(p, q), reduce(p, qp));
                }
            }
        }
    }
    std::sort(report.pairs.begin(), report.pairs.end());
    std::sort(report.excluded.begin(), report.excluded.end(), [](const auto& a, const auto& b) {
        return std::tie(a.p, a.q, a.q_prime) < std::tie(b.p, b.q, b.q_prime);
    });
    return report;
}

std::vector<Slope> thm3_slope_set() {
    std::vector<Slope> out;
    for (const auto& pair : thm3_enumerate().pairs) out.push_back(pair.first());
    return out;
}

std::vector<P7Distance> p7_family_distances(long s_range) {
    if (s_range < 0) throw DomainError("p7_family_distances: s_range must be nonnegative");
    std::vector<P7Distance> out;
    const Integer p = 7;
    for (long s = -s_range; s <= s_range; ++s) {
        const Integer expected = 7 * abs(Integer(14 * s + 3));
        const Integer d1 = p * abs(Integer((-7 * s - 2) - (7 * s + 1)));
        const Integer d2 = p * abs(Integer((-7 * s - 1) - (7 * s + 2)));
        if (d1 != expected || d2 != expected)
            throw std::logic_error("p = 7 family distance mismatch at s = " + std::to_string(s));
        if (expected <= 8) throw std::logic_error("p = 7 family within distance 8 at s = " + std::to_string(s));
        out.push_back({s, expected});
    }
    return out;
}

SlopePair parse_pair(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) throw DomainError("pair must be written \"r,s\"");
    const Slope a = parse_slope(text.substr(0, comma));
    const Slope b = parse_slope(text.substr(comma + 1));
    for (const Slope* s : {&a, &b})
        if (s->p() == 0 || s->is_meridian()) throw DomainError("degenerate slope " + s->to_string() + " in pair");
    return SlopePair(a, b);
}

PairClassification cor6_classify(const SlopePair& input) {
    if (!input.is_mirror_pair()) throw DomainError("cor6_classify: " + input.to_string() + " is not of the form (r, -r)");
    const SlopePair pair = input.first().p() > 0 ? input : SlopePair(input.second(), input.first());
    const auto admitted = thm3_slope_set();
    if (std::find(admitted.begin(), admitted.end(), pair.first()) == admitted.end())
        throw DomainError("cor6_classify: " + pair.to_string() + " is not admitted by the exceptional-slope enumeration");

    PairClassification c;
    c.distance = pair.distance();
    c.provenance = {Axiom::reducible_or_cyclic_distance, Axiom::finite_noncyclic_pairs,
                    Axiom::toroidal_distance_classification};
    c.irreducible = c.distance > 1;
    c.notes.push_back("distance " + c.distance.get_str() + " > 1 rules out reducible manifolds and cyclic fundamental groups");
    c.infinite_pi1 = c.irreducible;
    c.notes.push_back("finite non-cyclic pairs exclude every admitted pair");

    const bool plus_minus_four = pair.first() == reduce(4, 1);
    const bool plus_minus_one = pair.first() == reduce(1, 1);
    c.toroidal_possible = plus_minus_four || plus_minus_one;
    if (plus_minus_four)
        c.notes.push_back("toroidal at distance 8: realized by the figure-eight knot");
    else if (plus_minus_one)
        c.notes.push_back("distance 2 lies outside the distance >= 4 toroidal classification; realization undecided");
    else
        c.notes.push_back("distance " + c.distance.get_str() + " >= 4 and not +-4: not toroidal");
    return c;
}

}  // namespace ccsurg
