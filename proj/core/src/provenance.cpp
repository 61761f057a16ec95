#include "ccsurg/provenance.hpp"

#include <array>
#include <stdexcept>

namespace ccsurg {

namespace {

constexpr std::array<AxiomInfo, 11> kAxioms{{
    {Axiom::positive_pair_is_lspace, "positive_pair_is_lspace",
     "If K(r) and -K(r') are homeomorphic with r, r' > 0, both are L-spaces, so K is an L-space knot."},
    {Axiom::lspace_a2_nonzero, "lspace_a2_nonzero",
     "A nontrivial L-space knot has Delta''(1) != 0, hence a2 != 0."},
    {Axiom::casson_surgery_formula, "casson_surgery_formula",
     "If K(p) and -K(p/2) are homeomorphic and a2(K) != 0, then 6 a2(K) = p (s(1,p) + s(2,p))."},
    {Axiom::lspace_knot_fibered, "lspace_knot_fibered",
     "L-space knots are fibered, so the top exponent of the Alexander polynomial equals the genus."},
    {Axiom::exceptional_distance_bound, "exceptional_distance_bound",
     "Two exceptional slopes of a hyperbolic knot are at distance at most 8."},
    {Axiom::asymmetric_pair_p_gt_2, "asymmetric_pair_p_gt_2",
     "A chirally cosmetic pair p/q, p/q' other than q' = -q has p > 2."},
    {Axiom::casson_p7_families, "casson_p7_families",
     "With p <= 8 and a2 != 0, a chirally cosmetic pair p/q, p/q' is p = 7 with (q, q') = (7s+1, -7s-2) or "
     "(7s+2, -7s-1)."},
    {Axiom::reducible_or_cyclic_distance, "reducible_or_cyclic_distance",
     "Two surgeries yielding reducible manifolds or cyclic fundamental groups have slopes at distance at most 1."},
    {Axiom::finite_noncyclic_pairs, "finite_noncyclic_pairs",
     "The classified pairs of finite non-cyclic surgeries contain no pair {r, -r} with r in "
     "{1, 2, 3, 4, 1/2, 1/3, 1/4}."},
    {Axiom::toroidal_distance_classification, "toroidal_distance_classification",
     "Toroidal surgeries on hyperbolic knots at distance at least 4 are classified; among pairs {r, -r} only "
     "+-4 on the figure-eight knot occurs."},
    {Axiom::finite_type_v3_obstruction, "finite_type_v3_obstruction",
     "If v3(K) != 0 then the +-1 surgeries on K are not chirally cosmetic."},
}};

}  // namespace

const AxiomInfo& describe(Axiom a) {
    for (const auto& info : kAxioms)
        if (info.id == a) return info;
    throw std::logic_error("unknown axiom");
}

std::span<const AxiomInfo> all_axioms() { return kAxioms; }

}  // namespace ccsurg
