#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace ccsurg {

/// Published results that verdicts rely on but this library does not re-derive. Every
/// verdict lists the ones it used, so computed facts stay separate from assumed ones.
enum class Axiom {
    positive_pair_is_lspace,
    lspace_a2_nonzero,
    casson_surgery_formula,
    lspace_knot_fibered,
    exceptional_distance_bound,
    asymmetric_pair_p_gt_2,
    casson_p7_families,
    reducible_or_cyclic_distance,
    finite_noncyclic_pairs,
    toroidal_distance_classification,
    finite_type_v3_obstruction,
};

struct AxiomInfo {
    Axiom id;
    std::string_view key;
    std::string_view statement;
};

const AxiomInfo& describe(Axiom a);
std::span<const AxiomInfo> all_axioms();

}  // namespace ccsurg
