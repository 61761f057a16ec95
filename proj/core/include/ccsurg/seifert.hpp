#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ccsurg/rational.hpp"
#include "ccsurg/slope.hpp"
#include "ccsurg/smith.hpp"

namespace ccsurg {

enum class Base { disk, sphere };

/// Unnormalized invariant beta/alpha of one fiber.
struct Fiber {
    Integer alpha;
    Integer beta;

    Rational value() const { return Rational(beta, alpha); }
    friend bool operator==(const Fiber&, const Fiber&) = default;
};

/// Orientable Seifert fibered space over a disk (a knot exterior) or a sphere (closed).
/// Fibers with |alpha| = 1 are allowed and act as section twists.
struct SeifertData {
    Base base = Base::disk;
    std::vector<Fiber> fibers;

    /// Throws DomainError when alpha = 0 or gcd(alpha, beta) != 1.
    void validate() const;
    std::size_t exceptional_fibers() const;

    friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

/// {"base":"disk","fibers":[[alpha,beta],...]}
SeifertData seifert_from_json(std::string_view json);
std::string seifert_to_json(const SeifertData& s);
/// Shorthand list of fractions beta/alpha, e.g. "S2(1/3,1/4,-4/7)", "D2(-1/3,1/5)" or "1/3,1/4,-4/7"
/// (a bare list defaults to the sphere base).
SeifertData parse_seifert_shorthand(std::string_view text);

/// A presentation of first homology together with the classes of the boundary
/// section curve c0 and the regular fiber h, as integer combinations of generators.
struct HomologyPresentation {
    std::vector<std::string> generators;
    IntegerMatrix relations;
    std::vector<Integer> c0;
    std::vector<Integer> h;
};

/// Generators c0, c1, ..., cn, h with relations alpha_i c_i - beta_i h = 0 and
/// c0 + c1 + ... + cn = 0. Requires a disk base.
HomologyPresentation exterior_presentation(const SeifertData& s);

/// The torsion-free reduction for fibers of the symmetric form
/// {b1/a1, b2/a2, -b2/a2, ..., bj/aj, -bj/aj, 1/2, ..., 1/2} (at least one 1/2 fiber).
///
/// Assuming H1 has no torsion forces c_{2k} = -c_{2k+1}, all c_l of the 1/2 fibers to agree
/// with c_n, and h = 2 c_n, leaving generators c1, c3, ..., c_{2j-1}, c_n with relations
/// a1 c1 - 2 b1 c_n = 0 and a_{k+1} c_{2k+1} + 2 b_{k+1} c_n = 0. When the full presentation
/// has torsion, this presents H1 modulo torsion.
HomologyPresentation reduced_presentation(const SeifertData& s);

struct HomologyClasses {
    AbelianGroup group;
    GroupElement c0;
    GroupElement h;
};

/// Cokernel of a presentation plus the classes of c0 and h. With free rank 1 the free
/// generator is oriented so that c0 (or h, when c0 is torsion) has a positive coefficient.
HomologyClasses homology(const HomologyPresentation& pres);

/// homology(exterior_presentation(s)).
HomologyClasses h1_exterior(const SeifertData& s);

/// Boundary curves mu = mu_c0 c0 + mu_h h and lambda = lambda_c0 c0 + lambda_h h.
struct BoundaryBasis {
    Integer mu_c0 = 1, mu_h = 0;
    Integer lambda_c0 = 0, lambda_h = 1;
};

/// Dehn filling that kills a mu + b lambda.
struct Filling {
    BoundaryBasis basis;
    Integer a = 1;
    Integer b = 0;
};

/// Adds the filling relation. Rejects non-primitive (a, b) and bases with determinant != +-1.
HomologyPresentation fill(const HomologyPresentation& pres, const Filling& filling);

/// homology(fill(exterior_presentation(s), filling)).group
AbelianGroup h1_filled(const SeifertData& s, const Filling& filling);

struct Thm2Solution {
    long alpha;
    long m;
    /// |p|; the pair (p, p/2) is taken with p > 0 up to overall orientation.
    long p;
    /// The value the formula yields before orientation normalization.
    long signed_p;

    friend bool operator==(const Thm2Solution&, const Thm2Solution&) = default;
};

/// Integer (alpha, m) with 2 <= |alpha| <= alpha_max, |m| <= m_max for which
/// p = alpha^2 (2m+1) / ((alpha(2m+1) - 1)/2) and p/2 = alpha^2 (2m+1) / ((alpha(2m+1) + 1)/2)
/// describe the same nonzero integer p, with both denominators integral.
/// Sorted by p, then m descending, then alpha descending.
std::vector<Thm2Solution> thm2_solve(long alpha_max, long m_max);

/// ((18m+9)/(3m+1), (18m+9)/(3m+2)), reduced.
SlopePair remark_slopes(const Integer& m);

/// Closed Seifert space over the sphere in normal form: fibers with 0 < beta < alpha,
/// sorted by (alpha, beta), integer parts collected in e0.
struct ClosedSfsNormalForm {
    Integer e0;
    std::vector<Fiber> fibers;

    std::string to_string() const;
    friend bool operator==(const ClosedSfsNormalForm&, const ClosedSfsNormalForm&) = default;
};

ClosedSfsNormalForm normalize_closed_sfs(const SeifertData& s);

/// Same space with the opposite orientation (every beta negated).
SeifertData reverse_orientation(const SeifertData& s);

enum class ChiralComparison { orientation_preserving_homeo, orientation_reversing_homeo, distinct };

std::string to_string(ChiralComparison c);

struct ComparisonResult {
    ChiralComparison verdict;
    std::string reason;
};

/// Raised for inputs outside what a comparison can decide.
class UnsupportedError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Compares closed Seifert spaces over S^2 with exactly three exceptional fibers, where the
/// normal form is a complete invariant. Other inputs raise UnsupportedError; spaces with at
/// most two exceptional fibers are lens spaces, S^3 or S^2 x S^1 and need a different classification.
ComparisonResult sfs_chiral_compare(const SeifertData& a, const SeifertData& b);

}  // namespace ccsurg
