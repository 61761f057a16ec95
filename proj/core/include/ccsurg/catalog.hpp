#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ccsurg/alexander.hpp"
#include "ccsurg/provenance.hpp"
#include "ccsurg/rational.hpp"
#include "ccsurg/seifert.hpp"
#include "ccsurg/slope.hpp"

namespace ccsurg {

/// Affine value a*n + b in one integer parameter n. Constants have a = 0.
/// Text form: "7", "37/2", "n", "-n", "4n+6", "2n-1".
struct Affine {
    Rational coeff;
    Rational constant;

    bool is_constant() const { return coeff.is_zero(); }
    Rational at(const Integer& n) const { return coeff * Rational(n) + constant; }
    std::string to_string(std::string_view symbol = "n") const;
    static Affine parse(std::string_view text, std::string_view symbol = "n");

    friend bool operator==(const Affine&, const Affine&) = default;
};

struct TorusFamily {
    long p;
    long q;
};
struct TwoBridgeFamily {
    std::vector<long> b;
};
struct PretzelFamily {
    std::vector<Affine> q;
};
struct MontesinosFamily {
    std::vector<Rational> fractions;
};
struct FigureEightFamily {};
struct OtherFamily {
    std::string description;
};

using KnotFamily =
    std::variant<TorusFamily, TwoBridgeFamily, PretzelFamily, MontesinosFamily, FigureEightFamily, OtherFamily>;

std::string family_type(const KnotFamily& f);

/// Integer parameter of a family row, such as n in P(-2, 3, 2n+1).
struct Parameter {
    std::string symbol = "n";
    std::vector<long> excluded;
};

/// A closed manifold obtained by surgery along a stored slope.
struct SurgeryManifold {
    Slope slope;
    SeifertData manifold;
};

struct KnotRecord {
    std::string name;
    KnotFamily family = OtherFamily{};
    std::optional<long> genus;
    std::optional<LaurentPolynomial> alexander;
    std::optional<long> v3;
    std::optional<bool> amphicheiral;
    /// When set, the record describes an alternating knot and its slopes must match
    /// alternating_exceptional_slopes(family).
    std::optional<bool> alternating;
    std::optional<Parameter> parameter;
    /// Affine in the parameter for family rows; constants otherwise.
    std::vector<Affine> exceptional_slopes;
    std::vector<SurgeryManifold> seifert_surgeries;
    std::string slope_provenance;

    /// Slopes of a record without a parameter.
    std::vector<Slope> concrete_slopes() const;
};

struct Catalog {
    std::string schema = "ccsurg-catalog/1";
    std::string source;
    std::vector<KnotRecord> records;
};

/// Schema or invariant violation in a catalog, located by record index and field.
class CatalogError : public DomainError {
public:
    CatalogError(long record, std::string field, const std::string& message);
    long record() const { return record_; }
    const std::string& field() const { return field_; }

private:
    long record_;
    std::string field_;
};

/// Accepts {"schema": ..., "source": ..., "records": [...]} or a bare array of records.
Catalog load_catalog(std::istream& in);
Catalog load_catalog_file(const std::string& path);
/// Canonical text: two-space indented JSON with sorted keys and a trailing newline.
std::string serialize_catalog(const Catalog& catalog);

/// Exceptional slopes of a hyperbolic alternating knot from its family parameters:
/// the figure-eight knot, two-bridge K[2n, +-2] with |n| > 2, two-bridge K[b1, b2] with
/// |b1|, |b2| > 2 and b2 even, and pretzel P(q1, q2, q3) with q_j != 0, +-1 and q2, q3 odd.
/// Throws DomainError for parameters matching no case.
std::vector<Slope> alternating_exceptional_slopes(const KnotFamily& family);

struct FilterOutcome {
    std::string filter;
    /// "applied", "no effect" or "skipped: datum absent".
    std::string status;
    std::string detail;
};

struct RemovedPair {
    SlopePair pair;
    std::string reason;
    std::optional<long> parameter;
};

struct SurvivingPair {
    SlopePair pair;
    bool realized = false;
    std::optional<long> parameter;
};

struct PipelineEntry {
    std::string knot;
    /// Every {r, -r} among the exceptional slopes, r > 0 first.
    std::vector<SlopePair> mirror_pairs;
    std::vector<RemovedPair> removed;
    std::vector<SurvivingPair> surviving;
    std::vector<FilterOutcome> filters;
    std::vector<Axiom> provenance;
};

struct PipelineReport {
    /// Sorted by knot name.
    std::vector<PipelineEntry> entries;
    /// Knots with at least one surviving pair, sorted.
    std::vector<std::string> survivors;
};

PipelineEntry chirally_cosmetic_candidates(const KnotRecord& k);
PipelineReport thm4_pipeline(const std::vector<KnotRecord>& catalog);

}  // namespace ccsurg
