#include "ccsurg/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "ccsurg/obstructions.hpp"
#include "json.hpp"

namespace ccsurg {

using nlohmann::json;

// ---- Affine ---------------------------------------------------------------

std::string Affine::to_string(std::string_view symbol) const {
    if (is_constant()) return constant.to_string();
    std::string out;
    if (coeff == Rational(-1))
        out = "-";
    else if (coeff != Rational(1))
        out = coeff.to_string();
    out += symbol;
    if (constant.sign() > 0) out += "+" + constant.to_string();
    if (constant.sign() < 0) out += constant.to_string();
    return out;
}

Affine Affine::parse(std::string_view text, std::string_view symbol) {
    const auto at = symbol.empty() ? std::string_view::npos : text.find(symbol);
    if (at == std::string_view::npos) return {Rational(0), Rational::parse(text)};
    Affine out;
    std::string head(text.substr(0, at));
    std::erase(head, ' ');
    if (!head.empty() && head.back() == '*') head.pop_back();
    if (head.empty() || head == "+")
        out.coeff = 1;
    else if (head == "-")
        out.coeff = -1;
    else
        out.coeff = Rational::parse(head);
    std::string tail(text.substr(at + symbol.size()));
    std::erase(tail, ' ');
    if (!tail.empty()) {
        if (tail.front() != '+' && tail.front() != '-') throw DomainError("malformed affine value '" + std::string(text) + "'");
        out.constant = Rational::parse(tail.front() == '+' ? tail.substr(1) : tail);
    }
    if (out.coeff.is_zero()) throw DomainError("affine value '" + std::string(text) + "' has zero coefficient");
    return out;
}

namespace {

Slope to_slope(const Rational& r) { return reduce(r.num(), r.den()); }

// ---- JSON reading ------------------------------------------------------------

class RecordReader {
public:
    RecordReader(const json& j, long index) : j_(j), index_(index) {}

    [[noreturn]] void fail(const std::string& field, const std::string& message) const {
        throw CatalogError(index_, field, message);
    }

    bool has(const char* field) const { return j_.contains(field) && !j_.at(field).is_null(); }
    const json& at(const char* field) const {
        if (!j_.contains(field)) fail(field, "missing");
        return j_.at(field);
    }

    std::string string(const char* field) const {
        const auto& v = at(field);
        if (!v.is_string()) fail(field, "expected a string");
        return v.get<std::string>();
    }
    long integer(const char* field) const { return integer_value(at(field), field); }
    bool boolean(const char* field) const {
        const auto& v = at(field);
        if (!v.is_boolean()) fail(field, "expected a boolean");
        return v.get<bool>();
    }
    const json& array(const char* field) const {
        const auto& v = at(field);
        if (!v.is_array()) fail(field, "expected an array");
        return v;
    }
    long integer_value(const json& v, const std::string& field) const {
        if (!v.is_number_integer()) fail(field, "expected an integer");
        return v.get<long>();
    }

    template <typename F>
    auto guarded(const std::string& field, F&& f) const {
        try {
            return f();
        } catch (const CatalogError&) {
            throw;
        } catch (const std::exception& e) {
            fail(field, e.what());
        }
    }

private:
    const json& j_;
    long index_;
};

KnotFamily read_family(const RecordReader& r) {
    const auto& f = r.at("family");
    if (!f.is_object() || !f.contains("type") || !f.at("type").is_string()) r.fail("family", "expected {\"type\": ...}");
    const auto type = f.at("type").get<std::string>();
    RecordReader fr(f, 0);
    return r.guarded("family", [&]() -> KnotFamily {
        if (type == "torus") return TorusFamily{fr.integer("p"), fr.integer("q")};
        if (type == "two_bridge") {
            TwoBridgeFamily out;
            for (const auto& b : fr.array("b")) out.b.push_back(fr.integer_value(b, "b"));
            return out;
        }
        if (type == "pretzel") {
            PretzelFamily out;
            for (const auto& q : fr.array("q")) {
                if (q.is_number_integer())
                    out.q.push_back({Rational(0), Rational(q.get<long>())});
                else if (q.is_string())
                    out.q.push_back(Affine::parse(q.get<std::string>()));
                else
                    throw DomainError("pretzel entries must be integers or affine strings");
            }
            return out;
        }
        if (type == "montesinos") {
            MontesinosFamily out;
            for (const auto& x : fr.array("fractions")) {
                if (!x.is_string()) throw DomainError("montesinos fractions must be strings");
                out.fractions.push_back(Rational::parse(x.get<std::string>()));
            }
            return out;
        }
        if (type == "figure_eight") return FigureEightFamily{};
        if (type == "other") return OtherFamily{f.contains("description") ? fr.string("description") : ""};
        throw DomainError("unknown family type '" + type + "'");
    });
}

void check_canonical(const RecordReader& r, const char* field, const std::string& text, const std::string& canon) {
    if (text != canon) r.fail(field, "'" + text + "' is not in canonical form '" + canon + "'");
}

std::string shorthand(const SeifertData& s) {
    std::string out = s.base == Base::disk ? "D2(" : "S2(";
    for (std::size_t i = 0; i < s.fibers.size(); ++i) out += (i ? "," : "") + s.fibers[i].value().to_string();
    return out + ")";
}

KnotRecord read_record(const json& j, long index) {
    if (!j.is_object()) throw CatalogError(index, "", "record must be an object");
    const RecordReader r(j, index);
    KnotRecord k;
    k.name = r.string("name");
    k.family = read_family(r);
    if (r.has("genus")) {
        k.genus = r.integer("genus");
        if (*k.genus < 1) r.fail("genus", "must be positive");
    }
    if (r.has("parameter")) {
        const auto& p = r.at("parameter");
        const RecordReader pr(p, index);
        Parameter param;
        param.symbol = pr.string("symbol");
        if (p.contains("excluded"))
            for (const auto& e : pr.array("excluded")) param.excluded.push_back(pr.integer_value(e, "parameter.excluded"));
        k.parameter = param;
    }
    if (r.has("alexander")) {
        std::vector<std::pair<long, Integer>> terms;
        for (const auto& t : r.array("alexander")) {
            if (!t.is_array() || t.size() != 2) r.fail("alexander", "terms must be [exponent, coefficient]");
            terms.emplace_back(r.integer_value(t[0], "alexander"), Integer(r.integer_value(t[1], "alexander")));
        }
        LaurentPolynomial f(terms);
        if (!is_symmetric_normalized(f)) r.fail("alexander", "polynomial must be symmetric with value 1 at t = 1");
        k.alexander = f;
    }
    if (r.has("v3")) k.v3 = r.integer("v3");
    if (r.has("amphicheiral")) k.amphicheiral = r.boolean("amphicheiral");
    if (r.has("alternating")) k.alternating = r.boolean("alternating");
    k.slope_provenance = r.has("slope_provenance") ? r.string("slope_provenance") : "";

    const std::string symbol = k.parameter ? k.parameter->symbol : "";
    for (const auto& s : r.array("exceptional_slopes")) {
        if (!s.is_string()) r.fail("exceptional_slopes", "slopes must be strings");
        const auto text = s.get<std::string>();
        const Affine a = r.guarded("exceptional_slopes", [&] {
            if (!k.parameter) return Affine{Rational(0), parse_slope(text).value()};
            return Affine::parse(text, symbol);
        });
        check_canonical(r, "exceptional_slopes", text, a.to_string(symbol));
        if (std::find(k.exceptional_slopes.begin(), k.exceptional_slopes.end(), a) != k.exceptional_slopes.end())
            r.fail("exceptional_slopes", "duplicate slope " + text);
        k.exceptional_slopes.push_back(a);
    }

    if (r.has("seifert_surgeries")) {
        for (const auto& m : r.array("seifert_surgeries")) {
            const RecordReader mr(m, index);
            const auto slope_text = mr.string("slope");
            const auto manifold_text = mr.string("manifold");
            SurgeryManifold sm = r.guarded("seifert_surgeries", [&] {
                return SurgeryManifold{parse_slope(slope_text), parse_seifert_shorthand(manifold_text)};
            });
            check_canonical(r, "seifert_surgeries", slope_text, sm.slope.to_string());
            check_canonical(r, "seifert_surgeries", manifold_text, shorthand(sm.manifold));
            const Affine as_affine{Rational(0), sm.slope.value()};
            if (std::find(k.exceptional_slopes.begin(), k.exceptional_slopes.end(), as_affine) ==
                k.exceptional_slopes.end())
                r.fail("seifert_surgeries", "slope " + slope_text + " is not an exceptional slope of the record");
            k.seifert_surgeries.push_back(std::move(sm));
        }
    }

    // Cross-field invariants.
    if (k.amphicheiral.value_or(false)) {
        for (const auto& a : k.exceptional_slopes) {
            const Affine neg{-a.coeff, -a.constant};
            if (std::find(k.exceptional_slopes.begin(), k.exceptional_slopes.end(), neg) == k.exceptional_slopes.end())
                r.fail("exceptional_slopes", "amphicheiral knot is missing the negative of " + a.to_string(symbol));
        }
        if (k.v3 && *k.v3 != 0) r.fail("v3", "v3 of an amphicheiral knot must vanish");
    }
    if (k.alexander && k.genus) {
        if (k.alexander->max_exponent() > *k.genus) r.fail("alexander", "degree exceeds the genus");
        std::optional<GapSequence> gaps;
        try {
            gaps = lspace_gaps(*k.alexander);
        } catch (const DomainError&) {
            // not an L-space knot: only the degree bound applies
        }
        if (gaps && gaps->top() != *k.genus)
            r.fail("genus", "L-space polynomial has top exponent " + std::to_string(gaps->top()));
    }
    if (k.alternating.value_or(false)) {
        if (k.parameter) r.fail("alternating", "alternating records must be concrete");
        auto expected = r.guarded("family", [&] { return alternating_exceptional_slopes(k.family); });
        auto stored = k.concrete_slopes();
        std::sort(stored.begin(), stored.end());
        if (stored != expected) r.fail("exceptional_slopes", "does not match the alternating case list for the family");
    }
    return k;
}

// ---- JSON writing ------------------------------------------------------------

json write_family(const KnotFamily& f) {
    json out{{"type", family_type(f)}};
    std::visit(
        [&](const auto& fam) {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, TorusFamily>) {
                out["p"] = fam.p;
                out["q"] = fam.q;
            } else if constexpr (std::is_same_v<T, TwoBridgeFamily>) {
                out["b"] = fam.b;
            } else if constexpr (std::is_same_v<T, PretzelFamily>) {
                json q = json::array();
                for (const auto& a : fam.q) {
                    if (a.is_constant() && a.constant.is_integer())
                        q.push_back(to_int64(a.constant.num()));
                    else
                        q.push_back(a.to_string());
                }
                out["q"] = q;
            } else if constexpr (std::is_same_v<T, MontesinosFamily>) {
                json fr = json::array();
                for (const auto& x : fam.fractions) fr.push_back(x.to_string());
                out["fractions"] = fr;
            } else if constexpr (std::is_same_v<T, OtherFamily>) {
                if (!fam.description.empty()) out["description"] = fam.description;
            }
        },
        f);
    return out;
}

json write_record(const KnotRecord& k) {
    json out{{"name", k.name}, {"family", write_family(k.family)}};
    if (k.genus) out["genus"] = *k.genus;
    if (k.alexander) {
        json terms = json::array();
        for (const auto& [e, c] : k.alexander->terms()) terms.push_back({e, to_int64(c)});
        out["alexander"] = terms;
    }
    if (k.v3) out["v3"] = *k.v3;
    if (k.amphicheiral) out["amphicheiral"] = *k.amphicheiral;
    if (k.alternating) out["alternating"] = *k.alternating;
    if (k.parameter) {
        json p{{"symbol", k.parameter->symbol}};
        if (!k.parameter->excluded.empty()) p["excluded"] = k.parameter->excluded;
        out["parameter"] = p;
    }
    const std::string symbol = k.parameter ? k.parameter->symbol : "";
    json slopes = json::array();
    for (const auto& a : k.exceptional_slopes)
        slopes.push_back(k.parameter ? a.to_string(symbol) : to_slope(a.constant).to_string());
    out["exceptional_slopes"] = slopes;
    if (!k.seifert_surgeries.empty()) {
        json ms = json::array();
        for (const auto& m : k.seifert_surgeries)
            ms.push_back({{"slope", m.slope.to_string()}, {"manifold", shorthand(m.manifold)}});
        out["seifert_surgeries"] = ms;
    }
    if (!k.slope_provenance.empty()) out["slope_provenance"] = k.slope_provenance;
    return out;
}

}  // namespace

std::string family_type(const KnotFamily& f) {
    static constexpr const char* kNames[] = {"torus", "two_bridge", "pretzel", "montesinos", "figure_eight", "other"};
    return kNames[f.index()];
}

std::vector<Slope> KnotRecord::concrete_slopes() const {
    if (parameter) throw DomainError("record '" + name + "' has a parameter; instantiate it first");
    std::vector<Slope> out;
    for (const auto& a : exceptional_slopes) out.push_back(to_slope(a.constant));
    return out;
}

CatalogError::CatalogError(long record, std::string field, const std::string& message)
    : DomainError("record " + std::to_string(record) + (field.empty() ? "" : ", field '" + field + "'") + ": " + message),
      record_(record),
      field_(std::move(field)) {}

Catalog load_catalog(std::istream& in) {
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw CatalogError(-1, "", std::string("malformed JSON: ") + e.what());
    }
    Catalog c;
    const json* records = &root;
    if (root.is_object()) {
        if (!root.contains("records") || !root.at("records").is_array())
            throw CatalogError(-1, "records", "catalog object needs a \"records\" array");
        if (root.contains("schema")) c.schema = root.at("schema").get<std::string>();
        if (root.contains("source")) c.source = root.at("source").get<std::string>();
        records = &root.at("records");
    } else if (!root.is_array()) {
        throw CatalogError(-1, "", "catalog must be an array or an object with \"records\"");
    }
    long index = 0;
    for (const auto& j : *records) c.records.push_back(read_record(j, index++));
    return c;
}

Catalog load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open catalog file '" + path + "'");
    return load_catalog(in);
}

std::string serialize_catalog(const Catalog& catalog) {
    json records = json::array();
    for (const auto& k : catalog.records) records.push_back(write_record(k));
    json root{{"schema", catalog.schema}, {"records", records}};
    if (!catalog.source.empty()) root["source"] = catalog.source;
    return root.dump(2) + "\n";
}

std::vector<Slope> alternating_exceptional_slopes(const KnotFamily& family) {
    const auto range = [](long lo, long hi) {
        std::vector<Slope> out;
        for (long r = lo; r <= hi; ++r) out.push_back(reduce(r, 1));
        return out;
    };
    const auto odd = [](long x) { return x % 2 != 0; };

    if (std::holds_alternative<FigureEightFamily>(family)) return range(-4, 4);

    if (const auto* tb = std::get_if<TwoBridgeFamily>(&family)) {
        if (tb->b.size() != 2) throw DomainError("two-bridge case list covers K[b1, b2] only");
        const long b1 = tb->b[0];
        const long b2 = tb->b[1];
        if (!odd(b1) && std::abs(b1 / 2) > 2) {
            if (b2 == 2) return range(-4, 0);
            if (b2 == -2) return range(0, 4);
        }
        if (std::abs(b1) > 2 && std::abs(b2) > 2 && !odd(b2)) {
            if (!odd(b1)) return {reduce(0, 1)};
            return {reduce(2 * b2, 1)};
        }
        throw DomainError("two-bridge parameters match no alternating case");
    }

    if (const auto* pz = std::get_if<PretzelFamily>(&family)) {
        if (pz->q.size() != 3) throw DomainError("pretzel case list covers P(q1, q2, q3) only");
        std::vector<long> q;
        for (const auto& a : pz->q) {
            if (!a.is_constant() || !a.constant.is_integer()) throw DomainError("pretzel parameters must be integers");
            q.push_back(to_int64(a.constant.num()));
        }
        for (long x : q)
            if (x == 0 || x == 1 || x == -1) throw DomainError("pretzel parameters must avoid 0 and +-1");
        const bool same_sign = (q[0] > 0) == (q[1] > 0) && (q[1] > 0) == (q[2] > 0);
        if (!same_sign) throw DomainError("pretzel with mixed signs is not alternating");
        if (odd(q[0]) && odd(q[1]) && odd(q[2])) return {reduce(0, 1)};
        if (!odd(q[0]) && odd(q[1]) && odd(q[2])) return {reduce(2 * (q[1] + q[2]), 1)};
        throw DomainError("pretzel parameters match no alternating case");
    }
    throw DomainError("family '" + family_type(family) + "' has no alternating case");
}

// ---- pipeline ------------------------------------------------------------------

namespace {

bool admissible(const Parameter& p, const Integer& n) {
    return std::none_of(p.excluded.begin(), p.excluded.end(), [&](long e) { return n == e; });
}

// Parameter values at which some stored slope equals +-r for r in the admitted set,
// plus one representative value when two constant slopes already form a mirror pair.
std::vector<long> relevant_parameters(const KnotRecord& k, const std::vector<Slope>& admitted) {
    std::set<long> values;
    for (const auto& a : k.exceptional_slopes) {
        if (a.is_constant()) continue;
        for (const auto& s : admitted)
            for (const Rational& target : {s.value(), -s.value()}) {
                const Rational n = (target - a.constant) / a.coeff;
                if (n.is_integer() && admissible(*k.parameter, n.num())) values.insert(to_int64(n.num()));
            }
    }
    bool constant_pair = false;
    for (const auto& a : k.exceptional_slopes)
        for (const auto& b : k.exceptional_slopes)
            if (a.is_constant() && b.is_constant() && !a.constant.is_zero() && a.constant == -b.constant) constant_pair = true;
    if (constant_pair) {
        for (long n = 0;; n = n > 0 ? -n : -n + 1)
            if (admissible(*k.parameter, n)) {
                values.insert(n);
                break;
            }
    }
    return {values.begin(), values.end()};
}

std::vector<SlopePair> mirror_pairs_of(const std::vector<Slope>& slopes) {
    std::vector<SlopePair> out;
    for (const auto& s : slopes)
        if (s.p() > 0 && std::find(slopes.begin(), slopes.end(), mirror(s)) != slopes.end())
            out.emplace_back(s, mirror(s));
    std::sort(out.begin(), out.end());
    return out;
}

const SurgeryManifold* find_surgery(const KnotRecord& k, const Slope& s) {
    for (const auto& m : k.seifert_surgeries)
        if (m.slope == s) return &m;
    return nullptr;
}

struct Candidate {
    SlopePair pair;
    std::optional<long> parameter;
};

}  // namespace

PipelineEntry chirally_cosmetic_candidates(const KnotRecord& k) {
    PipelineEntry entry;
    entry.knot = k.name;
    entry.provenance = {Axiom::exceptional_distance_bound, Axiom::asymmetric_pair_p_gt_2, Axiom::casson_p7_families};
    const auto admitted = thm3_slope_set();

    // Stage 1: mirror pairs {r, -r}, instantiating family rows where needed.
    std::vector<Candidate> found;
    if (k.parameter) {
        for (long n : relevant_parameters(k, admitted)) {
            std::vector<Slope> slopes;
            for (const auto& a : k.exceptional_slopes) slopes.push_back(to_slope(a.at(n)));
            for (auto& p : mirror_pairs_of(slopes)) found.push_back({p, n});
        }
    } else {
        for (auto& p : mirror_pairs_of(k.concrete_slopes())) found.push_back({p, std::nullopt});
    }
    for (const auto& c : found) entry.mirror_pairs.push_back(c.pair);

    // Stage 2: the exceptional-slope enumeration admits only seven pairs.
    std::vector<Candidate> live;
    for (const auto& c : found) {
        if (std::find(admitted.begin(), admitted.end(), c.pair.first()) != admitted.end())
            live.push_back(c);
        else
            entry.removed.push_back({c.pair, "distance bound: " + c.pair.first().to_string() + " is not an admitted slope",
                                     c.parameter});
    }
    entry.filters.push_back({"thm3", found.empty() ? "no effect" : "applied",
                             std::to_string(found.size()) + " mirror pair(s), " + std::to_string(live.size()) +
                                 " admitted"});

    // Stage 3: v3 != 0 obstructs the +-1 pair.
    const Slope one = reduce(1, 1);
    if (!k.v3) {
        entry.filters.push_back({"v3", "skipped: datum absent", ""});
    } else if (*k.v3 == 0) {
        entry.filters.push_back({"v3", "no effect", "v3 = 0"});
    } else {
        entry.provenance.push_back(Axiom::finite_type_v3_obstruction);
        const auto before = live.size();
        std::erase_if(live, [&](const Candidate& c) {
            if (c.pair.first() != one) return false;
            entry.removed.push_back({c.pair, "v3 obstruction: v3 = " + std::to_string(*k.v3) + " != 0", c.parameter});
            return true;
        });
        entry.filters.push_back({"v3", before == live.size() ? "no effect" : "applied", "v3 = " + std::to_string(*k.v3)});
    }

    // Stage 4: compare known Seifert surgeries for K(r) = -K(-r).
    if (k.seifert_surgeries.empty()) {
        entry.filters.push_back({"seifert_comparison", "skipped: datum absent", ""});
    } else {
        std::string detail;
        const auto before = live.size();
        for (const auto& m : k.seifert_surgeries) {
            const SurgeryManifold* other = find_surgery(k, mirror(m.slope));
            if (other == nullptr || m.slope.p() < 0) continue;
            ComparisonResult cmp{ChiralComparison::distinct, "normal forms differ"};
            try {
                cmp = sfs_chiral_compare(m.manifold, other->manifold);
            } catch (const UnsupportedError& e) {
                cmp.reason = e.what();
            }
            const bool chiral = normalize_closed_sfs(m.manifold) == normalize_closed_sfs(reverse_orientation(other->manifold));
            detail += (detail.empty() ? "" : "; ") + m.slope.to_string() + " vs " + other->slope.to_string() + ": " +
                      (chiral ? "orientation-reversingly homeomorphic" : to_string(cmp.verdict));
            if (chiral) continue;
            std::erase_if(live, [&](const Candidate& c) {
                if (c.pair.first() != m.slope) return false;
                entry.removed.push_back({c.pair, "surgered manifolds are not orientation-reversingly homeomorphic: " + cmp.reason,
                                         c.parameter});
                return true;
            });
        }
        entry.filters.push_back({"seifert_comparison", before == live.size() ? "no effect" : "applied", detail});
    }

    // Stage 5: amphicheiral knots realize every surviving pair.
    const bool amph = k.amphicheiral.value_or(false);
    if (!k.amphicheiral)
        entry.filters.push_back({"amphicheiral", "skipped: datum absent", ""});
    else
        entry.filters.push_back({"amphicheiral", amph && !live.empty() ? "applied" : "no effect",
                                 amph ? "r and -r surgeries are mirror images" : "not amphicheiral"});
    for (const auto& c : live) entry.surviving.push_back({c.pair, amph, c.parameter});
    return entry;
}

PipelineReport thm4_pipeline(const std::vector<KnotRecord>& catalog) {
    PipelineReport report;
    for (const auto& k : catalog) report.entries.push_back(chirally_cosmetic_candidates(k));
    std::stable_sort(report.entries.begin(), report.entries.end(),
                     [](const PipelineEntry& a, const PipelineEntry& b) { return a.knot < b.knot; });
    for (const auto& e : report.entries)
        if (!e.surviving.empty()) report.survivors.push_back(e.knot);
    report.survivors.erase(std::unique(report.survivors.begin(), report.survivors.end()), report.survivors.end());
    return report;
}

}  // namespace ccsurg
