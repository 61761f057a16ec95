#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "ccsurg/catalog.hpp"
#include "ccsurg/obstructions.hpp"
#include "doctest.h"

using namespace ccsurg;

namespace {

const std::string data_dir = CCSURG_DATA_DIR;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Catalog parse(const std::string& text) {
    std::istringstream in(text);
    return load_catalog(in);
}

std::vector<KnotRecord> bundled() {
    std::vector<KnotRecord> all;
    for (const char* f : {"montesinos_seifert.json", "alternating.json", "toroidal_only.json"}) {
        auto c = load_catalog_file(data_dir + "/catalog/" + f);
        all.insert(all.end(), c.records.begin(), c.records.end());
    }
    return all;
}

const PipelineEntry& entry(const PipelineReport& r, const std::string& knot) {
    const auto it = std::find_if(r.entries.begin(), r.entries.end(), [&](const auto& e) { return e.knot == knot; });
    REQUIRE(it != r.entries.end());
    return *it;
}

std::vector<std::string> pair_strings(const std::vector<SurvivingPair>& v) {
    std::vector<std::string> out;
    for (const auto& s : v) out.push_back(s.pair.to_string());
    return out;
}

}  // namespace

TEST_CASE("affine values") {
    CHECK(Affine::parse("4n+6") == Affine{4, 6});
    CHECK(Affine::parse("-n") == Affine{-1, 0});
    CHECK(Affine::parse("n") == Affine{1, 0});
    CHECK(Affine::parse("2*n-1") == Affine{2, -1});
    CHECK(Affine::parse("37/2") == Affine{0, Rational(37, 2)});
    CHECK(Affine{4, 6}.to_string() == "4n+6");
    CHECK(Affine{-1, -3}.to_string() == "-n-3");
    CHECK(Affine{0, Rational(37, 2)}.to_string() == "37/2");
    CHECK(Affine{4, 6}.at(-2) == Rational(-2));
    CHECK_THROWS_AS(Affine::parse("4n6"), DomainError);
    CHECK_THROWS_AS(Affine::parse("0n+1"), DomainError);
}

TEST_CASE("loading the bundled files") {
    const auto table = load_catalog_file(data_dir + "/catalog/montesinos_seifert.json");
    CHECK(table.records.size() == 13);
    const auto& p237 = table.records[1];
    CHECK(p237.name == "P(-2,3,7)");
    const std::vector<Slope> slopes{reduce(16, 1), reduce(17, 1), reduce(18, 1), reduce(37, 2), reduce(19, 1), reduce(20, 1)};
    CHECK(p237.concrete_slopes() == slopes);
    CHECK(table.records[0].parameter.has_value());
    CHECK_THROWS_AS(table.records[0].concrete_slopes(), DomainError);
    CHECK(load_catalog_file(data_dir + "/catalog/alternating.json").records.size() == 9);
    CHECK(load_catalog_file(data_dir + "/catalog/toroidal_only.json").records.size() == 2);
    CHECK_THROWS_AS(load_catalog_file(data_dir + "/catalog/missing.json"), DomainError);
}

TEST_CASE("bundled files round-trip byte for byte") {
    for (const char* f : {"montesinos_seifert.json", "alternating.json", "toroidal_only.json"}) {
        const auto text = read_file(data_dir + "/catalog/" + f);
        CHECK(serialize_catalog(parse(text)) == text);
    }
}

TEST_CASE("empty and bare-array catalogs") {
    CHECK(parse("[]").records.empty());
    CHECK(parse(R"j({"records": []})j").records.empty());
    const auto c = parse(R"j([{"name": "k", "family": {"type": "other"}, "exceptional_slopes": ["1", "-1"]}])j");
    CHECK(c.records.size() == 1);
}

TEST_CASE("validation errors carry record index and field") {
    const auto expect_error = [](const std::string& text, long record, const std::string& field) {
        try {
            parse(text);
            FAIL("expected CatalogError for " << text);
        } catch (const CatalogError& e) {
            CHECK(e.record() == record);
            CHECK(e.field() == field);
        }
    };
    const std::string ok = R"j({"name": "a", "family": {"type": "other"}, "exceptional_slopes": ["1"]})j";
    expect_error("[" + ok + R"j(, {"name": "b", "family": {"type": "other"}, "exceptional_slopes": ["1", "2/2"]}])j", 1,
                 "exceptional_slopes");
    expect_error(R"j([{"name": "b", "family": {"type": "other"}, "exceptional_slopes": ["1", "1"]}])j", 0, "exceptional_slopes");
    expect_error(R"j([{"family": {"type": "other"}, "exceptional_slopes": []}])j", 0, "name");
    expect_error(R"j([{"name": "x", "family": {"type": "knotty"}, "exceptional_slopes": []}])j", 0, "family");
    expect_error(R"j([{"name": "x", "family": {"type": "other"}, "amphicheiral": true, "exceptional_slopes": ["1", "2", "-1"]}])j", 0,
                 "exceptional_slopes");
    expect_error(R"j([{"name": "x", "family": {"type": "other"}, "amphicheiral": true, "v3": 2, "exceptional_slopes": []}])j", 0, "v3");
    expect_error(R"j([{"name": "x", "family": {"type": "other"}, "genus": 0, "exceptional_slopes": []}])j", 0, "genus");
    expect_error(R"j([{"name": "x", "family": {"type": "other"}, "alexander": [[1, 1], [0, 1]], "exceptional_slopes": []}])j", 0,
                 "alexander");
    expect_error(R"j([{"name": "x", "family": {"type": "other"}, "genus": 2, "alexander": [[-1, 1], [0, -1], [1, 1]], "exceptional_slopes": []}])j",
                 0, "genus");
    expect_error(R"j([{"name": "x", "family": {"type": "two_bridge", "b": [6, 2]}, "alternating": true, "exceptional_slopes": ["0"]}])j", 0,
                 "exceptional_slopes");
    expect_error(R"j([{"name": "x", "family": {"type": "other"}, "exceptional_slopes": ["1"], "seifert_surgeries": [{"slope": "2", "manifold": "S2(1/2,1/3,1/5)"}]}])j",
                 0, "seifert_surgeries");
    expect_error("[" + ok + ", 5]", 1, "");
    CHECK_THROWS_AS(parse("{not json"), CatalogError);
    CHECK_THROWS_AS(parse(R"j({"schema": "x"})j"), CatalogError);
}

TEST_CASE("alternating case lists") {
    const auto ints = [](long lo, long hi) {
        std::vector<Slope> v;
        for (long i = lo; i <= hi; ++i) v.push_back(reduce(i, 1));
        return v;
    };
    CHECK(alternating_exceptional_slopes(FigureEightFamily{}) == ints(-4, 4));
    CHECK(alternating_exceptional_slopes(TwoBridgeFamily{{6, 2}}) == ints(-4, 0));
    CHECK(alternating_exceptional_slopes(TwoBridgeFamily{{6, -2}}) == ints(0, 4));
    CHECK(alternating_exceptional_slopes(TwoBridgeFamily{{8, 4}}) == ints(0, 0));
    CHECK(alternating_exceptional_slopes(TwoBridgeFamily{{5, 4}}) == ints(8, 8));
    CHECK(alternating_exceptional_slopes(PretzelFamily{{{0, 3}, {0, 5}, {0, 7}}}) == ints(0, 0));
    CHECK(alternating_exceptional_slopes(PretzelFamily{{{0, 4}, {0, 3}, {0, 5}}}) == ints(16, 16));
    CHECK_THROWS_AS(alternating_exceptional_slopes(TwoBridgeFamily{{4, 2}}), DomainError);
    CHECK_THROWS_AS(alternating_exceptional_slopes(TwoBridgeFamily{{5, 3}}), DomainError);
    CHECK_THROWS_AS(alternating_exceptional_slopes(PretzelFamily{{{0, 1}, {0, 3}, {0, 5}}}), DomainError);
    CHECK_THROWS_AS(alternating_exceptional_slopes(PretzelFamily{{{0, 3}, {0, 4}, {0, 5}}}), DomainError);
    CHECK_THROWS_AS(alternating_exceptional_slopes(MontesinosFamily{}), DomainError);
}

TEST_CASE("candidates for single records") {
    const auto all = bundled();
    const auto find = [&](const std::string& name) {
        return *std::find_if(all.begin(), all.end(), [&](const KnotRecord& k) { return k.name == name; });
    };

    const auto fig8 = chirally_cosmetic_candidates(find("figure-eight"));
    CHECK(fig8.mirror_pairs.size() == 4);
    CHECK(pair_strings(fig8.surviving) == std::vector<std::string>{"(1, -1)", "(2, -2)", "(3, -3)", "(4, -4)"});
    for (const auto& s : fig8.surviving) CHECK(s.realized);

    const auto m = chirally_cosmetic_candidates(find("M(-1/2,1/3,2/7)"));
    REQUIRE(m.mirror_pairs.size() == 1);
    CHECK(m.mirror_pairs[0].to_string() == "(1, -1)");
    CHECK(m.surviving.empty());
    REQUIRE(m.removed.size() == 1);
    CHECK(m.removed[0].reason.find("v3 obstruction") != std::string::npos);

    const auto p237 = chirally_cosmetic_candidates(find("P(-2,3,7)"));
    CHECK(p237.mirror_pairs.empty());
    const auto v3 = std::find_if(p237.filters.begin(), p237.filters.end(), [](const auto& f) { return f.filter == "v3"; });
    REQUIRE(v3 != p237.filters.end());
    CHECK(v3->status == "skipped: datum absent");

    CHECK(chirally_cosmetic_candidates(find("P(-3,3,7)")).mirror_pairs.empty());
    CHECK(chirally_cosmetic_candidates(find("M(-2/3,1/3,1/4)")).mirror_pairs.empty());
}

TEST_CASE("pipeline filters: distance bound and Seifert comparison") {
    // a pair outside the admitted set is removed by the distance argument
    const auto far = parse(R"j([{"name": "x", "family": {"type": "other"}, "exceptional_slopes": ["5", "-5"]}])j");
    const auto e = chirally_cosmetic_candidates(far.records[0]);
    CHECK(e.mirror_pairs.size() == 1);
    CHECK(e.surviving.empty());
    CHECK(e.removed[0].reason.find("distance bound") != std::string::npos);

    // without v3 the Seifert comparison alone removes the +-1 pair of 10_132
    const auto seifert_pair = parse(R"j([{"name": "y", "family": {"type": "other"}, "exceptional_slopes": ["-2", "-1", "0", "1"],
        "seifert_surgeries": [{"slope": "-1", "manifold": "S2(1/3,1/4,-4/7)"}, {"slope": "1", "manifold": "S2(1/2,1/3,-16/19)"}]}])j");
    const auto m = chirally_cosmetic_candidates(seifert_pair.records[0]);
    CHECK(m.surviving.empty());
    REQUIRE(m.removed.size() == 1);
    CHECK(m.removed[0].reason.find("not orientation-reversingly homeomorphic") != std::string::npos);

    // mirror-image surgeries keep the pair
    const auto chiral = parse(R"j([{"name": "z", "family": {"type": "other"}, "exceptional_slopes": ["-1", "1"],
        "seifert_surgeries": [{"slope": "-1", "manifold": "S2(-1/3,-1/4,4/7)"}, {"slope": "1", "manifold": "S2(1/3,1/4,-4/7)"}]}])j");
    const auto c = chirally_cosmetic_candidates(chiral.records[0]);
    CHECK(c.surviving.size() == 1);
    CHECK_FALSE(c.surviving[0].realized);
}

TEST_CASE("parametric rows are instantiated") {
    const auto fam = parse(R"j([{"name": "f", "family": {"type": "other"}, "parameter": {"symbol": "n", "excluded": [0]},
        "exceptional_slopes": ["n", "-n", "n+5"]}])j");
    const auto e = chirally_cosmetic_candidates(fam.records[0]);
    std::vector<std::string> pairs;
    for (const auto& s : e.surviving) {
        REQUIRE(s.parameter.has_value());
        pairs.push_back(s.pair.to_string());
    }
    CHECK(std::find(pairs.begin(), pairs.end(), "(2, -2)") != pairs.end());
    const auto admitted = thm3_slope_set();
    for (const auto& s : e.surviving) CHECK(std::find(admitted.begin(), admitted.end(), s.pair.first()) != admitted.end());
}

TEST_CASE("pipeline over the bundled catalog") {
    const auto all = bundled();
    const auto report = thm4_pipeline(all);
    CHECK(report.survivors == std::vector<std::string>{"figure-eight"});
    CHECK(pair_strings(entry(report, "figure-eight").surviving) ==
          std::vector<std::string>{"(1, -1)", "(2, -2)", "(3, -3)", "(4, -4)"});
    const auto admitted = thm3_slope_set();
    for (const auto& e : report.entries)
        for (const auto& s : e.surviving) CHECK(std::find(admitted.begin(), admitted.end(), s.pair.first()) != admitted.end());

    // order independence
    std::mt19937_64 rng(9);
    for (int i = 0; i < 5; ++i) {
        auto shuffled = all;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const auto again = thm4_pipeline(shuffled);
        CHECK(again.survivors == report.survivors);
        REQUIRE(again.entries.size() == report.entries.size());
        for (std::size_t k = 0; k < again.entries.size(); ++k) {
            CHECK(again.entries[k].knot == report.entries[k].knot);
            CHECK(pair_strings(again.entries[k].surviving) == pair_strings(report.entries[k].surviving));
        }
    }

    const auto table = load_catalog_file(data_dir + "/catalog/montesinos_seifert.json");
    CHECK(thm4_pipeline(table.records).survivors.empty());
}

TEST_CASE("amphicheiral candidate sets are symmetric") {
    for (const auto& k : bundled()) {
        if (!k.amphicheiral.value_or(false)) continue;
        const auto e = chirally_cosmetic_candidates(k);
        for (const auto& p : e.mirror_pairs) {
            const auto slopes = k.concrete_slopes();
            CHECK(std::find(slopes.begin(), slopes.end(), p.first()) != slopes.end());
            CHECK(std::find(slopes.begin(), slopes.end(), p.second()) != slopes.end());
        }
    }
}
