#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "ccsurg/alexander.hpp"
#include "ccsurg/catalog.hpp"
#include "ccsurg/dedekind.hpp"
#include "ccsurg/obstructions.hpp"
#include "ccsurg/seifert.hpp"
#include "ccsurg/smith.hpp"

namespace ccsurg::cli {

using nlohmann::json;

namespace {

struct Output {
    json payload = json::object();
    std::vector<Axiom> provenance;
    std::string text;
};

// ---- value formatting ---------------------------------------------------------

json number(const Integer& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();  // beyond 64 bits: exact decimal string
}

json integers(const std::vector<Integer>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(number(x));
    return out;
}

json pair_json(const SlopePair& p) { return json::array({p.first().to_string(), p.second().to_string()}); }

json element_json(const GroupElement& e) { return {{"free", integers(e.free)}, {"torsion", integers(e.torsion)}}; }

std::string element_text(const GroupElement& e) {
    std::string out;
    for (std::size_t i = 0; i < e.free.size(); ++i) out += (i ? ", " : "") + e.free[i].get_str() + "z" + std::to_string(i + 1);
    for (std::size_t i = 0; i < e.torsion.size(); ++i) out += (out.empty() ? "" : ", ") + e.torsion[i].get_str() + "t" + std::to_string(i + 1);
    return out.empty() ? "0" : out;
}

json matrix_json(const IntegerMatrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(integers(m.row(r)));
    return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

// ---- input parsing --------------------------------------------------------------

LaurentPolynomial parse_polynomial(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error&) {
        throw DomainError("polynomial must be a JSON list of [exponent, coefficient] pairs, e.g. [[-1,1],[0,-1],[1,1]]");
    }
    if (!j.is_array()) throw DomainError("polynomial must be a JSON list of [exponent, coefficient] pairs");
    std::vector<std::pair<long, Integer>> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) throw DomainError("each term must be [exponent, coefficient]");
        const Integer c = t[1].is_string() ? parse_integer(t[1].get<std::string>()) : Integer(t[1].get<long>());
        terms.emplace_back(t[0].get<long>(), c);
    }
    return LaurentPolynomial(terms);
}

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(to_int64(parse_integer(item)));
    return out;
}

IntegerMatrix parse_matrix(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error&) {
        throw DomainError("matrix must be a JSON list of rows, e.g. [[2,0],[0,3]]");
    }
    if (!j.is_array()) throw DomainError("matrix must be a JSON list of rows");
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw DomainError("matrix rows must be lists");
        std::vector<Integer> row;
        for (const auto& x : r) {
            if (x.is_number_integer())
                row.emplace_back(x.get<long>());
            else if (x.is_string())
                row.push_back(parse_integer(x.get<std::string>()));
            else
                throw DomainError("matrix entries must be integers");
        }
        rows.push_back(std::move(row));
    }
    return IntegerMatrix::from_rows(rows);
}

SeifertData parse_seifert(const std::string& text) {
    const auto first = text.find_first_not_of(' ');
    if (first != std::string::npos && text[first] == '{') return seifert_from_json(text);
    return parse_seifert_shorthand(text);
}

std::pair<Integer, Integer> parse_integer_pair(const std::string& text) {
    const auto v = parse_long_list(text);
    if (v.size() != 2) throw DomainError("expected two integers \"x,y\", got \"" + text + "\"");
    return {v[0], v[1]};
}

// ---- subcommands ------------------------------------------------------------------

Output cmd_dedekind(const std::string& q, const std::string& p) {
    const Rational s = dedekind_sum(parse_integer(q), parse_integer(p));
    return {{{"value", s.to_string()}}, {}, s.to_string()};
}

Output cmd_a2(const std::string& poly) {
    const auto f = parse_polynomial(poly);
    const Integer d2 = second_derivative_at_one(f);
    const Integer a = a2(f);
    Output out;
    out.payload = {{"polynomial", f.to_string()},
                   {"symmetric_normalized", is_symmetric_normalized(f)},
                   {"second_derivative_at_one", number(d2)},
                   {"a2", number(a)}};
    out.text = a.get_str();
    return out;
}

Output cmd_gaps(const std::string& poly, const std::string& sequence) {
    if (poly.empty() == sequence.empty()) throw DomainError("gaps: give exactly one of --poly and --sequence");
    const GapSequence g = poly.empty() ? GapSequence(parse_long_list(sequence)) : lspace_gaps(parse_polynomial(poly));
    const Integer a = a2_from_gaps(g);
    const Integer top_sq = Integer(g.top()) * g.top();
    Output out;
    out.payload = {{"gaps", g.exponents()},
                   {"k", g.length()},
                   {"genus", g.top()},
                   {"a2", number(a)},
                   {"claim_bound", check_claim_bound(g)},
                   {"equality", a == top_sq},
                   {"polynomial", reconstruct(g).to_string()}};
    std::vector<std::string> ns;
    for (long n : g.exponents()) ns.push_back(std::to_string(n));
    out.text = "gaps (" + join(ns, ", ") + "), k = " + std::to_string(g.length()) + ", a2 = " + a.get_str() +
               (a == top_sq ? " = " : " < ") + "g^2 = " + top_sq.get_str();
    out.provenance = {Axiom::lspace_knot_fibered};
    return out;
}

Output cmd_thm1_check(const std::string& genus, const std::string& a2_text, const std::string& p) {
    const auto v = thm1_check(parse_integer(genus), parse_integer(a2_text), parse_integer(p));
    Output out;
    out.payload = {{"passes", v.passes()},
                   {"verdict", v.passes() ? "passes_necessary_conditions" : "obstructed"},
                   {"p_positive_odd", v.p_positive_odd},
                   {"a2_nonzero", v.a2_nonzero},
                   {"a2_matches", v.a2_matches},
                   {"a2_within_genus_bound", v.a2_within_genus_bound},
                   {"p_within_bound", v.p_within_bound},
                   {"required_a2", v.p_positive_odd ? json(v.required_a2.to_string()) : json(nullptr)},
                   {"reasons", v.reasons}};
    out.provenance = v.provenance;
    out.text = v.passes() ? "passes_necessary_conditions" : "obstructed: " + join(v.reasons, "; ");
    return out;
}

Output cmd_thm1_candidates(const std::string& genus) {
    Output out;
    json list = json::array();
    std::vector<std::string> lines;
    for (const auto& c : thm1_candidate_ps(parse_integer(genus))) {
        list.push_back({number(c.p), number(c.required_a2)});
        lines.push_back("p = " + c.p.get_str() + ", a2 = " + c.required_a2.get_str());
    }
    out.payload = {{"candidates", list}};
    out.provenance = {Axiom::positive_pair_is_lspace, Axiom::lspace_a2_nonzero, Axiom::casson_surgery_formula,
                      Axiom::lspace_knot_fibered};
    out.text = lines.empty() ? "no candidates" : join(lines, "\n");
    return out;
}

Output cmd_thm2_solve(long alpha_max, long m_max) {
    Output out;
    json list = json::array();
    std::vector<std::string> lines;
    for (const auto& s : thm2_solve(alpha_max, m_max)) {
        list.push_back({s.alpha, s.m, s.p});
        lines.push_back("alpha = " + std::to_string(s.alpha) + ", m = " + std::to_string(s.m) + ", p = " +
                        std::to_string(s.p) + (s.signed_p != s.p ? " (formula gives " + std::to_string(s.signed_p) + ")" : ""));
    }
    out.payload = {{"solutions", list}};
    out.text = lines.empty() ? "no solutions" : join(lines, "\n");
    return out;
}

Output cmd_thm3_enum(long delta_max, long p_min, long q_scan, bool show_excluded) {
    const auto report = thm3_enumerate(delta_max, p_min, q_scan);
    Output out;
    json pairs = json::array();
    std::vector<std::string> lines;
    for (const auto& p : report.pairs) {
        pairs.push_back(pair_json(p));
        lines.push_back(p.to_string() + "  distance " + p.distance().get_str());
    }
    out.payload = {{"pairs", pairs}, {"excluded_count", report.excluded.size()}};
    if (show_excluded) {
        json ex = json::array();
        for (const auto& e : report.excluded) {
            ex.push_back({{"p", number(e.p)},
                          {"q", number(e.q)},
                          {"q_prime", number(e.q_prime)},
                          {"distance", number(e.distance)},
                          {"reason", e.reason},
                          {"rule", describe(e.rule).key}});
            lines.push_back("excluded " + e.p.get_str() + "/" + e.q.get_str() + ", " + e.p.get_str() + "/" +
                            e.q_prime.get_str() + ": " + e.reason);
        }
        out.payload["excluded"] = ex;
    }
    out.provenance = report.provenance;
    out.text = lines.empty() ? "no pairs" : join(lines, "\n");
    return out;
}

Output cmd_p7(long s_range) {
    Output out;
    json list = json::array();
    std::vector<std::string> lines;
    for (const auto& d : p7_family_distances(s_range)) {
        list.push_back({d.s, number(d.distance)});
        lines.push_back("s = " + std::to_string(d.s) + ": distance " + d.distance.get_str());
    }
    out.payload = {{"distances", list}};
    out.text = join(lines, "\n");
    return out;
}

Output cmd_cor6(const std::string& pair_text) {
    const SlopePair pair = parse_pair(pair_text);
    const auto c = cor6_classify(pair);
    Output out;
    out.payload = {{"pair", pair_json(pair)},
                   {"distance", number(c.distance)},
                   {"irreducible", c.irreducible},
                   {"infinite_pi1", c.infinite_pi1},
                   {"toroidal_possible", c.toroidal_possible},
                   {"notes", c.notes}};
    out.provenance = c.provenance;
    out.text = pair.to_string() + ": " + (c.irreducible ? "irreducible" : "possibly reducible") + ", " +
               (c.infinite_pi1 ? "infinite pi1" : "pi1 undecided") + ", " +
               (c.toroidal_possible ? "toroidal possible" : "not toroidal") + "\n" + join(c.notes, "\n");
    return out;
}

Output cmd_h1(const std::string& seifert, bool reduced, const std::string& kill, const std::string& mu,
              const std::string& lambda) {
    const SeifertData s = parse_seifert(seifert);
    HomologyPresentation pres = reduced ? reduced_presentation(s) : exterior_presentation(s);
    const auto exterior = homology(pres);
    Output out;
    out.payload = {{"presentation", reduced ? "reduced" : "full"},
                   {"generators", pres.generators},
                   {"relations", matrix_json(pres.relations)},
                   {"group", exterior.group.to_string()},
                   {"free_rank", exterior.group.free_rank},
                   {"torsion", integers(exterior.group.torsion)},
                   {"c0", element_json(exterior.c0)},
                   {"h", element_json(exterior.h)}};
    out.text = "H1 = " + exterior.group.to_string() + "\nc0 = " + element_text(exterior.c0) +
               "\nh = " + element_text(exterior.h);
    if (!kill.empty()) {
        Filling f;
        std::tie(f.a, f.b) = parse_integer_pair(kill);
        if (!mu.empty()) std::tie(f.basis.mu_c0, f.basis.mu_h) = parse_integer_pair(mu);
        if (!lambda.empty()) std::tie(f.basis.lambda_c0, f.basis.lambda_h) = parse_integer_pair(lambda);
        const auto filled = homology(fill(pres, f)).group;
        out.payload["filled"] = {{"group", filled.to_string()},
                                 {"free_rank", filled.free_rank},
                                 {"torsion", integers(filled.torsion)}};
        out.text += "\nfilled H1 = " + filled.to_string();
    }
    return out;
}

Output cmd_snf(const std::string& matrix) {
    const auto m = parse_matrix(matrix);
    const auto d = smith_normal_form(m);
    const Cokernel coker(m);
    Output out;
    out.payload = {{"U", matrix_json(d.U)},
                   {"D", matrix_json(d.D)},
                   {"V", matrix_json(d.V)},
                   {"invariant_factors", integers(d.invariant_factors())},
                   {"cokernel", coker.group().to_string()}};
    std::vector<std::string> f;
    for (const auto& x : d.invariant_factors()) f.push_back(x.get_str());
    out.text = "invariant factors: " + (f.empty() ? std::string("none") : join(f, ", ")) +
               "\ncokernel: " + coker.group().to_string();
    return out;
}

Output cmd_remark_slopes(const std::string& m) {
    const auto pair = remark_slopes(parse_integer(m));
    Output out;
    out.payload = {{"pair", pair_json(pair)}, {"distance", number(pair.distance())}};
    out.text = pair.to_string();
    return out;
}

Output cmd_sfs_compare(const std::string& a_text, const std::string& b_text) {
    const SeifertData a = parse_seifert(a_text);
    const SeifertData b = parse_seifert(b_text);
    const auto r = sfs_chiral_compare(a, b);
    Output out;
    out.payload = {{"verdict", to_string(r.verdict)},
                   {"reason", r.reason},
                   {"a_normal_form", normalize_closed_sfs(a).to_string()},
                   {"b_normal_form", normalize_closed_sfs(b).to_string()}};
    out.text = to_string(r.verdict) + ": " + r.reason;
    return out;
}

json pipeline_json(const PipelineReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries) {
        json mirror = json::array();
        for (const auto& p : e.mirror_pairs) mirror.push_back(pair_json(p));
        json removed = json::array();
        for (const auto& r : e.removed) {
            json item{{"pair", pair_json(r.pair)}, {"reason", r.reason}};
            if (r.parameter) item["parameter"] = *r.parameter;
            removed.push_back(item);
        }
        json surviving = json::array();
        for (const auto& s : e.surviving) {
            json item{{"pair", pair_json(s.pair)}, {"realized", s.realized}};
            if (s.parameter) item["parameter"] = *s.parameter;
            surviving.push_back(item);
        }
        json filters = json::array();
        for (const auto& f : e.filters) filters.push_back({{"filter", f.filter}, {"status", f.status}, {"detail", f.detail}});
        json prov = json::array();
        for (Axiom a : e.provenance) prov.push_back(describe(a).key);
        entries.push_back({{"knot", e.knot},
                           {"mirror_pairs", mirror},
                           {"removed", removed},
                           {"surviving", surviving},
                           {"filters", filters},
                           {"provenance", prov}});
    }
    return {{"entries", entries}, {"survivors", report.survivors}};
}

Output cmd_pipeline(const std::vector<std::string>& files) {
    std::vector<KnotRecord> records;
    for (const auto& path : files) {
        auto c = load_catalog_file(path);
        std::move(c.records.begin(), c.records.end(), std::back_inserter(records));
    }
    const auto report = thm4_pipeline(records);
    Output out;
    out.payload = pipeline_json(report);
    std::vector<std::string> lines;
    for (const auto& e : report.entries) {
        std::vector<std::string> surv;
        for (const auto& s : e.surviving) surv.push_back(s.pair.to_string() + (s.realized ? " realized" : ""));
        lines.push_back(e.knot + ": " + std::to_string(e.mirror_pairs.size()) + " mirror pair(s), " +
                        std::to_string(e.removed.size()) + " removed" + (surv.empty() ? "" : ", surviving " + join(surv, ", ")));
    }
    lines.push_back("survivors: " + (report.survivors.empty() ? std::string("none") : join(report.survivors, ", ")));
    out.text = join(lines, "\n");
    std::vector<Axiom> prov;
    for (const auto& e : report.entries)
        for (Axiom a : e.provenance)
            if (std::find(prov.begin(), prov.end(), a) == prov.end()) prov.push_back(a);
    std::sort(prov.begin(), prov.end());
    out.provenance = prov;
    return out;
}

Output cmd_axioms() {
    Output out;
    json list = json::array();
    std::vector<std::string> lines;
    for (const auto& info : all_axioms()) {
        list.push_back({{"key", info.key}, {"statement", info.statement}});
        lines.push_back(std::string(info.key) + ": " + std::string(info.statement));
    }
    out.payload = {{"axioms", list}};
    out.text = join(lines, "\n");
    return out;
}

CommandResult failure(int code, std::string message) {
    CommandResult r;
    r.status = Status::error;
    r.exit_code = code;
    r.payload = {{"error", message}};
    r.text = std::move(message);
    return r;
}

}  // namespace

CommandResult run(const std::vector<std::string>& argv) {
    CLI::App app{"Exact checks for chirally cosmetic surgery obstructions", "ccsurg"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit compact JSON with exact values");

    std::function<Output()> action;
    const auto sub = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_flag("--json", as_json, "Emit compact JSON with exact values");
        return s;
    };

    std::string q, p, poly, sequence, genus, a2_value, pair, seifert, kill, mu, lambda, matrix, m_value, a_text, b_text;
    long alpha_max = 10, m_max = 10, delta_max = 8, p_min = 3, q_scan = 0, s_range = 3;
    bool show_excluded = false, reduced = false;
    std::vector<std::string> catalogs;

    auto* dedekind = sub("dedekind", "Dedekind sum s(q, p)");
    dedekind->add_option("--q", q, "Integer q coprime to p")->required();
    dedekind->add_option("--p", p, "Positive integer p")->required();
    dedekind->callback([&] { action = [&] { return cmd_dedekind(q, p); }; });

    auto* a2c = sub("a2", "a2 = f''(1)/2 of a Laurent polynomial");
    a2c->add_option("--poly", poly, "Terms as JSON, e.g. [[-1,1],[0,-1],[1,1]]")->required();
    a2c->callback([&] { action = [&] { return cmd_a2(poly); }; });

    auto* gaps = sub("gaps", "Gap sequence of an L-space polynomial and the bound a2 <= g^2");
    gaps->add_option("--poly", poly, "Alexander polynomial as JSON terms");
    gaps->add_option("--sequence", sequence, "Gap sequence, e.g. 1,2,3");
    gaps->callback([&] { action = [&] { return cmd_gaps(poly, sequence); }; });

    auto* t1 = sub("thm1-check", "Necessary conditions for K(p) = -K(p/2)");
    t1->add_option("--genus", genus, "Genus g >= 1")->required();
    t1->add_option("--a2", a2_value, "a2 of the knot")->required();
    t1->add_option("--p", p, "Surgery numerator p")->required();
    t1->callback([&] { action = [&] { return cmd_thm1_check(genus, a2_value, p); }; });

    auto* t1c = sub("thm1-candidates", "Odd p allowed by the half-integral conditions");
    t1c->add_option("--genus", genus, "Genus g >= 1")->required();
    t1c->callback([&] { action = [&] { return cmd_thm1_candidates(genus); }; });

    auto* t2 = sub("thm2-solve", "Integer solutions (alpha, m) of the Seifert exterior equations");
    t2->add_option("--alpha-max", alpha_max, "Scan 2 <= |alpha| <= alpha-max")->capture_default_str();
    t2->add_option("--m-max", m_max, "Scan |m| <= m-max")->capture_default_str();
    t2->callback([&] { action = [&] { return cmd_thm2_solve(alpha_max, m_max); }; });

    auto* t3 = sub("thm3-enum", "Exceptional chirally cosmetic slope pairs within a distance bound");
    t3->add_option("--delta-max", delta_max, "Distance bound")->capture_default_str();
    t3->add_option("--p-min", p_min, "Lower bound on p for pairs with q' != -q")->capture_default_str();
    t3->add_option("--q-scan", q_scan, "Largest q scanned (0: delta-max)")->capture_default_str();
    t3->add_flag("--show-excluded", show_excluded, "List every excluded candidate with its reason");
    t3->callback([&] { action = [&] { return cmd_thm3_enum(delta_max, p_min, q_scan, show_excluded); }; });

    auto* p7 = sub("p7-families", "Distances of the p = 7 families");
    p7->add_option("--s-range", s_range, "Scan |s| <= s-range")->capture_default_str();
    p7->callback([&] { action = [&] { return cmd_p7(s_range); }; });

    auto* c6 = sub("cor6", "Structure of the manifolds from an admitted pair {r, -r}");
    c6->add_option("--pair", pair, "Pair \"r,-r\", e.g. \"4,-4\"")->required();
    c6->callback([&] { action = [&] { return cmd_cor6(pair); }; });

    auto* h1 = sub("h1", "First homology of a Seifert fibered exterior and of a filling");
    h1->add_option("--seifert", seifert, "JSON {\"base\":...,\"fibers\":[[a,b],...]} or shorthand D2(-1/3,1/5)")->required();
    h1->add_flag("--reduced", reduced, "Use the torsion-free reduced presentation");
    h1->add_option("--kill", kill, "Filling \"a,b\": kill a*mu + b*lambda");
    h1->add_option("--mu", mu, "mu as \"c0,h\" coefficients (default 1,0)");
    h1->add_option("--lambda", lambda, "lambda as \"c0,h\" coefficients (default 0,1)");
    h1->callback([&] { action = [&] { return cmd_h1(seifert, reduced, kill, mu, lambda); }; });

    auto* snf = sub("snf", "Smith normal form and cokernel of an integer matrix");
    snf->add_option("--matrix", matrix, "Rows as JSON, e.g. [[2,0],[0,3]]")->required();
    snf->callback([&] { action = [&] { return cmd_snf(matrix); }; });

    auto* rs = sub("remark-slopes", "The slopes (18m+9)/(3m+1), (18m+9)/(3m+2)");
    rs->add_option("--m", m_value, "Integer m")->required();
    rs->callback([&] { action = [&] { return cmd_remark_slopes(m_value); }; });

    auto* sc = sub("sfs-compare", "Compare two closed Seifert spaces over S2 up to orientation");
    sc->add_option("--a", a_text, "First space, e.g. S2(1/3,1/4,-4/7)")->required();
    sc->add_option("--b", b_text, "Second space")->required();
    sc->callback([&] { action = [&] { return cmd_sfs_compare(a_text, b_text); }; });

    auto* pl = sub("pipeline", "Run the exceptional-surgery filters over knot catalogs");
    pl->add_option("--catalog", catalogs, "Catalog JSON file (repeatable)")->required();
    pl->callback([&] { action = [&] { return cmd_pipeline(catalogs); }; });

    auto* ax = sub("axioms", "List the published results that verdicts assume");
    ax->callback([&] { action = [&] { return cmd_axioms(); }; });

    for (const auto& arg : argv) {
        if (arg.starts_with('-')) continue;
        if (app.get_subcommand_no_throw(arg) == nullptr) return failure(2, "unknown subcommand '" + arg + "'\n\n" + app.help());
        break;
    }

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CommandResult r;
        r.text = app.help();
        for (auto* s : app.get_subcommands()) r.text = s->help();
        return r;
    } catch (const CLI::ParseError& e) {
        std::string message = e.what();
        return failure(2, message + "\n\n" + app.help());
    }

    try {
        Output out = action();
        CommandResult r;
        r.payload = std::move(out.payload);
        r.provenance = std::move(out.provenance);
        if (as_json) {
            json doc = r.payload;
            if (!r.provenance.empty()) {
                json keys = json::array();
                for (Axiom a : r.provenance) keys.push_back(describe(a).key);
                doc["provenance"] = keys;
            }
            r.text = doc.dump();
        } else {
            r.text = std::move(out.text);
        }
        return r;
    } catch (const std::exception& e) {
        return failure(1, std::string("error: ") + e.what());
    }
}

}  // namespace ccsurg::cli
