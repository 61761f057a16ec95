#include "ccsurg/seifert.hpp"

#include <algorithm>
#include <tuple>

#include "json.hpp"

namespace ccsurg {

void SeifertData::validate() const {
    for (std::size_t i = 0; i < fibers.size(); ++i) {
        const auto& f = fibers[i];
        if (f.alpha == 0) throw DomainError("fiber " + std::to_string(i) + ": alpha must be nonzero");
        if (gcd(f.alpha, f.beta) != 1)
            throw DomainError("fiber " + std::to_string(i) + ": alpha and beta must be coprime");
    }
}

std::size_t SeifertData::exceptional_fibers() const {
    return static_cast<std::size_t>(
        std::count_if(fibers.begin(), fibers.end(), [](const Fiber& f) { return abs(f.alpha) >= 2; }));
}

SeifertData seifert_from_json(std::string_view text) {
    SeifertData s;
    try {
        const auto j = nlohmann::json::parse(text);
        const auto base = j.at("base").get<std::string>();
        if (base == "disk")
            s.base = Base::disk;
        else if (base == "sphere")
            s.base = Base::sphere;
        else
            throw DomainError("base must be \"disk\" or \"sphere\", got \"" + base + "\"");
        for (const auto& f : j.at("fibers")) {
            if (!f.is_array() || f.size() != 2) throw DomainError("each fiber must be [alpha, beta]");
            s.fibers.push_back({Integer(f[0].get<long>()), Integer(f[1].get<long>())});
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed Seifert data: ") + e.what());
    }
    s.validate();
    return s;
}

std::string seifert_to_json(const SeifertData& s) {
    nlohmann::json fibers = nlohmann::json::array();
    for (const auto& f : s.fibers) fibers.push_back({to_int64(f.alpha), to_int64(f.beta)});
    nlohmann::json j{{"base", s.base == Base::disk ? "disk" : "sphere"}, {"fibers", fibers}};
    return j.dump();
}

SeifertData parse_seifert_shorthand(std::string_view text) {
    SeifertData s;
    s.base = Base::sphere;
    std::string_view body = text;
    const auto open = body.find('(');
    if (open != std::string_view::npos) {
        const auto head = body.substr(0, open);
        if (head == "D2")
            s.base = Base::disk;
        else if (head != "S2")
            throw DomainError("Seifert shorthand must start with S2( or D2(");
        if (body.back() != ')') throw DomainError("Seifert shorthand: missing ')'");
        body = body.substr(open + 1, body.size() - open - 2);
    }
    std::size_t start = 0;
    while (start <= body.size()) {
        const auto comma = body.find(',', start);
        const auto item = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (item.find_first_not_of(' ') != std::string_view::npos) {
            const Rational r = Rational::parse(item);
            s.fibers.push_back({r.den(), r.num()});
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    s.validate();
    return s;
}

HomologyPresentation exterior_presentation(const SeifertData& s) {
    if (s.base != Base::disk) throw DomainError("exterior presentation needs a disk base");
    s.validate();
    const std::size_t n = s.fibers.size();
    const std::size_t gens = n + 2;  // c0..cn, h
    const std::size_t h = n + 1;

    HomologyPresentation pres{{}, IntegerMatrix(n + 1, gens), std::vector<Integer>(gens), std::vector<Integer>(gens)};
    for (std::size_t i = 0; i <= n; ++i) pres.generators.push_back("c" + std::to_string(i));
    pres.generators.emplace_back("h");
    for (std::size_t i = 0; i < n; ++i) {
        pres.relations(i, i + 1) = s.fibers[i].alpha;
        pres.relations(i, h) = -s.fibers[i].beta;
    }
    for (std::size_t i = 0; i <= n; ++i) pres.relations(n, i) = 1;
    pres.c0[0] = 1;
    pres.h[h] = 1;
    return pres;
}

HomologyPresentation reduced_presentation(const SeifertData& s) {
    if (s.base != Base::disk) throw DomainError("reduced presentation needs a disk base");
    s.validate();
    const auto& f = s.fibers;
    const auto half = [](const Fiber& x) { return x.value() == Rational(Integer(1), Integer(2)); };

    std::size_t halves_begin = f.size();
    while (halves_begin > 0 && half(f[halves_begin - 1])) --halves_begin;
    const std::size_t halves = f.size() - halves_begin;
    if (halves == 0) throw DomainError("reduced presentation needs at least one 1/2 fiber");
    if (halves_begin == 0) throw DomainError("reduced presentation needs a leading fiber before the 1/2 fibers");
    if ((halves_begin - 1) % 2 != 0) throw DomainError("fibers after the first must come in +-b/a pairs");
    const std::size_t pairs = (halves_begin - 1) / 2;
    for (std::size_t k = 0; k < pairs; ++k) {
        const Fiber& x = f[1 + 2 * k];
        const Fiber& y = f[2 + 2 * k];
        if (x.value() != -y.value()) throw DomainError("fibers " + std::to_string(2 + 2 * k) + " and " +
                                                       std::to_string(3 + 2 * k) + " are not a +-b/a pair");
    }

    // Generators: c1, the second fiber of each pair (c3, c5, ...), and c_n.
    const std::size_t gens = pairs + 2;
    const std::size_t cn = gens - 1;
    HomologyPresentation pres{{}, IntegerMatrix(pairs + 1, gens), std::vector<Integer>(gens), std::vector<Integer>(gens)};
    pres.generators.emplace_back("c1");
    for (std::size_t k = 0; k < pairs; ++k) pres.generators.push_back("c" + std::to_string(3 + 2 * k));
    pres.generators.push_back("c" + std::to_string(f.size()));

    // alpha c - beta h = 0 with h = 2 c_n; each fiber's value is beta/alpha in lowest terms.
    const auto put = [&](std::size_t row, std::size_t gen, const Fiber& x) {
        const Rational v = x.value();
        pres.relations(row, gen) = v.den();
        pres.relations(row, cn) = -2 * v.num();
    };
    put(0, 0, f[0]);
    for (std::size_t k = 0; k < pairs; ++k) put(k + 1, k + 1, f[2 + 2 * k]);

    // c0 = -(c1 + sum over pairs (c_{2k} + c_{2k+1}) + sum over 1/2 fibers c_l) = -(c1 + halves c_n)
    pres.c0[0] = -1;
    pres.c0[cn] = -static_cast<long>(halves);
    pres.h[cn] = 2;
    return pres;
}

HomologyClasses homology(const HomologyPresentation& pres) {
    const Cokernel ck(pres.relations);
    HomologyClasses out{ck.group(), ck.element(pres.c0), ck.element(pres.h)};
    if (out.group.free_rank == 1) {
        const Integer lead = out.c0.free[0] != 0 ? out.c0.free[0] : out.h.free[0];
        if (lead < 0) {
            out.c0.free[0] = -out.c0.free[0];
            out.h.free[0] = -out.h.free[0];
        }
    }
    return out;
}

HomologyClasses h1_exterior(const SeifertData& s) { return homology(exterior_presentation(s)); }

HomologyPresentation fill(const HomologyPresentation& pres, const Filling& filling) {
    const auto& B = filling.basis;
    if (abs(Integer(B.mu_c0 * B.lambda_h - B.mu_h * B.lambda_c0)) != 1)
        throw DomainError("mu and lambda must form a basis of the boundary torus");
    if (gcd(filling.a, filling.b) != 1) throw DomainError("filling class must be primitive");
    const Integer coeff_c0 = filling.a * B.mu_c0 + filling.b * B.lambda_c0;
    const Integer coeff_h = filling.a * B.mu_h + filling.b * B.lambda_h;
    std::vector<Integer> row(pres.generators.size());
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = coeff_c0 * pres.c0[i] + coeff_h * pres.h[i];
    HomologyPresentation out = pres;
    out.relations = pres.relations.with_row(row);
    return out;
}

AbelianGroup h1_filled(const SeifertData& s, const Filling& filling) {
    return homology(fill(exterior_presentation(s), filling)).group;
}

std::vector<Thm2Solution> thm2_solve(long alpha_max, long m_max) {
    if (alpha_max < 1 || m_max < 1) throw DomainError("thm2_solve: ranges must be positive");
    std::vector<Thm2Solution> out;
    for (long alpha = -alpha_max; alpha <= alpha_max; ++alpha) {
        if (alpha >= -1 && alpha <= 1) continue;
        for (long m = -m_max; m <= m_max; ++m) {
            const Integer odd = 2 * m + 1;
            const Integer n = Integer(alpha) * odd;
            if ((n - 1) % 2 != 0) continue;  // both (n -+ 1)/2 integral iff n odd
            const Integer lower = (n - 1) / 2;
            const Integer upper = (n + 1) / 2;
            if (lower == 0 || upper == 0) continue;
            const Integer top = Integer(alpha) * alpha * odd;
            const Rational p = Rational(top, lower);
            const Rational p_from_half = 2 * Rational(top, upper);
            if (p != p_from_half || !p.is_integer() || p.is_zero()) continue;
            const long signed_p = to_int64(p.num());
            out.push_back({alpha, m, signed_p < 0 ? -signed_p : signed_p, signed_p});
        }
    }
    std::sort(out.begin(), out.end(), [](const Thm2Solution& a, const Thm2Solution& b) {
        return std::tuple(a.p, -a.m, -a.alpha) < std::tuple(b.p, -b.m, -b.alpha);
    });
    return out;
}

SlopePair remark_slopes(const Integer& m) {
    const Integer num = 18 * m + 9;
    if (3 * m + 1 == 0 || 3 * m + 2 == 0) throw DomainError("remark_slopes: zero denominator");
    return SlopePair(reduce(num, Integer(3 * m + 1)), reduce(num, Integer(3 * m + 2)));
}

std::string ClosedSfsNormalForm::to_string() const {
    std::string out = "S2(e0=" + e0.get_str();
    for (const auto& f : fibers) out += "; " + f.beta.get_str() + "/" + f.alpha.get_str();
    return out + ")";
}

ClosedSfsNormalForm normalize_closed_sfs(const SeifertData& s) {
    if (s.base != Base::sphere) throw DomainError("normalize_closed_sfs needs a sphere base");
    s.validate();
    ClosedSfsNormalForm out;
    for (const auto& f : s.fibers) {
        const Rational v = f.value();
        const Integer whole = v.floor();
        out.e0 += whole;
        const Rational frac = v - Rational(whole);
        if (!frac.is_zero()) out.fibers.push_back({frac.den(), frac.num()});
    }
    std::sort(out.fibers.begin(), out.fibers.end(), [](const Fiber& a, const Fiber& b) {
        return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
    });
    return out;
}

SeifertData reverse_orientation(const SeifertData& s) {
    SeifertData out = s;
    for (auto& f : out.fibers) f.beta = -f.beta;
    return out;
}

std::string to_string(ChiralComparison c) {
    switch (c) {
        case ChiralComparison::orientation_preserving_homeo: return "orientation_preserving_homeo";
        case ChiralComparison::orientation_reversing_homeo: return "orientation_reversing_homeo";
        case ChiralComparison::distinct: return "distinct";
    }
    return "unknown";
}

ComparisonResult sfs_chiral_compare(const SeifertData& a, const SeifertData& b) {
    for (const SeifertData* s : {&a, &b}) {
        if (s->base != Base::sphere) throw UnsupportedError("sfs_chiral_compare: only sphere bases are supported");
        if (s->exceptional_fibers() != 3)
            throw UnsupportedError("sfs_chiral_compare: needs exactly three exceptional fibers, got " +
                                   std::to_string(s->exceptional_fibers()));
    }
    const auto na = normalize_closed_sfs(a);
    const auto nb = normalize_closed_sfs(b);
    if (na == nb) return {ChiralComparison::orientation_preserving_homeo, "normal forms agree: " + na.to_string()};
    const auto nb_rev = normalize_closed_sfs(reverse_orientation(b));
    if (na == nb_rev)
        return {ChiralComparison::orientation_reversing_homeo,
                "normal form agrees with the reversed second space: " + na.to_string()};

    const auto multiplicities = [](const ClosedSfsNormalForm& n) {
        std::vector<Integer> m;
        for (const auto& f : n.fibers) m.push_back(f.alpha);
        return m;
    };
    const auto ma = multiplicities(na);
    const auto mb = multiplicities(nb);
    if (ma != mb) {
        std::string reason = "fiber multiplicities differ: {";
        for (std::size_t i = 0; i < ma.size(); ++i) reason += (i ? "," : "") + ma[i].get_str();
        reason += "} vs {";
        for (std::size_t i = 0; i < mb.size(); ++i) reason += (i ? "," : "") + mb[i].get_str();
        return {ChiralComparison::distinct, reason + "}"};
    }
    return {ChiralComparison::distinct,
            "normal forms differ in either orientation: " + na.to_string() + " vs " + nb.to_string()};
}

}  // namespace ccsurg
