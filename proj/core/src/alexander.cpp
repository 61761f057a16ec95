#include "ccsurg/alexander.hpp"

#include <algorithm>

namespace ccsurg {

LaurentPolynomial::LaurentPolynomial(const std::vector<std::pair<long, Integer>>& terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::constant(const Integer& c) { return monomial(0, c); }

LaurentPolynomial LaurentPolynomial::monomial(long exponent, const Integer& c) {
    LaurentPolynomial f;
    f.add_term(exponent, c);
    return f;
}

void LaurentPolynomial::add_term(long exponent, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer LaurentPolynomial::coefficient(long exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

long LaurentPolynomial::min_exponent() const {
    if (is_zero()) throw DomainError("zero polynomial has no exponents");
    return terms_.begin()->first;
}

long LaurentPolynomial::max_exponent() const {
    if (is_zero()) throw DomainError("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

Integer LaurentPolynomial::evaluate_at_one() const {
    Integer sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

bool LaurentPolynomial::is_symmetric() const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return coefficient(-t.first) == t.second; });
}

LaurentPolynomial LaurentPolynomial::shifted(long by) const {
    LaurentPolynomial f;
    for (const auto& [e, c] : terms_) f.terms_.emplace(e + by, c);
    return f;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial f = *this;
    for (auto& [e, c] : f.terms_) c = -c;
    return f;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial f = a;
    for (const auto& [e, c] : b.terms_) f.add_term(e, c);
    return f;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial f;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) f.add_term(ea + eb, ca * cb);
    return f;
}

std::string LaurentPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const Integer mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        const bool unit = mag == 1;
        if (e == 0) {
            out += mag.get_str();
            continue;
        }
        if (!unit) out += mag.get_str();
        out += "t";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

bool is_symmetric_normalized(const LaurentPolynomial& f) {
    return !f.is_zero() && f.is_symmetric() && f.evaluate_at_one() == 1;
}

std::optional<LaurentPolynomial> normalize_alexander(const LaurentPolynomial& f) {
    if (f.is_zero()) return std::nullopt;
    const long span = f.max_exponent() + f.min_exponent();
    if (span % 2 != 0) return std::nullopt;
    LaurentPolynomial g = f.shifted(-span / 2);
    if (g.evaluate_at_one() == -1) g = -g;
    if (!is_symmetric_normalized(g)) return std::nullopt;
    return g;
}

Integer second_derivative_at_one(const LaurentPolynomial& f) {
    Integer sum = 0;
    for (const auto& [e, c] : f.terms()) sum += c * e * (e - 1);
    return sum;
}

Integer a2(const LaurentPolynomial& f) {
    const Integer d2 = second_derivative_at_one(f);
    if (d2 % 2 != 0) throw DomainError("a2: f''(1) = " + d2.get_str() + " is odd, not an Alexander polynomial");
    return d2 / 2;
}

GapSequence::GapSequence(std::vector<long> exponents) : n_(std::move(exponents)) {
    if (n_.empty()) throw DomainError("gap sequence must be nonempty");
    if (n_.front() < 1) throw DomainError("gap sequence entries must be positive");
    if (std::adjacent_find(n_.begin(), n_.end(), [](long a, long b) { return a >= b; }) != n_.end())
        throw DomainError("gap sequence must be strictly increasing");
}

GapSequence lspace_gaps(const LaurentPolynomial& f) {
    if (!is_symmetric_normalized(f)) throw DomainError("not of L-space form: polynomial is not symmetric normalized");
    std::vector<long> positive;
    for (const auto& [e, c] : f.terms()) {
        if (abs(c) != 1)
            throw DomainError("not of L-space form: coefficient " + c.get_str() + " at t^" + std::to_string(e));
        if (e > 0) positive.push_back(e);
    }
    if (positive.empty()) throw DomainError("not of L-space form: constant polynomial");
    GapSequence gaps(positive);
    if (reconstruct(gaps) != f) throw DomainError("not of L-space form: signs do not alternate from the top");
    return gaps;
}

LaurentPolynomial reconstruct(const GapSequence& gaps) {
    const auto& n = gaps.exponents();
    const std::size_t k = n.size();
    LaurentPolynomial f = LaurentPolynomial::constant(k % 2 == 0 ? 1 : -1);
    for (std::size_t j = 0; j < k; ++j) {
        const Integer sign = (k - 1 - j) % 2 == 0 ? 1 : -1;
        f = f + LaurentPolynomial::monomial(n[j], sign) + LaurentPolynomial::monomial(-n[j], sign);
    }
    return f;
}

Integer a2_from_gaps(const GapSequence& gaps) {
    const auto& n = gaps.exponents();
    const std::size_t k = n.size();
    Integer sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
        const Integer sq = Integer(n[j]) * n[j];
        sum += (k - 1 - j) % 2 == 0 ? sq : Integer(-sq);
    }
    return sum;
}

bool check_claim_bound(const GapSequence& gaps) {
    const Integer top = gaps.top();
    return a2_from_gaps(gaps) <= top * top;
}

}  // namespace ccsurg
