#include "ccsurg/dedekind.hpp"

#include <stdexcept>

namespace ccsurg {

Rational dedekind_sum(const Integer& q, const Integer& p) {
    if (p <= 0) throw DomainError("dedekind_sum: p must be positive, got " + p.get_str());
    if (gcd(q, p) != 1) throw DomainError("dedekind_sum: q and p must be coprime");

    // s(q,p) depends only on q mod p and is odd in q. Each reciprocity step maps (q, p) to
    // (p mod q, q) and flips the sign of the unknown term.
    Rational total;
    int sign = 1;
    Integer a = p;
    Integer b = q - floor_div(q, p) * p;  // 0 <= b < a
    while (a > 1) {
        // s(b, a) = -s(a, b) + (a/b + b/a + 1/(ab))/12 - 1/4
        const Rational correction = (Rational(a, b) + Rational(b, a) + Rational(Integer(1), Integer(a * b))) / 12 -
                                    Rational(Integer(1), Integer(4));
        total += sign * correction;
        sign = -sign;
        const Integer next = a - floor_div(a, b) * b;
        a = b;
        b = next;
    }
    return total;
}

Rational s1_closed_form(const Integer& p) {
    if (p < 1) throw DomainError("s1_closed_form: p must be positive");
    return Rational(Integer((p - 1) * (p - 2)), Integer(12 * p));
}

Rational s2_closed_form(const Integer& p) {
    if (p < 1) throw DomainError("s2_closed_form: p must be positive");
    if (p % 2 == 0) throw DomainError("s2_closed_form: p must be odd");
    return Rational(Integer((p - 1) * (p - 5)), Integer(24 * p));
}

RequiredA2 a2_required_by_surgery(const Integer& p) {
    if (p < 1 || p % 2 == 0) throw DomainError("a2_required_by_surgery: p must be a positive odd integer");
    RequiredA2 out{Rational(Integer((p - 1) * (p - 3)), Integer(48)),
                   Rational(p) * (dedekind_sum(1, p) + dedekind_sum(2, p)) / 6};
    if (out.closed_form != out.casson_identity)
        throw std::logic_error("a2 closed form disagrees with p(s(1,p)+s(2,p))/6 at p=" + p.get_str());
    return out;
}

}  // namespace ccsurg
