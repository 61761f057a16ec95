#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccsurg/rational.hpp"

namespace ccsurg {

/// Integer Laurent polynomial in t, stored sparsely; zero coefficients are never kept.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    /// Terms as (exponent, coefficient); repeated exponents are summed.
    explicit LaurentPolynomial(const std::vector<std::pair<long, Integer>>& terms);

    static LaurentPolynomial constant(const Integer& c);
    static LaurentPolynomial monomial(long exponent, const Integer& c);

    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(long exponent) const;
    long min_exponent() const;
    long max_exponent() const;
    const std::map<long, Integer>& terms() const { return terms_; }

    Integer evaluate_at_one() const;
    /// Coefficients of t^e and t^-e agree for every e.
    bool is_symmetric() const;
    LaurentPolynomial shifted(long by) const;

    LaurentPolynomial operator-() const;
    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    /// e.g. "t - 1 + t^-1".
    std::string to_string() const;

private:
    void add_term(long exponent, const Integer& c);
    std::map<long, Integer> terms_;
};

/// Symmetric (f(t) = f(1/t)) with f(1) = 1, the normalization of an Alexander polynomial.
bool is_symmetric_normalized(const LaurentPolynomial& f);

/// Multiplies by +-t^e to reach symmetric normalized form, if that is possible.
std::optional<LaurentPolynomial> normalize_alexander(const LaurentPolynomial& f);

/// f''(1) = sum_e c_e e (e-1).
Integer second_derivative_at_one(const LaurentPolynomial& f);

/// a_2 = f''(1)/2. Throws DomainError when f''(1) is odd.
Integer a2(const LaurentPolynomial& f);

/// Exponents 0 < n_1 < ... < n_k of an L-space knot polynomial
/// (-1)^k + sum_j (-1)^(k-j) (t^n_j + t^-n_j).
class GapSequence {
public:
    /// Throws DomainError unless the list is nonempty, positive and strictly increasing.
    explicit GapSequence(std::vector<long> exponents);

    const std::vector<long>& exponents() const { return n_; }
    std::size_t length() const { return n_.size(); }
    long top() const { return n_.back(); }

    friend bool operator==(const GapSequence&, const GapSequence&) = default;

private:
    std::vector<long> n_;
};

/// Recognizes the L-space form. Throws DomainError("not of L-space form: ...") otherwise.
GapSequence lspace_gaps(const LaurentPolynomial& f);

/// The polynomial with the given gap sequence.
LaurentPolynomial reconstruct(const GapSequence& gaps);

/// sum_j (-1)^(k-j) n_j^2.
Integer a2_from_gaps(const GapSequence& gaps);

/// a2_from_gaps(g) <= n_k^2. This holds for every gap sequence, so a false result means
/// a broken invariant rather than a property of the input.
bool check_claim_bound(const GapSequence& gaps);

}  // namespace ccsurg
