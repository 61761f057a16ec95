#pragma once

// Slow, independent reference computations used only by tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "ccsurg/alexander.hpp"
#include "ccsurg/rational.hpp"
#include "ccsurg/smith.hpp"

namespace oracle {

using ccsurg::Integer;
using ccsurg::IntegerMatrix;
using ccsurg::Rational;

/// ((x)) = x - floor(x) - 1/2 for non-integers, 0 on integers.
inline Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    return x - Rational(x.floor()) - Rational(1, 2);
}

/// s(q, p) by the defining sum over i = 1 .. p-1.
inline Rational dedekind_sawtooth(long q, long p) {
    Rational sum(0);
    for (long i = 1; i < p; ++i) sum = sum + sawtooth(Rational(i, p)) * sawtooth(Rational(q * i, p));
    return sum;
}

/// Fraction-free Gaussian elimination.
inline Integer bareiss_det(IntegerMatrix a) {
    const std::size_t n = a.rows();
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Cokernel of the row space via determinantal divisors: d_k is the gcd of all k x k minors,
/// and the invariant factors are d_k / d_{k-1}.
inline ccsurg::AbelianGroup cokernel_by_minors(const IntegerMatrix& m) {
    const std::size_t kmax = std::min(m.rows(), m.cols());
    std::vector<Integer> factors;
    Integer prev = 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        combinations(m.rows(), k, rs);
        combinations(m.cols(), k, cs);
        Integer d = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                IntegerMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
                d = ccsurg::gcd(d, bareiss_det(sub));
            }
        if (d == 0) break;
        factors.push_back(d / prev);
        prev = d;
    }
    ccsurg::AbelianGroup g;
    g.free_rank = m.cols() - factors.size();
    for (const auto& f : factors)
        if (f != 1) g.torsion.push_back(f);
    return g;
}

/// f''(1) by writing f = t^m g with g an ordinary polynomial:
/// f''(1) = m(m-1) g(1) + 2m g'(1) + g''(1).
inline Integer second_derivative_oracle(const ccsurg::LaurentPolynomial& f) {
    if (f.is_zero()) return 0;
    const long m = f.min_exponent();
    Integer g0 = 0, g1 = 0, g2 = 0;
    for (const auto& [e, c] : f.terms()) {
        const long d = e - m;
        g0 += c;
        g1 += c * d;
        g2 += c * d * (d - 1);
    }
    return Integer(m) * (m - 1) * g0 + 2 * Integer(m) * g1 + g2;
}

/// Sum of (-1)^(k-j) n_j^2 by explicit sign expansion.
inline Integer a2_gaps_oracle(const std::vector<long>& n) {
    Integer sum = 0;
    const std::size_t k = n.size();
    for (std::size_t j = 1; j <= k; ++j) {
        const Integer sq = Integer(n[j - 1]) * n[j - 1];
        if ((k - j) % 2 == 0)
            sum += sq;
        else
            sum -= sq;
    }
    return sum;
}

/// Random strictly increasing positive sequence with at most max_len entries, all <= max_top.
inline std::vector<long> random_gaps(std::mt19937_64& rng, std::size_t max_len, long max_top) {
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::vector<long> pool(max_top);
    for (long i = 0; i < max_top; ++i) pool[i] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<long> out(pool.begin(), pool.begin() + len_dist(rng));
    std::sort(out.begin(), out.end());
    return out;
}

inline IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long bound) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<long> entry(-bound, bound);
    IntegerMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
    return m;
}

}  // namespace oracle
