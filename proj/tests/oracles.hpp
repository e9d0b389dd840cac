#pragma once

/* Brute-force reference computations for the tests. These deliberately avoid
 * the library's series engine: plain coefficient vectors, schoolbook
 * multiplication, direct sums. */

#include <cstdint>
#include <vector>

#include "borwein/rational.hpp"

namespace oracle {

using borwein::Integer;
using borwein::Rational;

using Poly = std::vector<Rational>;  // coefficients of q^0..q^order

inline Poly poly_one(std::int64_t order) {
    Poly p(static_cast<std::size_t>(order) + 1);
    p[0] = 1;
    return p;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

/* prod over n >= 1, m*n <= order of (1 - q^{m n})^e, literally; negative e
 * multiplies by the exact geometric series of 1/(1 - q^{m n}) instead. */
inline Poly finite_eta_product(std::int64_t m, long e, std::int64_t order) {
    Poly acc = poly_one(order);
    for (std::int64_t n = 1; m * n <= order; ++n) {
        Poly factor(static_cast<std::size_t>(order) + 1);
        if (e >= 0) {
            factor[0] = 1;
            factor[static_cast<std::size_t>(m * n)] = -1;
        } else {
            for (std::int64_t j = 0; m * n * j <= order; ++j)
                factor[static_cast<std::size_t>(m * n * j)] = 1;
        }
        for (long rep = 0; rep < (e >= 0 ? e : -e); ++rep) acc = poly_mul(acc, factor);
    }
    return acc;
}

/* prod over n >= 1 coprime-to-p, n <= order of (1 - q^n)^e (e >= 1). */
inline Poly finite_borwein_product(std::int64_t p, long e, std::int64_t order) {
    Poly acc = poly_one(order);
    for (std::int64_t n = 1; n <= order; ++n) {
        if (n % p == 0) continue;
        Poly factor(static_cast<std::size_t>(order) + 1);
        factor[0] = 1;
        factor[static_cast<std::size_t>(n)] = -1;
        for (long rep = 0; rep < e; ++rep) acc = poly_mul(acc, factor);
    }
    return acc;
}

/* Unrestricted partition counts by the classic coin-change recurrence. */
inline std::vector<Integer> partition_counts(std::int64_t order) {
    std::vector<Integer> dp(static_cast<std::size_t>(order) + 1);
    dp[0] = 1;
    for (std::int64_t part = 1; part <= order; ++part)
        for (std::int64_t n = part; n <= order; ++n)
            dp[static_cast<std::size_t>(n)] += dp[static_cast<std::size_t>(n - part)];
    return dp;
}

/* Generalized binomial coefficient (delta choose k). */
inline Rational binomial(const Rational& delta, std::int64_t k) {
    Rational out = 1;
    for (std::int64_t i = 0; i < k; ++i) out *= (delta - i) / Rational(i + 1);
    return out;
}

/* Dedekind sum straight from the sawtooth-product definition, in exact
 * rational arithmetic. */
inline Rational dedekind_literal(std::int64_t h, std::int64_t k) {
    Rational s = 0;
    for (std::int64_t j = 1; j < k; ++j) {
        Rational x = borwein::make_rational(j, k);
        Rational y = borwein::make_rational(j * h, k);
        Rational xf = x - Rational(borwein::floor_of(x)) - Rational(1, 2);
        Rational yf = y - Rational(borwein::floor_of(y)) - Rational(1, 2);
        s += xf * yf;
    }
    return s;
}

}  // namespace oracle
