#pragma once

#include <cstdint>

#include "borwein/bigfloat.hpp"
#include "borwein/interval.hpp"
#include "borwein/rational.hpp"

namespace borwein {

/* Modified Bessel function I_1 via its series of positive terms,
 * summed until the next term is below 2^{-precision_bits-8} relatively. */
BigReal bessel_i1(const BigReal& x, mpfr_prec_t precision_bits);

/* Rigorous enclosure; requires x.lo >= 0. The truncation tail is dominated
 * by a geometric series once the term ratio falls under 1/2. */
Interval bessel_i1(const Interval& x);

/* Enclosure of f(x) = prod_{n>=1} 1/(1-x^n) for 0 < x < 1, with the tail
 * bounded by exp(x^{M+1}/(1-x)^2). */
Interval euler_f_interval(const Interval& x);

/* The error-bound constant appears in two forms: the theorem's display uses
 * f(e^{-6 pi}), its derivation f(e^{-2 p pi}); they agree at p = 3. */
enum class ErrorBoundVariant { as_stated, proof_general };

/* Main term of the asymptotic expansion with `terms` Bessel summands:
 * (2 pi delta^{1/2} / sqrt(24n/(p-1) - delta))
 *   * sum_{1<=k<=terms} A_{pk}^{(delta)}(n) I_1((p-1)pi/(6pk) sqrt(...)).
 * Requires 0 < delta <= 24/(p-1) and 24n/(p-1) - delta > 0. */
Interval rademacher_main_interval(std::int64_t p, const Rational& delta, std::int64_t n,
                                  std::int64_t terms, mpfr_prec_t precision_bits);
BigReal rademacher_main(std::int64_t p, const Rational& delta, std::int64_t n,
                        std::int64_t terms, mpfr_prec_t precision_bits);

/* e^{(24n-(p-1)delta) pi / (6 p^2 N^2)} times the bracketed constant. */
Interval theorem_error_bound_interval(std::int64_t p, const Rational& delta, std::int64_t n,
                                      std::int64_t terms, mpfr_prec_t precision_bits,
                                      ErrorBoundVariant variant);
BigReal theorem_error_bound(std::int64_t p, const Rational& delta, std::int64_t n,
                            std::int64_t terms, mpfr_prec_t precision_bits,
                            ErrorBoundVariant variant);

/* p = 3 growth-estimate quantities:
 *   L = (pi/18) sqrt(delta (12n - delta)),
 *   c_hat = (2 pi^2 delta / 27) L^{-1} I_1(2L)
 *         = (4 pi delta^{1/2} / (3 sqrt(12n - delta))) I_1(2L),
 *   w = (1/2) log(1/delta)
 *       + 0.736 (1.689^d (1.222 + 1.002^d) + 3*1.692^d)/d + 0.119,
 *   m_bound = (L w + L log L + 2 I_1(L)) / I_1(2L).
 * c_hat is the k = 1 collapse of the main term; the growth inequality
 * |c/c_hat - cos(pi delta/18 + 2 pi n/3)| <= m_bound holds in this
 * normalization. Requires 0.227 < delta <= 3 and 12n - delta > 0. */
struct Mth1Intervals {
    Interval big_l, c_hat, w, m_bound;
};
Mth1Intervals mth1_intervals(const Rational& delta, std::int64_t n,
                             mpfr_prec_t precision_bits);

struct Mth1Quantities {
    BigReal big_l, c_hat, w, m_bound;
};
Mth1Quantities mth1_quantities(const Rational& delta, std::int64_t n,
                               mpfr_prec_t precision_bits);

/* True iff |exact_c / c_hat - cos(pi delta/18 + 2 pi n/3)| <= m_bound holds
 * certainly (left side rounded outward, right side inward). */
bool check_mth1_inequality(const Rational& delta, std::int64_t n,
                           const Rational& exact_c, mpfr_prec_t precision_bits);

/* N = ceil(sqrt(20 L^2 / delta)), the term count used in the growth bound. */
std::int64_t mth1_term_count(const Rational& delta, std::int64_t n,
                             mpfr_prec_t precision_bits);

/* x log y + 2 I_1(x) - (2 - gamma - 1/(2y)) x, an upper bound for
 * sum_{2<=k<=y} I_1(2x/k). Requires x > 0 and integer y > 2. */
BigReal lemma_e_bound(const BigReal& x, std::int64_t y, mpfr_prec_t precision_bits);
Interval lemma_e_bound_interval(const Rational& x, std::int64_t y,
                                mpfr_prec_t precision_bits);

/* Exact sign of cos(pi delta/18 + 2 pi n/3), decided symbolically on the
 * reduced rational angle (never by float comparison near zero). */
int predicted_sign(const Rational& delta, std::int64_t n);

/* One estimate row: exact coefficient vs. main term and error bound.
 * within_bound uses the interval-safe comparison. */
struct EstimateReport {
    std::int64_t p = 0;
    Rational delta;
    std::int64_t n = 0;
    std::int64_t terms = 0;
    Rational exact_coeff;
    BigReal main_term;
    BigReal error_bound;
    bool within_bound = false;
    int predicted = 0;
    int actual = 0;
};

/* The caller supplies the exact coefficient (typically from one shared
 * series expansion). For p = 3 the predicted sign is the Theorem-mth1
 * cosine sign; otherwise it is the sign of the main-term enclosure. */
EstimateReport make_estimate_report(std::int64_t p, const Rational& delta, std::int64_t n,
                                    std::int64_t terms, const Rational& exact_coeff,
                                    mpfr_prec_t precision_bits, ErrorBoundVariant variant);

}  // namespace borwein
