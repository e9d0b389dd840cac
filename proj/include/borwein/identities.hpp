#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "borwein/bigfloat.hpp"
#include "borwein/series.hpp"

namespace borwein {

/* Rectangular bivariate truncation: coefficients of z^m q^n for
 * |m| <= z_window and 0 <= n <= q_order. */
class BivariateSeries {
public:
    BivariateSeries(std::int64_t z_window, std::int64_t q_order);

    std::int64_t z_window() const { return window_; }
    std::int64_t q_order() const { return order_; }

    const Rational& at(std::int64_t m, std::int64_t n) const {
        return table_[index(m, n)];
    }
    Rational& at(std::int64_t m, std::int64_t n) { return table_[index(m, n)]; }

    BivariateSeries restricted(std::int64_t window, std::int64_t order) const;

    friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);

    /* Column-wise product with a series in q alone. */
    BivariateSeries times_q_series(const TruncatedSeries& f) const;

    /* c * z^dz * q^dq * this, truncated into the target window. Terms shifted
     * outside the target are dropped, so pick the source window large enough
     * to cover every shift that lands inside. */
    BivariateSeries times_monomial(const Rational& c, std::int64_t dz, std::int64_t dq,
                                   std::int64_t target_window,
                                   std::int64_t target_order) const;

    /* Largest |difference| over the shared window. */
    Rational max_abs_diff(const BivariateSeries& other) const;

private:
    std::size_t index(std::int64_t m, std::int64_t n) const;
    std::int64_t window_, order_;
    std::vector<Rational> table_;
};

/* sum_j (-1)^j s^j q^{c j(j-1)/2 + b j} z^{a j}: the triple-product sum for
 * theta(s z^a q^b; q^c). Requires a >= 1, 0 <= b < c. */
BivariateSeries jtp_sum(int s, std::int64_t a, std::int64_t b, std::int64_t c,
                        std::int64_t z_window, std::int64_t q_order);

/* theta(s z^a q^b; q^c) = jtp_sum / (q^c; q^c)_inf — the canonical theta
 * generator; everything theta-like in this module comes from it. */
BivariateSeries theta_bivariate(int s, std::int64_t a, std::int64_t b, std::int64_t c,
                                std::int64_t z_window, std::int64_t q_order);

/* The ell summation range of the k-dissection, ceil((1-k)/2)..ceil((k-1)/2);
 * it always contains exactly k integers. */
std::pair<std::int64_t, std::int64_t> dissection_ell_range(std::int64_t k);

/* Largest |coefficient| mismatch between theta(z;q) and its k-dissection,
 * both expanded as BivariateSeries. Zero when the identity holds. */
Rational theta_dissection_residual(std::int64_t k, std::int64_t z_degree,
                                   std::int64_t order);

/* Largest |coefficient| mismatch in the (q;q)^3 identity (even and odd k
 * cases; for odd k the k q^{(k^2-1)/8} (q^{k^2};q^{k^2})^3 correction moves
 * to the left side). */
Rational theorem_main_residual(std::int64_t k, std::int64_t order);

/* |d/dx theta((-1)^k q^alpha e^{-x}; q)|_{x=0} minus the Lambert-series form,
 * with the derivative taken by a central difference of truncated products. */
BigReal lambert_derivative_check(int k_parity, const Rational& alpha,
                                 const BigReal& q_value, const BigReal& step,
                                 mpfr_prec_t precision_bits);

/* |d/dx theta(e^{-x}; q)|_{x=0} - (q;q)_inf^2|, same finite-difference setup. */
BigReal theta_derivative_identity_residual(const BigReal& q_value, const BigReal& step,
                                           mpfr_prec_t precision_bits);

/* (sum q^{n^2})^2 against 1 + 4 sum (q^{4n+1}/(1-q^{4n+1}) - q^{4n+3}/(1-q^{4n+3})). */
Rational two_squares_residual(std::int64_t order);

/* The cubic theta suite; all residuals are zero when the identities hold. */
struct CubicThetaResiduals {
    Rational addition;    // [(q;q)^3 + 3q(q^9;q^9)^3]/(q^3;q^3) = 1 + 6 sum(...)
    Rational dissection;  // a(q^3) = b(q) + c(q^3)
    Rational cubic;       // a^3 = b^3 + c^3
    Rational lambert;     // a(q) = 1 + 6 sum(...)
};
CubicThetaResiduals cubic_theta_check(std::int64_t order);

/* Borwein cubic theta a(q) = sum over the hex lattice of q^{m^2+mn+n^2}. */
TruncatedSeries cubic_theta_a(std::int64_t order);

/* Residues h mod k for which (2l+1)^2 = 1+8h (mod k) has no solution;
 * c_k^{(3)} vanishes on those classes. k must be odd. */
std::set<std::int64_t> vanishing_classes(std::int64_t k);

/* c_k^{(3)}(k n + (k^2-1)/8) = 0 (mod k) for every such index <= order. */
bool divisibility_check(std::int64_t k, std::int64_t order);

/* Residue-class split: component r holds the coefficients of q^{m n + r}. */
struct Dissection {
    std::int64_t modulus = 1;
    std::int64_t original_order = 0;
    std::vector<TruncatedSeries> components;
};
Dissection dissect(const TruncatedSeries& series, std::int64_t m);
TruncatedSeries interleave(const Dissection& d);

struct SignPatternReport {
    bool ok = true;
    std::int64_t pairs_checked = 0;
    std::int64_t first_violation = -1;
};
/* Verifies c_p^(delta)(n) c_p^(delta)(n+p) >= 0 for all n + p <= order. */
SignPatternReport sign_pattern_check(std::int64_t p, const Rational& delta,
                                     std::int64_t order);

struct Conjecture1Report {
    bool nonnegative[3] = {true, true, true};  // A, B, C
    std::int64_t first_negative[3] = {-1, -1, -1};
};
/* Nonnegativity of the A, B, C components of G_3^delta (B and C carry the
 * global minus of the dissection convention). */
Conjecture1Report conjecture1_check(const Rational& delta, std::int64_t order);

}  // namespace borwein
