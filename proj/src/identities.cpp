#include "borwein/identities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace borwein {

BivariateSeries::BivariateSeries(std::int64_t z_window, std::int64_t q_order)
    : window_(z_window), order_(q_order) {
    if (z_window < 0 || q_order < 0) throw std::domain_error("bad bivariate bounds");
    table_.resize(static_cast<std::size_t>(2 * z_window + 1) * (q_order + 1));
}

std::size_t BivariateSeries::index(std::int64_t m, std::int64_t n) const {
    if (m < -window_ || m > window_ || n < 0 || n > order_)
        throw std::out_of_range("bivariate index");
    return static_cast<std::size_t>(m + window_) * (order_ + 1) + n;
}

BivariateSeries BivariateSeries::restricted(std::int64_t window, std::int64_t order) const {
    window = std::min(window, window_);
    order = std::min(order, order_);
    BivariateSeries out(window, order);
    for (std::int64_t m = -window; m <= window; ++m)
        for (std::int64_t n = 0; n <= order; ++n) out.at(m, n) = at(m, n);
    return out;
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
    std::int64_t w = std::min(a.window_, b.window_);
    std::int64_t o = std::min(a.order_, b.order_);
    BivariateSeries out = a.restricted(w, o);
    for (std::int64_t m = -w; m <= w; ++m)
        for (std::int64_t n = 0; n <= o; ++n) out.at(m, n) += b.at(m, n);
    return out;
}

BivariateSeries BivariateSeries::times_q_series(const TruncatedSeries& f) const {
    std::int64_t o = std::min(order_, f.order());
    BivariateSeries out(window_, o);
    for (std::int64_t m = -window_; m <= window_; ++m)
        for (std::int64_t n = 0; n <= o; ++n) {
            if (at(m, n) == 0) continue;
            for (std::int64_t j = 0; n + j <= o; ++j) {
                if (f[j] == 0) continue;
                out.at(m, n + j) += at(m, n) * f[j];
            }
        }
    return out;
}

BivariateSeries BivariateSeries::times_monomial(const Rational& c, std::int64_t dz,
                                                std::int64_t dq, std::int64_t target_window,
                                                std::int64_t target_order) const {
    BivariateSeries out(target_window, target_order);
    for (std::int64_t m = -window_; m <= window_; ++m) {
        std::int64_t mm = m + dz;
        if (mm < -target_window || mm > target_window) continue;
        for (std::int64_t n = 0; n <= order_; ++n) {
            std::int64_t nn = n + dq;
            if (nn > target_order) break;
            if (at(m, n) == 0) continue;
            out.at(mm, nn) = c * at(m, n);
        }
    }
    return out;
}

Rational BivariateSeries::max_abs_diff(const BivariateSeries& other) const {
    std::int64_t w = std::min(window_, other.window_);
    std::int64_t o = std::min(order_, other.order_);
    Rational best = 0;
    for (std::int64_t m = -w; m <= w; ++m)
        for (std::int64_t n = 0; n <= o; ++n) {
            Rational d = abs(at(m, n) - other.at(m, n));
            if (d > best) best = d;
        }
    return best;
}

BivariateSeries jtp_sum(int s, std::int64_t a, std::int64_t b, std::int64_t c,
                        std::int64_t z_window, std::int64_t q_order) {
    if (a < 1 || b < 0 || b >= c) throw std::domain_error("jtp_sum needs a >= 1, 0 <= b < c");
    BivariateSeries out(z_window, q_order);
    /* Term sign is (-s)^j. q-exponents increase in |j| (b < c), so a
     * one-sided scan per direction terminates. */
    auto term_sign = [s](std::int64_t j) { return (j % 2 == 0) ? 1 : -s; };
    for (std::int64_t j = 0;; ++j) {
        std::int64_t e = c * j * (j - 1) / 2 + b * j;
        if (e > q_order) break;
        if (a * j > z_window) continue;
        out.at(a * j, e) += term_sign(j);
    }
    for (std::int64_t j = -1;; --j) {
        std::int64_t e = c * j * (j - 1) / 2 + b * j;
        if (e < 0) throw std::logic_error("negative q-exponent in jtp_sum");
        if (e > q_order) break;
        if (-a * j > z_window) continue;
        out.at(a * j, e) += term_sign(j);
    }
    return out;
}

namespace {

TruncatedSeries dense_from_sparse(const std::vector<SparseTerm>& terms, std::int64_t order) {
    TruncatedSeries out(order);
    for (const auto& [e, s] : terms) out.coeff(e) = s;
    return out;
}

/* (q^c; q^c)_inf^{-1} as a dense series. */
TruncatedSeries inv_eta(std::int64_t c, std::int64_t order) {
    return dense_from_sparse(pentagonal_terms(c, order), order).inverse();
}

/* sum_{n>=0} of q^{first+step*n}/(1 -+ q^{first+step*n}); plus_denominator
 * selects 1/(1+t) (alternating divisor weights). */
TruncatedSeries lambert_sum(std::int64_t first, std::int64_t step, bool plus_denominator,
                            std::int64_t order) {
    if (first < 1 || step < 1) throw std::domain_error("lambert_sum needs positive exponents");
    TruncatedSeries out(order);
    for (std::int64_t t = first; t <= order; t += step)
        for (std::int64_t e = t, i = 1; e <= order; e += t, ++i) {
            int w = plus_denominator ? ((i % 2 == 1) ? 1 : -1) : 1;
            out.coeff(e) += w;
        }
    return out;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace

BivariateSeries theta_bivariate(int s, std::int64_t a, std::int64_t b, std::int64_t c,
                                std::int64_t z_window, std::int64_t q_order) {
    return jtp_sum(s, a, b, c, z_window, q_order).times_q_series(inv_eta(c, q_order));
}

std::pair<std::int64_t, std::int64_t> dissection_ell_range(std::int64_t k) {
    return {ceil_div(1 - k, 2), ceil_div(k - 1, 2)};
}

Rational theta_dissection_residual(std::int64_t k, std::int64_t z_degree,
                                   std::int64_t order) {
    if (k < 1) throw std::domain_error("k must be >= 1");
    const std::int64_t m = z_degree, n = order;
    BivariateSeries lhs = theta_bivariate(1, 1, 0, 1, m, n);

    auto [ell_lo, ell_hi] = dissection_ell_range(k);
    std::int64_t inner_window = m + std::max(std::abs(ell_lo), std::abs(ell_hi));
    int s = (k % 2 == 1) ? 1 : -1;  // (-1)^{k-1}
    BivariateSeries acc(m, n);
    for (std::int64_t ell = ell_lo; ell <= ell_hi; ++ell) {
        std::int64_t b = k * (k - 1 + 2 * ell) / 2;
        BivariateSeries inner = theta_bivariate(s, k, b, k * k, inner_window, n);
        Rational c = (((ell % 2) + 2) % 2 == 0) ? 1 : -1;
        acc = acc + inner.times_monomial(c, ell, ell * (ell - 1) / 2, m, n);
    }
    /* prefactor (q^{k^2}; q^{k^2})_inf / (q;q)_inf */
    TruncatedSeries pref =
        dense_from_sparse(pentagonal_terms(k * k, n), n) * inv_eta(1, n);
    BivariateSeries rhs = acc.times_q_series(pref);
    return lhs.max_abs_diff(rhs);
}

namespace {

/* (s q^a, s q^{c-a}, q^c; q^c)_inf = sum_j (-s)^j q^{c j(j-1)/2 + a j}. */
TruncatedSeries triple_product_series(int s, std::int64_t a, std::int64_t c,
                                      std::int64_t order) {
    TruncatedSeries out(order);
    for (std::int64_t j = 0;; ++j) {
        std::int64_t e = c * j * (j - 1) / 2 + a * j;
        if (e > order) break;
        out.coeff(e) += (s < 0 || j % 2 == 0) ? 1 : -1;
    }
    for (std::int64_t j = -1;; --j) {
        std::int64_t e = c * j * (j - 1) / 2 + a * j;
        if (e < 0) throw std::logic_error("negative exponent in triple product");
        if (e > order) break;
        out.coeff(e) += (s < 0 || j % 2 == 0) ? 1 : -1;
    }
    return out;
}

}  // namespace

Rational theorem_main_residual(std::int64_t k, std::int64_t order) {
    if (k < 1) throw std::domain_error("k must be >= 1");
    const std::int64_t n = order;
    const bool odd = (k % 2 == 1);
    TruncatedSeries lhs = expand_product({{{1, 3}}}, n);
    if (odd) {
        TruncatedSeries corr = expand_product({{{k * k, 3}}}, n).shifted((k * k - 1) / 8);
        corr *= Rational(k) * (((k - 1) / 2) % 2 == 0 ? 1 : -1);
        lhs -= corr;
    }

    TruncatedSeries rhs(n);
    for (std::int64_t ell = 0; 2 * ell < k - 1; ++ell) {
        std::int64_t a = k * (k - 1 - 2 * ell) / 2;
        TruncatedSeries tp = triple_product_series(odd ? 1 : -1, a, k * k, n);
        std::int64_t b = k * (k + 1 + 2 * ell) / 2;
        TruncatedSeries tail = lambert_sum(a, k * k, !odd, n) - lambert_sum(b, k * k, !odd, n);
        tail *= Rational(2 * k) * (odd ? 1 : -1);
        TruncatedSeries factor = tail;
        factor.coeff(0) += 2 * ell + 1;
        TruncatedSeries term = (tp * factor).shifted(ell * (ell + 1) / 2);
        if (ell % 2 == 1) term = -term;
        rhs += term;
    }
    return (lhs - rhs).max_abs_coeff();
}

namespace {

/* theta(z; q) = prod_{j>=0} (1 - z q^j)(1 - (q/z) q^j), numerically. */
BigReal theta_numeric(const BigReal& z, const BigReal& q, mpfr_prec_t prec) {
    BigReal one = BigReal::from(1L, prec);
    if (!(abs(q) < one)) throw std::domain_error("theta product needs |q| < 1");
    BigReal w1 = z, w2 = q / z;
    BigReal threshold = ldexp2(one, -static_cast<long>(prec) - 8);
    BigReal acc = one;
    for (std::int64_t j = 0; j < 1000000; ++j) {
        acc = acc * (one - w1) * (one - w2);
        w1 = w1 * q;
        w2 = w2 * q;
        if (abs(w1) < threshold && abs(w2) < threshold) return acc;
    }
    throw std::domain_error("theta product did not converge");
}

BigReal euler_qq_numeric(const BigReal& q, mpfr_prec_t prec) {
    BigReal one = BigReal::from(1L, prec);
    BigReal threshold = ldexp2(one, -static_cast<long>(prec) - 8);
    BigReal acc = one, qn = q;
    while (!(abs(qn) < threshold)) {
        acc = acc * (one - qn);
        qn = qn * q;
    }
    return acc;
}

}  // namespace

BigReal lambert_derivative_check(int k_parity, const Rational& alpha,
                                 const BigReal& q_value, const BigReal& step,
                                 mpfr_prec_t prec) {
    if (!(alpha > 0) || !(alpha < 1)) throw std::domain_error("alpha must lie in (0,1)");
    BigReal zero(prec), one = BigReal::from(1L, prec);
    if (!(q_value > zero) || !(q_value < one))
        throw std::domain_error("q must lie in (0,1)");
    int sgn = (k_parity % 2 == 0) ? 1 : -1;
    BigReal za = exp(BigReal::from(alpha, prec) * log(q_value));  // q^alpha
    BigReal z = (sgn > 0) ? za : -za;

    BigReal derivative = (theta_numeric(z * exp(-step), q_value, prec)
                          - theta_numeric(z * exp(step), q_value, prec))
                         / (step * 2);

    /* Lambert sum of the lemma: terms z q^n/(1 - z q^n) - (q/z) q^n/(1 - (q/z) q^n). */
    BigReal w1 = z, w2 = q_value / z;
    BigReal threshold = ldexp2(one, -static_cast<long>(prec) - 8);
    BigReal sum(prec);
    while (!(abs(w1) < threshold) || !(abs(w2) < threshold)) {
        sum += w1 / (one - w1) - w2 / (one - w2);
        w1 = w1 * q_value;
        w2 = w2 * q_value;
    }
    BigReal rhs = theta_numeric(z, q_value, prec) * sum;
    return abs(derivative - rhs);
}

BigReal theta_derivative_identity_residual(const BigReal& q_value, const BigReal& step,
                                           mpfr_prec_t prec) {
    BigReal derivative = (theta_numeric(exp(-step), q_value, prec)
                          - theta_numeric(exp(step), q_value, prec))
                         / (step * 2);
    BigReal qq = euler_qq_numeric(q_value, prec);
    return abs(derivative - qq * qq);
}

Rational two_squares_residual(std::int64_t order) {
    TruncatedSeries theta(order);
    theta.coeff(0) = 1;
    for (std::int64_t m = 1; m * m <= order; ++m) theta.coeff(m * m) = 2;
    TruncatedSeries lhs = theta * theta;

    TruncatedSeries rhs = lambert_sum(1, 4, false, order) - lambert_sum(3, 4, false, order);
    rhs *= Rational(4);
    rhs.coeff(0) += 1;
    return (lhs - rhs).max_abs_coeff();
}

TruncatedSeries cubic_theta_a(std::int64_t order) {
    TruncatedSeries a(order);
    /* m^2 + mn + n^2 >= (m^2 + n^2)/2, so |m|, |n| <= sqrt(2 order) suffices
     * for a complete table. */
    std::int64_t bound = 1;
    while (bound * bound < 2 * order) ++bound;
    for (std::int64_t m = -bound; m <= bound; ++m)
        for (std::int64_t nn = -bound; nn <= bound; ++nn) {
            std::int64_t e = m * m + m * nn + nn * nn;
            if (e <= order) a.coeff(e) += 1;
        }
    return a;
}

CubicThetaResiduals cubic_theta_check(std::int64_t order) {
    const std::int64_t n = order;
    CubicThetaResiduals out;

    TruncatedSeries a = cubic_theta_a(n);
    TruncatedSeries b = expand_product({{{1, 3}, {3, -1}}}, n);

    /* addition formula: [(q;q)^3 + 3 q (q^9;q^9)^3] / (q^3;q^3) */
    TruncatedSeries num = expand_product({{{1, 3}}}, n);
    TruncatedSeries nine = expand_product({{{9, 3}}}, n).shifted(1);
    nine *= Rational(3);
    num += nine;
    TruncatedSeries lhs1 = num * inv_eta(3, n);
    TruncatedSeries rhs1 = lambert_sum(3, 9, false, n) - lambert_sum(6, 9, false, n);
    rhs1 *= Rational(6);
    rhs1.coeff(0) += 1;
    out.addition = (lhs1 - rhs1).max_abs_coeff();

    /* a(q^3) = b(q) + 3 q (q^9;q^9)^3/(q^3;q^3) */
    TruncatedSeries a3(n);
    TruncatedSeries a_small = cubic_theta_a(n / 3);
    for (std::int64_t i = 0; i <= a_small.order(); ++i) a3.coeff(3 * i) = a_small[i];
    TruncatedSeries c_q3 = expand_product({{{3, -1}, {9, 3}}}, n).shifted(1);
    c_q3 *= Rational(3);
    out.dissection = (a3 - (b + c_q3)).max_abs_coeff();

    /* a^3 = b^3 + c^3 with c^3 = 27 q (q^3;q^3)^9 / (q;q)^3 */
    TruncatedSeries c_cubed = expand_product({{{1, -3}, {3, 9}}}, n).shifted(1);
    c_cubed *= Rational(27);
    TruncatedSeries lhs3 = a * a * a;
    TruncatedSeries rhs3 = b * b * b + c_cubed;
    out.cubic = (lhs3 - rhs3).max_abs_coeff();

    /* Lambert form of a(q) */
    TruncatedSeries rhs4 = lambert_sum(1, 3, false, n) - lambert_sum(2, 3, false, n);
    rhs4 *= Rational(6);
    rhs4.coeff(0) += 1;
    out.lambert = (a - rhs4).max_abs_coeff();
    return out;
}

std::set<std::int64_t> vanishing_classes(std::int64_t k) {
    if (k < 1 || k % 2 == 0) throw std::domain_error("k must be odd");
    std::set<std::int64_t> out;
    for (std::int64_t h = 0; h < k; ++h) {
        bool solvable = false;
        for (std::int64_t ell = 0; ell < k && !solvable; ++ell)
            if (((2 * ell + 1) * (2 * ell + 1)) % k == (1 + 8 * h) % k) solvable = true;
        if (!solvable) out.insert(h);
    }
    return out;
}

bool divisibility_check(std::int64_t k, std::int64_t order) {
    if (k < 1 || k % 2 == 0) throw std::domain_error("k must be odd");
    if (k == 1) return true;  // everything is 0 mod 1
    TruncatedSeries c = borwein_coefficients(k, 3, order);
    std::int64_t offset = (k * k - 1) / 8;
    for (std::int64_t idx = offset; idx <= order; idx += k) {
        const Rational& v = c[idx];
        if (v.get_den() != 1) throw std::logic_error("cubic coefficients must be integers");
        if (v.get_num() % k != 0) return false;
    }
    return true;
}

Dissection dissect(const TruncatedSeries& series, std::int64_t m) {
    if (m < 1) throw std::domain_error("modulus must be >= 1");
    Dissection d;
    d.modulus = m;
    d.original_order = series.order();
    for (std::int64_t r = 0; r < m; ++r) {
        std::int64_t comp_order = r <= series.order() ? (series.order() - r) / m : 0;
        TruncatedSeries comp(comp_order);
        for (std::int64_t i = 0; i <= comp_order; ++i) comp.coeff(i) = series[m * i + r];
        d.components.push_back(std::move(comp));
    }
    return d;
}

TruncatedSeries interleave(const Dissection& d) {
    TruncatedSeries out(d.original_order);
    for (std::int64_t r = 0; r < d.modulus; ++r) {
        const TruncatedSeries& comp = d.components[static_cast<std::size_t>(r)];
        for (std::int64_t i = 0; i <= comp.order(); ++i) {
            std::int64_t idx = d.modulus * i + r;
            if (idx <= d.original_order) out.coeff(idx) = comp[i];
        }
    }
    return out;
}

SignPatternReport sign_pattern_check(std::int64_t p, const Rational& delta,
                                     std::int64_t order) {
    TruncatedSeries c = borwein_coefficients(p, delta, order);
    SignPatternReport r;
    for (std::int64_t n = 0; n + p <= order; ++n) {
        ++r.pairs_checked;
        if (sign_of(c[n]) * sign_of(c[n + p]) < 0) {
            r.ok = false;
            if (r.first_violation < 0) r.first_violation = n;
        }
    }
    return r;
}

Conjecture1Report conjecture1_check(const Rational& delta, std::int64_t order) {
    TruncatedSeries g = borwein_coefficients(3, delta, order);
    Dissection d = dissect(g, 3);
    Conjecture1Report rep;
    for (int comp = 0; comp < 3; ++comp) {
        const TruncatedSeries& s = d.components[static_cast<std::size_t>(comp)];
        for (std::int64_t i = 0; i <= s.order(); ++i) {
            Rational v = comp == 0 ? s[i] : -s[i];  // B, C carry the minus
            if (v < 0) {
                rep.nonnegative[comp] = false;
                rep.first_negative[comp] = i;
                break;
            }
        }
    }
    return rep;
}

}  // namespace borwein
