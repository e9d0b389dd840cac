#include "borwein/asymptotics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "borwein/modular.hpp"

namespace borwein {

BigReal bessel_i1(const BigReal& x, mpfr_prec_t prec) {
    if (x.sign() < 0) throw std::domain_error("bessel_i1 requires x >= 0");
    if (x.is_zero()) return BigReal(prec);
    BigReal half = x / 2;
    BigReal u = half * half;
    BigReal term = half;
    BigReal partial = half;
    BigReal eps = ldexp2(BigReal::from(1L, prec), -static_cast<long>(prec) - 8);
    for (long j = 1;; ++j) {
        term = term * u / (j * (j + 1L));
        partial += term;
        if (term < eps * partial && u < BigReal::from((j + 1L) * (j + 2L), prec) / 2) break;
    }
    return partial;
}

Interval bessel_i1(const Interval& x) {
    if (x.lo().sign() < 0) throw std::domain_error("bessel_i1 requires x >= 0");
    mpfr_prec_t prec = x.precision();

    /* One directed pass per endpoint. The lower partial sum already bounds
     * from below (the dropped tail is positive); the upper one adds the
     * geometric tail majorant, valid once the term ratio is <= 1/2. */
    auto directed = [prec](const BigReal& v, mpfr_rnd_t rnd) {
        mpfr_t half, u, term, partial, tmp;
        mpfr_inits2(prec, half, u, term, partial, tmp, (mpfr_ptr) nullptr);
        mpfr_div_si(half, v.raw(), 2, rnd);
        mpfr_mul(u, half, half, rnd);
        mpfr_set(term, half, rnd);
        mpfr_set(partial, half, rnd);
        BigReal eps = ldexp2(BigReal::from(1L, prec), -static_cast<long>(prec) - 8);
        bool tail_small = mpfr_zero_p(v.raw());
        for (long j = 1; !tail_small; ++j) {
            mpfr_mul(term, term, u, rnd);
            mpfr_div_si(term, term, j * (j + 1L), rnd);
            mpfr_add(partial, partial, term, rnd);
            mpfr_mul(tmp, partial, eps.raw(), MPFR_RNDU);
            bool ratio_half = mpfr_cmp_si(u, (j + 1L) * (j + 2L) / 2) < 0;
            if (ratio_half && mpfr_cmp(term, tmp) < 0) tail_small = true;
        }
        BigReal out(prec);
        if (rnd == MPFR_RNDU && !mpfr_zero_p(v.raw()))
            mpfr_add(partial, partial, term, MPFR_RNDU);  // covers the tail
        mpfr_set(out.raw(), partial, rnd);
        mpfr_clears(half, u, term, partial, tmp, (mpfr_ptr) nullptr);
        return out;
    };
    return Interval(directed(x.lo(), MPFR_RNDD), directed(x.hi(), MPFR_RNDU));
}

Interval euler_f_interval(const Interval& x) {
    mpfr_prec_t prec = x.precision();
    Interval one = Interval::from(1, prec);
    if (x.lo().sign() <= 0 || !(x.hi() < one.lo()))
        throw std::domain_error("euler_f_interval requires 0 < x < 1");
    BigReal threshold = ldexp2(BigReal::from(1L, prec), -static_cast<long>(prec) - 8);
    Interval prod = one;
    Interval xn = one;
    for (std::int64_t n = 1; n <= 1000000; ++n) {
        xn = xn * x;
        prod = prod * (one - xn);
        if (xn.hi() < threshold) {
            Interval f = one / prod;
            /* tail: log(f / f_partial) <= x^{n+1} / (1-x)^2 */
            mpfr_t tail, den;
            mpfr_inits2(prec, tail, den, (mpfr_ptr) nullptr);
            mpfr_mul(tail, xn.hi().raw(), x.hi().raw(), MPFR_RNDU);
            mpfr_si_sub(den, 1, x.hi().raw(), MPFR_RNDD);
            mpfr_mul(den, den, den, MPFR_RNDD);
            mpfr_div(tail, tail, den, MPFR_RNDU);
            mpfr_exp(tail, tail, MPFR_RNDU);
            BigReal hi(prec);
            mpfr_mul(hi.raw(), f.hi().raw(), tail, MPFR_RNDU);
            mpfr_clears(tail, den, (mpfr_ptr) nullptr);
            return Interval(f.lo(), hi);
        }
    }
    throw std::domain_error("nome too close to 1");
}

namespace {

void require_mth_hypotheses(std::int64_t p, const Rational& delta, std::int64_t n,
                            std::int64_t terms) {
    if (!is_prime(p)) throw std::domain_error("p must be prime");
    if (!(delta > 0) || delta > make_rational(24, p - 1))
        throw std::domain_error("theorem hypothesis requires 0 < delta <= 24/(p-1)");
    if (n < 1) throw std::domain_error("theorem hypothesis requires n >= 1");
    if (terms < 1) throw std::domain_error("at least one Bessel term is required");
    if (make_rational(24 * n, p - 1) - delta <= 0)
        throw std::domain_error("24n/(p-1) - delta must be positive");
}

/* The bracketed constant of the error bound, independent of n and N. */
Interval error_bracket(std::int64_t p, const Rational& delta, mpfr_prec_t prec,
                       ErrorBoundVariant variant) {
    static std::map<std::tuple<std::int64_t, Rational, int, long>, Interval> cache;
    static std::mutex mutex;
    auto key = std::make_tuple(p, delta, static_cast<int>(variant), static_cast<long>(prec));
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    Interval pi = Interval::pi(prec);
    std::int64_t c1 = (variant == ErrorBoundVariant::as_stated) ? 6 : 2 * p;
    Interval f_c1 = pow_rational(euler_f_interval(exp(-(pi * Interval::from(c1, prec)))), delta);
    Interval f_2pi = pow_rational(euler_f_interval(exp(-(pi * Interval::from(2, prec)))), delta);
    Interval f_2pi_over_p = pow_rational(
        euler_f_interval(exp(-(pi * Interval::from(make_rational(2, p), prec)))), delta);

    Interval two = Interval::from(2, prec);
    Interval b1 = Interval::from(make_rational(p - 1, p * p), prec)
                  * exp(pi * Interval::from(delta * (p - 1) / 12, prec))
                  * (pi * sqrt(two) - two + two * f_c1 * f_2pi);
    Interval b2 = Interval::from(2 * (p - 1), prec)
                  * exp(-(pi * Interval::from(delta * (p - 1) / (12 * p), prec)))
                  * pow_rational(Interval::from(p, prec), delta / 2 - 1)
                  * f_2pi_over_p * f_2pi;
    Interval bracket = b1 + b2;

    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, bracket);
    return bracket;
}

}  // namespace

Interval rademacher_main_interval(std::int64_t p, const Rational& delta, std::int64_t n,
                                  std::int64_t terms, mpfr_prec_t prec) {
    require_mth_hypotheses(p, delta, n, terms);
    Rational t = make_rational(24 * n, p - 1) - delta;
    Interval pi = Interval::pi(prec);
    Interval pref = pi * Interval::from(2, prec) * sqrt(Interval::from(delta, prec))
                    / sqrt(Interval::from(t, prec));
    Interval root = sqrt(Interval::from(delta * t, prec));
    Interval total(prec);
    for (std::int64_t k = 1; k <= terms; ++k) {
        Interval arg = pi * Interval::from(make_rational(p - 1, 6 * p * k), prec) * root;
        total += kloosterman_a_interval(p, p * k, delta, n, prec) * bessel_i1(arg);
    }
    return pref * total;
}

BigReal rademacher_main(std::int64_t p, const Rational& delta, std::int64_t n,
                        std::int64_t terms, mpfr_prec_t prec) {
    return rademacher_main_interval(p, delta, n, terms, prec).midpoint();
}

Interval theorem_error_bound_interval(std::int64_t p, const Rational& delta, std::int64_t n,
                                      std::int64_t terms, mpfr_prec_t prec,
                                      ErrorBoundVariant variant) {
    require_mth_hypotheses(p, delta, n, terms);
    Rational e = (Rational(24 * n) - delta * (p - 1)) / Rational(6 * p * p * terms * terms);
    Interval prefactor = exp(Interval::pi(prec) * Interval::from(e, prec));
    return prefactor * error_bracket(p, delta, prec, variant);
}

BigReal theorem_error_bound(std::int64_t p, const Rational& delta, std::int64_t n,
                            std::int64_t terms, mpfr_prec_t prec,
                            ErrorBoundVariant variant) {
    return theorem_error_bound_interval(p, delta, n, terms, prec, variant).midpoint();
}

namespace {

void require_mth1_hypotheses(const Rational& delta, std::int64_t n) {
    if (!(delta > Rational(227, 1000)) || delta > 3)
        throw std::domain_error("growth estimate requires 0.227 < delta <= 3");
    if (Rational(12 * n) - delta <= 0)
        throw std::domain_error("12n - delta must be positive");
}

Interval w_of_delta(const Rational& delta, mpfr_prec_t prec) {
    Interval half_log = log(Interval::from(1 / delta, prec)) / Interval::from(2, prec);
    Interval a = pow_rational(Interval::from(Rational(1689, 1000), prec), delta);
    Interval b = Interval::from(make_rational(1222, 1000), prec)
                 + pow_rational(Interval::from(Rational(1002, 1000), prec), delta);
    Interval c = Interval::from(3, prec)
                 * pow_rational(Interval::from(Rational(1692, 1000), prec), delta);
    Interval mid = Interval::from(make_rational(736, 1000), prec) * (a * b + c)
                   / Interval::from(delta, prec);
    return half_log + mid + Interval::from(Rational(119, 1000), prec);
}

}  // namespace

Mth1Intervals mth1_intervals(const Rational& delta, std::int64_t n, mpfr_prec_t prec) {
    require_mth1_hypotheses(delta, n);
    Rational t = Rational(12 * n) - delta;
    Interval pi = Interval::pi(prec);
    Interval root = sqrt(Interval::from(delta * t, prec));
    Interval big_l = pi * root / Interval::from(18, prec);
    Interval two_l = pi * root / Interval::from(9, prec);  // = 2L, the I_1 argument
    /* c_hat = (2 pi^2 delta / 27) L^{-1} I_1(2L), the k = 1 collapse of the
     * main term: 4 pi sqrt(delta) / (3 sqrt(12n - delta)) * I_1(2L). */
    Interval c_hat = pi * Interval::from(4, prec) * sqrt(Interval::from(delta, prec))
                     / (Interval::from(3, prec) * sqrt(Interval::from(t, prec)))
                     * bessel_i1(two_l);
    Interval w = w_of_delta(delta, prec);
    Interval m = (big_l * w + big_l * log(big_l)
                  + Interval::from(2, prec) * bessel_i1(big_l))
                 / bessel_i1(two_l);
    return {big_l, c_hat, w, m};
}

Mth1Quantities mth1_quantities(const Rational& delta, std::int64_t n, mpfr_prec_t prec) {
    Mth1Intervals iv = mth1_intervals(delta, n, prec);
    return {iv.big_l.midpoint(), iv.c_hat.midpoint(), iv.w.midpoint(), iv.m_bound.midpoint()};
}

bool check_mth1_inequality(const Rational& delta, std::int64_t n,
                           const Rational& exact_c, mpfr_prec_t prec) {
    Mth1Intervals iv = mth1_intervals(delta, n, prec);
    Interval lhs = abs(Interval::from(exact_c, prec) / iv.c_hat
                       - cos_pi(delta / 18 + make_rational(2 * n, 3), prec));
    return certainly_le(lhs, iv.m_bound);
}

std::int64_t mth1_term_count(const Rational& delta, std::int64_t n, mpfr_prec_t prec) {
    require_mth1_hypotheses(delta, n);
    /* 20 L^2 / delta = 20 pi^2 (12n - delta) / 324 */
    Interval v = Interval::pi(prec) * Interval::pi(prec)
                 * Interval::from(Rational(20) * (Rational(12 * n) - delta) / 324, prec);
    return sqrt(v).midpoint().to_long_ceil();
}

BigReal lemma_e_bound(const BigReal& x, std::int64_t y, mpfr_prec_t prec) {
    if (x.sign() <= 0) throw std::domain_error("x must be positive");
    if (y <= 2) throw std::domain_error("y must exceed 2");
    BigReal log_y = log(BigReal::from(y, prec));
    BigReal coeff = BigReal::from(2L, prec) - BigReal::euler_gamma(prec)
                    - BigReal::from(Rational(1, 2 * y), prec);
    return x * log_y + bessel_i1(x, prec) * 2 - coeff * x;
}

Interval lemma_e_bound_interval(const Rational& x, std::int64_t y, mpfr_prec_t prec) {
    if (!(x > 0)) throw std::domain_error("x must be positive");
    if (y <= 2) throw std::domain_error("y must exceed 2");
    Interval xi = Interval::from(x, prec);
    Interval coeff = Interval::from(2, prec) - Interval::euler_gamma(prec)
                     - Interval::from(Rational(1, 2 * y), prec);
    return xi * log(Interval::from(y, prec)) + Interval::from(2, prec) * bessel_i1(xi)
           - coeff * xi;
}

int predicted_sign(const Rational& delta, std::int64_t n) {
    Rational t = reduce_mod(delta / 18 + make_rational(2 * n, 3), 2);  // angle / pi in [0, 2)
    if (t == Rational(1, 2) || t == Rational(3, 2)) return 0;
    if (t < Rational(1, 2) || t > Rational(3, 2)) return 1;
    return -1;
}

EstimateReport make_estimate_report(std::int64_t p, const Rational& delta, std::int64_t n,
                                    std::int64_t terms, const Rational& exact_coeff,
                                    mpfr_prec_t prec, ErrorBoundVariant variant) {
    Interval main = rademacher_main_interval(p, delta, n, terms, prec);
    Interval bound = theorem_error_bound_interval(p, delta, n, terms, prec, variant);
    Interval diff = abs(Interval::from(exact_coeff, prec) - main);

    EstimateReport r;
    r.p = p;
    r.delta = delta;
    r.n = n;
    r.terms = terms;
    r.exact_coeff = exact_coeff;
    r.main_term = main.midpoint();
    r.error_bound = bound.midpoint();
    r.within_bound = certainly_le(diff, bound);
    if (p == 3)
        r.predicted = predicted_sign(delta, n);
    else if (main.contains_zero())
        r.predicted = 0;
    else
        r.predicted = main.lo().sign();
    r.actual = sign_of(exact_coeff);
    return r;
}

}  // namespace borwein
