#include "borwein/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace borwein {

namespace {
mpfr_prec_t join(const Interval& a, const Interval& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace

Interval::Interval(BigReal lo, BigReal hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw std::logic_error("interval endpoints out of order");
}

Interval Interval::from(const Rational& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_.raw(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.raw(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from(long x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_.raw(), x, MPFR_RNDD);
    mpfr_set_si(r.hi_.raw(), x, MPFR_RNDU);
    return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_.raw(), MPFR_RNDD);
    mpfr_const_pi(r.hi_.raw(), MPFR_RNDU);
    return r;
}

Interval Interval::euler_gamma(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_euler(r.lo_.raw(), MPFR_RNDD);
    mpfr_const_euler(r.hi_.raw(), MPFR_RNDU);
    return r;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(join(a, b));
    mpfr_add(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
    mpfr_add(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(join(a, b));
    mpfr_sub(r.lo_.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
    mpfr_sub(r.hi_.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    mpfr_prec_t prec = join(a, b);
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    const mpfr_srcptr xs[2] = {a.lo_.raw(), a.hi_.raw()};
    const mpfr_srcptr ys[2] = {b.lo_.raw(), b.hi_.raw()};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_.raw()) < 0) mpfr_set(r.lo_.raw(), t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_.raw()) > 0) mpfr_set(r.hi_.raw(), t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division through zero");
    mpfr_prec_t prec = join(a, b);
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    const mpfr_srcptr xs[2] = {a.lo_.raw(), a.hi_.raw()};
    const mpfr_srcptr ys[2] = {b.lo_.raw(), b.hi_.raw()};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_div(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_.raw()) < 0) mpfr_set(r.lo_.raw(), t, MPFR_RNDD);
            mpfr_div(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_.raw()) > 0) mpfr_set(r.hi_.raw(), t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval operator-(const Interval& a) {
    Interval r(a.precision());
    mpfr_neg(r.lo_.raw(), a.hi_.raw(), MPFR_RNDD);
    mpfr_neg(r.hi_.raw(), a.lo_.raw(), MPFR_RNDU);
    return r;
}

Interval abs(const Interval& a) {
    Interval r(a.precision());
    if (a.lo_.sign() >= 0) return a;
    if (a.hi_.sign() <= 0) return -a;
    mpfr_set_zero(r.lo_.raw(), 1);
    mpfr_neg(r.hi_.raw(), a.lo_.raw(), MPFR_RNDU);
    if (mpfr_cmp(a.hi_.raw(), r.hi_.raw()) > 0) mpfr_set(r.hi_.raw(), a.hi_.raw(), MPFR_RNDU);
    return r;
}

Interval sqrt(const Interval& a) {
    if (a.lo_.sign() < 0) throw std::domain_error("sqrt of interval below zero");
    Interval r(a.precision());
    mpfr_sqrt(r.lo_.raw(), a.lo_.raw(), MPFR_RNDD);
    mpfr_sqrt(r.hi_.raw(), a.hi_.raw(), MPFR_RNDU);
    return r;
}

Interval exp(const Interval& a) {
    Interval r(a.precision());
    mpfr_exp(r.lo_.raw(), a.lo_.raw(), MPFR_RNDD);
    mpfr_exp(r.hi_.raw(), a.hi_.raw(), MPFR_RNDU);
    return r;
}

Interval log(const Interval& a) {
    if (a.lo_.sign() <= 0) throw std::domain_error("log of interval reaching zero");
    Interval r(a.precision());
    mpfr_log(r.lo_.raw(), a.lo_.raw(), MPFR_RNDD);
    mpfr_log(r.hi_.raw(), a.hi_.raw(), MPFR_RNDU);
    return r;
}

Interval pow_rational(const Interval& a, const Rational& e) {
    if (a.lo_.sign() <= 0) throw std::domain_error("pow of interval reaching zero");
    if (e == 0) return Interval::from(1, a.precision());
    Interval l = log(a);
    return exp(l * Interval::from(e, a.precision()));
}

Interval cos_pi(const Rational& t, mpfr_prec_t prec) {
    Rational red = reduce_mod(t, 2);  // [0, 2)
    if (red == 0) return Interval::from(1, prec);
    if (red == 1) return Interval::from(-1, prec);
    if (red == Rational(1, 2) || red == Rational(3, 2)) return Interval::from(0, prec);

    Interval arg = Interval::pi(prec) * Interval::from(red, prec);
    Interval r(prec);
    mpfr_t c1, c2;
    mpfr_init2(c1, prec);
    mpfr_init2(c2, prec);
    mpfr_cos(c1, arg.lo().raw(), MPFR_RNDD);
    mpfr_cos(c2, arg.hi().raw(), MPFR_RNDD);
    mpfr_min(r.lo_.raw(), c1, c2, MPFR_RNDD);
    mpfr_cos(c1, arg.lo().raw(), MPFR_RNDU);
    mpfr_cos(c2, arg.hi().raw(), MPFR_RNDU);
    mpfr_max(r.hi_.raw(), c1, c2, MPFR_RNDU);
    mpfr_clear(c1);
    mpfr_clear(c2);

    /* The enclosure [pi*red] is a few ulps wide; it can only straddle an
     * extremum of cos when red is within ~2^-prec of an integer. Widen to
     * the extremal value in that case so the endpoint trick stays valid. */
    Rational eps(Integer(1), Integer(1) << static_cast<unsigned>(prec / 2));
    for (int k = 0; k <= 2; ++k) {
        Rational d = abs(red - k);
        if (d != 0 && d < eps) {
            BigReal extremum = BigReal::from(k == 1 ? -1L : 1L, prec);
            if (extremum < r.lo_) r.lo_ = extremum;
            if (extremum > r.hi_) r.hi_ = extremum;
        }
    }
    if (mpfr_cmp_si(r.hi_.raw(), 1) > 0) mpfr_set_si(r.hi_.raw(), 1, MPFR_RNDU);
    if (mpfr_cmp_si(r.lo_.raw(), -1) < 0) mpfr_set_si(r.lo_.raw(), -1, MPFR_RNDD);
    return r;
}

}  // namespace borwein
