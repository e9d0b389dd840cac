#pragma once

#include "borwein/bigfloat.hpp"

namespace borwein {

/* Closed interval [lo, hi] with outward-rounded endpoints. Every operation
 * encloses the exact result, so `certainly_le(a, b)` verdicts are rigorous
 * at the working precision. Only the functions this project needs are
 * provided; cos is exposed solely for exact rational multiples of pi, which
 * is the only form the checks require. */
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 128) : lo_(prec), hi_(prec) {}
    Interval(BigReal lo, BigReal hi);

    static Interval from(const Rational& q, mpfr_prec_t prec);
    static Interval from(long x, mpfr_prec_t prec);
    static Interval pi(mpfr_prec_t prec);
    static Interval euler_gamma(mpfr_prec_t prec);

    const BigReal& lo() const { return lo_; }
    const BigReal& hi() const { return hi_; }
    mpfr_prec_t precision() const { return lo_.precision(); }
    BigReal midpoint() const { return (lo_ + hi_) / 2; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);
    Interval& operator+=(const Interval& b) { return *this = *this + b; }

    friend Interval abs(const Interval& a);
    friend Interval sqrt(const Interval& a);   // requires lo >= 0
    friend Interval exp(const Interval& a);
    friend Interval log(const Interval& a);    // requires lo > 0

    /* a^e = exp(e log a) for rational e; requires lo > 0. */
    friend Interval pow_rational(const Interval& a, const Rational& e);

    friend Interval cos_pi(const Rational& t, mpfr_prec_t prec);

    /* sup(a) <= inf(b): the exact values certainly satisfy a <= b. */
    friend bool certainly_le(const Interval& a, const Interval& b) {
        return a.hi_ <= b.lo_;
    }
    friend bool certainly_lt(const Interval& a, const Interval& b) {
        return a.hi_ < b.lo_;
    }

private:
    BigReal lo_, hi_;
};

/* Enclosure of cos(pi t) for an exact rational t. Handles the exact zeros
 * (t = 1/2 mod 1) and extrema (t integral) symbolically, so sign decisions
 * near the axes never depend on float rounding. */
Interval cos_pi(const Rational& t, mpfr_prec_t prec);

}  // namespace borwein
