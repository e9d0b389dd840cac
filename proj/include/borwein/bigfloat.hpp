#pragma once

#include <mpfr.h>

#include <string>

#include "borwein/rational.hpp"

namespace borwein {

/* Floating-point value at an explicit working precision (bits), backed by
 * MPFR. Arithmetic rounds to nearest at the larger operand precision; all
 * transcendental evaluations are correctly rounded by MPFR. */
class BigReal {
public:
    explicit BigReal(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigReal(const BigReal& o) {
        mpfr_init2(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, o.precision());
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.precision());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal from(long x, mpfr_prec_t prec);
    static BigReal from(const Rational& q, mpfr_prec_t prec);
    static BigReal from(double x, mpfr_prec_t prec);
    static BigReal pi(mpfr_prec_t prec);
    static BigReal euler_gamma(mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long_ceil() const;
    std::string str(int digits = 30) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a);
    BigReal& operator+=(const BigReal& b) { return *this = *this + b; }
    BigReal& operator-=(const BigReal& b) { return *this = *this - b; }
    BigReal& operator*=(const BigReal& b) { return *this = *this * b; }
    BigReal& operator/=(const BigReal& b) { return *this = *this / b; }

    friend BigReal operator*(const BigReal& a, long b);
    friend BigReal operator/(const BigReal& a, long b);

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    friend BigReal exp(const BigReal& x);
    friend BigReal log(const BigReal& x);
    friend BigReal cos(const BigReal& x);
    friend BigReal sin(const BigReal& x);
    friend BigReal sqrt(const BigReal& x);
    friend BigReal abs(const BigReal& x);
    friend BigReal atan2(const BigReal& y, const BigReal& x);
    friend BigReal pow(const BigReal& x, const BigReal& y);
    friend BigReal ldexp2(const BigReal& x, long e);  // x * 2^e

private:
    mpfr_t v_;
};

/* Complex value as a pair of BigReals. Powers use the principal branch. */
struct BigComplex {
    BigReal re, im;

    explicit BigComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

    static BigComplex from_real(const BigReal& r) { return {r, BigReal(r.precision())}; }
    /* e^{i pi t}; t is reduced mod 2 before evaluation. */
    static BigComplex unit_phase_pi(const Rational& t, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return re.precision(); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    BigComplex& operator+=(const BigComplex& b) { return *this = *this + b; }
    BigComplex& operator*=(const BigComplex& b) { return *this = *this * b; }

    BigComplex conj() const { return {re, -im}; }
    BigReal abs() const;

    friend BigComplex exp(const BigComplex& z);
    /* Principal log: imaginary part = atan2(im, re). */
    friend BigComplex log(const BigComplex& z);
    /* z^a = exp(a log z), principal branch. */
    friend BigComplex pow_real(const BigComplex& z, const BigReal& a);
};

}  // namespace borwein
