#include "borwein/bigfloat.hpp"

#include <algorithm>
#include <cmath>

namespace borwein {

namespace {
mpfr_prec_t join(const BigReal& a, const BigReal& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace

BigReal BigReal::from(long x, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

BigReal BigReal::from(const Rational& q, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::from(double x, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

BigReal BigReal::pi(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::euler_gamma(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
}

long BigReal::to_long_ceil() const {
    mpfr_t t;
    mpfr_init2(t, precision());
    mpfr_ceil(t, v_);
    long out = mpfr_get_si(t, MPFR_RNDN);
    mpfr_clear(t);
    return out;
}

std::string BigReal::str(int digits) const {
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    std::string out = (neg ? "-" : "");
    out += "0." + d + "e" + std::to_string(e);
    return out;
}

#define BORWEIN_BINOP(name, fn)                                    \
    BigReal name(const BigReal& a, const BigReal& b) {             \
        BigReal r(join(a, b));                                     \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                           \
        return r;                                                  \
    }

BORWEIN_BINOP(operator+, mpfr_add)
BORWEIN_BINOP(operator-, mpfr_sub)
BORWEIN_BINOP(operator*, mpfr_mul)
BORWEIN_BINOP(operator/, mpfr_div)
BORWEIN_BINOP(atan2, mpfr_atan2)
BORWEIN_BINOP(pow, mpfr_pow)
#undef BORWEIN_BINOP

BigReal operator-(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, long b) {
    BigReal r(a.precision());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, long b) {
    BigReal r(a.precision());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

#define BORWEIN_UNOP(name, fn)                  \
    BigReal name(const BigReal& x) {            \
        BigReal r(x.precision());               \
        fn(r.v_, x.v_, MPFR_RNDN);              \
        return r;                               \
    }

BORWEIN_UNOP(exp, mpfr_exp)
BORWEIN_UNOP(log, mpfr_log)
BORWEIN_UNOP(cos, mpfr_cos)
BORWEIN_UNOP(sin, mpfr_sin)
BORWEIN_UNOP(sqrt, mpfr_sqrt)
BORWEIN_UNOP(abs, mpfr_abs)
#undef BORWEIN_UNOP

BigReal ldexp2(const BigReal& x, long e) {
    BigReal r(x.precision());
    mpfr_mul_2si(r.v_, x.raw(), e, MPFR_RNDN);
    return r;
}

BigComplex BigComplex::unit_phase_pi(const Rational& t, mpfr_prec_t prec) {
    Rational red = reduce_mod2_symmetric(t);
    BigReal angle = BigReal::pi(prec) * BigReal::from(red, prec);
    return {cos(angle), sin(angle)};
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

BigReal BigComplex::abs() const {
    BigReal r(precision());
    mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
    return r;
}

BigComplex exp(const BigComplex& z) {
    BigReal m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

BigComplex log(const BigComplex& z) {
    return {log(z.abs()), atan2(z.im, z.re)};
}

BigComplex pow_real(const BigComplex& z, const BigReal& a) {
    BigComplex l = log(z);
    return exp(BigComplex{a * l.re, a * l.im});
}

}  // namespace borwein
