#pragma once

#include "borwein/bigfloat.hpp"
#include "borwein/rational.hpp"

namespace borwein {

/* Exact angle theta = pi * t with t rational, reduced into [-pi, pi),
 * i.e. t in [-1, 1). Built from Dedekind sums; never touches floats, so
 * branch choices are deterministic. */
class PhaseAngle {
public:
    PhaseAngle() : t_(0) {}
    explicit PhaseAngle(const Rational& theta_over_pi)
        : t_(reduce_mod2_symmetric(theta_over_pi)) {}

    const Rational& theta_over_pi() const { return t_; }

    PhaseAngle operator-() const { return PhaseAngle(-t_); }
    friend PhaseAngle operator+(const PhaseAngle& a, const PhaseAngle& b) {
        return PhaseAngle(a.t_ + b.t_);
    }

    /* e^{i theta} at the requested precision. */
    BigComplex unit(mpfr_prec_t prec) const {
        return BigComplex::unit_phase_pi(t_, prec);
    }

    bool operator==(const PhaseAngle&) const = default;

private:
    Rational t_;
};

}  // namespace borwein
