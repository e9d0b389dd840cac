#pragma once

#include <cstdint>

#include "borwein/bigfloat.hpp"
#include "borwein/interval.hpp"
#include "borwein/phase.hpp"
#include "borwein/rational.hpp"

namespace borwein {

bool is_prime(std::int64_t n);

/* Dedekind sum s(h, k), exact. h is taken mod k; requires gcd(h, k) = 1.
 * dedekind_sum uses the O(log k) reciprocity descent, dedekind_sum_direct
 * the O(k) sawtooth sum folded over a common denominator. */
Rational dedekind_sum(std::int64_t h, std::int64_t k);
Rational dedekind_sum_direct(std::int64_t h, std::int64_t k);

/* The eta multiplier omega_{h,k} = e^{pi i s(h,k)} as an exact phase. */
PhaseAngle eta_multiplier_angle(std::int64_t h, std::int64_t k);

/* Exact angle of omega_{h,k}^{-1} omega_{h,k/p}, reduced into [-pi, pi).
 * Requires p | k, p prime, gcd(h, k) = 1. */
PhaseAngle phase_ratio_angle(std::int64_t h, std::int64_t k, std::int64_t p);

/* (omega_{h,k}^{-1} omega_{h,k/p})^delta = e^{i delta theta} with theta the
 * reduced angle above (principal branch: reduce first, then scale). */
BigComplex phase_ratio_power(std::int64_t h, std::int64_t k, std::int64_t p,
                             const Rational& delta, mpfr_prec_t precision_bits);

/* A_k^{(delta)}(n) = (1/k) sum over h coprime to k of
 * (omega_{h,k}^{-1} omega_{h,k/p})^delta e^{-2 pi i h n / k}.
 * The sum is conjugate-symmetric; the imaginary part is checked to be below
 * 2^{-precision_bits/2} and the returned value carries the real part only. */
BigComplex kloosterman_a(std::int64_t p, std::int64_t k, const Rational& delta,
                         std::int64_t n, mpfr_prec_t precision_bits);

/* Rigorous enclosure of Re A_k^{(delta)}(n) (a plain cosine sum). */
Interval kloosterman_a_interval(std::int64_t p, std::int64_t k, const Rational& delta,
                                std::int64_t n, mpfr_prec_t precision_bits);

/* Inputs of the modular transformation: h/k with the associated inverse
 * residues h' and h_d'. */
struct TransformContext {
    std::int64_t h = 0;
    std::int64_t k = 1;
    std::int64_t p = 2;
    std::int64_t d = 1;        // gcd(p, k)
    std::int64_t h_prime = 0;  // h h' = 1 (mod k)
    std::int64_t h_d_prime = 0;  // (h p / d) h_d' = 1 (mod k/d)

    static TransformContext create(std::int64_t h, std::int64_t k, std::int64_t p);
};

/* Evaluates both sides of the G_p transformation at the point
 * q = exp(2 pi i h / k - 2 pi z / k^2) and returns |LHS - RHS|.
 * Products are truncated once factors deviate from 1 by less than
 * 2^{-precision_bits-8}, but never before `order` factors. The 1/z and z
 * exponents use the forms pi delta (d^2-p)/(12 p z) and
 * (p-1) pi delta z/(12 k^2), which reduce to the p = 3 constants. */
BigReal verify_modular_transform(const TransformContext& ctx, const Rational& delta,
                                 const BigComplex& z, std::int64_t order,
                                 mpfr_prec_t precision_bits);

}  // namespace borwein
