#include "borwein/modular.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace borwein {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::int64_t canonical_mod(std::int64_t h, std::int64_t k) {
    std::int64_t r = h % k;
    return r < 0 ? r + k : r;
}

void require_coprime(std::int64_t h, std::int64_t k) {
    if (k <= 0) throw std::domain_error("k must be positive");
    if (std::gcd(h, k) != 1) throw std::domain_error("gcd(h, k) must be 1");
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    Integer inv, aa(canonical_mod(a, m)), mm(m);
    if (mpz_invert(inv.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()) == 0)
        throw std::domain_error("residue not invertible");
    return inv.get_si();
}

}  // namespace

Rational dedekind_sum_direct(std::int64_t h, std::int64_t k) {
    require_coprime(h, k);
    h = canonical_mod(h, k);
    /* sum over 1 <= j < k of (2j - k)(2 (jh mod k) - k) / (4 k^2);
     * the sawtooth values never hit an integer because gcd(h, k) = 1. */
    if (k > 1500000) throw std::domain_error("k too large for the direct sum");
    std::int64_t acc = 0;
    std::int64_t r = 0;
    for (std::int64_t j = 1; j < k; ++j) {
        r += h;
        if (r >= k) r -= k;
        acc += (2 * j - k) * (2 * r - k);
    }
    Rational s(Integer(acc), Integer(4) * k * k);
    s.canonicalize();
    return s;
}

Rational dedekind_sum(std::int64_t h, std::int64_t k) {
    require_coprime(h, k);
    h = canonical_mod(h, k);
    /* Reciprocity descent:
     * s(h,k) = -1/4 + (h^2 + k^2 + 1)/(12 h k) - s(k mod h, h). */
    Rational s = 0;
    int sgn = 1;
    while (h > 0) {
        Rational term(Integer(h) * h + Integer(k) * k + 1, Integer(12) * h * k);
        term.canonicalize();
        term -= Rational(1, 4);
        if (sgn > 0)
            s += term;
        else
            s -= term;
        std::int64_t t = k % h;
        k = h;
        h = t;
        sgn = -sgn;
    }
    return s;
}

PhaseAngle eta_multiplier_angle(std::int64_t h, std::int64_t k) {
    return PhaseAngle(dedekind_sum(h, k));
}

PhaseAngle phase_ratio_angle(std::int64_t h, std::int64_t k, std::int64_t p) {
    if (!is_prime(p)) throw std::domain_error("p must be prime");
    if (k % p != 0) throw std::domain_error("p must divide k");
    require_coprime(h, k);
    return PhaseAngle(dedekind_sum(h, k / p) - dedekind_sum(h, k));
}

BigComplex phase_ratio_power(std::int64_t h, std::int64_t k, std::int64_t p,
                             const Rational& delta, mpfr_prec_t precision_bits) {
    PhaseAngle angle = phase_ratio_angle(h, k, p);
    return BigComplex::unit_phase_pi(delta * angle.theta_over_pi(), precision_bits);
}

BigComplex kloosterman_a(std::int64_t p, std::int64_t k, const Rational& delta,
                         std::int64_t n, mpfr_prec_t precision_bits) {
    if (!is_prime(p)) throw std::domain_error("p must be prime");
    if (k <= 0 || k % p != 0) throw std::domain_error("p must divide k");
    BigComplex sum(precision_bits);
    for (std::int64_t h = 0; h < k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        Rational u = delta * phase_ratio_angle(h, k, p).theta_over_pi()
                     - make_rational(2 * h * n, k);
        sum += BigComplex::unit_phase_pi(u, precision_bits);
    }
    BigReal re = sum.re / k;
    BigReal im = sum.im / k;
    BigReal floor = ldexp2(BigReal::from(1L, precision_bits),
                           -static_cast<long>(precision_bits / 2));
    if (abs(im) > floor)
        throw std::logic_error("Kloosterman sum has an unexpected imaginary part");
    return {re, BigReal(precision_bits)};
}

Interval kloosterman_a_interval(std::int64_t p, std::int64_t k, const Rational& delta,
                                std::int64_t n, mpfr_prec_t precision_bits) {
    if (!is_prime(p)) throw std::domain_error("p must be prime");
    if (k <= 0 || k % p != 0) throw std::domain_error("p must divide k");

    /* The sum only depends on n mod k; memoize per residue class. */
    static std::map<std::tuple<std::int64_t, std::int64_t, Rational, std::int64_t, long>,
                    Interval>
        cache;
    static std::mutex mutex;
    auto key = std::make_tuple(p, k, delta, canonical_mod(n, k),
                               static_cast<long>(precision_bits));
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    Interval sum(precision_bits);
    for (std::int64_t h = 0; h < k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        Rational u = delta * phase_ratio_angle(h, k, p).theta_over_pi()
                     - make_rational(2 * h * n, k);
        sum += cos_pi(u, precision_bits);
    }
    Interval out = sum / Interval::from(k, precision_bits);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, out);
    return out;
}

TransformContext TransformContext::create(std::int64_t h, std::int64_t k, std::int64_t p) {
    if (!is_prime(p)) throw std::domain_error("p must be prime");
    if (k <= 0) throw std::domain_error("k must be positive");
    h = canonical_mod(h, k);
    require_coprime(h, k);
    TransformContext ctx;
    ctx.h = h;
    ctx.k = k;
    ctx.p = p;
    ctx.d = std::gcd(p, k);
    ctx.h_prime = mod_inverse(h, k);
    ctx.h_d_prime = mod_inverse(h * (p / ctx.d), k / ctx.d);
    return ctx;
}

namespace {

/* f(t) = prod_{n>=1} 1/(1 - t^n) for complex |t| < 1; stops once the factor
 * deviation |t|^n drops below 2^{-prec-8}, but not before min_factors. */
BigComplex euler_f_complex(const BigComplex& t, std::int64_t min_factors,
                           mpfr_prec_t prec) {
    BigReal mod = t.abs();
    if (!(mod < BigReal::from(1L, prec)))
        throw std::domain_error("product nome must satisfy |t| < 1");
    BigReal threshold = ldexp2(BigReal::from(1L, prec), -static_cast<long>(prec) - 8);
    BigComplex one = BigComplex::from_real(BigReal::from(1L, prec));
    BigComplex acc = one;
    BigComplex tn = one;
    BigReal tn_mod = BigReal::from(1L, prec);
    const std::int64_t hard_cap = 2000000;
    for (std::int64_t n = 1; n <= hard_cap; ++n) {
        tn *= t;
        tn_mod *= mod;
        acc = acc * (one - tn);
        if (n >= min_factors && tn_mod < threshold) return one / acc;
    }
    throw std::domain_error("nome too close to the unit circle");
}

BigComplex scale(const BigReal& c, const BigComplex& z) { return {c * z.re, c * z.im}; }

}  // namespace

BigReal verify_modular_transform(const TransformContext& ctx, const Rational& delta,
                                 const BigComplex& z, std::int64_t order,
                                 mpfr_prec_t prec) {
    if (z.re.sign() <= 0) throw std::domain_error("Re(z) must be positive");
    const std::int64_t h = ctx.h, k = ctx.k, p = ctx.p, d = ctx.d;
    BigReal two_pi = BigReal::pi(prec) * 2;
    BigReal delta_r = BigReal::from(delta, prec);

    /* Left side: G_p(q)^delta at q = exp(2 pi i h/k - 2 pi z / k^2). */
    BigComplex zk = scale(two_pi / (k * k), z);
    BigComplex w{-zk.re, two_pi * BigReal::from(make_rational(h, k), prec) - zk.im};
    BigComplex q = exp(w);
    BigComplex qp = BigComplex::from_real(BigReal::from(1L, prec));
    for (std::int64_t i = 0; i < p; ++i) qp *= q;
    BigComplex g = euler_f_complex(qp, order, prec) / euler_f_complex(q, order, prec);
    BigComplex lhs = pow_real(g, delta_r);

    /* Right side. */
    BigReal root = pow(BigReal::from(make_rational(p, d), prec), delta_r / 2);
    Rational ratio_t = dedekind_sum(h * (p / d), k / d) - dedekind_sum(h, k);
    PhaseAngle ratio(ratio_t);
    BigComplex phase = BigComplex::unit_phase_pi(delta * ratio.theta_over_pi(), prec);

    BigComplex z_inv = BigComplex::from_real(BigReal::from(1L, prec)) / z;
    BigReal c_over_z = BigReal::pi(prec) * BigReal::from(delta * (d * d - p), prec)
                       / BigReal::from(12 * p, prec);
    BigReal c_z = BigReal::pi(prec) * BigReal::from(delta * (p - 1), prec)
                  / BigReal::from(12 * k * k, prec);
    BigComplex exp_term = exp(scale(c_over_z, z_inv) - scale(c_z, z));

    BigComplex s1 = scale(two_pi * BigReal::from(make_rational(d * d, p), prec), z_inv);
    BigComplex w1{-s1.re, two_pi * BigReal::from(make_rational(d * ctx.h_d_prime, k), prec) - s1.im};
    BigComplex s2 = scale(two_pi, z_inv);
    BigComplex w2{-s2.re, two_pi * BigReal::from(make_rational(ctx.h_prime, k), prec) - s2.im};
    BigComplex g_hat = euler_f_complex(exp(w1), order, prec) / euler_f_complex(exp(w2), order, prec);

    BigComplex rhs = scale(root, phase * exp_term * pow_real(g_hat, delta_r));
    return (lhs - rhs).abs();
}

}  // namespace borwein
