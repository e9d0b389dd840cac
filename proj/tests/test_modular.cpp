#include <doctest.h>

#include <numeric>

#include "borwein/modular.hpp"
#include "oracles.hpp"

using namespace borwein;

TEST_CASE("dedekind sum examples and oracle agreement") {
    CHECK(dedekind_sum(0, 1) == 0);
    CHECK(dedekind_sum(1, 2) == 0);
    CHECK(dedekind_sum(1, 3) == Rational(1, 18));
    CHECK(dedekind_sum(2, 3) == Rational(-1, 18));
    CHECK_THROWS_AS(dedekind_sum(2, 4), std::domain_error);
    CHECK_THROWS_AS(dedekind_sum_direct(3, 9), std::domain_error);

    for (std::int64_t k = 1; k <= 80; ++k)
        for (std::int64_t h = 0; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            Rational lit = oracle::dedekind_literal(h, k);
            CHECK(dedekind_sum_direct(h, k) == lit);
            CHECK(dedekind_sum(h, k) == lit);
        }
}

TEST_CASE("dedekind reciprocity and negation symmetry") {
    for (std::int64_t k = 2; k <= 120; ++k)
        for (std::int64_t h = 1; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            Rational lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
            Rational rhs = Rational(-1, 4)
                           + (make_rational(h, k) + make_rational(k, h)
                              + make_rational(1, h * k)) / 12;
            CHECK(lhs == rhs);
            CHECK(dedekind_sum(k - h, k) == -dedekind_sum(h, k));
        }
}

TEST_CASE("fast and direct paths agree") {
    for (std::int64_t k = 1; k <= 400; ++k)
        for (std::int64_t h = 1; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            REQUIRE(dedekind_sum(h, k) == dedekind_sum_direct(h, k));
        }
    /* periodicity in h */
    CHECK(dedekind_sum(5 + 7, 7) == dedekind_sum(5, 7));
    CHECK(dedekind_sum(-2, 7) == dedekind_sum(5, 7));
}

TEST_CASE("eta multiplier angles") {
    CHECK(eta_multiplier_angle(0, 1).theta_over_pi() == 0);
    CHECK(eta_multiplier_angle(1, 3).theta_over_pi() == Rational(1, 18));
    CHECK(eta_multiplier_angle(2, 3).theta_over_pi() == Rational(-1, 18));
    /* reduction into [-1, 1) */
    PhaseAngle big(Rational(7, 2));
    CHECK(big.theta_over_pi() == Rational(-1, 2));
    PhaseAngle edge(Rational(1));
    CHECK(edge.theta_over_pi() == Rational(-1));
}

TEST_CASE("phase ratio powers") {
    const mpfr_prec_t prec = 128;
    BigReal tol = ldexp2(BigReal::from(1L, prec), -100);

    SUBCASE("delta 0 gives 1") {
        BigComplex u = phase_ratio_power(1, 6, 3, 0, prec);
        CHECK(abs(u.re - BigReal::from(1L, prec)) < tol);
        CHECK(abs(u.im) < tol);
    }
    SUBCASE("h=1 k=3 p=3 angle is -pi/18") {
        CHECK(phase_ratio_angle(1, 3, 3).theta_over_pi() == Rational(-1, 18));
    }
    SUBCASE("integer delta equals repeated multiplication") {
        BigComplex base = phase_ratio_power(1, 6, 3, 1, prec);
        BigComplex five = phase_ratio_power(1, 6, 3, 5, prec);
        BigComplex acc = base;
        for (int i = 1; i < 5; ++i) acc *= base;
        CHECK((five - acc).abs() < tol);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(phase_ratio_angle(1, 5, 3), std::domain_error);  // p does not divide k
        CHECK_THROWS_AS(phase_ratio_angle(1, 6, 4), std::domain_error);  // p not prime
    }
}

TEST_CASE("Kloosterman-type sums") {
    const mpfr_prec_t prec = 128;
    BigReal tol = ldexp2(BigReal::from(1L, prec), -100);

    SUBCASE("A_3 collapses to a cosine") {
        for (Rational delta : {Rational(1), Rational(3, 2), Rational(3)}) {
            for (std::int64_t n = 0; n <= 6; ++n) {
                BigComplex a = kloosterman_a(3, 3, delta, n, prec);
                Rational t = delta / 18 + make_rational(2 * n, 3);
                BigReal expect = BigComplex::unit_phase_pi(t, prec).re
                                 * BigReal::from(Rational(2, 3), prec);
                CHECK(abs(a.re - expect) < tol);
                CHECK(a.im.is_zero());
            }
        }
    }
    SUBCASE("A_p^(0)(0) = phi(p)/p") {
        for (std::int64_t p : {2, 3, 5, 7}) {
            BigComplex a = kloosterman_a(p, p, 0, 0, prec);
            CHECK(abs(a.re - BigReal::from(make_rational(p - 1, p), prec)) < tol);
        }
    }
    SUBCASE("A_6 for p=3 against a 2-term brute force") {
        for (std::int64_t n = 0; n <= 5; ++n) {
            BigComplex a = kloosterman_a(3, 6, 1, n, prec);
            BigComplex sum(prec);
            for (std::int64_t h : {1L, 5L}) {
                Rational t = dedekind_sum(h, 2) - dedekind_sum(h, 6)
                             - make_rational(2 * h * n, 6);
                sum += BigComplex::unit_phase_pi(t, prec);
            }
            CHECK(abs(a.re - sum.re / 6).is_zero());
            CHECK(abs(sum.im / 6) < tol);
        }
    }
    SUBCASE("periodicity in n") {
        for (std::int64_t n = 0; n < 6; ++n) {
            BigComplex a = kloosterman_a(3, 6, Rational(1, 2), n, prec);
            BigComplex b = kloosterman_a(3, 6, Rational(1, 2), n + 6, prec);
            CHECK(a.re == b.re);  // identical reduced angles, bit-identical value
        }
    }
    SUBCASE("interval version encloses the point value") {
        Interval iv = kloosterman_a_interval(3, 6, Rational(1, 2), 4, prec);
        BigComplex pt = kloosterman_a(3, 6, Rational(1, 2), 4, prec);
        CHECK(iv.lo() <= pt.re);
        CHECK(pt.re <= iv.hi());
    }
}

TEST_CASE("transform context") {
    auto ctx = TransformContext::create(5, 12, 3);
    CHECK(ctx.d == 3);
    CHECK((ctx.h * ctx.h_prime) % ctx.k == 1);
    CHECK((ctx.h * (ctx.p / ctx.d) * ctx.h_d_prime) % (ctx.k / ctx.d) == 1);
    CHECK_THROWS_AS(TransformContext::create(3, 12, 3), std::domain_error);
}

TEST_CASE("modular transformation two-sided check") {
    const mpfr_prec_t prec = 128;
    BigComplex z = BigComplex::from_real(BigReal::from(1L, prec));
    BigReal tol = BigReal::from(Rational(1, Integer("100000000000000000000")), prec);

    SUBCASE("p=3 h=0 k=1 delta=1") {
        auto ctx = TransformContext::create(0, 1, 3);
        BigReal res = verify_modular_transform(ctx, 1, z, 60, prec);
        CHECK(res < tol);
    }
    SUBCASE("delta=0 is trivially exact") {
        auto ctx = TransformContext::create(0, 1, 3);
        BigReal res = verify_modular_transform(ctx, 0, z, 60, prec);
        CHECK(res < ldexp2(BigReal::from(1L, prec), -110));
    }
    SUBCASE("p=2 h=1 k=2 delta=2") {
        auto ctx = TransformContext::create(1, 2, 2);
        BigReal res = verify_modular_transform(ctx, 2, z, 60, prec);
        CHECK(res < tol);
    }
    SUBCASE("refinement ladder is monotone") {
        auto ctx = TransformContext::create(1, 3, 3);
        BigReal r1 = verify_modular_transform(ctx, Rational(3, 2), z, 10,
                                              48);
        BigReal r2 = verify_modular_transform(
            ctx, Rational(3, 2), BigComplex::from_real(BigReal::from(1L, 80)), 30, 80);
        BigReal r3 = verify_modular_transform(
            ctx, Rational(3, 2), BigComplex::from_real(BigReal::from(1L, 128)), 60, 128);
        CHECK(r2 < r1);
        CHECK(r3 < r2);
    }
    SUBCASE("nonpositive real part is rejected") {
        auto ctx = TransformContext::create(0, 1, 3);
        BigComplex bad{BigReal::from(-1L, prec), BigReal(prec)};
        CHECK_THROWS_AS(verify_modular_transform(ctx, 1, bad, 60, prec), std::domain_error);
    }
}
