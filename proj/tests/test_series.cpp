#include <doctest.h>

#include <random>

#include "borwein/series.hpp"
#include "oracles.hpp"

using namespace borwein;

namespace {

TruncatedSeries from_poly(const oracle::Poly& p) {
    return TruncatedSeries::from_coeffs(p);
}

/* deterministic series with small rational coefficients, constant term 1 */
TruncatedSeries random_unit_series(std::int64_t order, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = make_rational(num(rng), den(rng));
    return TruncatedSeries::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("multiplication basics") {
    TruncatedSeries a = TruncatedSeries::from_coeffs({1, 1, 0});   // 1+q
    TruncatedSeries b = TruncatedSeries::from_coeffs({1, -1, 0});  // 1-q
    TruncatedSeries prod = a * b;
    CHECK(prod[0] == 1);
    CHECK(prod[1] == 0);
    CHECK(prod[2] == -1);

    auto r = random_unit_series(16, 7);
    CHECK((r * r.inverse()) == TruncatedSeries::one(16));
}

TEST_CASE("orders truncate to the minimum") {
    auto a = random_unit_series(10, 1);
    auto b = random_unit_series(6, 2);
    CHECK((a * b).order() == 6);
    CHECK((a + b).order() == 6);
    CHECK((a - b).order() == 6);
}

TEST_CASE("partition series times pentagonal series is 1") {
    auto parts = oracle::partition_counts(50);
    std::vector<Rational> c;
    for (const auto& v : parts) c.emplace_back(v);
    TruncatedSeries p = TruncatedSeries::from_coeffs(c);
    TruncatedSeries eta = expand_product({{{1, 1}}}, 50);
    CHECK((p * eta) == TruncatedSeries::one(50));
}

TEST_CASE("inverse") {
    TruncatedSeries g = TruncatedSeries::from_coeffs({1, -1, 0, 0, 0});  // 1-q
    TruncatedSeries inv = g.inverse();
    for (std::int64_t n = 0; n <= 4; ++n) CHECK(inv[n] == 1);

    auto a = random_unit_series(20, 3);
    CHECK(a.inverse().inverse() == a);

    TruncatedSeries eta10 = expand_product({{{1, 1}}}, 10);
    TruncatedSeries f = eta10.inverse();
    const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (std::int64_t n = 0; n <= 10; ++n) CHECK(f[n] == expected[n]);

    TruncatedSeries zero_const = TruncatedSeries::from_coeffs({0, 1});
    CHECK_THROWS_AS(zero_const.inverse(), std::domain_error);
}

TEST_CASE("rational powers") {
    auto a = random_unit_series(14, 11);
    CHECK(a.pow(0) == TruncatedSeries::one(14));
    CHECK(a.pow(2) == a * a);
    CHECK(a.pow(3) == a * a * a);

    TruncatedSeries one_minus_q = TruncatedSeries::from_coeffs({1, -1, 0, 0, 0, 0, 0, 0});
    TruncatedSeries half = one_minus_q.pow(Rational(1, 2));
    CHECK(half[0] == 1);
    CHECK(half[1] == Rational(-1, 2));
    CHECK(half[2] == Rational(-1, 8));
    CHECK(half[3] == Rational(-1, 16));
    for (std::int64_t n = 0; n <= 7; ++n)
        CHECK(half[n] == oracle::binomial(Rational(1, 2), n) * ((n % 2 == 0) ? 1 : -1));

    TruncatedSeries bad = TruncatedSeries::from_coeffs({2, 1});
    CHECK_THROWS_AS(bad.pow(Rational(1, 2)), std::domain_error);
}

TEST_CASE("power laws") {
    auto a = random_unit_series(12, 23);
    Rational d1(2, 3), d2(-1, 2);
    CHECK(a.pow(d1) * a.pow(d2) == a.pow(d1 + d2));
    CHECK(a.pow(d1) * a.pow(-d1) == TruncatedSeries::one(12));
}

TEST_CASE("expand_product matches brute force") {
    TruncatedSeries eta = expand_product({{{1, 1}}}, 7);
    const long expected[] = {1, -1, -1, 0, 0, 1, 0, 1};
    for (std::int64_t n = 0; n <= 7; ++n) CHECK(eta[n] == expected[n]);
    CHECK(eta == from_poly(oracle::finite_eta_product(1, 1, 7)));

    CHECK(expand_product({{{1, 1}, {1, -1}}}, 30) == TruncatedSeries::one(30));

    TruncatedSeries cube = expand_product({{{1, 3}}}, 9);
    CHECK(cube == from_poly(oracle::finite_eta_product(1, 3, 9)));
    CHECK(cube[0] == 1);
    CHECK(cube[1] == -3);
    CHECK(cube[3] == 5);
    CHECK(cube[6] == -7);
    CHECK(cube[9] == 0);

    for (std::int64_t m : {1, 2, 5}) {
        for (long e : {-2L, -1L, 1L, 2L}) {
            CHECK(expand_product({{{m, Rational(e)}}}, 60)
                  == from_poly(oracle::finite_eta_product(m, e, 60)));
        }
    }
    /* larger order, as the oracle-equivalence property demands */
    CHECK(expand_product({{{1, 2}}}, 200) == from_poly(oracle::finite_eta_product(1, 2, 200)));
    CHECK(expand_product({{{3, -1}}}, 200)
          == from_poly(oracle::finite_eta_product(3, -1, 200)));
}

TEST_CASE("borwein coefficients") {
    TruncatedSeries g31 = borwein_coefficients(3, 1, 6);
    const long expected[] = {1, -1, -1, 1, -1, 0, 2};
    for (std::int64_t n = 0; n <= 6; ++n) CHECK(g31[n] == expected[n]);
    CHECK(g31 == from_poly(oracle::finite_borwein_product(3, 1, 6)));

    CHECK(borwein_coefficients(5, 0, 5) == TruncatedSeries::one(5));
    CHECK_THROWS_AS(borwein_coefficients(3, -1, 5), std::domain_error);
    CHECK_THROWS_AS(borwein_coefficients(1, 1, 5), std::domain_error);

    TruncatedSeries g33 = borwein_coefficients(3, 3, 40);
    for (std::int64_t n = 2; n <= 40; n += 3) CHECK(g33[n] == 0);
    CHECK(g33 == from_poly(oracle::finite_borwein_product(3, 3, 40)));
}

TEST_CASE("rational-exponent consistency") {
    for (auto [num, den] : {std::pair<long, long>{1, 2}, {3, 2}, {1, 5}}) {
        TruncatedSeries frac = borwein_coefficients(3, make_rational(num, den), 40);
        TruncatedSeries whole = borwein_coefficients(3, Rational(num), 40);
        CHECK(frac.pow(Rational(den)) == whole);
    }
}

TEST_CASE("partition numbers") {
    TruncatedSeries p = partition_numbers(200);
    CHECK(p[0] == 1);
    const long small[] = {1, 1, 2, 3, 5, 7, 11};
    for (std::int64_t n = 0; n <= 6; ++n) CHECK(p[n] == small[n]);
    auto counted = oracle::partition_counts(200);
    for (std::int64_t n = 0; n <= 200; ++n) CHECK(p[n] == Rational(counted[n]));
    CHECK(p * expand_product({{{1, 1}}}, 200) == TruncatedSeries::one(200));
}

TEST_CASE("determinism") {
    TruncatedSeries a = borwein_coefficients(3, Rational(1, 2), 30);
    TruncatedSeries b = borwein_coefficients(3, Rational(1, 2), 30);
    CHECK(a == b);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("0.227") == Rational(227, 1000));
    CHECK(parse_rational("2.9999") == make_rational(29999, 10000));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}
