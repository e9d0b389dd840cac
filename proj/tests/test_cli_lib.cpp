#include <doctest.h>

#include <sstream>

#include "borwein/io.hpp"
#include "borwein/verify.hpp"

using namespace borwein;

TEST_CASE("series serialization") {
    TruncatedSeries s = borwein_coefficients(3, 1, 6);
    Json j = series_to_json(s);
    CHECK(j["order"] == 6);
    REQUIRE(j["coeffs"].size() == 7);
    CHECK(j["coeffs"][0] == "1/1");
    CHECK(j["coeffs"][6] == "2/1");

    std::ostringstream csv;
    series_to_csv(s, csv);
    std::string text = csv.str();
    CHECK(text.rfind("n,numerator,denominator\n", 0) == 0);
    CHECK(text.find("6,2,1") != std::string::npos);
}

TEST_CASE("estimate serialization carries every report field") {
    TruncatedSeries c = borwein_coefficients(3, 1, 12);
    auto rep = make_estimate_report(3, 1, 10, 2, c[10], 128,
                                    ErrorBoundVariant::proof_general);
    Json j = estimate_to_json(rep);
    for (const char* field : {"p", "delta", "n", "terms", "exact", "main_term",
                              "error_bound", "within_bound", "predicted_sign",
                              "actual_sign"})
        CHECK(j.contains(field));
    CHECK(j["within_bound"] == true);
    CHECK(j["exact"] == to_fraction_string(c[10]));
}

TEST_CASE("reports are deterministic") {
    TruncatedSeries c = borwein_coefficients(3, Rational(1, 2), 12);
    auto a = make_estimate_report(3, Rational(1, 2), 9, 2, c[9], 128,
                                  ErrorBoundVariant::proof_general);
    auto b = make_estimate_report(3, Rational(1, 2), 9, 2, c[9], 128,
                                  ErrorBoundVariant::proof_general);
    CHECK(a.main_term.str(30) == b.main_term.str(30));
    CHECK(a.error_bound.str(30) == b.error_bound.str(30));
}

TEST_CASE("verify suites") {
    VerifyOptions opt;
    opt.order = 80;

    auto main_checks = run_suite("main", opt);
    CHECK(main_checks.size() == 6);
    for (const auto& c : main_checks) CHECK(c.pass);

    opt.k = 2;
    auto one = run_suite("main", opt);
    CHECK(one.size() == 1);
    CHECK(one[0].pass);

    CHECK_THROWS_AS(run_suite("nope", VerifyOptions{}), std::invalid_argument);

    VerifyOptions expl;
    expl.order = 60;
    expl.delta = Rational(1, 5);
    expl.delta_set = true;
    auto rep = run_suite("conjecture1", expl);
    REQUIRE(rep.size() == 1);
    CHECK_FALSE(rep[0].asserted);  // exploratory delta never fails the run
    CHECK_FALSE(rep[0].pass);

    bool has_all = false;
    for (const auto& n : suite_names()) has_all = has_all || n == "all";
    CHECK(has_all);
}
