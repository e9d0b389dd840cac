#pragma once

#include <string>
#include <vector>

#include "borwein/rational.hpp"

#include <mpfr.h>

namespace borwein {

struct CheckResult {
    std::string suite;
    std::string name;
    bool asserted = true;  // failure of an asserted check fails the run
    bool pass = true;
    std::string detail;
};

struct VerifyOptions {
    mpfr_prec_t precision_bits = 128;
    std::int64_t order = -1;  // -1 selects the per-suite default
    std::int64_t k = -1;      // restricts k where a suite iterates over k
    Rational delta;           // exploratory delta for signs / conjecture1
    bool delta_set = false;
};

const std::vector<std::string>& suite_names();

/* Runs one named suite ("all" dispatches every suite) and returns one
 * result per check. Exploratory checks are reported with asserted=false. */
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace borwein
