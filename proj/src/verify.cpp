#include "borwein/verify.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "borwein/asymptotics.hpp"
#include "borwein/identities.hpp"
#include "borwein/modular.hpp"
#include "borwein/series.hpp"

namespace borwein {

namespace {

std::string frac(const Rational& r) { return to_fraction_string(r); }

std::int64_t pick_order(const VerifyOptions& opt, std::int64_t fallback) {
    return opt.order >= 0 ? opt.order : fallback;
}

std::vector<std::int64_t> pick_ks(const VerifyOptions& opt, std::vector<std::int64_t> fallback) {
    if (opt.k >= 0) return {opt.k};
    return fallback;
}

std::vector<CheckResult> suite_mth(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::int64_t n_max = pick_order(opt, 40);
    for (std::int64_t p : {2, 3, 5}) {
        for (Rational delta : {Rational(1), Rational(3)}) {
            TruncatedSeries c = borwein_coefficients(p, delta, n_max);
            for (std::int64_t terms : {1, 2}) {
                CheckResult r;
                r.suite = "mth";
                std::ostringstream name;
                name << "bound p=" << p << " delta=" << frac(delta) << " N=" << terms
                     << " n<=" << n_max;
                r.name = name.str();
                std::int64_t bad = -1;
                for (std::int64_t n = 1; n <= n_max && bad < 0; ++n) {
                    auto rep = make_estimate_report(p, delta, n, terms, c[n],
                                                    opt.precision_bits,
                                                    ErrorBoundVariant::proof_general);
                    if (!rep.within_bound) bad = n;
                }
                r.pass = bad < 0;
                r.detail = r.pass ? "all rows within the error bound"
                                  : "bound violated at n=" + std::to_string(bad);
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

std::vector<CheckResult> suite_mth1(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::int64_t n_max = pick_order(opt, 120);
    for (Rational delta : {Rational(1, 2), Rational(1), Rational(3)}) {
        TruncatedSeries c = borwein_coefficients(3, delta, n_max);
        CheckResult r;
        r.suite = "mth1";
        r.name = "growth bound delta=" + frac(delta) + " n<=" + std::to_string(n_max);
        std::int64_t bad = -1;
        for (std::int64_t n = 1; n <= n_max && bad < 0; ++n)
            if (!check_mth1_inequality(delta, n, c[n], opt.precision_bits)) bad = n;
        r.pass = bad < 0;
        r.detail = r.pass ? "inequality holds on the range"
                          : "fails at n=" + std::to_string(bad);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> suite_main(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::int64_t order = pick_order(opt, 200);
    for (std::int64_t k : pick_ks(opt, {1, 2, 3, 4, 5, 6})) {
        Rational res = theorem_main_residual(k, order);
        CheckResult r;
        r.suite = "main";
        r.name = "triple-product identity k=" + std::to_string(k) + " order=" +
                 std::to_string(order);
        r.pass = res == 0;
        r.detail = "residual " + frac(res);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> suite_jtpe(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::int64_t order = pick_order(opt, 80);
    for (std::int64_t k : pick_ks(opt, {1, 2, 3, 4})) {
        Rational res = theta_dissection_residual(k, 10, order);
        CheckResult r;
        r.suite = "jtpe";
        r.name = "theta dissection k=" + std::to_string(k) + " M=10 order=" +
                 std::to_string(order);
        r.pass = res == 0;
        r.detail = "residual " + frac(res);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> suite_lambert(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    mpfr_prec_t prec = opt.precision_bits;
    BigReal tol = BigReal::from(Rational(1, 10000000000L), prec);  // 1e-10

    auto add = [&out](std::string name, bool pass, const BigReal& value) {
        out.push_back({"lambert", std::move(name), true, pass,
                       "discrepancy " + value.str(8)});
    };

    BigReal q1 = BigReal::from(Rational(1, 10), prec);
    BigReal step = BigReal::from(Rational(1, 1000000), prec);
    BigReal d1 = lambert_derivative_check(0, Rational(1, 2), q1, step, prec);
    add("derivative vs Lambert sum (even, alpha=1/2, q=0.1)", d1 < tol, d1);

    BigReal d2 = lambert_derivative_check(1, Rational(1, 3), q1, step, prec);
    add("derivative vs Lambert sum (odd, alpha=1/3, q=0.1)", d2 < tol, d2);

    BigReal q2 = BigReal::from(Rational(1, 5), prec);
    BigReal d3 = theta_derivative_identity_residual(q2, step, prec);
    add("theta derivative at 1 vs (q;q)^2 (q=0.2)", d3 < tol, d3);

    /* second-order stencil: halving the step shrinks the error ~4x
     * (checked away from the symmetric point alpha = 1/2) */
    BigReal coarse = lambert_derivative_check(0, Rational(1, 3), q1,
                                              BigReal::from(Rational(1, 1000), prec), prec);
    BigReal fine = lambert_derivative_check(0, Rational(1, 3), q1,
                                            BigReal::from(Rational(1, 2000), prec), prec);
    bool quadratic = fine * 3 < coarse && coarse < fine * 5;
    out.push_back({"lambert", "central difference is second order", true, quadratic,
                   "ratio " + (coarse / fine).str(6)});
    return out;
}

std::vector<CheckResult> suite_two_squares(const VerifyOptions& opt) {
    std::int64_t order = pick_order(opt, 300);
    Rational res = two_squares_residual(order);
    return {{"two-squares", "r2(n) identity order=" + std::to_string(order), true,
             res == 0, "residual " + frac(res)}};
}

std::vector<CheckResult> suite_cubic(const VerifyOptions& opt) {
    std::int64_t order = pick_order(opt, 200);
    CubicThetaResiduals res = cubic_theta_check(order);
    std::vector<CheckResult> out;
    auto add = [&](const std::string& name, const Rational& r) {
        out.push_back({"cubic", name + " order=" + std::to_string(order), true, r == 0,
                       "residual " + frac(r)});
    };
    add("addition formula", res.addition);
    add("a(q^3)=b(q)+c(q^3)", res.dissection);
    add("a^3=b^3+c^3", res.cubic);
    add("Lambert form of a(q)", res.lambert);
    return out;
}

const std::map<std::int64_t, std::set<std::int64_t>>& known_vanishing_classes() {
    static const std::map<std::int64_t, std::set<std::int64_t>> table{
        {3, {2}}, {5, {2, 4}}, {7, {2, 4, 5}}, {9, {2, 4, 5, 7, 8}}};
    return table;
}

std::vector<CheckResult> suite_vanishing(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::int64_t order = pick_order(opt, 400);
    for (std::int64_t k : pick_ks(opt, {3, 5, 7, 9})) {
        auto classes = vanishing_classes(k);
        CheckResult r;
        r.suite = "vanishing";
        r.name = "classes and zeros k=" + std::to_string(k) + " order=" +
                 std::to_string(order);
        bool classes_ok = true;
        auto it = known_vanishing_classes().find(k);
        if (it != known_vanishing_classes().end()) classes_ok = classes == it->second;
        TruncatedSeries c = borwein_coefficients(k, 3, order);
        std::int64_t bad = -1;
        for (std::int64_t n = 0; n <= order && bad < 0; ++n)
            if (classes.count(n % k) && c[n] != 0) bad = n;
        r.pass = classes_ok && bad < 0;
        std::ostringstream detail;
        detail << "classes {";
        bool comma = false;
        for (auto h : classes) {
            if (comma) detail << ',';
            detail << h;
            comma = true;
        }
        detail << "}";
        if (!classes_ok) detail << " (unexpected)";
        if (bad >= 0) detail << ", nonzero coefficient at n=" << bad;
        r.detail = detail.str();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> suite_divisibility(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::int64_t order = pick_order(opt, 400);
    for (std::int64_t k : pick_ks(opt, {3, 5, 7, 9})) {
        bool ok = divisibility_check(k, order);
        out.push_back({"divisibility",
                       "c_k^(3)(kn+(k^2-1)/8) = 0 mod k, k=" + std::to_string(k) +
                           " order=" + std::to_string(order),
                       true, ok, ok ? "holds" : "violated"});
    }
    return out;
}

std::vector<CheckResult> suite_signs(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::int64_t order = pick_order(opt, 300);
    std::vector<Rational> deltas{1, 3};
    if (opt.delta_set) deltas = {opt.delta};
    for (std::int64_t p : {2, 3, 5, 7}) {
        for (const Rational& delta : deltas) {
            auto rep = sign_pattern_check(p, delta, order);
            CheckResult r;
            r.suite = "signs";
            r.name = "period-" + std::to_string(p) + " pattern delta=" + frac(delta) +
                     " order=" + std::to_string(order);
            r.asserted = delta == 1 || delta == 3;
            r.pass = rep.ok;
            r.detail = rep.ok ? std::to_string(rep.pairs_checked) + " pairs, no violation"
                              : "violation at n=" + std::to_string(rep.first_violation);
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<CheckResult> suite_conjecture1(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::int64_t order = pick_order(opt, 300);
    std::vector<Rational> deltas{1, 3};
    if (opt.delta_set) deltas = {opt.delta};
    for (const Rational& delta : deltas) {
        auto rep = conjecture1_check(delta, order);
        CheckResult r;
        r.suite = "conjecture1";
        r.name = "dissection nonnegativity delta=" + frac(delta) + " order=" +
                 std::to_string(order);
        r.asserted = delta == 1 || delta == 3;  // the proved cases
        r.pass = rep.nonnegative[0] && rep.nonnegative[1] && rep.nonnegative[2];
        std::ostringstream detail;
        const char* names = "ABC";
        bool first = true;
        for (int ci = 0; ci < 3; ++ci) {
            if (!first) detail << ", ";
            detail << names[ci] << (rep.nonnegative[ci] ? " >= 0" : " < 0 at n=");
            if (!rep.nonnegative[ci]) detail << rep.first_negative[ci];
            first = false;
        }
        r.detail = detail.str();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> suite_transform(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::int64_t order = pick_order(opt, 60);
    struct Tuple {
        std::int64_t p, h, k;
    };
    BigComplex z = BigComplex::from_real(BigReal::from(1L, opt.precision_bits));
    BigReal tol = BigReal::from(Rational(1, Integer("100000000000000000000")),
                                opt.precision_bits);  // 1e-20
    for (const Tuple& t : {Tuple{3, 0, 1}, Tuple{2, 1, 2}, Tuple{3, 1, 3}, Tuple{5, 2, 5}}) {
        for (Rational delta : {Rational(1), Rational(3, 2)}) {
            auto ctx = TransformContext::create(t.h, t.k, t.p);
            BigReal res = verify_modular_transform(ctx, delta, z, order,
                                                   opt.precision_bits);
            CheckResult r;
            r.suite = "transform";
            std::ostringstream name;
            name << "transformation p=" << t.p << " h=" << t.h << " k=" << t.k
                 << " delta=" << frac(delta) << " z=1";
            r.name = name.str();
            r.pass = res < tol;
            r.detail = "residual " + res.str(8);
            out.push_back(std::move(r));
        }
    }
    return out;
}

using SuiteFn = std::function<std::vector<CheckResult>(const VerifyOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table{
        {"mth", suite_mth},
        {"mth1", suite_mth1},
        {"main", suite_main},
        {"jtpe", suite_jtpe},
        {"lambert", suite_lambert},
        {"two-squares", suite_two_squares},
        {"cubic", suite_cubic},
        {"vanishing", suite_vanishing},
        {"divisibility", suite_divisibility},
        {"signs", suite_signs},
        {"conjecture1", suite_conjecture1},
        {"transform", suite_transform},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : suite_table()) n.push_back(name);
        n.push_back("all");
        return n;
    }();
    return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (const auto& [name, fn] : suite_table()) {
            auto part = fn(opt);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    for (const auto& [name, fn] : suite_table())
        if (name == suite) return fn(opt);
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace borwein
