#include <cstdlib>
#include <iostream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "borwein/asymptotics.hpp"
#include "borwein/io.hpp"
#include "borwein/series.hpp"
#include "borwein/verify.hpp"

namespace {

using namespace borwein;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
    long precision_bits = 128;
    std::string format = "text";
    long parallelism = 1;
};

long default_precision() {
    if (const char* env = std::getenv("BORWEIN_PRECISION_BITS")) {
        long v = std::atol(env);
        if (v >= 53) return v;
    }
    return 128;
}

Json config_json(const GlobalOptions& g) {
    return Json{{"precision_bits", g.precision_bits},
                {"format", g.format},
                {"parallelism", g.parallelism}};
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

int run_coeffs(const GlobalOptions& g, long p, const std::string& delta_text, long order) {
    Rational delta = parse_rational(delta_text);
    TruncatedSeries c = borwein_coefficients(p, delta, order);
    if (g.format == "json") {
        Json doc{{"command", "coeffs"},
                 {"config", config_json(g)},
                 {"p", p},
                 {"delta", to_fraction_string(delta)},
                 {"series", series_to_json(c)}};
        emit(doc);
    } else if (g.format == "csv") {
        series_to_csv(c, std::cout);
    } else {
        for (std::int64_t n = 0; n <= c.order(); ++n)
            std::cout << n << '\t' << to_fraction_string(c[n]) << '\n';
    }
    return kExitOk;
}

int run_estimate(const GlobalOptions& g, long p, const std::string& delta_text,
                 long n_from, long n_to, long terms, const std::string& variant_name) {
    Rational delta = parse_rational(delta_text);
    if (n_from < 1 || n_to < n_from) throw std::domain_error("need 1 <= n-from <= n-to");
    ErrorBoundVariant variant = variant_name == "as-stated" ? ErrorBoundVariant::as_stated
                                                            : ErrorBoundVariant::proof_general;
    TruncatedSeries c = borwein_coefficients(p, delta, n_to);

    std::vector<EstimateReport> rows(static_cast<std::size_t>(n_to - n_from + 1));
    long workers = std::max(1L, g.parallelism);
    auto work = [&](long w) {
        for (std::size_t i = static_cast<std::size_t>(w); i < rows.size();
             i += static_cast<std::size_t>(workers)) {
            std::int64_t n = n_from + static_cast<std::int64_t>(i);
            rows[i] = make_estimate_report(p, delta, n, terms, c[n],
                                           g.precision_bits, variant);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (long w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    bool all_within = true;
    for (const auto& r : rows) all_within = all_within && r.within_bound;

    if (g.format == "json") {
        Json out = Json::array();
        for (const auto& r : rows) out.push_back(estimate_to_json(r));
        Json doc{{"command", "estimate"},
                 {"config", config_json(g)},
                 {"variant", variant_name},
                 {"rows", std::move(out)},
                 {"all_within_bound", all_within}};
        emit(doc);
    } else if (g.format == "csv") {
        std::cout << "p,delta,n,terms,exact,main_term,error_bound,within_bound,"
                     "predicted_sign,actual_sign\n";
        for (const auto& r : rows)
            std::cout << r.p << ',' << csv_quote(to_fraction_string(r.delta)) << ',' << r.n
                      << ',' << r.terms << ',' << csv_quote(to_fraction_string(r.exact_coeff))
                      << ',' << r.main_term.str(kPrintDigits) << ','
                      << r.error_bound.str(kPrintDigits) << ',' << (r.within_bound ? 1 : 0)
                      << ',' << r.predicted << ',' << r.actual << '\n';
    } else {
        for (const auto& r : rows)
            std::cout << "n=" << r.n << " exact=" << to_fraction_string(r.exact_coeff)
                      << " main=" << r.main_term.str(12)
                      << " bound=" << r.error_bound.str(6)
                      << " within=" << (r.within_bound ? "yes" : "no")
                      << " sign(pred/act)=" << r.predicted << "/" << r.actual << '\n';
    }
    if (variant == ErrorBoundVariant::proof_general && !all_within) {
        std::cerr << "estimate: a row fell outside the proven error bound\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int run_verify(const GlobalOptions& g, const std::string& suite, const VerifyOptions& vopt) {
    std::vector<CheckResult> checks = run_suite(suite, vopt);
    long failed_asserted = 0, passed = 0;
    for (const auto& c : checks) {
        if (c.pass)
            ++passed;
        else if (c.asserted)
            ++failed_asserted;
    }
    bool ok = failed_asserted == 0;

    if (g.format == "json") {
        Json rows = Json::array();
        for (const auto& c : checks)
            rows.push_back(Json{{"suite", c.suite},
                                {"name", c.name},
                                {"asserted", c.asserted},
                                {"pass", c.pass},
                                {"detail", c.detail}});
        Json doc{{"command", "verify"},
                 {"config", config_json(g)},
                 {"suite", suite},
                 {"checks", std::move(rows)},
                 {"verdicts", Json{{"checked", checks.size()},
                                   {"passed", passed},
                                   {"failed_asserted", failed_asserted},
                                   {"pass", ok}}}};
        emit(doc);
    } else if (g.format == "csv") {
        std::cout << "suite,name,asserted,pass,detail\n";
        for (const auto& c : checks)
            std::cout << c.suite << ',' << csv_quote(c.name) << ',' << (c.asserted ? 1 : 0)
                      << ',' << (c.pass ? 1 : 0) << ',' << csv_quote(c.detail) << '\n';
    } else {
        for (const auto& c : checks)
            std::cout << (c.pass ? "PASS " : (c.asserted ? "FAIL " : "note "))
                      << "[" << c.suite << "] " << c.name << " -- " << c.detail << '\n';
        std::cout << (ok ? "all asserted checks passed" : "asserted checks FAILED") << '\n';
    }
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Borwein product coefficients, asymptotics, and identity checks"};
    app.require_subcommand(1);

    GlobalOptions g;
    g.precision_bits = default_precision();
    app.add_option("--precision", g.precision_bits, "working precision in bits (>= 53)")
        ->check(CLI::Range(53L, 1000000L));
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--parallelism", g.parallelism, "worker threads for row fan-out")
        ->check(CLI::Range(1L, 256L));

    auto* coeffs = app.add_subcommand("coeffs", "exact Borwein coefficients c_p^(delta)(n)");
    long p = 3;
    std::string delta_text = "1";
    long order = -1;
    coeffs->add_option("--p", p, "product parameter p >= 2")->required();
    coeffs->add_option("--delta", delta_text, "exponent, e.g. 3, 1/2, 0.227")->required();
    coeffs->add_option("--order", order, "truncation order")->required()
        ->check(CLI::Range(0L, 100000L));

    auto* estimate = app.add_subcommand("estimate", "main term and error bound per n");
    long ep = 3, n_from = 1, n_to = 10, terms = 2;
    std::string edelta = "1", variant = "proof-general";
    estimate->add_option("--p", ep, "prime p")->required();
    estimate->add_option("--delta", edelta, "exponent in (0, 24/(p-1)]")->required();
    estimate->add_option("--n-from", n_from, "first n (>= 1)");
    estimate->add_option("--n-to", n_to, "last n")->required();
    estimate->add_option("--terms", terms, "Bessel sum length N")->check(CLI::Range(1L, 64L));
    estimate->add_option("--variant", variant, "error-bound constant variant")
        ->check(CLI::IsMember({"proof-general", "as-stated"}));

    auto* verify = app.add_subcommand("verify", "run identity / bound verification suites");
    std::string suite = "all";
    long vorder = -1, vk = -1;
    std::string vdelta;
    verify->add_option("--suite", suite, "which suite")->check(CLI::IsMember(suite_names()));
    verify->add_option("--order", vorder, "override truncation order");
    verify->add_option("--k", vk, "restrict to one k where applicable");
    verify->add_option("--delta", vdelta, "exploratory delta for signs/conjecture1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (coeffs->parsed()) return run_coeffs(g, p, delta_text, order);
        if (estimate->parsed())
            return run_estimate(g, ep, edelta, n_from, n_to, terms, variant);
        VerifyOptions vopt;
        vopt.precision_bits = g.precision_bits;
        vopt.order = vorder;
        vopt.k = vk;
        if (!vdelta.empty()) {
            vopt.delta = parse_rational(vdelta);
            vopt.delta_set = true;
        }
        return run_verify(g, suite, vopt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
