// probkit command-line front end: measure, integrate, expect, verify, suite
// and demo subcommands with machine-readable JSON/CSV output.
//
// Exit codes: 0 success (all verifications passing), 1 verification failure
// or unconverged integration, 2 usage or spec errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "probkit/json_io.hpp"
#include "probkit/lebesgue.hpp"
#include "probkit/suite.hpp"

using namespace probkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

Json parse_spec(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(what + ": " + e.what());
    }
}

// inline JSON or @path to a file
Json load_spec(const std::string& arg, const std::string& what) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::invalid_argument(what + ": cannot open file " + arg.substr(1));
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return parse_spec(text, what);
    }
    return parse_spec(arg, what);
}

void emit(const Json& payload, const std::string& out_path) {
    const std::string text = payload.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
    }
}

void emit_raw(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
    }
}

Bracket bracket_from(const std::string& s) {
    if (s == "(]") return Bracket::OpenClosed;
    if (s == "()") return Bracket::Open;
    if (s == "[)") return Bracket::ClosedOpen;
    if (s == "[]") return Bracket::Closed;
    throw std::invalid_argument("bracket must be one of (], (), [), []");
}

Json demo_report(const std::string& name) {
    if (name == "dirichlet") {
        const auto r = integrate(Integrand::dirichlet(), Integrator::identity(), 0.0, 1.0, 1e-3, 5000);
        Json j = to_json(r);
        j["name"] = name;
        j["statement"] = "the rational indicator is bounded but never meets the bracketing criterion";
        return j;
    }
    std::vector<int> schedule{1, 2, 4, 8, 16, 64, 1024, 1000000};
    if (name == "mct-counterexample") {
        const auto gen = [](int n) {
            return SimpleOnLine::indicator(IntervalUnion::of(0.0, 1.0 / n), static_cast<double>(n));
        };
        Json j = to_json(mct_check_line(gen, SimpleOnLine::zero(), schedule));
        j["name"] = name;
        j["statement"] = "n * indicator(0, 1/n] keeps integral 1 while the pointwise limit is 0";
        return j;
    }
    if (name == "dct-counterexample") {
        const auto gen = [](int n) {
            if (n == 1) return SimpleOnLine::indicator(IntervalUnion::of(0.0, 1.0), 1.0);
            return SimpleOnLine::from_pieces({{static_cast<double>(n), IntervalUnion::of(0.0, 1.0 / n)},
                                              {1.0, IntervalUnion::of(1.0 / n, 1.0)}});
        };
        const auto limit = SimpleOnLine::indicator(IntervalUnion::of(0.0, 1.0), 1.0);
        const auto dominator = SimpleOnLine::indicator(IntervalUnion::of(0.0, 1.0), 10.0);
        Json j = to_json(dct_check_line(gen, limit, dominator, schedule));
        j["name"] = name;
        j["statement"] = "integrals tend to 2 while the limit function integrates to 1; no dominator exists";
        return j;
    }
    if (name == "staircase") {
        Json entries = Json::array();
        for (int n : {1, 10, 100, 1000, 10000}) {
            const auto r = unbounded_integrable_demo(n);
            entries.push_back({{"n", n}, {"partial_sum", r.partial_sum}, {"tail_bound", r.tail_bound}});
        }
        return {{"name", name},
                {"statement", "an unbounded staircase with a convergent integral"},
                {"entries", entries}};
    }
    throw std::invalid_argument("unknown demo '" + name +
                                "' (expected dirichlet, mct-counterexample, dct-counterexample, staircase)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"measure-theoretic probability toolkit"};
    app.require_subcommand(1);

    std::string dist_spec, set_spec, bracket = "(]", f_spec = "{\"poly\":[0,1]}";
    std::string out_path, format = "json", config = "default", case_spec, demo_name;
    double from = 0.0, to = 1.0, tol = 1e-9;
    double lp = 0.0;
    int moment_order = 1;
    std::uint64_t seed = 0;
    std::size_t trials = 100000;

    auto* measure = app.add_subcommand("measure", "length of an interval union or bracket probability");
    measure->add_option("--dist", dist_spec, "distribution spec (JSON or @file)")->required();
    measure->add_option("--set", set_spec, "interval union as [[lo,hi],...]");
    measure->add_option("--bracket", bracket, "bracket shape: (], (), [), []");
    measure->add_option("--from", from, "bracket lower endpoint");
    measure->add_option("--to", to, "bracket upper endpoint");
    measure->add_option("--out", out_path, "output file (stdout otherwise)");

    auto* integ = app.add_subcommand("integrate", "Riemann-Stieltjes integral of f against a distribution");
    integ->add_option("--f", f_spec, "integrand: name or {\"poly\":[...]}");
    integ->add_option("--dist", dist_spec, "integrator distribution (identity length when omitted)");
    integ->add_option("--from", from)->required();
    integ->add_option("--to", to)->required();
    integ->add_option("--tol", tol, "bracketing tolerance (default 1e-9)");
    integ->add_option("--out", out_path);

    auto* expect_cmd = app.add_subcommand("expect", "expectation, higher moment or Lp norm");
    expect_cmd->add_option("--dist", dist_spec)->required();
    expect_cmd->add_option("--moment", moment_order, "moment order k (default 1)");
    expect_cmd->add_option("--lp", lp, "report the Lp norm instead of a moment");
    expect_cmd->add_option("--tol", tol);
    expect_cmd->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "run one inequality case");
    verify->add_option("--case", case_spec, "case JSON or @file")->required();
    verify->add_option("--seed", seed);
    verify->add_option("--trials", trials);
    verify->add_option("--out", out_path);

    auto* suite_cmd = app.add_subcommand("suite", "run an inequality suite");
    suite_cmd->add_option("--config", config, "\"default\" or a config file path");
    suite_cmd->add_option("--seed", seed);
    suite_cmd->add_option("--format", format, "json or csv");
    suite_cmd->add_option("--out", out_path);

    auto* demo = app.add_subcommand("demo", "named counterexample scenarios");
    demo->add_option("--name", demo_name, "dirichlet | mct-counterexample | dct-counterexample | staircase")
        ->required();
    demo->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (measure->parsed()) {
            const auto dist = distribution_from_json(load_spec(dist_spec, "--dist"));
            Json out;
            if (!set_spec.empty()) {
                const auto b = interval_union_from_json(load_spec(set_spec, "--set"));
                out = {{"value", length_under(dist, b)},
                       {"method", "cdf_length"},
                       {"error_bound", 1e-14},
                       {"set", interval_union_to_json(b)}};
            } else {
                out = {{"value", dist.prob_interval(bracket_from(bracket), from, to)},
                       {"method", "bracket_formula"},
                       {"error_bound", 1e-14},
                       {"bracket", bracket},
                       {"from", from},
                       {"to", to}};
            }
            emit(out, out_path);
            return kExitOk;
        }

        if (integ->parsed()) {
            auto [f, fname] = named_integrand(load_spec(f_spec, "--f"));
            const Integrator F = dist_spec.empty()
                                     ? Integrator::identity()
                                     : Integrator::from_distribution(
                                           distribution_from_json(load_spec(dist_spec, "--dist")));
            const auto r = integrate(f, F, from, to, tol);
            Json out = to_json(r);
            out["integrand"] = fname;
            out["method"] = "stieltjes_refinement";
            emit(out, out_path);
            return r.converged ? kExitOk : kExitVerificationFailed;
        }

        if (expect_cmd->parsed()) {
            const RandomVariable x{distribution_from_json(load_spec(dist_spec, "--dist")), "X"};
            const double effective_tol = (tol == 1e-9) ? 1e-6 : tol;
            MomentResult r;
            if (lp > 0.0) r = lp_norm(x, lp, effective_tol);
            else if (moment_order == 1) r = expect(x, effective_tol);
            else r = moment(x, moment_order, effective_tol);
            emit(to_json(r), out_path);
            return kExitOk;
        }

        if (verify->parsed()) {
            Json spec = load_spec(case_spec, "--case");
            if (!spec.contains("seed")) spec["seed"] = seed;
            if (!spec.contains("trials")) spec["trials"] = trials;
            const auto report = run_case(spec, seed);
            emit(to_json(report), out_path);
            return report.pass ? kExitOk : kExitVerificationFailed;
        }

        if (suite_cmd->parsed()) {
            const Json cfg = (config == "default") ? default_suite_config(seed)
                                                   : load_spec("@" + config, "--config");
            const auto reports = run_suite(cfg, seed);
            const auto sum = summarize(reports);
            if (format == "csv") {
                emit_raw(reports_to_csv(reports), out_path);
            } else if (format == "json") {
                emit_raw(reports_to_jsonl(reports), out_path);
            } else {
                throw std::invalid_argument("--format must be json or csv");
            }
            std::cerr << "suite: " << sum.passed << " passed, " << sum.failed << " failed, " << sum.errors
                      << " errors of " << sum.total << "\n";
            return (sum.failed == 0 && sum.errors == 0) ? kExitOk : kExitVerificationFailed;
        }

        if (demo->parsed()) {
            emit(demo_report(demo_name), out_path);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}
