#include "probkit/suite.hpp"

#include <cinttypes>
#include <cstdio>
#include <random>

namespace probkit {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

VerifyMode mode_of(const Json& spec) {
    const std::string m = spec.value("mode", "exact");
    if (m == "exact") return VerifyMode::Exact;
    if (m == "mc" || m == "monte_carlo") return VerifyMode::MonteCarlo;
    throw std::invalid_argument("mode must be \"exact\" or \"mc\"");
}

MonteCarloOptions mc_of(const Json& spec, std::uint64_t default_seed) {
    MonteCarloOptions mc;
    mc.trials = spec.value("trials", std::size_t{100000});
    mc.seed = spec.value("seed", default_seed);
    return mc;
}

HoeffdingVariant variant_of(const std::string& id) {
    return id == "hoeffding_v1" ? HoeffdingVariant::V1 : HoeffdingVariant::V2;
}

std::vector<DistributionFunction> laws_of(const Json& spec) {
    std::vector<DistributionFunction> laws;
    if (spec.contains("laws")) {
        for (const auto& l : spec.at("laws")) laws.push_back(distribution_from_json(l));
    } else {
        const auto law = distribution_from_json(spec.at("law"));
        const auto n = spec.at("n").get<std::size_t>();
        laws.assign(n, law);
    }
    return laws;
}

JointDiscreteLaw joint_of(const Json& spec) {
    const Json& j = spec.at("joint");
    if (j.is_object() && j.contains("diagonal"))
        return JointDiscreteLaw::diagonal(distribution_from_json(j.at("diagonal")));
    JointDiscreteLaw joint;
    for (const auto& p : j.at("points")) joint.points.push_back({p[0].get<double>(), p[1].get<double>()});
    joint.masses = j.at("masses").get<std::vector<double>>();
    joint.validate();
    return joint;
}

}  // namespace

VerificationReport run_case(const Json& spec, std::uint64_t default_seed) {
    const std::string id = spec.at("id").get<std::string>();
    const VerifyMode mode = mode_of(spec);
    const MonteCarloOptions mc = mc_of(spec, default_seed);

    if (id == "markov")
        return markov({distribution_from_json(spec.at("dist")), ""}, spec.at("a").get<double>(), mode, mc);
    if (id == "markov_abs")
        return markov_abs({distribution_from_json(spec.at("dist")), ""}, spec.at("a").get<double>(), mode, mc);
    if (id == "generalized_markov") {
        auto [g, name] = named_function(spec.at("g"));
        return generalized_markov(g, name, {distribution_from_json(spec.at("dist")), ""},
                                  spec.at("a").get<double>(), mode, mc);
    }
    if (id == "chebyshev")
        return chebyshev({distribution_from_json(spec.at("dist")), ""}, spec.at("eps").get<double>(), mode, mc);
    if (id == "jensen") {
        auto [psi, name] = named_function(spec.at("psi"));
        return jensen(psi, name, {distribution_from_json(spec.at("dist")), ""});
    }
    if (id == "hoeffding_v1" || id == "hoeffding_v2") {
        std::optional<std::vector<std::pair<double, double>>> ranges;
        if (spec.contains("ranges")) {
            ranges.emplace();
            for (const auto& r : spec.at("ranges")) ranges->emplace_back(r[0].get<double>(), r[1].get<double>());
        }
        return hoeffding_verify(variant_of(id), laws_of(spec), spec.at("eps").get<double>(), mc, ranges);
    }
    if (id == "hoeffding_lemma") {
        const auto law = distribution_from_json(spec.at("dist"));
        return hoeffding_lemma_check(law, spec.at("a").get<double>(), spec.at("b").get<double>(),
                                     spec.at("s").get<double>());
    }
    if (id == "g_function") {
        const GFunctionReport g = g_function_check(spec.at("theta").get<double>(), spec.value("u_lo", -5.0),
                                                   spec.value("u_hi", 5.0), spec.value("u_step", 0.01));
        VerificationReport r;
        r.inequality_id = "g_function";
        r.analytic_bound = 0.25;
        r.reference = g.max_second_derivative;
        r.mode = VerifyMode::Exact;
        r.statistical_slack = 0.0;
        r.margin = r.analytic_bound - r.reference;
        r.pass = g.pass;
        r.paper_form = "g(u) = -theta u + log(1 - theta + theta e^4) (printed e^4; implemented e^u)";
        return r;
    }
    if (id == "cauchy_schwarz") {
        if (spec.contains("joint")) return cauchy_schwarz_check(joint_of(spec));
        return cauchy_schwarz_check({distribution_from_json(spec.at("x")), ""},
                                    {distribution_from_json(spec.at("y")), ""});
    }
    if (id == "cauchy_schwarz_single")
        return cauchy_schwarz_single({distribution_from_json(spec.at("dist")), ""});
    if (id == "normal_tail") {
        const std::string form = spec.value("form", "one_sided");
        NormalTailForm f = NormalTailForm::OneSided;
        if (form == "two_sided") f = NormalTailForm::TwoSided;
        else if (form == "mean") f = NormalTailForm::MeanN;
        else if (form != "one_sided") throw std::invalid_argument("unknown normal_tail form");
        return normal_tail(spec.at("eps").get<double>(), f, spec.value("n", std::size_t{1}));
    }
    if (id == "slln") {
        const auto schedule = spec.at("schedule").get<std::vector<std::size_t>>();
        const SllnReport rep = slln_demo(spec.at("p").get<double>(), schedule, mc.seed);
        VerificationReport r;
        r.inequality_id = "slln";
        r.analytic_bound = rep.entries.back().envelope;
        r.reference = std::abs(rep.entries.back().mean - rep.p);
        r.mode = VerifyMode::MonteCarlo;
        r.sample_count = rep.entries.back().n;
        r.seed = rep.seed;
        r.margin = r.analytic_bound - r.reference;
        r.pass = rep.all_inside;
        r.note = "trajectory stays inside the Hoeffding envelope at every scheduled n";
        return r;
    }
    if (id == "levy")
        return levy_check(distribution_from_json(spec.at("law")), spec.at("n").get<std::size_t>(),
                          spec.at("eps").get<double>(), mode, mc);
    if (id == "holder") {
        const double p = spec.at("p").get<double>();
        const double q = spec.contains("q") ? spec.at("q").get<double>() : p / (p - 1.0);
        if (spec.contains("joint")) return holder_check(joint_of(spec), p, q);
        return holder_check({distribution_from_json(spec.at("x")), ""},
                            {distribution_from_json(spec.at("y")), ""}, p, q);
    }
    if (id == "minkowski") {
        const double p = spec.at("p").get<double>();
        if (spec.contains("joint")) return minkowski_check(joint_of(spec), p);
        return minkowski_check(distribution_from_json(spec.at("x")), distribution_from_json(spec.at("y")), p);
    }
    throw std::invalid_argument("unknown inequality id '" + id + "'");
}

std::vector<VerificationReport> run_suite(const Json& config, std::uint64_t base_seed) {
    if (!config.is_array()) throw std::invalid_argument("suite config must be a JSON array of cases");
    std::vector<VerificationReport> reports;
    reports.reserve(config.size());
    for (std::size_t i = 0; i < config.size(); ++i) {
        const std::uint64_t case_seed = mix_seed(base_seed, i);
        try {
            reports.push_back(run_case(config[i], case_seed));
        } catch (const std::exception& e) {
            VerificationReport r;
            r.inequality_id = config[i].value("id", "unknown");
            r.pass = false;
            r.note = std::string("error: ") + e.what();
            reports.push_back(std::move(r));
        }
    }
    return reports;
}

SuiteSummary summarize(const std::vector<VerificationReport>& reports) {
    SuiteSummary s;
    s.total = reports.size();
    for (const auto& r : reports) {
        if (r.note.rfind("error: ", 0) == 0) ++s.errors;
        else if (r.pass) ++s.passed;
        else ++s.failed;
    }
    return s;
}

std::string reports_to_jsonl(const std::vector<VerificationReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        out += to_json(r).dump();
        out += '\n';
    }
    return out;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "inequality_id,bound,reference,slack,pass\n";
    char buf[256];
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof(buf), "%s,%.12g,%.12g,%.12g,%s\n", r.inequality_id.c_str(), r.analytic_bound,
                      r.reference, r.statistical_slack, r.pass ? "true" : "false");
        out += buf;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Default grid

namespace {

Json dist_bern(double p) { return {{"family", "bernoulli"}, {"p", p}}; }
Json dist_binom(int n, double p) { return {{"family", "binomial"}, {"n", n}, {"p", p}}; }
Json dist_poisson(double lambda) { return {{"family", "poisson"}, {"lambda", lambda}}; }
Json dist_normal() { return {{"family", "normal01"}}; }
Json dist_exp() { return {{"family", "exponential1"}}; }
Json dist_point(double c) { return {{"family", "point_mass"}, {"c", c}}; }
Json dist_discrete(std::vector<double> pts, std::vector<double> ms) {
    return {{"family", "discrete"}, {"points", pts}, {"masses", ms}};
}
Json dist_rademacher() { return dist_discrete({-1.0, 1.0}, {0.5, 0.5}); }

}  // namespace

Json default_suite_config(std::uint64_t seed) {
    Json cases = Json::array();
    std::mt19937_64 rng(seed);
    const auto uniform = [&rng](double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    // Markov grid (nonnegative laws)
    const std::vector<Json> markov_dists = {
        dist_exp(),        dist_bern(0.3),   dist_bern(0.5),
        dist_bern(0.7),    dist_binom(10, 0.3), dist_poisson(2.5),
        dist_discrete({0.0, 1.5, 4.0}, {0.2, 0.5, 0.3}), dist_point(0.0)};
    for (const auto& d : markov_dists)
        for (double a : {0.5, 1.0, 2.0, 4.0})
            cases.push_back({{"id", "markov"}, {"dist", d}, {"a", a}});
    cases.push_back({{"id", "markov"}, {"dist", dist_exp()}, {"a", 2.0}, {"mode", "mc"}});
    cases.push_back({{"id", "markov"}, {"dist", dist_binom(10, 0.3)}, {"a", 4.0}, {"mode", "mc"}});

    // |X| corollary
    for (double a : {1.0, 2.0, 3.0})
        cases.push_back({{"id", "markov_abs"}, {"dist", dist_normal()}, {"a", a}});
    cases.push_back({{"id", "markov_abs"}, {"dist", dist_rademacher()}, {"a", 0.5}});
    cases.push_back(
        {{"id", "markov_abs"}, {"dist", dist_discrete({-2.0, 0.0, 3.0}, {0.3, 0.4, 0.3})}, {"a", 1.0}});

    // generalized Markov
    for (const auto& d : {dist_exp(), dist_bern(0.5), dist_discrete({0.0, 1.0, 2.0}, {0.5, 0.3, 0.2})})
        for (double a : {1.0, 4.0})
            cases.push_back({{"id", "generalized_markov"}, {"g", "square"}, {"dist", d}, {"a", a}});
    for (double a : {1.0, 3.0}) {
        cases.push_back({{"id", "generalized_markov"}, {"g", "abs"}, {"dist", dist_normal()}, {"a", a},
                         {"mode", "mc"}});
        cases.push_back({{"id", "generalized_markov"}, {"g", "abs"}, {"dist", dist_rademacher()}, {"a", a}});
    }

    // Chebyshev grid
    const std::vector<Json> cheb_dists = {
        dist_bern(0.5),  dist_bern(0.3),      dist_binom(10, 0.5),
        dist_poisson(2.5), dist_exp(),        dist_normal(),
        dist_discrete({-1.0, 0.0, 2.0}, {0.25, 0.5, 0.25}),
        Json{{"family", "mixed"}, {"w", 0.5}, {"discrete", dist_point(0.0)}, {"continuous", dist_exp()}}};
    for (const auto& d : cheb_dists)
        for (double eps : {0.25, 0.5, 1.0, 2.0})
            cases.push_back({{"id", "chebyshev"}, {"dist", d}, {"eps", eps}});
    cases.push_back({{"id", "chebyshev"}, {"dist", dist_normal()}, {"eps", 2.0}, {"mode", "mc"}});
    cases.push_back({{"id", "chebyshev"}, {"dist", dist_exp()}, {"eps", 1.0}, {"mode", "mc"}});

    // Jensen
    for (const auto& psi : {"square", "exp", "abs"})
        for (const auto& d : {dist_bern(0.3), dist_binom(5, 0.4), dist_poisson(2.0),
                              dist_discrete({-1.0, 0.5, 2.0}, {0.3, 0.4, 0.3})})
            cases.push_back({{"id", "jensen"}, {"psi", psi}, {"dist", d}});
    cases.push_back({{"id", "jensen"}, {"psi", Json{{"poly", {1.0, 2.0}}}}, {"dist", dist_bern(0.4)}});
    cases.push_back(
        {{"id", "jensen"}, {"psi", Json{{"poly", {1.0, 2.0}}}}, {"dist", dist_discrete({0.0, 3.0}, {0.6, 0.4})}});
    cases.push_back({{"id", "jensen"}, {"psi", "square"}, {"dist", dist_exp()}});
    cases.push_back({{"id", "jensen"}, {"psi", "square"}, {"dist", dist_normal()}});

    // Hoeffding sum-form verification: exact enumerations
    for (const auto& id : {"hoeffding_v1", "hoeffding_v2"}) {
        for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{5}, std::size_t{10}})
            for (double eps : {0.1, 0.3})
                cases.push_back({{"id", id}, {"law", dist_bern(0.5)}, {"n", n}, {"eps", eps}});
        cases.push_back({{"id", id},
                         {"law", dist_discrete({0.0, 0.5, 1.0}, {0.25, 0.5, 0.25})},
                         {"n", std::size_t{6}},
                         {"eps", 0.2}});
    }
    // and Monte Carlo at larger n
    cases.push_back({{"id", "hoeffding_v2"}, {"law", dist_bern(0.5)}, {"n", std::size_t{50}}, {"eps", 0.2},
                     {"mode", "mc"}});
    cases.push_back({{"id", "hoeffding_v1"}, {"law", dist_bern(0.5)}, {"n", std::size_t{50}}, {"eps", 0.2},
                     {"mode", "mc"}});
    cases.push_back({{"id", "hoeffding_v2"}, {"law", dist_bern(0.5)}, {"n", std::size_t{100}}, {"eps", 0.1},
                     {"mode", "mc"}});
    cases.push_back({{"id", "hoeffding_v2"},
                     {"law", dist_discrete({0.0, 0.25, 1.0}, {0.4, 0.4, 0.2})},
                     {"n", std::size_t{40}},
                     {"eps", 0.15},
                     {"mode", "mc"}});

    // Hoeffding lemma: random mean-zero two-point laws plus Rademacher
    for (int i = 0; i < 20; ++i) {
        const double x1 = -uniform(0.5, 3.0);
        const double x2 = uniform(0.5, 3.0);
        const double m1 = x2 / (x2 - x1);
        cases.push_back({{"id", "hoeffding_lemma"},
                         {"dist", dist_discrete({x1, x2}, {m1, 1.0 - m1})},
                         {"a", x1},
                         {"b", x2},
                         {"s", uniform(0.1, 3.0)}});
    }
    for (double s : {0.5, 1.0, 2.0, 3.0})
        cases.push_back(
            {{"id", "hoeffding_lemma"}, {"dist", dist_rademacher()}, {"a", -1.0}, {"b", 1.0}, {"s", s}});

    // g(u) proposition
    for (int t = 1; t <= 9; ++t)
        cases.push_back({{"id", "g_function"}, {"theta", t / 10.0}});

    // Cauchy-Schwarz
    cases.push_back({{"id", "cauchy_schwarz"}, {"x", dist_bern(0.5)}, {"y", dist_bern(0.5)}});
    cases.push_back({{"id", "cauchy_schwarz"}, {"x", dist_rademacher()}, {"y", dist_rademacher()}});
    cases.push_back({{"id", "cauchy_schwarz"}, {"x", dist_binom(5, 0.3)},
                     {"y", dist_discrete({-1.0, 2.0}, {0.5, 0.5})}});
    cases.push_back({{"id", "cauchy_schwarz"}, {"x", dist_exp()}, {"y", dist_exp()}});
    cases.push_back({{"id", "cauchy_schwarz"}, {"joint", Json{{"diagonal", dist_rademacher()}}}});
    cases.push_back({{"id", "cauchy_schwarz"},
                     {"joint", Json{{"diagonal", dist_discrete({-2.0, 1.0, 3.0}, {0.2, 0.5, 0.3})}}}});
    cases.push_back({{"id", "cauchy_schwarz"},
                     {"joint", Json{{"points", {{0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}}},
                                    {"masses", {0.25, 0.25, 0.5}}}}});
    for (const auto& d : {dist_bern(0.5), dist_poisson(2.5), dist_normal()})
        cases.push_back({{"id", "cauchy_schwarz_single"}, {"dist", d}});

    // Normal tails
    for (double eps : {0.5, 1.0, 1.5, 2.0, 3.0})
        cases.push_back({{"id", "normal_tail"}, {"form", "one_sided"}, {"eps", eps}});
    for (double eps : {0.5, 1.0, 2.0, 3.0})
        cases.push_back({{"id", "normal_tail"}, {"form", "two_sided"}, {"eps", eps}});
    cases.push_back({{"id", "normal_tail"}, {"form", "mean"}, {"n", std::size_t{4}}, {"eps", 0.5}});
    cases.push_back({{"id", "normal_tail"}, {"form", "mean"}, {"n", std::size_t{4}}, {"eps", 1.0}});
    cases.push_back({{"id", "normal_tail"}, {"form", "mean"}, {"n", std::size_t{16}}, {"eps", 1.0}});

    // SLLN trajectories
    for (double p : {0.3, 0.5, 0.7})
        cases.push_back({{"id", "slln"},
                         {"p", p},
                         {"schedule", {std::size_t{100}, std::size_t{1000}, std::size_t{10000}}}});

    // Levy maximal inequality
    for (std::size_t n : {std::size_t{8}, std::size_t{10}})
        for (double eps : {2.0, 3.0})
            cases.push_back({{"id", "levy"}, {"law", dist_rademacher()}, {"n", n}, {"eps", eps}});
    cases.push_back({{"id", "levy"},
                     {"law", dist_discrete({-1.0, 0.0, 1.0}, {0.25, 0.5, 0.25})},
                     {"n", std::size_t{6}},
                     {"eps", 1.5}});
    for (double eps : {2.0, 4.0})
        cases.push_back({{"id", "levy"}, {"law", dist_normal()}, {"n", std::size_t{20}}, {"eps", eps},
                         {"mode", "mc"}});
    cases.push_back({{"id", "levy"}, {"law", dist_exp()}, {"n", std::size_t{15}}, {"eps", 6.0},
                     {"mode", "mc"}});

    // Holder
    const std::vector<std::pair<double, double>> pq = {{2.0, 2.0}, {3.0, 1.5}, {4.0, 4.0 / 3.0}};
    for (const auto& [p, q] : pq) {
        cases.push_back({{"id", "holder"}, {"x", dist_bern(0.5)}, {"y", dist_bern(0.5)}, {"p", p}, {"q", q}});
        cases.push_back({{"id", "holder"},
                         {"x", dist_rademacher()},
                         {"y", dist_discrete({-1.0, 0.0, 2.0}, {0.3, 0.4, 0.3})},
                         {"p", p},
                         {"q", q}});
        cases.push_back({{"id", "holder"}, {"x", dist_binom(5, 0.4)}, {"y", dist_bern(0.3)}, {"p", p}, {"q", q}});
    }
    cases.push_back({{"id", "holder"}, {"joint", Json{{"diagonal", dist_rademacher()}}}, {"p", 2.0}});
    cases.push_back({{"id", "holder"},
                     {"joint", Json{{"points", {{-1.0, 1.0}, {1.0, 2.0}, {2.0, -1.0}}},
                                    {"masses", {0.3, 0.4, 0.3}}}},
                     {"p", 3.0}});
    // Lyapunov reduction with Y == 1
    cases.push_back({{"id", "holder"}, {"x", dist_binom(6, 0.3)}, {"y", dist_point(1.0)}, {"p", 3.0}});
    cases.push_back({{"id", "holder"},
                     {"x", dist_discrete({-3.0, 0.5, 2.0}, {0.2, 0.5, 0.3})},
                     {"y", dist_point(1.0)},
                     {"p", 2.0}});

    // Minkowski
    for (double p : {1.0, 2.0, 3.0}) {
        cases.push_back({{"id", "minkowski"}, {"x", dist_bern(0.5)}, {"y", dist_bern(0.5)}, {"p", p}});
        cases.push_back({{"id", "minkowski"}, {"x", dist_rademacher()}, {"y", dist_rademacher()}, {"p", p}});
        cases.push_back({{"id", "minkowski"},
                         {"x", dist_discrete({-1.0, 1.0, 2.0}, {0.3, 0.3, 0.4})},
                         {"y", dist_binom(4, 0.4)},
                         {"p", p}});
    }
    cases.push_back({{"id", "minkowski"}, {"joint", Json{{"diagonal", dist_rademacher()}}}, {"p", 2.0}});
    cases.push_back({{"id", "minkowski"}, {"x", dist_bern(0.3)}, {"y", dist_point(0.0)}, {"p", 2.0}});

    // pin per-case seeds so reruns of the emitted config are byte-identical
    for (std::size_t i = 0; i < cases.size(); ++i)
        if (!cases[i].contains("seed")) cases[i]["seed"] = mix_seed(seed, i);
    return cases;
}

}  // namespace probkit
