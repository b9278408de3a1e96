#include "probkit/json_io.hpp"

#include <cmath>

namespace probkit {

Json interval_union_to_json(const IntervalUnion& b) {
    Json arr = Json::array();
    for (const auto& piece : b.pieces()) {
        Json pair = Json::array();
        if (piece.lower.is_neg_inf()) pair.push_back("-inf");
        else pair.push_back(piece.lower.value());
        if (piece.upper.is_pos_inf()) pair.push_back("+inf");
        else pair.push_back(piece.upper.value());
        arr.push_back(std::move(pair));
    }
    return arr;
}

namespace {

ExtendedReal endpoint_from_json(const Json& j, bool is_lower) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "-inf") return ExtendedReal::neg_inf();
        if (s == "+inf" || s == "inf") return ExtendedReal::pos_inf();
        throw std::invalid_argument("bad interval endpoint '" + s + "' (expected a number, \"-inf\" or \"+inf\")");
    }
    if (!j.is_number()) throw std::invalid_argument("interval endpoints must be numbers or \"-inf\"/\"+inf\"");
    (void)is_lower;
    return ExtendedReal::finite(j.get<double>());
}

}  // namespace

IntervalUnion interval_union_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("interval union must be a JSON array of [lower, upper] pairs");
    std::vector<SemiOpenInterval> raw;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("each interval must be a two-element [lower, upper] array");
        raw.emplace_back(endpoint_from_json(pair[0], true), endpoint_from_json(pair[1], false));
    }
    return normalize(std::move(raw));
}

DistributionFunction distribution_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("family"))
        throw std::invalid_argument("distribution spec must be an object with a \"family\" field");
    const std::string family = j.at("family").get<std::string>();
    if (family == "bernoulli") return DistributionFunction::bernoulli(j.at("p").get<double>());
    if (family == "binomial")
        return DistributionFunction::binomial(j.at("n").get<int>(), j.at("p").get<double>());
    if (family == "poisson") return DistributionFunction::poisson(j.at("lambda").get<double>());
    if (family == "normal01") return DistributionFunction::normal01();
    if (family == "exponential1") return DistributionFunction::exponential1();
    if (family == "point_mass") return DistributionFunction::point_mass(j.at("c").get<double>());
    if (family == "discrete")
        return DistributionFunction::discrete(j.at("points").get<std::vector<double>>(),
                                              j.at("masses").get<std::vector<double>>());
    if (family == "mixed")
        return DistributionFunction::mixed(j.at("w").get<double>(), distribution_from_json(j.at("discrete")),
                                           distribution_from_json(j.at("continuous")));
    throw std::invalid_argument("unknown distribution family '" + family + "'");
}

Json distribution_to_json(const DistributionFunction& f) {
    switch (f.family()) {
        case Family::Bernoulli: return {{"family", "bernoulli"}, {"p", f.param_p()}};
        case Family::Binomial: return {{"family", "binomial"}, {"n", f.param_n()}, {"p", f.param_p()}};
        case Family::Poisson: return {{"family", "poisson"}, {"lambda", f.param_lambda()}};
        case Family::Normal01: return {{"family", "normal01"}};
        case Family::Exponential1: return {{"family", "exponential1"}};
        case Family::Discrete: {
            std::vector<double> pts, ms;
            for (const auto& [x, m] : f.support_and_mass()) {
                pts.push_back(x);
                ms.push_back(m);
            }
            return {{"family", "discrete"}, {"points", pts}, {"masses", ms}};
        }
        case Family::Mixed:
            return {{"family", "mixed"},
                    {"w", f.discrete_weight()},
                    {"discrete", distribution_to_json(*f.mixed_discrete())},
                    {"continuous", distribution_to_json(*f.mixed_continuous())}};
        case Family::Continuous: break;
    }
    throw std::invalid_argument("custom continuous laws have no JSON form");
}

Json to_json(const IntegrationResult& r) {
    return {{"value", r.value},   {"lower", r.lower},           {"upper", r.upper},
            {"gap", r.gap},       {"refinements", r.refinements}, {"converged", r.converged}};
}

std::string moment_method_name(MomentMethod m) {
    switch (m) {
        case MomentMethod::ClosedForm: return "closed_form";
        case MomentMethod::Stieltjes: return "stieltjes";
        case MomentMethod::Enumeration: return "enumeration";
    }
    return "unknown";
}

Json to_json(const MomentResult& r) {
    return {{"order", r.order},
            {"value", r.value},
            {"method", moment_method_name(r.method)},
            {"truncation_error", r.truncation_error}};
}

Json to_json(const VerificationReport& r) {
    Json j{{"inequality_id", r.inequality_id},
           {"analytic_bound", r.analytic_bound},
           {"reference", r.reference},
           {"mode", r.mode == VerifyMode::Exact ? "exact" : "monte_carlo"},
           {"sample_count", r.sample_count},
           {"seed", r.seed},
           {"statistical_slack", r.statistical_slack},
           {"pass", r.pass},
           {"margin", r.margin},
           {"vacuous", r.vacuous}};
    if (!r.paper_form.empty()) j["paper_form"] = r.paper_form;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json to_json(const ConvergenceReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"n", e.n}, {"integral_n", e.integral_n}, {"gap_n", e.gap_n}});
    Json j{{"entries", entries},
           {"limit_integral", r.limit_integral},
           {"final_integral", r.final_integral},
           {"hypothesis_ok", r.hypothesis_ok},
           {"conclusion_holds", r.conclusion_holds},
           {"threshold", r.threshold}};
    if (!r.hypothesis_note.empty()) j["hypothesis_note"] = r.hypothesis_note;
    return j;
}

Json to_json(const SllnReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"n", e.n}, {"mean", e.mean}, {"envelope", e.envelope}, {"inside", e.inside}});
    return {{"p", r.p}, {"seed", r.seed}, {"delta", r.delta}, {"entries", entries},
            {"all_inside", r.all_inside}};
}

Json to_json(const GFunctionReport& r) {
    return {{"theta", r.theta},
            {"g_at_zero", r.g_at_zero},
            {"gprime_at_zero", r.gprime_at_zero},
            {"max_second_derivative", r.max_second_derivative},
            {"argmax_u", r.argmax_u},
            {"pass", r.pass}};
}

std::pair<std::function<double(double)>, std::string> named_function(const Json& j) {
    auto [integrand, name] = named_integrand(j);
    return {[integrand](double x) { return integrand(x); }, name};
}

std::pair<Integrand, std::string> named_integrand(const Json& j) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "identity") return {Integrand(Polynomial::identity()), name};
        if (name == "square") return {Integrand(Polynomial({0.0, 0.0, 1.0})), name};
        if (name == "abs") {
            Integrand f{std::function<double(double)>([](double x) { return std::abs(x); })};
            f.declare_extrema({0.0});
            return {f, name};
        }
        if (name == "exp") return {Integrand{std::function<double(double)>([](double x) { return std::exp(x); })}, name};
        if (name == "cosh") {
            Integrand f{std::function<double(double)>([](double x) { return std::cosh(x); })};
            f.declare_extrema({0.0});
            return {f, name};
        }
        throw std::invalid_argument("unknown function name '" + name + "'");
    }
    if (j.is_object() && j.contains("poly")) {
        const auto coeffs = j.at("poly").get<std::vector<double>>();
        return {Integrand(Polynomial(coeffs)), "poly" + Json(coeffs).dump()};
    }
    throw std::invalid_argument("function spec must be a known name or {\"poly\": [...]}");
}

}  // namespace probkit
