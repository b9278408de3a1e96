#pragma once

#include <string>

#include "json.hpp"
#include "probkit/distribution.hpp"
#include "probkit/expectation.hpp"
#include "probkit/inequalities.hpp"
#include "probkit/intervals.hpp"
#include "probkit/lebesgue.hpp"
#include "probkit/stieltjes.hpp"

namespace probkit {

using Json = nlohmann::json;

/// Interval unions serialize to arrays of [lower, upper] pairs with the
/// strings "-inf" / "+inf" for unbounded endpoints.
Json interval_union_to_json(const IntervalUnion& b);
IntervalUnion interval_union_from_json(const Json& j);

/// Distribution specs:
///   {"family":"bernoulli","p":0.3}      {"family":"binomial","n":10,"p":0.5}
///   {"family":"poisson","lambda":2.0}   {"family":"normal01"}
///   {"family":"exponential1"}           {"family":"discrete","points":[...],"masses":[...]}
///   {"family":"mixed","w":0.5,"discrete":{...},"continuous":{...}}
DistributionFunction distribution_from_json(const Json& j);
Json distribution_to_json(const DistributionFunction& f);

Json to_json(const IntegrationResult& r);
Json to_json(const MomentResult& r);
Json to_json(const VerificationReport& r);
Json to_json(const ConvergenceReport& r);
Json to_json(const SllnReport& r);
Json to_json(const GFunctionReport& r);

std::string moment_method_name(MomentMethod m);

/// Named test functions for CLI/case specs: "identity", "square", "abs",
/// "exp", "cosh", or {"poly":[c0,c1,...]}.
std::pair<std::function<double(double)>, std::string> named_function(const Json& j);
/// Same, but as an Integrand (keeps the polynomial form when given one).
std::pair<Integrand, std::string> named_integrand(const Json& j);

}  // namespace probkit
