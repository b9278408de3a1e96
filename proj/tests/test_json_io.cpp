#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "probkit/json_io.hpp"
#include "probkit/suite.hpp"

using namespace probkit;

TEST_CASE("interval unions round-trip with infinity markers") {
    const Json j = Json::parse(R"([["-inf",0],[1,2],[3,"+inf"]])");
    const auto b = interval_union_from_json(j);
    REQUIRE(b.size() == 3);
    CHECK(b.pieces()[0].lower.is_neg_inf());
    CHECK(b.pieces()[2].upper.is_pos_inf());
    CHECK(interval_union_to_json(b) == j);

    CHECK_THROWS_AS(interval_union_from_json(Json::parse(R"([[2,1]])")), std::invalid_argument);
    CHECK_THROWS_AS(interval_union_from_json(Json::parse(R"([["oops",1]])")), std::invalid_argument);
    CHECK_THROWS_AS(interval_union_from_json(Json::parse(R"({"not":"an array"})")), std::invalid_argument);
}

TEST_CASE("distribution specs parse and serialize") {
    const auto bern = distribution_from_json(Json::parse(R"({"family":"bernoulli","p":0.3})"));
    CHECK(bern.family() == Family::Bernoulli);
    CHECK(bern.cdf(0.0) == doctest::Approx(0.3));

    const auto mixed = distribution_from_json(Json::parse(
        R"({"family":"mixed","w":0.5,"discrete":{"family":"point_mass","c":0},"continuous":{"family":"exponential1"}})"));
    CHECK(mixed.jump(0.0) == doctest::Approx(0.5));
    CHECK(distribution_to_json(mixed)["w"] == 0.5);

    const auto disc = distribution_from_json(Json::parse(
        R"({"family":"discrete","points":[-1,2],"masses":[0.25,0.75]})"));
    CHECK(distribution_to_json(disc)["points"] == Json({-1.0, 2.0}));

    CHECK_THROWS_AS(distribution_from_json(Json::parse(R"({"family":"weibull"})")), std::invalid_argument);
    CHECK_THROWS_AS(distribution_from_json(Json::parse(R"({"p":0.3})")), std::invalid_argument);
}

TEST_CASE("result serialization carries methods and error bounds") {
    IntegrationResult ir;
    ir.value = 0.5;
    ir.lower = 0.4;
    ir.upper = 0.6;
    ir.gap = 0.2;
    ir.refinements = 12;
    ir.converged = false;
    const Json j = to_json(ir);
    CHECK(j["value"] == 0.5);
    CHECK(j["converged"] == false);

    MomentResult mr;
    mr.order = 2;
    mr.value = 3.0;
    mr.method = MomentMethod::Enumeration;
    mr.truncation_error = 0.0;
    CHECK(to_json(mr)["method"] == "enumeration");
}

TEST_CASE("named functions") {
    const auto [sq, name] = named_function(Json("square"));
    CHECK(sq(3.0) == 9.0);
    CHECK(name == "square");
    const auto [poly, pname] = named_integrand(Json::parse(R"({"poly":[1,0,2]})"));
    CHECK(poly(2.0) == doctest::Approx(9.0));
    REQUIRE(poly.poly() != nullptr);
    CHECK_THROWS_AS(named_function(Json("sinh")), std::invalid_argument);
}

TEST_CASE("suite: empty config, case errors, determinism") {
    CHECK(run_suite(Json::array(), 42).empty());

    // a case that cannot run is recorded, and the suite continues
    const Json cfg = Json::parse(
        R"([{"id":"markov","dist":{"family":"normal01"},"a":1.0},
            {"id":"markov","dist":{"family":"exponential1"},"a":2.0}])");
    const auto reports = run_suite(cfg, 1);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].note.rfind("error: ", 0) == 0);
    CHECK(reports[1].pass);
    const auto sum = summarize(reports);
    CHECK(sum.errors == 1);
    CHECK(sum.passed == 1);

    // byte-identical outputs for identical config and seed, including MC cases
    const Json mc_cfg = Json::parse(
        R"([{"id":"markov","dist":{"family":"exponential1"},"a":2.0,"mode":"mc","trials":20000},
            {"id":"levy","law":{"family":"normal01"},"n":5,"eps":2.0,"mode":"mc","trials":10000},
            {"id":"slln","p":0.5,"schedule":[100,1000]}])");
    const auto r1 = run_suite(mc_cfg, 7);
    const auto r2 = run_suite(mc_cfg, 7);
    CHECK(reports_to_jsonl(r1) == reports_to_jsonl(r2));
    CHECK(reports_to_csv(r1) == reports_to_csv(r2));
    // and a different seed moves the Monte Carlo references
    const auto r3 = run_suite(mc_cfg, 8);
    CHECK(reports_to_jsonl(r1) != reports_to_jsonl(r3));
}

TEST_CASE("default grid covers every inequality id with at least 200 cases") {
    const Json grid = default_suite_config(42);
    CHECK(grid.size() >= 200);
    std::set<std::string> ids;
    for (const auto& c : grid) ids.insert(c.at("id").get<std::string>());
    for (const char* required :
         {"markov", "markov_abs", "generalized_markov", "chebyshev", "jensen", "hoeffding_v1", "hoeffding_v2",
          "hoeffding_lemma", "g_function", "cauchy_schwarz", "cauchy_schwarz_single", "normal_tail", "slln",
          "levy", "holder", "minkowski"})
        CHECK(ids.count(required) == 1);
    // every case carries its own seed so reruns are reproducible
    for (const auto& c : grid) CHECK(c.contains("seed"));
}

TEST_CASE("csv summary has the fixed column set") {
    VerificationReport r;
    r.inequality_id = "markov";
    r.analytic_bound = 0.5;
    r.reference = 0.1;
    r.statistical_slack = 0.0;
    r.pass = true;
    const std::string csv = reports_to_csv({r});
    CHECK(csv.rfind("inequality_id,bound,reference,slack,pass\n", 0) == 0);
    CHECK(csv.find("markov,0.5,0.1,0,true") != std::string::npos);
}
