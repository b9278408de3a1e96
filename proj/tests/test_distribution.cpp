#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "probkit/distribution.hpp"
#include "probkit/intervals.hpp"

using namespace probkit;

TEST_CASE("bernoulli cdf follows the piecewise form") {
    const auto f = DistributionFunction::bernoulli(0.3);
    CHECK(f.cdf(-0.5) == 0.0);
    CHECK(f.cdf(0.0) == doctest::Approx(0.3));
    CHECK(f.cdf(0.5) == doctest::Approx(0.3));
    CHECK(f.cdf(1.0) == doctest::Approx(1.0));
    CHECK(f.cdf(2.0) == doctest::Approx(1.0));
}

TEST_CASE("exponential cdf starts at zero; continuous laws have no left-limit gap") {
    const auto f = DistributionFunction::exponential1();
    CHECK(f.cdf(0.0) == 0.0);
    CHECK(f.cdf(-1.0) == 0.0);
    for (double x : {-1.0, 0.0, 0.5, 1.0, 3.0, 10.0}) CHECK(f.cdf_left(x) == f.cdf(x));
}

TEST_CASE("jumps") {
    CHECK(DistributionFunction::bernoulli(0.3).jump(1.0) == doctest::Approx(0.7));
    const auto normal = DistributionFunction::normal01();
    for (double x : {-2.0, 0.0, 1.3}) CHECK(normal.jump(x) == 0.0);

    const auto mixed = DistributionFunction::mixed(0.5, DistributionFunction::point_mass(0.0),
                                                   DistributionFunction::exponential1());
    CHECK(mixed.jump(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    // brute-force finite difference of the mixed cdf around the atom
    const double fd = mixed.cdf(0.0) - mixed.cdf(0.0 - 1e-9);
    CHECK(fd == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("bracket probabilities") {
    const auto exp1 = DistributionFunction::exponential1();
    CHECK(exp1.prob_interval(Bracket::Open, 0.0, std::numeric_limits<double>::infinity()) ==
          doctest::Approx(1.0));

    const auto bern = DistributionFunction::bernoulli(0.3);
    CHECK(bern.prob_interval(Bracket::Closed, 1.0, 1.0) == doctest::Approx(0.7));
    CHECK(bern.prob_interval(Bracket::OpenClosed, 1.0, 1.0) == 0.0);
    // mass enumeration cross-check on [0, 1]
    CHECK(bern.prob_interval(Bracket::Closed, 0.0, 1.0) == doctest::Approx(1.0));
    CHECK(bern.prob_interval(Bracket::Open, 0.0, 1.0) == doctest::Approx(0.0));
    CHECK(bern.prob_interval(Bracket::ClosedOpen, 0.0, 1.0) == doctest::Approx(0.3));

    const auto normal = DistributionFunction::normal01();
    const double oc = normal.prob_interval(Bracket::OpenClosed, -1.0, 1.0);
    for (auto br : {Bracket::Open, Bracket::ClosedOpen, Bracket::Closed})
        CHECK(normal.prob_interval(br, -1.0, 1.0) == doctest::Approx(oc).epsilon(1e-15));

    CHECK_THROWS_AS(bern.prob_interval(Bracket::Open, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("support and mass") {
    const auto b2 = DistributionFunction::binomial(2, 0.5).support_and_mass();
    const auto oracle = oracles::binomial_masses_pascal(2, 0.5);
    REQUIRE(b2.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(b2[k].first == static_cast<double>(k));
        CHECK(b2[k].second == doctest::Approx(oracle[k]).epsilon(1e-13));
    }

    const auto bern = DistributionFunction::bernoulli(0.25).support_and_mass();
    CHECK(bern[0] == std::pair{0.0, 0.25});
    CHECK(bern[1].second == doctest::Approx(0.75));

    const auto pm = DistributionFunction::point_mass(4.2).support_and_mass();
    REQUIRE(pm.size() == 1);
    CHECK(pm[0] == std::pair{4.2, 1.0});

    CHECK_THROWS_AS(DistributionFunction::normal01().support_and_mass(), hypothesis_error);
}

TEST_CASE("binomial masses agree with the Pascal oracle at larger n") {
    const auto law = DistributionFunction::binomial(10, 0.3).support_and_mass();
    const auto oracle = oracles::binomial_masses_pascal(10, 0.3);
    for (std::size_t k = 0; k <= 10; ++k) CHECK(law[k].second == doctest::Approx(oracle[k]).epsilon(1e-12));
}

TEST_CASE("poisson truncation deficit stays below 1e-12 and is not renormalized") {
    for (double lambda : {0.5, 2.5, 10.0}) {
        double total = 0.0;
        for (const auto& [x, m] : DistributionFunction::poisson(lambda).support_and_mass()) total += m;
        CHECK(total <= 1.0);
        CHECK(1.0 - total < 1e-12);
    }
}

TEST_CASE("discrete constructor validation") {
    CHECK_THROWS_AS(DistributionFunction::discrete({0.0, 0.0}, {0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(DistributionFunction::discrete({0.0, 1.0}, {0.5, 0.4}), std::invalid_argument);
    CHECK_THROWS_AS(DistributionFunction::discrete({0.0, 1.0}, {-0.5, 1.5}), std::invalid_argument);
    CHECK_THROWS_AS(DistributionFunction::mixed(1.5, DistributionFunction::point_mass(0.0),
                                                DistributionFunction::exponential1()),
                    std::invalid_argument);
}

TEST_CASE("quantiles and medians") {
    CHECK(std::abs(DistributionFunction::normal01().median()) < 1e-9);
    CHECK(DistributionFunction::bernoulli(0.3).median() == 1.0);
    // independent bisection oracle for 1 - e^-x = 1/2
    const double ln2 = oracles::bisect([](double x) { return 1.0 - std::exp(-x) - 0.5; }, 0.0, 2.0);
    CHECK(DistributionFunction::exponential1().median() == doctest::Approx(ln2).epsilon(1e-9));
    // generalized inverse picks the lower point at exact mass 1/2
    CHECK(DistributionFunction::discrete({-1.0, 1.0}, {0.5, 0.5}).median() == -1.0);
}

TEST_CASE("sampling is deterministic, matches means, and passes a KS check") {
    const std::size_t n = 1000000;
    const auto bern = DistributionFunction::bernoulli(0.5);
    const auto s1 = bern.sample(n, 42);
    const auto s2 = bern.sample(n, 42);
    CHECK(s1 == s2);
    double mean = 0.0;
    for (double v : s1) mean += v;
    mean /= static_cast<double>(n);
    CHECK(std::abs(mean - 0.5) < 0.002);  // binomial standard error 0.0005, 4 sigma slack
    CHECK(kolmogorov_distance(bern, s1) < 0.005);

    const auto exp1 = DistributionFunction::exponential1();
    const auto se = exp1.sample(n, 7);
    double mean_e = 0.0;
    for (double v : se) mean_e += v;
    mean_e /= static_cast<double>(n);
    CHECK(std::abs(mean_e - 1.0) < 0.005);
    CHECK(kolmogorov_distance(exp1, se) < 0.005);

    const auto normal = DistributionFunction::normal01();
    CHECK(kolmogorov_distance(normal, normal.sample(n, 11)) < 0.005);

    const auto pm = DistributionFunction::point_mass(3.5);
    for (double v : pm.sample(100, 5)) CHECK(v == 3.5);

    const auto mixed = DistributionFunction::mixed(0.5, DistributionFunction::point_mass(0.0),
                                                   DistributionFunction::exponential1());
    CHECK(kolmogorov_distance(mixed, mixed.sample(n, 3)) < 0.005);
}

TEST_CASE("right-continuity probes shrink monotonically") {
    const auto laws = {DistributionFunction::bernoulli(0.3),
                       DistributionFunction::binomial(5, 0.4),
                       DistributionFunction::mixed(0.25, DistributionFunction::point_mass(1.0),
                                                   DistributionFunction::exponential1())};
    for (const auto& f : laws) {
        for (double x : f.discontinuities()) {
            double prev = 1.0;
            for (double h : {1e-3, 1e-6, 1e-9}) {
                const double d = std::abs(f.cdf(x + h) - f.cdf(x));
                CHECK(d <= prev + 1e-15);
                prev = d;
            }
            CHECK(prev <= 1e-9);
        }
    }
}

TEST_CASE("jump/cdf ordering invariant on probe points") {
    oracles::TestRng rng(5);
    const auto laws = {DistributionFunction::bernoulli(0.4), DistributionFunction::poisson(2.0),
                       DistributionFunction::normal01(),
                       DistributionFunction::mixed(0.5, DistributionFunction::point_mass(0.0),
                                                   DistributionFunction::exponential1())};
    for (const auto& f : laws)
        for (int i = 0; i < 200; ++i) {
            const double x = rng.uniform(-8.0, 8.0);
            const double j = f.jump(x), c = f.cdf(x);
            REQUIRE(j >= 0.0);
            REQUIRE(j <= c + 1e-15);
            REQUIRE(c <= 1.0 + 1e-15);
            REQUIRE(f.cdf_left(x) <= c + 1e-15);
        }
}

TEST_CASE("interval probability equals the induced length (cross-module)") {
    const auto f = DistributionFunction::mixed(0.3, DistributionFunction::point_mass(1.0),
                                               DistributionFunction::exponential1());
    oracles::TestRng rng(17);
    for (int i = 0; i < 200; ++i) {
        const double a = rng.uniform(-2.0, 4.0);
        const double b = a + rng.uniform(0.0, 4.0);
        const auto piece = normalize({SemiOpenInterval(a, b + 1e-9)});
        CHECK(f.prob_interval(Bracket::OpenClosed, a, b + 1e-9) ==
              doctest::Approx(length_under(f, piece)).epsilon(1e-15));
    }
}

TEST_CASE("purely discrete laws concentrate on their support") {
    const auto f = DistributionFunction::binomial(6, 0.4);
    // P(B) = sum of jumps over support within B, for interval unions B
    const auto b = normalize({SemiOpenInterval(0.5, 3.0), SemiOpenInterval(4.5, 9.0)});
    double expect = 0.0;
    for (const auto& [x, m] : f.support_and_mass())
        if (b.contains(x)) expect += m;
    CHECK(length_under(f, b) == doctest::Approx(expect).epsilon(1e-13));
    // off-support points carry no mass
    CHECK(f.jump(2.5) == 0.0);
}

TEST_CASE("empirical cdf is a valid equal-mass discrete law") {
    const std::vector<double> sample{3.0, 1.0, 2.0, 1.0};
    const auto e = empirical_cdf(sample);
    const auto sm = e.support_and_mass();
    REQUIRE(sm.size() == 3);
    CHECK(sm[0] == std::pair{1.0, 0.5});
    CHECK(sm[1] == std::pair{2.0, 0.25});
    CHECK(sm[2].second == doctest::Approx(0.25));
    CHECK(kolmogorov_distance(e, sample) == 0.0);
}
