#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "probkit/lebesgue.hpp"

using namespace probkit;

namespace {

IntervalUnion iv(double lo, double hi) { return IntervalUnion::of(lo, hi); }

}  // namespace

TEST_CASE("simple-function integrals over finite spaces") {
    const auto space = FiniteMeasureSpace::counting({0.0, 1.0, 2.0, 3.0});
    const auto ind = SimpleOnSpace::from_pieces({{1.0, {1, 3}}}, 4);
    CHECK(integrate_simple(ind, space) == 2.0);  // counting measure of the set

    const auto weighted = FiniteMeasureSpace({0.0, 1.0}, {0.3, 0.5});
    const auto s = SimpleOnSpace::from_pieces({{2.0, {0}}, {-1.0, {1}}}, 2);
    CHECK(integrate_simple(s, weighted) == doctest::Approx(0.1).epsilon(1e-14));

    CHECK_THROWS_AS(SimpleOnSpace::from_pieces({{1.0, {0, 1}}, {2.0, {1}}}, 3), std::invalid_argument);
}

TEST_CASE("brute-force agreement on random simple functions") {
    oracles::TestRng rng(404);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 10));
        std::vector<double> pts(n), w(n), vals(n);
        for (std::size_t i = 0; i < n; ++i) {
            pts[i] = static_cast<double>(i);
            w[i] = rng.uniform(0.0, 2.0);
            vals[i] = rng.uniform(-3.0, 3.0);
        }
        const FiniteMeasureSpace mu(pts, w);
        const auto s = SimpleOnSpace::from_values(vals);
        double brute = 0.0;
        for (std::size_t i = 0; i < n; ++i) brute += vals[i] * w[i];
        REQUIRE(integrate_simple(s, mu) == doctest::Approx(brute).epsilon(1e-12));
    }
}

TEST_CASE("the rational indicator integrates to zero against length") {
    const auto s = SimpleOnLine::from_pieces({{1.0, TaggedNullSet{}}});
    CHECK(integrate_simple(s, nullptr, iv(0.0, 1.0)) == 0.0);
    // 1 on Q, 0 elsewhere: the complementary piece contributes 0 anyway
    const auto full = SimpleOnLine::from_pieces({{1.0, TaggedNullSet{}}, {0.0, iv(0.0, 1.0)}});
    CHECK(integrate_simple(full, nullptr, iv(0.0, 1.0)) == 0.0);
}

TEST_CASE("line simple functions against identity and distribution lengths") {
    const auto s = SimpleOnLine::from_pieces({{2.0, iv(0.0, 1.0)}, {1.0, iv(1.0, 3.0)}});
    CHECK(integrate_simple(s, nullptr) == doctest::Approx(4.0));
    const auto exp1 = DistributionFunction::exponential1();
    const double expected = 2.0 * (exp1.cdf(1.0) - exp1.cdf(0.0)) + 1.0 * (exp1.cdf(3.0) - exp1.cdf(1.0));
    CHECK(integrate_simple(s, &exp1) == doctest::Approx(expected).epsilon(1e-14));
    CHECK_THROWS_AS(SimpleOnLine::from_pieces({{1.0, iv(0.0, 2.0)}, {2.0, iv(1.0, 3.0)}}),
                    std::invalid_argument);
}

TEST_CASE("positive and negative parts") {
    const auto nonneg = SimpleOnSpace::from_values({0.0, 1.0, 2.0});
    const auto [np, nn] = pos_neg_split(nonneg);
    CHECK(nn.pieces().empty());

    const auto f = SimpleOnSpace::from_values({-1.0, 2.0});
    const auto [fp, fm] = pos_neg_split(f);
    CHECK(fp.at(0) == 0.0);
    CHECK(fp.at(1) == 2.0);
    CHECK(fm.at(0) == 1.0);
    CHECK(fm.at(1) == 0.0);

    oracles::TestRng rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 8));
        std::vector<double> pts(n), w(n), vals(n);
        for (std::size_t i = 0; i < n; ++i) {
            pts[i] = static_cast<double>(i);
            w[i] = rng.uniform(0.0, 1.0);
            vals[i] = rng.uniform(-2.0, 2.0);
        }
        const FiniteMeasureSpace mu(pts, w);
        const auto g = SimpleOnSpace::from_values(vals);
        const auto [gp, gm] = pos_neg_split(g);
        REQUIRE(integrate_simple(g, mu) ==
                doctest::Approx(integrate_simple(gp, mu) - integrate_simple(gm, mu)).epsilon(1e-12));
        // |f| = f+ + f- pointwise
        for (std::size_t i = 0; i < n; ++i) REQUIRE(gp.at(i) + gm.at(i) == doctest::Approx(std::abs(vals[i])));
    }
}

TEST_CASE("dyadic approximation") {
    const auto one_atom = FiniteMeasureSpace::counting({0.7});
    const auto idf = [](double x) { return x; };
    CHECK(approximate_by_simple(idf, one_atom, 1).at(0) == doctest::Approx(0.5));
    CHECK(approximate_by_simple(idf, one_atom, 2).at(0) == doctest::Approx(0.5));
    CHECK(approximate_by_simple(idf, one_atom, 3).at(0) == doctest::Approx(0.625));

    const auto constant = [](double) { return 1.0; };
    CHECK(approximate_by_simple(constant, one_atom, 3).at(0) == doctest::Approx(1.0));

    CHECK_THROWS_AS(approximate_by_simple([](double) { return -1.0; }, one_atom, 2), std::invalid_argument);

    // monotone in the level, error within max(2^-n, mass above the cap)
    const auto grid = FiniteMeasureSpace::grid(0.0, 1.0, 64);
    const auto f = [](double x) { return 3.0 * x * x; };
    double prev_err = 10.0;
    for (int n = 1; n <= 6; ++n) {
        const auto sn = approximate_by_simple(f, grid, n);
        double sup_err = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double e = f(grid.point(i)) - sn.at(i);
            REQUIRE(e >= -1e-12);  // approximation from below
            sup_err = std::max(sup_err, e);
            if (n > 1) REQUIRE(sn.at(i) >= approximate_by_simple(f, grid, n - 1).at(i) - 1e-12);
        }
        double fmax = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) fmax = std::max(fmax, f(grid.point(i)));
        const double bound = std::max(std::pow(2.0, -n), fmax - n);  // construction bound
        CHECK(sup_err <= bound + 1e-12);
        prev_err = sup_err;
    }
    CHECK(prev_err <= std::pow(2.0, -6) + 1e-12);
}

TEST_CASE("monotone convergence on a grid space") {
    const auto grid = FiniteMeasureSpace::grid(0.0, 1.0, 256);
    const auto f = [](double x) { return x; };
    const auto seq = [&](int n, double x) {
        const double scale = std::pow(2.0, n);
        return std::min(static_cast<double>(n), std::floor(f(x) * scale) / scale);
    };
    const auto rep = mct_check(seq, f, {1, 2, 4, 8, 16, 24}, grid, 1e-6);
    CHECK(rep.hypothesis_ok);
    CHECK(rep.conclusion_holds);
    CHECK(rep.limit_integral == doctest::Approx(0.5));  // midpoint grid sums x exactly
    for (std::size_t i = 1; i < rep.entries.size(); ++i)
        CHECK(rep.entries[i].integral_n >= rep.entries[i - 1].integral_n - 1e-12);
}

TEST_CASE("constant sequence converges at the first step") {
    const auto space = FiniteMeasureSpace::counting({0.0, 1.0});
    const auto rep = mct_check([](int, double x) { return x; }, [](double x) { return x; }, {1, 2}, space);
    CHECK(rep.hypothesis_ok);
    CHECK(rep.entries.front().gap_n == 0.0);
    CHECK(rep.conclusion_holds);
}

TEST_CASE("the escaping-mass sequence violates the MCT hypotheses and keeps integral 1") {
    // f_n = n * indicator(0, 1/n], pointwise limit 0
    const auto gen = [](int n) {
        return SimpleOnLine::indicator(IntervalUnion::of(0.0, 1.0 / n), static_cast<double>(n));
    };
    const auto rep = mct_check_line(gen, SimpleOnLine::zero(), {1, 2, 4, 8, 16}, nullptr, 1e-6);
    CHECK_FALSE(rep.hypothesis_ok);  // not monotone toward its declared limit
    for (const auto& e : rep.entries) CHECK(e.integral_n == doctest::Approx(1.0));
    CHECK_FALSE(rep.conclusion_holds);
}

TEST_CASE("dominated convergence: the two-piece counterexample has no dominator") {
    // f_n = n on [0, 1/n), 1 on (1/n, 1]; x = 1/n goes to the left piece
    const auto gen = [](int n) {
        if (n == 1) return SimpleOnLine::indicator(IntervalUnion::of(0.0, 1.0), 1.0);
        return SimpleOnLine::from_pieces({{static_cast<double>(n), IntervalUnion::of(0.0, 1.0 / n)},
                                          {1.0, IntervalUnion::of(1.0 / n, 1.0)}});
    };
    const auto limit = SimpleOnLine::indicator(IntervalUnion::of(0.0, 1.0), 1.0);
    const auto g10 = SimpleOnLine::indicator(IntervalUnion::of(0.0, 1.0), 10.0);
    const auto rep =
        dct_check_line(gen, limit, g10, {1, 2, 4, 8, 16, 64, 1024, 10000000}, nullptr, 1e-6);
    CHECK_FALSE(rep.hypothesis_ok);  // domination fails once n exceeds the candidate dominator
    // integrals are 2 - 1/n -> 2, the limit function integrates to 1
    CHECK(rep.limit_integral == doctest::Approx(1.0));
    CHECK(rep.entries.back().integral_n == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(std::abs(rep.entries.back().gap_n - 1.0) <= 1e-6);
    CHECK_FALSE(rep.conclusion_holds);
}

TEST_CASE("dominated convergence holds with a genuine dominator") {
    const auto space = FiniteMeasureSpace::grid(0.0, 1.0, 512);
    // f_n = f for all n with dominator |f|
    const auto f = [](double x) { return std::sin(3.0 * x); };
    const auto repc = dct_check([&](int, double x) { return f(x); }, f,
                                [&](double x) { return std::abs(f(x)); }, {1, 2, 3}, space);
    CHECK(repc.hypothesis_ok);
    CHECK(repc.entries.back().gap_n == 0.0);

    // x^n with dominator 1 on the grid: integral tends to 0 like 1/(n+1)
    const auto repx = dct_check([](int n, double x) { return std::pow(x, n); }, [](double) { return 0.0; },
                                [](double) { return 1.0; }, {1, 2, 4, 8, 16, 64, 256}, space, 5e-3);
    CHECK(repx.hypothesis_ok);
    for (const auto& e : repx.entries) {
        const double closed_form = 1.0 / (e.n + 1.0);
        CHECK(e.integral_n == doctest::Approx(closed_form).epsilon(0.05));
    }
    CHECK(repx.conclusion_holds);
}

TEST_CASE("measure from a density") {
    const auto mu = FiniteMeasureSpace::counting({0.0, 1.0, 2.0});
    const auto same = measure_from_density([](double) { return 1.0; }, mu);
    for (std::size_t i = 0; i < mu.size(); ++i) CHECK(same.weight(i) == mu.weight(i));

    // f = 2 * indicator({0, 2}) against counting: lambda(B) = 2 |A intersect B|
    const auto lam = measure_from_density([](double x) { return x == 1.0 ? 0.0 : 2.0; }, mu);
    CHECK(lam.measure({0, 1}) == 2.0);
    CHECK(lam.measure({0, 2}) == 4.0);

    CHECK_THROWS_AS(measure_from_density([](double) { return -0.5; }, mu), std::invalid_argument);

    // additivity over all disjoint subset pairs of an 8-atom space
    oracles::TestRng rng(77);
    std::vector<double> pts(8), w(8);
    for (std::size_t i = 0; i < 8; ++i) {
        pts[i] = static_cast<double>(i);
        w[i] = rng.uniform(0.0, 2.0);
    }
    const FiniteMeasureSpace base(pts, w);
    const auto lam2 = measure_from_density([](double x) { return x * 0.25 + 0.1; }, base);
    double total = 0.0;
    for (std::size_t i = 0; i < 8; ++i) total += (pts[i] * 0.25 + 0.1) * w[i];
    CHECK(lam2.total() == doctest::Approx(total).epsilon(1e-12));
    for (unsigned mask_a = 0; mask_a < 256; ++mask_a) {
        const unsigned mask_b_free = (~mask_a) & 0xFFu;
        // one representative disjoint partner per mask keeps this quadratic, not cubic
        for (unsigned mask_b : {mask_b_free, mask_b_free & 0x55u}) {
            std::vector<std::size_t> sa, sb, sab;
            for (std::size_t i = 0; i < 8; ++i) {
                if (mask_a & (1u << i)) sa.push_back(i);
                if (mask_b & (1u << i)) sb.push_back(i);
                if ((mask_a | mask_b) & (1u << i)) sab.push_back(i);
            }
            REQUIRE(lam2.measure(sab) == doctest::Approx(lam2.measure(sa) + lam2.measure(sb)).epsilon(1e-12));
        }
    }
}

TEST_CASE("unbounded but integrable staircase") {
    const auto r1 = unbounded_integrable_demo(1);
    CHECK(r1.partial_sum == doctest::Approx(0.125));

    const auto r1000 = unbounded_integrable_demo(1000);
    CHECK(r1000.tail_bound <= 1e-3);
    // oracle limit from a much longer partial sum
    const auto far = unbounded_integrable_demo(2000000);
    CHECK(std::abs(r1000.partial_sum - far.partial_sum) < r1000.tail_bound);

    double prev = 1.0;
    for (int n : {10, 100, 1000, 10000}) {
        const auto r = unbounded_integrable_demo(n);
        CHECK(r.tail_bound < prev);
        prev = r.tail_bound;
    }
}

TEST_CASE("linearity, triangle, vanishing, comparison, sup-form") {
    oracles::TestRng rng(505);
    std::vector<double> pts(6), w(6);
    for (std::size_t i = 0; i < 6; ++i) {
        pts[i] = static_cast<double>(i) * 0.5;
        w[i] = rng.uniform(0.0, 1.5);
    }
    const FiniteMeasureSpace mu(pts, w);

    for (int iter = 0; iter < 100; ++iter) {
        std::vector<double> fv(6), gv(6);
        for (std::size_t i = 0; i < 6; ++i) {
            fv[i] = rng.uniform(-2.0, 2.0);
            gv[i] = rng.uniform(-2.0, 2.0);
        }
        const double a = rng.uniform(-2.0, 2.0);
        std::vector<double> comb(6), absf(6);
        for (std::size_t i = 0; i < 6; ++i) {
            comb[i] = a * fv[i] + gv[i];
            absf[i] = std::abs(fv[i]);
        }
        const auto sf = SimpleOnSpace::from_values(fv);
        const auto sg = SimpleOnSpace::from_values(gv);
        // linearity is exact on finite spaces
        REQUIRE(integrate_simple(SimpleOnSpace::from_values(comb), mu) ==
                doctest::Approx(a * integrate_simple(sf, mu) + integrate_simple(sg, mu)).epsilon(1e-12));
        // triangle inequality
        REQUIRE(std::abs(integrate_simple(sf, mu)) <=
                integrate_simple(SimpleOnSpace::from_values(absf), mu) + 1e-12);
    }

    // vanishing: f >= 0 with zero integral is zero on every positive-weight atom
    const FiniteMeasureSpace vm({0.0, 1.0, 2.0}, {1.0, 0.0, 2.0});
    const auto vz = SimpleOnSpace::from_values({0.0, 5.0, 0.0});  // lives on the null atom
    CHECK(integrate_simple(vz, vm) == 0.0);
    for (std::size_t i = 0; i < 3; ++i)
        if (vm.weight(i) > 0.0) CHECK(vz.at(i) == 0.0);

    // comparison on singletons forces f <= g on positive-weight atoms
    const auto leq_all_sets = [&](const SimpleOnSpace& f, const SimpleOnSpace& g) {
        for (std::size_t i = 0; i < vm.size(); ++i)
            if (integrate_simple(f, vm, {i}) > integrate_simple(g, vm, {i})) return false;
        return true;
    };
    const auto fa = SimpleOnSpace::from_values({1.0, 9.0, 2.0});
    const auto ga = SimpleOnSpace::from_values({1.5, 0.0, 2.5});
    CHECK(leq_all_sets(fa, ga));
    for (std::size_t i = 0; i < 3; ++i)
        if (vm.weight(i) > 0.0) CHECK(fa.at(i) <= ga.at(i));

    // sup over dyadic simple functions below f equals the dyadic floor at depth 6
    const auto grid = FiniteMeasureSpace::grid(0.0, 1.0, 32);
    const auto f = [](double x) { return 2.0 * x + 0.3; };
    const double target = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) s += f(grid.point(i)) * grid.weight(i);
        return s;
    }();
    const double sup6 = integrate_simple(approximate_by_simple(f, grid, 6), grid);
    CHECK(sup6 <= target + 1e-12);
    CHECK(target - sup6 <= std::pow(2.0, -6) * grid.total() + 1e-12);
    // random dyadic candidates below f never beat the floor construction
    oracles::TestRng rng2(606);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<double> cand(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double cap = std::floor(f(grid.point(i)) * 64.0) / 64.0;
            cand[i] = std::floor(rng2.uniform(0.0, cap) * 64.0) / 64.0;
        }
        REQUIRE(integrate_simple(SimpleOnSpace::from_values(cand), grid) <= sup6 + 1e-12);
    }
}
