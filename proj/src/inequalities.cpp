#include "probkit/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

namespace probkit {

namespace {

constexpr double kNumEps = 1e-10;     // fixed numeric epsilon for exact comparisons
constexpr double kLemmaEps = 1e-12;   // Hoeffding lemma uses a tighter one

struct UniformStream {
    std::mt19937_64 eng;
    explicit UniformStream(std::uint64_t seed) : eng(seed) {}
    double next() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

VerificationReport finalize(std::string id, double bound, double ref, VerifyMode mode, std::size_t samples,
                            std::uint64_t seed, double slack, double num_eps, bool probability_bound,
                            std::string paper_form = {}, std::string note = {}) {
    VerificationReport r;
    r.inequality_id = std::move(id);
    r.analytic_bound = bound;
    r.reference = ref;
    r.mode = mode;
    r.sample_count = samples;
    r.seed = seed;
    r.statistical_slack = slack;
    r.margin = bound + slack - ref;
    r.pass = ref <= bound + slack + num_eps;
    r.vacuous = probability_bound && bound > 1.0;
    r.paper_form = std::move(paper_form);
    r.note = std::move(note);
    return r;
}

double mc_slack(double phat, std::size_t n) {
    return 3.0 * std::sqrt(phat * (1.0 - phat) / static_cast<double>(n));
}

double tail_above(const DistributionFunction& f, double a) { return 1.0 - f.cdf(a); }  // P(X > a)

double abs_tail_above(const DistributionFunction& f, double a) {
    return 1.0 - f.cdf(a) + f.cdf_left(-a);  // P(|X| > a)
}

double centered_tail_above(const DistributionFunction& f, double center, double eps) {
    return 1.0 - f.cdf(center + eps) + f.cdf_left(center - eps);  // P(|X - c| > eps)
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

// exact merge convolution of discrete (value, mass) lists
using MassList = std::vector<std::pair<double, double>>;

MassList convolve(const MassList& a, const MassList& b) {
    std::map<double, double> acc;
    for (const auto& [va, ma] : a)
        for (const auto& [vb, mb] : b) acc[va + vb] += ma * mb;
    return MassList(acc.begin(), acc.end());
}

MassList law_to_masslist(const DistributionFunction& f, double shift = 0.0) {
    MassList out;
    for (const auto& [x, m] : f.support_and_mass()) out.emplace_back(x + shift, m);
    return out;
}

double masslist_mass_where(const MassList& d, const std::function<bool(double)>& pred) {
    double s = 0.0;
    for (const auto& [v, m] : d)
        if (pred(v)) s += m;
    return s;
}

// generalized-inverse median of a sorted mass list
double masslist_median(const MassList& d) {
    double cum = 0.0;
    for (const auto& [v, m] : d) {
        cum += m;
        if (cum >= 0.5) return v;
    }
    return d.back().first;
}

bool exact_mode_feasible(const std::vector<DistributionFunction>& laws) {
    double product = 1.0;
    for (const auto& l : laws) {
        if (!l.purely_discrete()) return false;
        product *= static_cast<double>(l.support_and_mass().size());
        if (product > static_cast<double>(1 << 20)) return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------

JointDiscreteLaw JointDiscreteLaw::product(const DistributionFunction& x, const DistributionFunction& y) {
    JointDiscreteLaw j;
    for (const auto& [xv, xm] : x.support_and_mass())
        for (const auto& [yv, ym] : y.support_and_mass()) {
            j.points.push_back({xv, yv});
            j.masses.push_back(xm * ym);
        }
    return j;
}

JointDiscreteLaw JointDiscreteLaw::diagonal(const DistributionFunction& x) {
    JointDiscreteLaw j;
    for (const auto& [xv, xm] : x.support_and_mass()) {
        j.points.push_back({xv, xv});
        j.masses.push_back(xm);
    }
    return j;
}

void JointDiscreteLaw::validate() const {
    if (points.empty() || points.size() != masses.size())
        throw std::invalid_argument("joint law needs matching nonempty points/masses");
    double total = 0.0;
    for (double m : masses) {
        if (!(m > 0.0)) throw std::invalid_argument("joint masses must be positive");
        total += m;
    }
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("joint masses must sum to 1");
}

// ---------------------------------------------------------------------------

VerificationReport markov(const RandomVariable& x, double a, VerifyMode mode, const MonteCarloOptions& mc) {
    if (!(a > 0.0)) throw std::invalid_argument("markov requires a > 0");
    if (x.law.support_min() < -1e-12)
        throw hypothesis_error("markov requires a nonnegative law; use markov_abs for the |X| corollary");
    const double bound = expect(x).value / a;
    if (mode == VerifyMode::Exact)
        return finalize("markov", bound, tail_above(x.law, a), mode, 0, 0, 0.0, kNumEps, true);
    const auto draws = x.law.sample(mc.trials, mc.seed);
    const double phat =
        static_cast<double>(std::count_if(draws.begin(), draws.end(), [a](double v) { return v > a; })) /
        static_cast<double>(mc.trials);
    return finalize("markov", bound, phat, mode, mc.trials, mc.seed, mc_slack(phat, mc.trials), kNumEps, true);
}

VerificationReport markov_abs(const RandomVariable& x, double a, VerifyMode mode, const MonteCarloOptions& mc) {
    if (!(a > 0.0)) throw std::invalid_argument("markov_abs requires a > 0");
    const double bound = expect_of_function([](double v) { return std::abs(v); }, x).value / a;
    if (mode == VerifyMode::Exact)
        return finalize("markov_abs", bound, abs_tail_above(x.law, a), mode, 0, 0, 0.0, kNumEps, true);
    const auto draws = x.law.sample(mc.trials, mc.seed);
    const double phat = static_cast<double>(std::count_if(draws.begin(), draws.end(),
                                                          [a](double v) { return std::abs(v) > a; })) /
                        static_cast<double>(mc.trials);
    return finalize("markov_abs", bound, phat, mode, mc.trials, mc.seed, mc_slack(phat, mc.trials), kNumEps,
                    true);
}

VerificationReport generalized_markov(const std::function<double(double)>& g, const std::string& g_name,
                                      const RandomVariable& x, double a, VerifyMode mode,
                                      const MonteCarloOptions& mc) {
    if (!(a > 0.0)) throw std::invalid_argument("generalized_markov requires a > 0");
    // probe nonnegativity of g on the law's central window
    const double qlo = x.law.quantile(1e-9), qhi = x.law.quantile(1.0 - 1e-9);
    for (int i = 0; i <= 64; ++i) {
        const double t = qlo + (qhi - qlo) * i / 64.0;
        if (g(t) < 0.0) throw hypothesis_error("generalized_markov requires g >= 0 on the support (g(" +
                                               std::to_string(t) + ") < 0)");
    }
    const double bound = expect_of_function(g, x).value / a;
    const std::string id = "generalized_markov[" + g_name + "]";
    if (mode == VerifyMode::Exact && x.law.purely_discrete()) {
        double ref = 0.0;
        for (const auto& [v, m] : x.law.support_and_mass())
            if (g(v) > a) ref += m;
        return finalize(id, bound, ref, mode, 0, 0, 0.0, kNumEps, true);
    }
    const std::size_t n = mc.trials;
    const auto draws = x.law.sample(n, mc.seed);
    const double phat =
        static_cast<double>(std::count_if(draws.begin(), draws.end(), [&](double v) { return g(v) > a; })) /
        static_cast<double>(n);
    return finalize(id, bound, phat, VerifyMode::MonteCarlo, n, mc.seed, mc_slack(phat, n), kNumEps, true);
}

VerificationReport chebyshev(const RandomVariable& x, double eps, VerifyMode mode, const MonteCarloOptions& mc) {
    if (!(eps > 0.0)) throw std::invalid_argument("chebyshev requires eps > 0");
    const double mean = expect(x).value;
    const double var = variance(x).value;
    const double bound = var / (eps * eps);
    if (mode == VerifyMode::Exact)
        return finalize("chebyshev", bound, centered_tail_above(x.law, mean, eps), mode, 0, 0, 0.0, kNumEps,
                        true);
    const auto draws = x.law.sample(mc.trials, mc.seed);
    const double phat = static_cast<double>(std::count_if(
                            draws.begin(), draws.end(), [&](double v) { return std::abs(v - mean) > eps; })) /
                        static_cast<double>(mc.trials);
    return finalize("chebyshev", bound, phat, mode, mc.trials, mc.seed, mc_slack(phat, mc.trials), kNumEps,
                    true);
}

// ---------------------------------------------------------------------------

ConvexityResult convexity_check(const std::function<double(double)>& psi, double lo, double hi, int grid) {
    if (grid < 3) throw std::invalid_argument("convexity_check needs a grid of at least 3 points");
    if (!(lo < hi)) throw std::invalid_argument("convexity_check needs lo < hi");
    ConvexityResult res;
    res.convex = true;
    for (int i = 0; i < grid; ++i) {
        const double x = lo + (hi - lo) * i / (grid - 1);
        const double px = psi(x);
        for (int j = i + 1; j < grid; ++j) {
            const double y = lo + (hi - lo) * j / (grid - 1);
            const double py = psi(y);
            for (int k = 1; k <= 9; ++k) {
                const double t = k / 10.0;
                const double lhs = psi(t * x + (1.0 - t) * y);
                const double rhs = t * px + (1.0 - t) * py;
                if (lhs > rhs + 1e-12) {
                    res.convex = false;
                    res.violation = ConvexityCertificate{x, y, t, lhs, rhs};
                    return res;
                }
            }
        }
    }
    return res;
}

VerificationReport jensen(const std::function<double(double)>& psi, const std::string& psi_name,
                          const RandomVariable& x, double tol) {
    const double lo = x.law.quantile(1e-9), hi = x.law.quantile(1.0 - 1e-9);
    const ConvexityResult conv = convexity_check(psi, std::min(lo, hi - 1.0), std::max(hi, lo + 1.0));
    if (!conv.convex) throw hypothesis_error("jensen: psi failed the convexity check on the support range");
    const double e_psi = expect_of_function(psi, x, tol).value;
    const double psi_e = psi(expect(x, tol).value);
    return finalize("jensen[" + psi_name + "]", e_psi, psi_e,
                    x.law.purely_discrete() ? VerifyMode::Exact : VerifyMode::MonteCarlo, 0, 0, 0.0, kNumEps,
                    false);
}

// ---------------------------------------------------------------------------

double hoeffding_bound(HoeffdingVariant variant, std::size_t n, double eps,
                       const std::vector<std::pair<double, double>>& ranges) {
    if (ranges.empty()) throw std::invalid_argument("hoeffding_bound requires at least one range");
    if (ranges.size() != n) throw std::invalid_argument("hoeffding_bound: n must equal the range count");
    if (eps < 0.0) throw std::invalid_argument("hoeffding_bound requires eps >= 0");
    double sum_sq = 0.0;
    for (const auto& [a, b] : ranges) {
        if (!(b > a)) throw std::invalid_argument("hoeffding_bound requires b_i > a_i");
        sum_sq += (b - a) * (b - a);
    }
    const double n2e2 = static_cast<double>(n) * static_cast<double>(n) * eps * eps;
    return variant == HoeffdingVariant::V1 ? std::exp(-n2e2 / (2.0 * sum_sq)) : std::exp(-2.0 * n2e2 / sum_sq);
}

double hoeffding_mean_bound(HoeffdingVariant variant, std::size_t n, double eps, double a, double b) {
    if (!(b > a) || n == 0) throw std::invalid_argument("hoeffding_mean_bound requires b > a and n >= 1");
    if (eps < 0.0) throw std::invalid_argument("hoeffding_mean_bound requires eps >= 0");
    const double d2 = (b - a) * (b - a);
    const double ne2 = static_cast<double>(n) * eps * eps;
    return variant == HoeffdingVariant::V1 ? 2.0 * std::exp(-ne2 / (2.0 * d2)) : 2.0 * std::exp(-2.0 * ne2 / d2);
}

VerificationReport hoeffding_verify(HoeffdingVariant variant, const std::vector<DistributionFunction>& laws,
                                    double eps, const MonteCarloOptions& mc,
                                    std::optional<std::vector<std::pair<double, double>>> ranges) {
    if (laws.empty()) throw std::invalid_argument("hoeffding_verify requires at least one law");
    if (!(eps > 0.0)) throw std::invalid_argument("hoeffding_verify requires eps > 0");
    const std::size_t n = laws.size();

    std::vector<std::pair<double, double>> rng_list;
    if (ranges) {
        if (ranges->size() != n) throw std::invalid_argument("range count must match law count");
        rng_list = *ranges;
    } else {
        for (const auto& l : laws) rng_list.emplace_back(l.support_min(), l.support_max());
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto [a, b] = rng_list[i];
        if (!std::isfinite(a) || !std::isfinite(b))
            throw hypothesis_error("hoeffding_verify requires bounded laws");
        if (laws[i].support_min() < a - 1e-12 || laws[i].support_max() > b + 1e-12)
            throw hypothesis_error("law support escapes its declared range");
    }

    const double bound = hoeffding_bound(variant, n, eps, rng_list);
    const double threshold = static_cast<double>(n) * eps;
    const std::string id = variant == HoeffdingVariant::V1 ? "hoeffding_v1" : "hoeffding_v2";
    const std::string paper_v1 =
        "P(sum(X_i - E X_i) > n eps) <= exp(-n^2 eps^2 / (2 sum (b_i-a_i)^2))";

    if (exact_mode_feasible(laws)) {
        MassList sum{{0.0, 1.0}};
        for (const auto& l : laws) sum = convolve(sum, law_to_masslist(l, -expect({l, ""}).value));
        const double ref = masslist_mass_where(sum, [&](double v) { return v > threshold; });
        return finalize(id, bound, ref, VerifyMode::Exact, 0, 0, 0.0, kNumEps, true,
                        variant == HoeffdingVariant::V1 ? paper_v1 : "");
    }

    std::vector<double> sums(mc.trials, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double mean_i = expect({laws[i], ""}).value;
        const auto draws = laws[i].sample(mc.trials, mix_seed(mc.seed, i));
        for (std::size_t t = 0; t < mc.trials; ++t) sums[t] += draws[t] - mean_i;
    }
    const double phat = static_cast<double>(std::count_if(sums.begin(), sums.end(),
                                                          [&](double s) { return s > threshold; })) /
                        static_cast<double>(mc.trials);
    return finalize(id, bound, phat, VerifyMode::MonteCarlo, mc.trials, mc.seed, mc_slack(phat, mc.trials),
                    kNumEps, true, variant == HoeffdingVariant::V1 ? paper_v1 : "");
}

VerificationReport hoeffding_lemma_check(const DistributionFunction& law, double a, double b, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("hoeffding_lemma_check requires s > 0");
    if (!law.purely_discrete()) throw hypothesis_error("hoeffding_lemma_check requires a discrete law");
    if (!(b > a)) throw std::invalid_argument("hoeffding_lemma_check requires b > a");
    const auto support = law.support_and_mass();
    double mean = 0.0;
    for (const auto& [x, m] : support) {
        if (x < a - 1e-12 || x > b + 1e-12) throw hypothesis_error("support escapes [a, b]");
        mean += x * m;
    }
    if (std::abs(mean) > 1e-12) throw hypothesis_error("hoeffding_lemma_check requires a mean-zero law");
    double mgf = 0.0;
    for (const auto& [x, m] : support) mgf += std::exp(s * x) * m;
    const double bound = std::exp(s * s * (b - a) * (b - a) / 8.0);
    return finalize("hoeffding_lemma", bound, mgf, VerifyMode::Exact, 0, 0, 0.0, kLemmaEps, false);
}

GFunctionReport g_function_check(double theta, double u_lo, double u_hi, double u_step) {
    if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("g_function_check requires theta in (0, 1)");
    if (!(u_step > 0.0) || !(u_lo < u_hi)) throw std::invalid_argument("bad u grid");

    const auto g = [theta](double u) {
        if (u > 30.0) return -theta * u + u + std::log(theta + (1.0 - theta) * std::exp(-u));
        return -theta * u + std::log(1.0 - theta + theta * std::exp(u));
    };
    const auto g2 = [theta](double u) {
        if (u > 30.0) {
            const double e = std::exp(-u);
            const double den = theta + (1.0 - theta) * e;
            return theta * (1.0 - theta) * e / (den * den);
        }
        const double e = std::exp(u);
        const double den = 1.0 - theta + theta * e;
        return theta * (1.0 - theta) * e / (den * den);
    };

    GFunctionReport rep;
    rep.theta = theta;
    rep.g_at_zero = g(0.0);
    const double h = 1e-5;
    rep.gprime_at_zero = (g(h) - g(-h)) / (2.0 * h);
    rep.max_second_derivative = -1.0;
    for (double u = u_lo; u <= u_hi + 0.5 * u_step; u += u_step) {
        const double v = g2(u);
        if (v > rep.max_second_derivative) {
            rep.max_second_derivative = v;
            rep.argmax_u = u;
        }
    }
    rep.pass = rep.g_at_zero == 0.0 && std::abs(rep.gprime_at_zero) <= 1e-6 &&
               rep.max_second_derivative <= 0.25 + 1e-10;
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

const std::string kCauchySchwarzPaperForm = "E(X^2) <= (E(X))^2 (printed direction; corrected here)";

}  // namespace

VerificationReport cauchy_schwarz_check(const RandomVariable& x, const RandomVariable& y, double tol) {
    const double e_abs_x = expect_of_function([](double v) { return std::abs(v); }, x, tol).value;
    const double e_abs_y = expect_of_function([](double v) { return std::abs(v); }, y, tol).value;
    const double exy = e_abs_x * e_abs_y;  // independence
    const double bound = moment(x, 2, tol).value * moment(y, 2, tol).value;
    const bool exact = x.law.purely_discrete() && y.law.purely_discrete();
    return finalize("cauchy_schwarz", bound, exy * exy, exact ? VerifyMode::Exact : VerifyMode::MonteCarlo, 0,
                    0, 0.0, kNumEps, false, kCauchySchwarzPaperForm);
}

VerificationReport cauchy_schwarz_check(const JointDiscreteLaw& joint) {
    joint.validate();
    double exy = 0.0, ex2 = 0.0, ey2 = 0.0;
    for (std::size_t i = 0; i < joint.points.size(); ++i) {
        const auto [xv, yv] = joint.points[i];
        const double m = joint.masses[i];
        exy += std::abs(xv * yv) * m;
        ex2 += xv * xv * m;
        ey2 += yv * yv * m;
    }
    return finalize("cauchy_schwarz", ex2 * ey2, exy * exy, VerifyMode::Exact, 0, 0, 0.0, kNumEps, false,
                    kCauchySchwarzPaperForm);
}

VerificationReport cauchy_schwarz_single(const RandomVariable& x, double tol) {
    const double ex = expect(x, tol).value;
    const double ex2 = moment(x, 2, tol).value;
    return finalize("cauchy_schwarz_single", ex2, ex * ex,
                    x.law.purely_discrete() ? VerifyMode::Exact : VerifyMode::MonteCarlo, 0, 0, 0.0, kNumEps,
                    false, kCauchySchwarzPaperForm);
}

VerificationReport holder_check(const RandomVariable& x, const RandomVariable& y, double p, double q,
                                double tol) {
    if (!(p > 1.0)) throw std::invalid_argument("holder_check requires 1 < p < inf");
    if (std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12)
        throw hypothesis_error("holder_check: p and q are not conjugate exponents");
    const double e_abs_x = expect_of_function([](double v) { return std::abs(v); }, x, tol).value;
    const double e_abs_y = expect_of_function([](double v) { return std::abs(v); }, y, tol).value;
    const double exy = e_abs_x * e_abs_y;
    const double bound = lp_norm(x, p, tol).value * lp_norm(y, q, tol).value;
    const bool exact = x.law.purely_discrete() && y.law.purely_discrete();
    return finalize("holder", bound, exy, exact ? VerifyMode::Exact : VerifyMode::MonteCarlo, 0, 0, 0.0,
                    kNumEps, false);
}

VerificationReport holder_check(const JointDiscreteLaw& joint, double p, double q) {
    joint.validate();
    if (!(p > 1.0)) throw std::invalid_argument("holder_check requires 1 < p < inf");
    if (std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12)
        throw hypothesis_error("holder_check: p and q are not conjugate exponents");
    double exy = 0.0, xp = 0.0, yq = 0.0;
    for (std::size_t i = 0; i < joint.points.size(); ++i) {
        const auto [xv, yv] = joint.points[i];
        const double m = joint.masses[i];
        exy += std::abs(xv * yv) * m;
        xp += std::pow(std::abs(xv), p) * m;
        yq += std::pow(std::abs(yv), q) * m;
    }
    const double bound = std::pow(xp, 1.0 / p) * std::pow(yq, 1.0 / q);
    return finalize("holder", bound, exy, VerifyMode::Exact, 0, 0, 0.0, kNumEps, false);
}

namespace {

double masslist_lp(const MassList& d, double p) {
    double s = 0.0;
    for (const auto& [v, m] : d) s += std::pow(std::abs(v), p) * m;
    return std::pow(s, 1.0 / p);
}

}  // namespace

VerificationReport minkowski_check(const DistributionFunction& x, const DistributionFunction& y, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("minkowski_check requires p >= 1");
    if (!x.purely_discrete() || !y.purely_discrete())
        throw std::invalid_argument("minkowski_check supports discrete laws; use a joint law otherwise");
    const MassList sum = convolve(law_to_masslist(x), law_to_masslist(y));
    const double lhs = masslist_lp(sum, p);
    const double bound = masslist_lp(law_to_masslist(x), p) + masslist_lp(law_to_masslist(y), p);
    return finalize("minkowski", bound, lhs, VerifyMode::Exact, 0, 0, 0.0, kNumEps, false);
}

VerificationReport minkowski_check(const JointDiscreteLaw& joint, double p) {
    joint.validate();
    if (!(p >= 1.0)) throw std::invalid_argument("minkowski_check requires p >= 1");
    double sp = 0.0, xp = 0.0, yp = 0.0;
    for (std::size_t i = 0; i < joint.points.size(); ++i) {
        const auto [xv, yv] = joint.points[i];
        const double m = joint.masses[i];
        sp += std::pow(std::abs(xv + yv), p) * m;
        xp += std::pow(std::abs(xv), p) * m;
        yp += std::pow(std::abs(yv), p) * m;
    }
    const double lhs = std::pow(sp, 1.0 / p);
    const double bound = std::pow(xp, 1.0 / p) + std::pow(yp, 1.0 / p);
    return finalize("minkowski", bound, lhs, VerifyMode::Exact, 0, 0, 0.0, kNumEps, false);
}

// ---------------------------------------------------------------------------

VerificationReport normal_tail(double eps, NormalTailForm form, std::size_t n) {
    if (!(eps > 0.0)) throw std::invalid_argument("normal_tail requires eps > 0");
    const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    double bound = 0.0, ref = 0.0;
    std::string id;
    switch (form) {
        case NormalTailForm::OneSided:
            bound = inv_sqrt_2pi / eps * std::exp(-0.5 * eps * eps);
            ref = 1.0 - normal_cdf(eps);
            id = "normal_tail_one_sided";
            break;
        case NormalTailForm::TwoSided:
            bound = 2.0 * inv_sqrt_2pi / eps * std::exp(-0.5 * eps * eps);
            ref = 2.0 * (1.0 - normal_cdf(eps));
            id = "normal_tail_two_sided";
            break;
        case NormalTailForm::MeanN: {
            if (n == 0) throw std::invalid_argument("mean form requires n >= 1");
            const double nd = static_cast<double>(n);
            bound = 2.0 / (eps * std::sqrt(2.0 * nd * std::numbers::pi)) * std::exp(-0.5 * nd * eps * eps);
            ref = 2.0 * (1.0 - normal_cdf(std::sqrt(nd) * eps));
            id = "normal_tail_mean";
            break;
        }
    }
    return finalize(id, bound, ref, VerifyMode::Exact, 0, 0, 0.0, kNumEps, true);
}

SllnReport slln_demo(double p, const std::vector<std::size_t>& schedule, std::uint64_t seed) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("slln_demo requires 0 < p < 1");
    if (schedule.empty()) throw std::invalid_argument("slln_demo requires a nonempty schedule");
    for (std::size_t n : schedule)
        if (n == 0) throw std::invalid_argument("schedule entries must be >= 1");
    std::vector<std::size_t> sched = schedule;
    std::sort(sched.begin(), sched.end());

    SllnReport rep;
    rep.p = p;
    rep.seed = seed;
    const double log_term = std::log(2.0 / rep.delta);

    UniformStream u(seed);
    double successes = 0.0;
    std::size_t drawn = 0;
    rep.all_inside = true;
    for (std::size_t target : sched) {
        while (drawn < target) {
            successes += (u.next() < p) ? 1.0 : 0.0;
            ++drawn;
        }
        const double mean = successes / static_cast<double>(drawn);
        const double env = std::sqrt(log_term / (2.0 * static_cast<double>(drawn)));
        const bool inside = std::abs(mean - p) < env;
        rep.entries.push_back({target, mean, env, inside});
        rep.all_inside = rep.all_inside && inside;
    }
    return rep;
}

VerificationReport levy_check(const DistributionFunction& step_law, std::size_t n, double eps, VerifyMode mode,
                              const MonteCarloOptions& mc) {
    if (n == 0) throw std::invalid_argument("levy_check requires n >= 1");
    if (!(eps > 0.0)) throw std::invalid_argument("levy_check requires eps > 0");
    const std::string paper_form = "P{max_j (S_j - m(S_j - S_n)) <= eps} <= 2 P(S_n >= eps) (printed <=; "
                                   "implemented with the max event >= eps)";

    if (mode == VerifyMode::Exact) {
        if (!step_law.purely_discrete()) throw hypothesis_error("exact levy_check requires a discrete law");
        const auto support = step_law.support_and_mass();
        const double paths = std::pow(static_cast<double>(support.size()), static_cast<double>(n));
        if (paths > static_cast<double>(1 << 20))
            throw std::invalid_argument("exact levy_check limited to 2^20 paths; use Monte Carlo");

        // suffix-sum laws for the medians of S_j - S_n = -(X_{j+1} + ... + X_n)
        std::vector<MassList> suffix(n + 1);
        suffix[0] = {{0.0, 1.0}};
        const MassList one = law_to_masslist(step_law);
        for (std::size_t k = 1; k <= n; ++k) suffix[k] = convolve(suffix[k - 1], one);
        std::vector<double> medians(n + 1, 0.0);
        for (std::size_t j = 1; j <= n; ++j) {
            MassList neg;
            const MassList& tail = suffix[n - j];
            for (auto it = tail.rbegin(); it != tail.rend(); ++it) neg.emplace_back(-it->first, it->second);
            medians[j] = masslist_median(neg);
        }

        double lhs = 0.0;
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            double prob = 1.0, s = 0.0;
            bool hit = false;
            for (std::size_t j = 0; j < n; ++j) {
                prob *= support[idx[j]].second;
                s += support[idx[j]].first;
                if (s - medians[j + 1] >= eps) hit = true;
            }
            if (hit) lhs += prob;
            std::size_t pos = 0;
            while (pos < n && ++idx[pos] == support.size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos == n) break;
        }
        const double rhs = 2.0 * masslist_mass_where(suffix[n], [&](double v) { return v >= eps; });
        return finalize("levy", rhs, lhs, VerifyMode::Exact, 0, 0, 0.0, kNumEps, true, paper_form);
    }

    if (mc.trials < 10000) throw std::invalid_argument("levy_check Monte Carlo requires at least 10^4 trials");
    const std::size_t trials = mc.trials;

    // median pre-pass on an independent stream (seed + 1)
    std::vector<double> medians(n + 1, 0.0);
    {
        const auto draws = step_law.sample(trials * n, mc.seed + 1);
        std::vector<std::vector<double>> diffs(n + 1);
        for (std::size_t j = 1; j <= n; ++j) diffs[j].reserve(trials);
        for (std::size_t t = 0; t < trials; ++t) {
            std::vector<double> prefix(n + 1, 0.0);
            for (std::size_t j = 1; j <= n; ++j) prefix[j] = prefix[j - 1] + draws[t * n + j - 1];
            for (std::size_t j = 1; j <= n; ++j) diffs[j].push_back(prefix[j] - prefix[n]);
        }
        for (std::size_t j = 1; j <= n; ++j) {
            auto& v = diffs[j];
            const std::size_t k = (trials + 1) / 2 - 1;  // generalized inverse at 1/2
            std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
            medians[j] = v[k];
        }
    }

    const auto draws = step_law.sample(trials * n, mc.seed);
    std::size_t hit_max = 0, hit_end = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        double s = 0.0;
        bool hit = false;
        for (std::size_t j = 1; j <= n; ++j) {
            s += draws[t * n + j - 1];
            if (s - medians[j] >= eps) hit = true;
        }
        if (hit) ++hit_max;
        if (s >= eps) ++hit_end;
    }
    const double lhs = static_cast<double>(hit_max) / static_cast<double>(trials);
    const double p_end = static_cast<double>(hit_end) / static_cast<double>(trials);
    const double bound = 2.0 * p_end;
    const double slack = mc_slack(lhs, trials) + 2.0 * mc_slack(p_end, trials);
    return finalize("levy", bound, lhs, VerifyMode::MonteCarlo, trials, mc.seed, slack, kNumEps, true,
                    paper_form);
}

}  // namespace probkit
