#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "probkit/distribution.hpp"
#include "probkit/expectation.hpp"

namespace probkit {

enum class VerifyMode { Exact, MonteCarlo };

/// One verified inequality instance. `pass` means
/// reference <= bound + statistical slack (+ a tiny fixed numeric epsilon);
/// exact mode carries zero statistical slack. Bounds above 1 are reported
/// verbatim with the vacuous flag, never clamped.
struct VerificationReport {
    std::string inequality_id;
    double analytic_bound = 0.0;
    double reference = 0.0;  // probability, or the comparison side for moment inequalities
    VerifyMode mode = VerifyMode::Exact;
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
    double statistical_slack = 0.0;
    bool pass = false;
    double margin = 0.0;  // bound + slack - reference
    bool vacuous = false;
    std::string paper_form;  // literal printed statement, when it differs from the implemented one
    std::string note;
};

struct MonteCarloOptions {
    std::size_t trials = 100000;
    std::uint64_t seed = 0;
};

/// Finite joint law on R^2 for the inequalities that do not need independence.
struct JointDiscreteLaw {
    std::vector<std::array<double, 2>> points;
    std::vector<double> masses;

    static JointDiscreteLaw product(const DistributionFunction& x, const DistributionFunction& y);
    static JointDiscreteLaw diagonal(const DistributionFunction& x);  // Y = X
    void validate() const;
};

// --- tail bounds ------------------------------------------------------------

VerificationReport markov(const RandomVariable& x, double a, VerifyMode mode = VerifyMode::Exact,
                          const MonteCarloOptions& mc = {});
/// Corollary form P(|X| > a) <= E|X| / a (no sign restriction on X).
VerificationReport markov_abs(const RandomVariable& x, double a, VerifyMode mode = VerifyMode::Exact,
                              const MonteCarloOptions& mc = {});
VerificationReport generalized_markov(const std::function<double(double)>& g, const std::string& g_name,
                                      const RandomVariable& x, double a, VerifyMode mode = VerifyMode::Exact,
                                      const MonteCarloOptions& mc = {});
VerificationReport chebyshev(const RandomVariable& x, double eps, VerifyMode mode = VerifyMode::Exact,
                             const MonteCarloOptions& mc = {});

// --- convexity and Jensen ---------------------------------------------------

struct ConvexityCertificate {
    double x, y, t;
    double lhs, rhs;  // psi(tx + (1-t)y) vs t psi(x) + (1-t) psi(y)
};

struct ConvexityResult {
    bool convex = false;
    std::optional<ConvexityCertificate> violation;
};

ConvexityResult convexity_check(const std::function<double(double)>& psi, double lo, double hi,
                                int grid = 33);

VerificationReport jensen(const std::function<double(double)>& psi, const std::string& psi_name,
                          const RandomVariable& x, double tol = 1e-6);

// --- Hoeffding family -------------------------------------------------------

enum class HoeffdingVariant { V1, V2 };

/// Sum-form bound on P(sum(X_i - E X_i) > n eps) for ranges a_i <= X_i <= b_i.
double hoeffding_bound(HoeffdingVariant variant, std::size_t n, double eps,
                       const std::vector<std::pair<double, double>>& ranges);

/// Two-sided mean-form corollary bound on P(|mean - E X_1| > eps).
double hoeffding_mean_bound(HoeffdingVariant variant, std::size_t n, double eps, double a, double b);

/// Empirical or exact verification of the sum-form inequality for independent
/// bounded laws. Exact mode (product outcome space <= 2^20) convolves the
/// centered laws; otherwise seeded Monte Carlo with 3-sigma slack.
VerificationReport hoeffding_verify(HoeffdingVariant variant, const std::vector<DistributionFunction>& laws,
                                    double eps, const MonteCarloOptions& mc,
                                    std::optional<std::vector<std::pair<double, double>>> ranges = {});

/// E(e^{sX}) <= e^{s^2 (b-a)^2 / 8} for a mean-zero law supported in [a, b].
VerificationReport hoeffding_lemma_check(const DistributionFunction& law, double a, double b, double s);

struct GFunctionReport {
    double theta = 0.0;
    double g_at_zero = 0.0;
    double gprime_at_zero = 0.0;  // central difference
    double max_second_derivative = 0.0;
    double argmax_u = 0.0;
    bool pass = false;
};

/// g(u) = -theta u + log(1 - theta + theta e^u): checks g(0) = 0, g'(0) = 0,
/// and the closed-form g''(u) = theta (1-theta) e^u / (1 - theta + theta e^u)^2
/// <= 1/4 over the grid.
GFunctionReport g_function_check(double theta, double u_lo = -5.0, double u_hi = 5.0, double u_step = 0.01);

// --- product / norm inequalities ---------------------------------------------

/// (E|XY|)^2 <= E(X^2) E(Y^2) for an independent pair or a joint law. The
/// printed source statement reverses the direction; that literal form is
/// preserved in the report.
VerificationReport cauchy_schwarz_check(const RandomVariable& x, const RandomVariable& y, double tol = 1e-6);
VerificationReport cauchy_schwarz_check(const JointDiscreteLaw& joint);
/// Single-variable form (E X)^2 <= E(X^2).
VerificationReport cauchy_schwarz_single(const RandomVariable& x, double tol = 1e-6);

VerificationReport holder_check(const RandomVariable& x, const RandomVariable& y, double p, double q,
                                double tol = 1e-6);
VerificationReport holder_check(const JointDiscreteLaw& joint, double p, double q);

VerificationReport minkowski_check(const DistributionFunction& x, const DistributionFunction& y, double p);
VerificationReport minkowski_check(const JointDiscreteLaw& joint, double p);

// --- normal tails, SLLN, Levy -------------------------------------------------

enum class NormalTailForm { OneSided, TwoSided, MeanN };

VerificationReport normal_tail(double eps, NormalTailForm form, std::size_t n = 1);

struct SllnEntry {
    std::size_t n;
    double mean;
    double envelope;
    bool inside;
};

struct SllnReport {
    double p = 0.0;
    std::uint64_t seed = 0;
    double delta = 1e-6;
    std::vector<SllnEntry> entries;
    bool all_inside = false;
};

/// Running mean of a Bernoulli(p) stream with the Hoeffding envelope
/// sqrt(ln(2/delta) / (2n)) at delta = 1e-6.
SllnReport slln_demo(double p, const std::vector<std::size_t>& schedule, std::uint64_t seed);

/// Levy maximal inequality P(max_j (S_j - m(S_j - S_n)) >= eps) <= 2 P(S_n >= eps)
/// for i.i.d. steps. Exact path enumeration for small discrete laws; Monte
/// Carlo otherwise, with medians estimated in a separate pre-pass (seed + 1).
VerificationReport levy_check(const DistributionFunction& step_law, std::size_t n, double eps,
                              VerifyMode mode = VerifyMode::Exact, const MonteCarloOptions& mc = {});

}  // namespace probkit
