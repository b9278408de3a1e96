#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "probkit/distribution.hpp"
#include "probkit/errors.hpp"
#include "probkit/polynomial.hpp"

namespace probkit {

/// Bounded integrand. Beyond the callable it can carry declared
/// discontinuities (pinned as partition points), declared extrema (added to
/// the inf/sup probe set), an exact polynomial form, or an exact range oracle
/// for functions whose inf/sup cannot be probed (the rational indicator).
class Integrand {
public:
    Integrand(std::function<double(double)> fn);  // NOLINT: implicit by design
    Integrand(const Polynomial& p);               // NOLINT
    Integrand(double (*fn)(double)) : Integrand(std::function<double(double)>(fn)) {}

    Integrand& declare_discontinuities(std::vector<double> pts);
    Integrand& declare_extrema(std::vector<double> pts);
    Integrand& with_range_oracle(std::function<std::pair<double, double>(double, double)> oracle);

    double operator()(double x) const { return fn_(x); }
    const std::vector<double>& discontinuities() const { return discontinuities_; }
    const std::vector<double>& extrema() const { return extrema_; }
    const Polynomial* poly() const { return poly_ ? &*poly_ : nullptr; }

    /// inf/sup estimate over [lo, hi]: exact for polynomials and oracle-backed
    /// integrands, otherwise from `probes` sample points (endpoints included)
    /// plus declared extrema. Throws on a non-finite sample value, naming the
    /// offending subinterval.
    std::pair<double, double> range_on(double lo, double hi, int probes = 17) const;

    /// Indicator of the rationals. Every double is rational, so the callable
    /// is constant 1; the range oracle supplies the true inf 0 / sup 1 on any
    /// window, which is what makes the bracketing criterion unattainable.
    static Integrand dirichlet();

private:
    std::function<double(double)> fn_;
    std::vector<double> discontinuities_;
    std::vector<double> extrema_;
    std::optional<Polynomial> poly_;
    std::function<std::pair<double, double>(double, double)> range_oracle_;
};

struct Atom {
    double x;
    double mass;
};

/// Monotone non-decreasing weight function for Stieltjes sums. Purely atomic
/// integrators additionally expose their atoms so integration can
/// short-circuit to an exact weighted sum.
class Integrator {
public:
    static Integrator identity();
    static Integrator floor_function();  // greatest integer <= x
    static Integrator from_function(std::function<double(double)> fn, std::vector<double> jump_points = {},
                                    std::function<double(double)> left_fn = nullptr);
    static Integrator from_polynomial(const Polynomial& p);
    /// Two-piece step: value `before` left of c, `after` from c on.
    static Integrator step(double c, double before, double after);
    static Integrator from_distribution(const DistributionFunction& f);

    double operator()(double x) const { return value_(x); }
    double left(double x) const { return left_ ? left_(x) : value_(x); }

    /// Jump locations strictly inside (a, b), ascending.
    std::vector<double> jumps_in(double a, double b) const;

    bool purely_atomic() const { return purely_atomic_; }
    /// Atoms in (a, b], ascending. Only meaningful when purely_atomic().
    std::vector<Atom> atoms_in(double a, double b) const;

    const Polynomial* poly() const { return poly_ ? &*poly_ : nullptr; }

private:
    Integrator() = default;
    std::function<double(double)> value_;
    std::function<double(double)> left_;
    std::vector<double> jump_points_;
    std::optional<Polynomial> poly_;
    bool purely_atomic_ = false;
    bool atoms_are_integers_ = false;  // floor-style: every integer carries mass 1
    std::vector<Atom> atoms_;
};

/// View an integrator as an integrand (for integration by parts).
Integrand as_integrand(const Integrator& f);

/// Partition a = x_0 < ... < x_n = b with optional tags t_i in
/// [x_{i-1}, x_i].
struct Partition {
    std::vector<double> points;
    std::vector<double> tags;  // empty, or exactly points.size() - 1 entries

    static Partition uniform(double a, double b, int n);
    Partition with_midpoint_tags() const;
    Partition refined_with(std::vector<double> extra) const;

    double a() const { return points.front(); }
    double b() const { return points.back(); }
    double norm() const;
    bool has_tags() const { return !tags.empty(); }
    void validate() const;
};

struct IntegrationResult {
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double gap = 0.0;
    std::size_t refinements = 0;
    bool converged = false;
};

double lower_sum(const Integrand& f, const Integrator& F, const Partition& p);
double upper_sum(const Integrand& f, const Integrator& F, const Partition& p);
/// Tagged Stieltjes sum; throws if the partition has no tags.
double rs_sum(const Integrand& f, const Integrator& F, const Partition& p);

inline constexpr double kDefaultTol = 1e-9;
inline constexpr std::size_t kDefaultMaxRefinements = 200000;

/// Riemann-Stieltjes integral of f against F over [a, b] by adaptive
/// bisection of the subinterval contributing most to U - L. Jump points of F
/// and declared discontinuities of f are pinned as permanent partition
/// points. Purely atomic F short-circuits to the exact weighted sum over
/// (a, b]; polynomial f against polynomial F evaluates in closed form.
/// a > b is the orientation-reversal convention (negated integral).
IntegrationResult integrate(const Integrand& f, const Integrator& F, double a, double b,
                            double tol = kDefaultTol, std::size_t max_refinements = kDefaultMaxRefinements);

/// Single-jump theorem: F flat on [a, c) and on (c, b]. Evaluates the
/// integrand at the jump location itself, returning f(c) * (F(c+) - F(c-)).
double integrate_jump(const Integrand& f, const Integrator& F, double a, double b, double c);

/// |integral(f dF) + integral(F df) - (F(b)f(b) - F(a)f(a))|. The integrand f
/// acts as integrator on the second term, so it must be monotone on [a, b] or
/// piecewise monotone with declared extrema.
double integration_by_parts_residual(const Integrand& f, const Integrator& F, double a, double b,
                                     double tol = 1e-6);

struct ChangeOfVariablesResult {
    double substituted;  // integral of f(g) d F(g) over [c, d]
    double direct;       // integral of f dF over [g(c), g(d)]
    double discrepancy;
};

/// Change of variables through a strictly monotone continuous g. Computes
/// both routes and checks they agree within the combined integration slack.
ChangeOfVariablesResult change_of_variables(const Integrand& f, const Integrator& F,
                                            const std::function<double(double)>& g, double c, double d,
                                            double tol = 1e-6);

/// Writes sum(a_k) as the integral of the step function a_k on (k-1, k]
/// against the greatest-integer integrator; exact.
double finite_sum_as_integral(std::span<const double> values);

/// Euler summation: sum of f(n) over a < n <= b computed from the right-hand
/// side of the summation formula. The sawtooth factor is integrated piecewise
/// between consecutive integers. The polynomial overload is exact.
double euler_summation(const std::function<double(double)>& f, const std::function<double(double)>& f_prime,
                       double a, double b, double tol = 1e-8);
double euler_summation(const Polynomial& f, double a, double b);

/// Riemann reduction: integral of f(x) F'(x) dx for an integrator with a
/// supplied continuous derivative.
IntegrationResult reduce_to_riemann(const Integrand& f, const Integrand& f_prime_of_F, double a, double b,
                                    double tol = 1e-6, std::size_t max_refinements = kDefaultMaxRefinements);

}  // namespace probkit
