#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "probkit/errors.hpp"

namespace probkit {

/// Interval bracket shapes for the four length formulas.
enum class Bracket { OpenClosed, Open, ClosedOpen, Closed };

enum class Family {
    Discrete,      // user-supplied points/masses (includes point masses)
    Continuous,    // user-supplied cdf (and optional density)
    Mixed,
    Bernoulli,
    Binomial,
    Poisson,       // truncated; mass deficit < 1e-12, not renormalized
    Normal01,
    Exponential1,
};

/// Right-continuous monotone distribution function with an explicit split into
/// a discrete part (points + masses) and a continuous part (cdf callable),
/// combined as F = w * F_disc + (1 - w) * F_cont with w in [0, 1].
///
/// Values are immutable after construction; sampling takes an explicit seed
/// and owns its generator, so shared instances are safe across threads.
class DistributionFunction {
public:
    static DistributionFunction bernoulli(double p);
    static DistributionFunction binomial(int n, double p);
    static DistributionFunction poisson(double lambda);
    static DistributionFunction normal01();
    static DistributionFunction exponential1();
    static DistributionFunction point_mass(double c);
    static DistributionFunction discrete(std::vector<double> points, std::vector<double> masses);
    static DistributionFunction continuous(std::function<double(double)> cdf,
                                           std::function<double(double)> density = nullptr);
    /// w is the weight of the discrete part.
    static DistributionFunction mixed(double w, const DistributionFunction& discrete_part,
                                      const DistributionFunction& continuous_part);

    double cdf(double x) const;
    double cdf_left(double x) const;             // F(x-)
    double jump(double x) const;                 // F(x) - F(x-)
    double prob_interval(Bracket br, double a, double b) const;

    /// Ascending jump locations (the discontinuity registry).
    const std::vector<double>& discontinuities() const { return disc_points_; }

    bool purely_discrete() const { return weight_discrete_ == 1.0; }
    bool purely_continuous() const { return weight_discrete_ == 0.0; }

    /// (point, mass) pairs; rejects non-discrete laws.
    std::vector<std::pair<double, double>> support_and_mass() const;

    /// Generalized inverse inf{x : F(x) >= q}.
    double quantile(double q) const;
    double median() const { return quantile(0.5); }

    /// n deterministic draws for the given seed.
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

    /// Support bounds as doubles; +-infinity for unbounded tails.
    double support_min() const;
    double support_max() const;

    Family family() const { return family_; }
    double param_p() const { return p_; }
    int param_n() const { return n_; }
    double param_lambda() const { return lambda_; }
    double discrete_weight() const { return weight_discrete_; }
    const DistributionFunction* mixed_discrete() const;
    const DistributionFunction* mixed_continuous() const;

    /// Density of the continuous part, if one was supplied.
    const std::function<double(double)>& density() const { return density_; }

private:
    DistributionFunction() = default;

    Family family_ = Family::Discrete;
    double weight_discrete_ = 1.0;

    // discrete part
    std::vector<double> points_;
    std::vector<double> masses_;
    std::vector<double> cum_;  // cumulative masses

    // continuous part
    std::function<double(double)> cont_cdf_;
    std::function<double(double)> density_;

    std::vector<double> disc_points_;  // jump registry (== points_ scaled by w > 0)

    double p_ = 0.0;
    int n_ = 0;
    double lambda_ = 0.0;

    // retained parts for mixed laws
    std::vector<DistributionFunction> parts_;

    double discrete_cdf(double x) const;
    double discrete_cdf_left(double x) const;
    void finalize_discrete();
};

/// Empirical CDF of a sample: a purely discrete law with masses count/N.
DistributionFunction empirical_cdf(std::span<const double> samples);

/// sup_x |F_hat(x) - F(x)| evaluated over sample points and jump locations,
/// both from the right and from the left.
double kolmogorov_distance(const DistributionFunction& model, std::span<const double> samples);

}  // namespace probkit
