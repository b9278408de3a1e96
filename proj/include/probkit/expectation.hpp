#pragma once

#include <functional>
#include <string>

#include "probkit/distribution.hpp"
#include "probkit/stieltjes.hpp"

namespace probkit {

struct RandomVariable {
    DistributionFunction law;
    std::string label;
};

enum class MomentMethod { ClosedForm, Stieltjes, Enumeration };

struct MomentResult {
    double order = 1.0;
    double value = 0.0;
    MomentMethod method = MomentMethod::Enumeration;
    double truncation_error = 0.0;
};

struct IntegrabilityReport {
    bool integrable = false;
    double abs_moment = 0.0;   // partial integral of |x| at the last probe
    double tail_mass = 0.0;    // mass outside the probed window (exact for discrete)
    double probed_to = 0.0;    // last T examined
    std::string diagnostic;
};

/// Doubling-T probe of the absolute moment against a budget. Finite-support
/// laws finish exactly; growth that has not flattened by t_max is flagged as
/// a divergent trend.
IntegrabilityReport is_integrable(const RandomVariable& x, double t_max = 1e6, double tol = 1e-9);

/// E(X) computed through the law: exact mass enumeration for discrete parts,
/// truncated Riemann reduction for continuous parts, linear combination for
/// mixed laws. Rejects non-integrable laws.
MomentResult expect(const RandomVariable& x, double tol = 1e-6);

/// Closed forms for the standard families.
double expect_closed_form(const DistributionFunction& law);

MomentResult moment(const RandomVariable& x, int k, double tol = 1e-6);
MomentResult variance(const RandomVariable& x, double tol = 1e-6);
MomentResult lp_norm(const RandomVariable& x, double p, double tol = 1e-6);

/// E(g(X)). Exact for discrete laws. For continuous laws the reported
/// truncation error assumes |g| is monotone beyond the truncation window.
MomentResult expect_of_function(const std::function<double(double)>& g, const RandomVariable& x,
                                double tol = 1e-6);

/// |E(aX + b) - (a E(X) + b)|.
double affine_check(const RandomVariable& x, double a, double b, double tol = 1e-6);

}  // namespace probkit
