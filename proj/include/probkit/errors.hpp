#pragma once

#include <stdexcept>
#include <string>

namespace probkit {

// Length of an unbounded set under Lebesgue measure. Raised instead of
// returning +inf so callers can tell "infinite by construction" apart from
// numeric overflow.
struct infinite_length_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Integrand and integrator share a discontinuity point, or the bracketing
// criterion provably cannot be met (Dirichlet-style integrands).
struct non_integrable_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A stated hypothesis (monotonicity, convexity, conjugate exponents,
// mean-zero, support range, ...) failed a probe.
struct hypothesis_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace probkit
