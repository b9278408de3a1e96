#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace probkit {

/// Dense univariate polynomial, coefficients in ascending degree order.
/// Polynomials are the one integrand family the toolkit integrates in closed
/// form; everything else goes through the partition machinery.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial constant(double c) { return Polynomial({c}); }
    static Polynomial identity() { return Polynomial({0.0, 1.0}); }

    double operator()(double x) const;  // Horner evaluation
    const std::vector<double>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Polynomial derivative() const;
    Polynomial antiderivative() const;  // constant term 0
    double definite_integral(double a, double b) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(double c) const;

    /// Real roots inside [lo, hi], ascending. Monotone-piece bisection with
    /// critical points found recursively; fine for the small degrees used here.
    std::vector<double> real_roots(double lo, double hi) const;

    /// Interior critical points (roots of the derivative) inside (lo, hi).
    std::vector<double> critical_points(double lo, double hi) const;

    /// Exact min/max over [lo, hi] via endpoints plus critical points.
    std::pair<double, double> range_on(double lo, double hi) const;

private:
    std::vector<double> coeffs_;
    void trim();
};

}  // namespace probkit
