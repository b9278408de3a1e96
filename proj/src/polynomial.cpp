#include "probkit/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace probkit {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    trim();
}

void Polynomial::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) return Polynomial({0.0});
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<double>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
    std::vector<double> a(coeffs_.size() + 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i + 1] = coeffs_[i] / static_cast<double>(i + 1);
    return Polynomial(std::move(a));
}

double Polynomial::definite_integral(double a, double b) const {
    const Polynomial F = antiderivative();
    return F(b) - F(a);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<double> s(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) s[i] += other.coeffs_[i];
    return Polynomial(std::move(s));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    std::vector<double> p(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) p[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(p));
}

Polynomial Polynomial::operator*(double c) const {
    std::vector<double> p = coeffs_;
    for (auto& v : p) v *= c;
    return Polynomial(std::move(p));
}

namespace {

// Bisection on a sign change; the polynomial is monotone on [lo, hi].
double bisect_root(const Polynomial& p, double lo, double hi) {
    double flo = p(lo);
    double fhi = p(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = p(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) != (fm < 0.0)) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> Polynomial::real_roots(double lo, double hi) const {
    std::vector<double> roots;
    if (degree() <= 0) return roots;  // constants: no isolated roots reported
    if (degree() == 1) {
        const double r = -coeffs_[0] / coeffs_[1];
        if (r >= lo && r <= hi) roots.push_back(r);
        return roots;
    }
    // Split [lo, hi] at the derivative's roots: the poly is monotone between.
    std::vector<double> nodes = derivative().real_roots(lo, hi);
    nodes.insert(nodes.begin(), lo);
    nodes.push_back(hi);
    std::sort(nodes.begin(), nodes.end());
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double a = nodes[i], b = nodes[i + 1];
        if (!(a < b)) continue;
        const double fa = (*this)(a), fb = (*this)(b);
        if (fa == 0.0) {
            if (roots.empty() || roots.back() != a) roots.push_back(a);
        }
        if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)) {
            roots.push_back(bisect_root(*this, a, b));
        } else if (fb == 0.0 && i + 2 == nodes.size()) {
            roots.push_back(b);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<double> Polynomial::critical_points(double lo, double hi) const {
    std::vector<double> pts = derivative().real_roots(lo, hi);
    std::erase_if(pts, [&](double x) { return !(x > lo && x < hi); });
    return pts;
}

std::pair<double, double> Polynomial::range_on(double lo, double hi) const {
    double mn = std::min((*this)(lo), (*this)(hi));
    double mx = std::max((*this)(lo), (*this)(hi));
    for (double c : critical_points(lo, hi)) {
        const double v = (*this)(c);
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    return {mn, mx};
}

}  // namespace probkit
