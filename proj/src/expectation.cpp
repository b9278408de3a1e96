#include "probkit/expectation.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>

namespace probkit {

namespace {

double kahan_terms(const std::vector<double>& v) {
    double s = 0.0, c = 0.0;
    for (double x : v) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }
double normal_upper_tail(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

// E[X^k 1{X > T}] for the standard normal, by the moment recursion
// M_k = T^{k-1} phi(T) + (k-1) M_{k-2}.
double normal_tail_moment(int k, double t) {
    if (k == 0) return normal_upper_tail(t);
    if (k == 1) return normal_pdf(t);
    return std::pow(t, k - 1) * normal_pdf(t) + (k - 1) * normal_tail_moment(k - 2, t);
}

// integral over (T, inf) of x^k e^-x dx = incomplete-gamma closed form.
double exponential_tail_moment(int k, double t) {
    double fact = 1.0;
    double powt = 1.0;
    double s = 0.0;
    for (int j = 0; j <= k; ++j) {
        if (j > 0) {
            fact *= j;
            powt *= t;
        }
        s += powt / fact;
    }
    // sum of T^j / j! times k!, all under e^-T
    double kfact = 1.0;
    for (int j = 2; j <= k; ++j) kfact *= j;
    return kfact * std::exp(-t) * s;
}

constexpr double kNormalWindow = 10.0;
constexpr double kExponentialWindow = 40.0;

struct Window {
    double lo, hi;
};

Window window_for(const DistributionFunction& law) {
    switch (law.family()) {
        case Family::Normal01: return {-kNormalWindow, kNormalWindow};
        case Family::Exponential1: return {0.0, kExponentialWindow};
        default: break;
    }
    // custom continuous: expand until the remaining mass is negligible
    double t = 1.0;
    for (int i = 0; i < 60; ++i) {
        if (law.cdf(-t) < 1e-13 && 1.0 - law.cdf(t) < 1e-13) break;
        t *= 2.0;
    }
    return {-t, t};
}

// tail bound for |x|^p outside the window, using ceil(p) moments (valid since
// the windows start beyond |x| = 1)
double tail_moment_bound(const DistributionFunction& law, double p) {
    const int k = static_cast<int>(std::ceil(p));
    switch (law.family()) {
        case Family::Normal01: return 2.0 * normal_tail_moment(k, kNormalWindow);
        case Family::Exponential1: return exponential_tail_moment(k, kExponentialWindow);
        default: break;
    }
    const Window w = window_for(law);
    const double tail_mass = law.cdf(w.lo) + (1.0 - law.cdf(w.hi));
    return tail_mass * std::pow(std::max(std::abs(w.lo), std::abs(w.hi)), p);
}

// Exact remainder of sum over j > last stored point of |g(j)| p_j for the
// truncated Poisson, by extending the mass recurrence.
double poisson_tail_remainder(const DistributionFunction& law, const std::function<double(double)>& g_abs) {
    const double lambda = law.param_lambda();
    const auto support = law.support_and_mass();
    const double k_last = support.back().first;
    double term = support.back().second;
    double j = k_last;
    double rem = 0.0;
    for (int i = 0; i < 2000; ++i) {
        term *= lambda / (j + 1.0);
        j += 1.0;
        const double contrib = g_abs(j) * term;
        rem += contrib;
        if (contrib < 1e-300 || contrib < 1e-18 * (1.0 + rem)) break;
    }
    return rem;
}

MomentResult expect_g(const std::function<double(double)>& g, const DistributionFunction& law, double tol,
                      double order);

MomentResult expect_g_continuous(const std::function<double(double)>& g, const DistributionFunction& law,
                                 double tol, double order) {
    MomentResult r;
    r.order = order;
    r.method = MomentMethod::Stieltjes;
    const Window w = window_for(law);
    if (law.density()) {
        Integrand prod{std::function<double(double)>(
            [g, d = law.density()](double x) { return g(x) * d(x); })};
        r.value = integrate(prod, Integrator::identity(), w.lo, w.hi, tol).value;
    } else {
        Integrand gi{std::function<double(double)>(g)};
        r.value = integrate(gi, Integrator::from_distribution(law), w.lo, w.hi, tol).value;
    }
    const double tail_mass = law.cdf(w.lo) + (1.0 - law.cdf(w.hi));
    r.truncation_error = tail_mass * std::max(std::abs(g(w.lo)), std::abs(g(w.hi)));
    return r;
}

MomentResult expect_g(const std::function<double(double)>& g, const DistributionFunction& law, double tol,
                      double order) {
    MomentResult r;
    r.order = order;
    if (law.purely_discrete()) {
        std::vector<double> terms;
        for (const auto& [x, m] : law.support_and_mass()) terms.push_back(g(x) * m);
        r.value = kahan_terms(terms);
        r.method = MomentMethod::Enumeration;
        if (law.family() == Family::Poisson)
            r.truncation_error = poisson_tail_remainder(law, [&g](double x) { return std::abs(g(x)); });
        return r;
    }
    if (law.purely_continuous()) return expect_g_continuous(g, law, tol, order);
    // mixed: linear combination of the parts
    const double w = law.discrete_weight();
    const MomentResult d = expect_g(g, *law.mixed_discrete(), tol, order);
    const MomentResult c = expect_g(g, *law.mixed_continuous(), tol, order);
    r.value = w * d.value + (1.0 - w) * c.value;
    r.truncation_error = w * d.truncation_error + (1.0 - w) * c.truncation_error;
    r.method = MomentMethod::Stieltjes;
    return r;
}

}  // namespace

IntegrabilityReport is_integrable(const RandomVariable& x, double t_max, double tol) {
    const DistributionFunction& law = x.law;
    IntegrabilityReport rep;

    if (law.purely_discrete()) {
        const auto support = law.support_and_mass();
        double prev_increment = 0.0;
        double partial = 0.0;
        double t = 1.0;
        std::size_t consumed = 0;
        std::vector<std::pair<double, double>> by_abs(support.begin(), support.end());
        std::sort(by_abs.begin(), by_abs.end(),
                  [](const auto& a, const auto& b) { return std::abs(a.first) < std::abs(b.first); });
        while (t <= t_max) {
            double inc = 0.0;
            while (consumed < by_abs.size() && std::abs(by_abs[consumed].first) <= t) {
                inc += std::abs(by_abs[consumed].first) * by_abs[consumed].second;
                ++consumed;
            }
            partial += inc;
            rep.probed_to = t;
            if (consumed == by_abs.size()) {
                rep.integrable = true;
                rep.abs_moment = partial;
                rep.tail_mass = std::max(0.0, 1.0 - law.cdf(by_abs.back().first));
                rep.diagnostic = "finite support covered exactly";
                return rep;
            }
            prev_increment = inc;
            t *= 2.0;
        }
        rep.integrable = false;
        rep.abs_moment = partial;
        rep.diagnostic = "budget exhausted: |x|-moment still growing (last increment " +
                         std::to_string(prev_increment) + " at T = " + std::to_string(rep.probed_to) + ")";
        return rep;
    }

    // continuous / mixed: doubling-window probe of the absolute moment
    double prev = 0.0;
    double t = 1.0;
    int flat = 0;
    while (t <= t_max) {
        Integrand absx{std::function<double(double)>([](double v) { return std::abs(v); })};
        absx.declare_extrema({0.0});
        const double cur = integrate(absx, Integrator::from_distribution(law), -t, t, 1e-6, 40000).value;
        rep.probed_to = t;
        rep.abs_moment = cur;
        if (cur - prev < std::max(tol, 1e-9 * (1.0 + cur))) {
            if (++flat >= 2) {
                rep.integrable = true;
                rep.tail_mass = law.cdf(-t) + (1.0 - law.cdf(t));
                rep.diagnostic = "absolute moment flattened by T = " + std::to_string(t);
                return rep;
            }
        } else {
            flat = 0;
        }
        prev = cur;
        t *= 2.0;
    }
    rep.integrable = false;
    rep.diagnostic = "budget exhausted: |x|-moment still growing at T = " + std::to_string(rep.probed_to);
    return rep;
}

MomentResult expect(const RandomVariable& x, double tol) {
    const IntegrabilityReport rep = is_integrable(x);
    if (!rep.integrable) throw hypothesis_error("law is not integrable: " + rep.diagnostic);
    return expect_g([](double v) { return v; }, x.law, tol, 1.0);
}

double expect_closed_form(const DistributionFunction& law) {
    switch (law.family()) {
        case Family::Bernoulli: return 1.0 - law.param_p();
        case Family::Binomial: return law.param_n() * law.param_p();
        case Family::Poisson: return law.param_lambda();
        case Family::Normal01: return 0.0;
        case Family::Exponential1: return 1.0;
        default: throw std::invalid_argument("no closed-form expectation for this law");
    }
}

MomentResult moment(const RandomVariable& x, int k, double tol) {
    if (k < 1) throw std::invalid_argument("moment order must be >= 1");
    MomentResult r = expect_g([k](double v) { return std::pow(v, k); }, x.law, tol, static_cast<double>(k));
    if (!x.law.purely_discrete()) {
        double t = 0.0;
        if (x.law.purely_continuous()) t = tail_moment_bound(x.law, k);
        else t = (1.0 - x.law.discrete_weight()) * tail_moment_bound(*x.law.mixed_continuous(), k);
        r.truncation_error = std::max(r.truncation_error, t);
    }
    return r;
}

MomentResult variance(const RandomVariable& x, double tol) {
    const MomentResult m1 = expect(x, tol);
    const MomentResult m2 = moment(x, 2, tol);
    MomentResult r;
    r.order = 2.0;
    r.method = m2.method;
    r.truncation_error = m2.truncation_error + 2.0 * std::abs(m1.value) * m1.truncation_error;
    const double sq = m1.value * m1.value;
    if (m2.value > 0.0 && std::abs(m2.value - sq) < 1e-8 * m2.value)
        std::cerr << "variance: m2 and m1^2 agree to more than 8 digits; cancellation risk\n";
    r.value = std::max(0.0, m2.value - sq);
    return r;
}

MomentResult lp_norm(const RandomVariable& x, double p, double tol) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm requires p >= 1");
    MomentResult r = expect_g([p](double v) { return std::pow(std::abs(v), p); }, x.law, tol, p);
    if (!x.law.purely_discrete()) {
        double t = 0.0;
        if (x.law.purely_continuous()) t = tail_moment_bound(x.law, p);
        else t = (1.0 - x.law.discrete_weight()) * tail_moment_bound(*x.law.mixed_continuous(), p);
        r.truncation_error = std::max(r.truncation_error, t);
    }
    const double mp = std::max(r.value, 0.0);
    MomentResult out;
    out.order = p;
    out.method = r.method;
    out.value = std::pow(mp, 1.0 / p);
    // first-order propagation of the p-th moment error through the root
    out.truncation_error = mp > 0.0 ? r.truncation_error / (p * std::pow(mp, 1.0 - 1.0 / p)) : r.truncation_error;
    return out;
}

MomentResult expect_of_function(const std::function<double(double)>& g, const RandomVariable& x, double tol) {
    return expect_g(g, x.law, tol, 1.0);
}

double affine_check(const RandomVariable& x, double a, double b, double tol) {
    const MomentResult lhs = expect_of_function([a, b](double v) { return a * v + b; }, x, tol);
    const MomentResult ex = expect(x, tol);
    return std::abs(lhs.value - (a * ex.value + b));
}

}  // namespace probkit
