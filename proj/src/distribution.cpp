#include "probkit/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace probkit {

namespace {

constexpr double kMassTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

double kahan_sum(const std::vector<double>& v) {
    double s = 0.0, c = 0.0;
    for (double x : v) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }
double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

// 53-bit uniform in [0, 1); keeps sampling independent of library
// distribution internals so fixed seeds reproduce everywhere.
struct UniformStream {
    std::mt19937_64 eng;
    explicit UniformStream(std::uint64_t seed) : eng(seed) {}
    double next() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
};

}  // namespace

void DistributionFunction::finalize_discrete() {
    cum_.resize(masses_.size());
    double run = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < masses_.size(); ++i) {
        const double y = masses_[i] - comp;
        const double t = run + y;
        comp = (t - run) - y;
        run = t;
        cum_[i] = run;
    }
    if (weight_discrete_ > 0.0) disc_points_ = points_;
}

DistributionFunction DistributionFunction::discrete(std::vector<double> points, std::vector<double> masses) {
    if (points.empty() || points.size() != masses.size())
        throw std::invalid_argument("discrete law needs matching nonempty points/masses");
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (!(points[i] < points[i + 1])) throw std::invalid_argument("discrete support must be strictly ascending");
    for (double m : masses)
        if (!(m > 0.0)) throw std::invalid_argument("discrete masses must be positive");
    const double total = kahan_sum(masses);
    if (std::abs(total - 1.0) > kMassTol)
        throw std::invalid_argument("discrete masses must sum to 1 within 1e-12 (got " + std::to_string(total) + ")");
    DistributionFunction f;
    f.family_ = Family::Discrete;
    f.weight_discrete_ = 1.0;
    f.points_ = std::move(points);
    f.masses_ = std::move(masses);
    f.finalize_discrete();
    return f;
}

DistributionFunction DistributionFunction::point_mass(double c) {
    auto f = discrete({c}, {1.0});
    return f;
}

DistributionFunction DistributionFunction::bernoulli(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("bernoulli requires 0 < p < 1");
    // Convention from the source F: F(x) = p on [0, 1), so P(X=0) = p and
    // P(X=1) = 1 - p.
    auto f = discrete({0.0, 1.0}, {p, 1.0 - p});
    f.family_ = Family::Bernoulli;
    f.p_ = p;
    return f;
}

DistributionFunction DistributionFunction::binomial(int n, double p) {
    if (n < 1 || n > 100000) throw std::invalid_argument("binomial requires 1 <= n <= 100000");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("binomial requires 0 < p < 1");
    std::vector<double> pts(static_cast<std::size_t>(n) + 1), ms(static_cast<std::size_t>(n) + 1);
    const double lp = std::log(p), lq = std::log1p(-p);
    for (int k = 0; k <= n; ++k) {
        pts[static_cast<std::size_t>(k)] = k;
        const double lc = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
        ms[static_cast<std::size_t>(k)] = std::exp(lc + k * lp + (n - k) * lq);
    }
    // Squash rounding residue so the unit-mass invariant holds exactly.
    const double resid = 1.0 - kahan_sum(ms);
    ms[static_cast<std::size_t>(n / 2)] += resid;
    auto f = discrete(std::move(pts), std::move(ms));
    f.family_ = Family::Binomial;
    f.n_ = n;
    f.p_ = p;
    return f;
}

DistributionFunction DistributionFunction::poisson(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("poisson requires lambda > 0");
    std::vector<double> pts, ms;
    double term = std::exp(-lambda);  // P(X = 0)
    double cum = 0.0;
    for (int k = 0; k < 20000; ++k) {
        if (term > 0.0) {
            pts.push_back(k);
            ms.push_back(term);
        }
        cum += term;
        if (k >= lambda && 1.0 - cum < kMassTol) break;
        term *= lambda / (k + 1);
    }
    // Truncated on purpose: deficit < 1e-12 stays visible to callers that
    // track truncation error, so no renormalization here.
    DistributionFunction f;
    f.family_ = Family::Poisson;
    f.weight_discrete_ = 1.0;
    f.points_ = std::move(pts);
    f.masses_ = std::move(ms);
    f.lambda_ = lambda;
    f.finalize_discrete();
    return f;
}

DistributionFunction DistributionFunction::continuous(std::function<double(double)> cdf,
                                                      std::function<double(double)> density) {
    if (!cdf) throw std::invalid_argument("continuous law needs a cdf callable");
    DistributionFunction f;
    f.family_ = Family::Continuous;
    f.weight_discrete_ = 0.0;
    f.cont_cdf_ = std::move(cdf);
    f.density_ = std::move(density);
    return f;
}

DistributionFunction DistributionFunction::normal01() {
    auto f = continuous(normal_cdf, normal_pdf);
    f.family_ = Family::Normal01;
    return f;
}

DistributionFunction DistributionFunction::exponential1() {
    auto f = continuous([](double x) { return x > 0.0 ? -std::expm1(-x) : 0.0; },
                        [](double x) { return x >= 0.0 ? std::exp(-x) : 0.0; });
    f.family_ = Family::Exponential1;
    return f;
}

DistributionFunction DistributionFunction::mixed(double w, const DistributionFunction& discrete_part,
                                                 const DistributionFunction& continuous_part) {
    if (!(w > 0.0 && w < 1.0)) throw std::invalid_argument("mixed weight must lie in (0, 1)");
    if (!discrete_part.purely_discrete()) throw std::invalid_argument("mixed: first part must be purely discrete");
    if (!continuous_part.purely_continuous())
        throw std::invalid_argument("mixed: second part must be purely continuous");
    DistributionFunction f;
    f.family_ = Family::Mixed;
    f.weight_discrete_ = w;
    f.points_ = discrete_part.points_;
    f.masses_ = discrete_part.masses_;
    f.cont_cdf_ = continuous_part.cont_cdf_;
    f.density_ = continuous_part.density_;
    f.parts_ = {discrete_part, continuous_part};
    f.finalize_discrete();
    return f;
}

const DistributionFunction* DistributionFunction::mixed_discrete() const {
    return parts_.size() == 2 ? &parts_[0] : nullptr;
}
const DistributionFunction* DistributionFunction::mixed_continuous() const {
    return parts_.size() == 2 ? &parts_[1] : nullptr;
}

double DistributionFunction::discrete_cdf(double x) const {
    auto it = std::upper_bound(points_.begin(), points_.end(), x);
    return it == points_.begin() ? 0.0 : cum_[static_cast<std::size_t>(it - points_.begin()) - 1];
}

double DistributionFunction::discrete_cdf_left(double x) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), x);
    return it == points_.begin() ? 0.0 : cum_[static_cast<std::size_t>(it - points_.begin()) - 1];
}

double DistributionFunction::cdf(double x) const {
    if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
    const double w = weight_discrete_;
    double v = 0.0;
    if (w > 0.0) v += w * discrete_cdf(x);
    if (w < 1.0) v += (1.0 - w) * cont_cdf_(x);
    return v;
}

double DistributionFunction::cdf_left(double x) const {
    if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
    const double w = weight_discrete_;
    double v = 0.0;
    if (w > 0.0) v += w * discrete_cdf_left(x);
    if (w < 1.0) v += (1.0 - w) * cont_cdf_(x);  // declared continuous: F(x-) = F(x)
    return v;
}

double DistributionFunction::jump(double x) const { return cdf(x) - cdf_left(x); }

double DistributionFunction::prob_interval(Bracket br, double a, double b) const {
    if (a > b) throw std::invalid_argument("prob_interval requires a <= b");
    if (a == b) return br == Bracket::Closed ? jump(a) : 0.0;
    double v = 0.0;
    switch (br) {
        case Bracket::OpenClosed: v = cdf(b) - cdf(a); break;
        case Bracket::Open: v = cdf_left(b) - cdf(a); break;
        case Bracket::ClosedOpen: v = cdf_left(b) - cdf_left(a); break;
        case Bracket::Closed: v = cdf(b) - cdf_left(a); break;
    }
    return std::max(v, 0.0);
}

std::vector<std::pair<double, double>> DistributionFunction::support_and_mass() const {
    if (!purely_discrete()) throw hypothesis_error("support_and_mass requires a purely discrete law");
    std::vector<std::pair<double, double>> out;
    out.reserve(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) out.emplace_back(points_[i], masses_[i]);
    return out;
}

double DistributionFunction::quantile(double q) const {
    if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("quantile requires q in (0, 1]");
    if (purely_discrete()) {
        auto it = std::lower_bound(cum_.begin(), cum_.end(), q);
        if (it == cum_.end()) return points_.back();
        return points_[static_cast<std::size_t>(it - cum_.begin())];
    }
    // Bracket then bisect inf{x : F(x) >= q}; jumps are fine because we keep
    // the invariant F(lo) < q <= F(hi).
    double lo = -1.0, hi = 1.0;
    for (int i = 0; i < 200 && cdf(lo) >= q; ++i) lo *= 2.0;
    for (int i = 0; i < 200 && cdf(hi) < q; ++i) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (cdf(mid) >= q ? hi : lo) = mid;
    }
    return hi;
}

std::vector<double> DistributionFunction::sample(std::size_t n, std::uint64_t seed) const {
    if (n == 0) throw std::invalid_argument("sample requires n >= 1");
    UniformStream u(seed);
    std::vector<double> out;
    out.reserve(n);

    const auto draw_discrete = [&](double uu) {
        auto it = std::upper_bound(cum_.begin(), cum_.end(), uu);
        if (it == cum_.end()) return points_.back();
        return points_[static_cast<std::size_t>(it - cum_.begin())];
    };

    bool have_spare = false;
    double spare = 0.0;
    const auto draw_normal = [&]() {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        const double u1 = 1.0 - u.next();  // (0, 1]
        const double u2 = u.next();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare = r * std::sin(a);
        have_spare = true;
        return r * std::cos(a);
    };

    const auto draw_continuous = [&]() {
        switch (family_) {
            case Family::Normal01: return draw_normal();
            case Family::Exponential1: return -std::log1p(-u.next());
            default: break;
        }
        if (family_ == Family::Mixed && parts_.size() == 2) {
            const Family cf = parts_[1].family_;
            if (cf == Family::Normal01) return draw_normal();
            if (cf == Family::Exponential1) return -std::log1p(-u.next());
        }
        // custom continuous: inverse transform by bisection
        const double q = 1.0 - u.next();
        double lo = -1.0, hi = 1.0;
        for (int i = 0; i < 200 && cont_cdf_(lo) >= q; ++i) lo *= 2.0;
        for (int i = 0; i < 200 && cont_cdf_(hi) < q; ++i) hi *= 2.0;
        for (int i = 0; i < 100; ++i) (cont_cdf_(0.5 * (lo + hi)) >= q ? hi : lo) = 0.5 * (lo + hi);
        return hi;
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (weight_discrete_ == 1.0) {
            out.push_back(draw_discrete(u.next()));
        } else if (weight_discrete_ == 0.0) {
            out.push_back(draw_continuous());
        } else {
            out.push_back(u.next() < weight_discrete_ ? draw_discrete(u.next()) : draw_continuous());
        }
    }
    return out;
}

double DistributionFunction::support_min() const {
    switch (family_) {
        case Family::Normal01: return -kInf;
        case Family::Exponential1: return 0.0;
        case Family::Continuous: return -kInf;
        case Family::Mixed: {
            const double cmin = parts_[1].support_min();
            return std::min(points_.front(), cmin);
        }
        default: return points_.front();
    }
}

double DistributionFunction::support_max() const {
    switch (family_) {
        case Family::Normal01: return kInf;
        case Family::Exponential1: return kInf;
        case Family::Continuous: return kInf;
        case Family::Mixed: {
            const double cmax = parts_[1].support_max();
            return std::max(points_.back(), cmax);
        }
        default: return points_.back();
    }
}

DistributionFunction empirical_cdf(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("empirical_cdf requires at least one sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> pts, ms;
    const double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        pts.push_back(sorted[i]);
        ms.push_back(static_cast<double>(j - i) / n);
        i = j;
    }
    // absorb division rounding so the masses sum to one exactly
    double total = 0.0;
    for (double m : ms) total += m;
    ms.back() += 1.0 - total;
    return DistributionFunction::discrete(std::move(pts), std::move(ms));
}

double kolmogorov_distance(const DistributionFunction& model, std::span<const double> samples) {
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    std::vector<double> candidates = sorted;
    candidates.insert(candidates.end(), model.discontinuities().begin(), model.discontinuities().end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    double d = 0.0;
    for (double x : candidates) {
        const auto below_eq = std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
        const auto below = std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
        d = std::max(d, std::abs(static_cast<double>(below_eq) / n - model.cdf(x)));
        d = std::max(d, std::abs(static_cast<double>(below) / n - model.cdf_left(x)));
    }
    return d;
}

}  // namespace probkit
