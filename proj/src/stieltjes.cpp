#include "probkit/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace probkit {

namespace {

double kahan(const std::vector<double>& v) {
    double s = 0.0, c = 0.0;
    for (double x : v) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Integrand

Integrand::Integrand(std::function<double(double)> fn) : fn_(std::move(fn)) {
    if (!fn_) throw std::invalid_argument("integrand callable must be non-null");
}

Integrand::Integrand(const Polynomial& p) : poly_(p) {
    fn_ = [q = p](double x) { return q(x); };
}

Integrand& Integrand::declare_discontinuities(std::vector<double> pts) {
    discontinuities_ = sorted_unique(std::move(pts));
    return *this;
}

Integrand& Integrand::declare_extrema(std::vector<double> pts) {
    extrema_ = sorted_unique(std::move(pts));
    return *this;
}

Integrand& Integrand::with_range_oracle(std::function<std::pair<double, double>(double, double)> oracle) {
    range_oracle_ = std::move(oracle);
    return *this;
}

std::pair<double, double> Integrand::range_on(double lo, double hi, int probes) const {
    if (range_oracle_) return range_oracle_(lo, hi);
    if (poly_) return poly_->range_on(lo, hi);
    if (probes < 2) probes = 2;
    double mn = 0.0, mx = 0.0;
    bool first = true;
    const auto visit = [&](double x) {
        const double v = fn_(x);
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "integrand is unbounded or undefined on [" << lo << ", " << hi << "] (f(" << x << ") = " << v
               << ")";
            throw std::domain_error(os.str());
        }
        if (first) {
            mn = mx = v;
            first = false;
        } else {
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
    };
    const double h = (hi - lo) / (probes - 1);
    for (int i = 0; i < probes; ++i) visit(i + 1 == probes ? hi : lo + i * h);
    for (double e : extrema_)
        if (e > lo && e < hi) visit(e);
    return {mn, mx};
}

Integrand Integrand::dirichlet() {
    Integrand f{std::function<double(double)>([](double) { return 1.0; })};
    f.with_range_oracle([](double, double) { return std::pair<double, double>{0.0, 1.0}; });
    return f;
}

// ---------------------------------------------------------------------------
// Integrator

Integrator Integrator::identity() {
    Integrator f = from_polynomial(Polynomial::identity());
    return f;
}

Integrator Integrator::floor_function() {
    Integrator f;
    f.value_ = [](double x) { return std::floor(x); };
    f.left_ = [](double x) { return x == std::floor(x) ? x - 1.0 : std::floor(x); };
    f.purely_atomic_ = true;
    f.atoms_are_integers_ = true;
    return f;
}

Integrator Integrator::from_function(std::function<double(double)> fn, std::vector<double> jump_points,
                                     std::function<double(double)> left_fn) {
    if (!fn) throw std::invalid_argument("integrator callable must be non-null");
    Integrator f;
    f.value_ = std::move(fn);
    f.left_ = std::move(left_fn);
    f.jump_points_ = sorted_unique(std::move(jump_points));
    return f;
}

Integrator Integrator::from_polynomial(const Polynomial& p) {
    Integrator f;
    f.value_ = [q = p](double x) { return q(x); };
    f.poly_ = p;
    return f;
}

Integrator Integrator::step(double c, double before, double after) {
    if (after < before) throw std::invalid_argument("step integrator must be non-decreasing");
    Integrator f;
    f.value_ = [=](double x) { return x < c ? before : after; };
    f.left_ = [=](double x) { return x <= c ? before : after; };
    f.jump_points_ = {c};
    f.purely_atomic_ = true;
    f.atoms_ = {{c, after - before}};
    return f;
}

Integrator Integrator::from_distribution(const DistributionFunction& f) {
    Integrator g;
    g.value_ = [f](double x) { return f.cdf(x); };
    g.left_ = [f](double x) { return f.cdf_left(x); };
    g.jump_points_ = f.discontinuities();
    if (f.purely_discrete()) {
        g.purely_atomic_ = true;
        for (const auto& [x, m] : f.support_and_mass()) g.atoms_.push_back({x, m});
    }
    return g;
}

std::vector<double> Integrator::jumps_in(double a, double b) const {
    std::vector<double> out;
    if (atoms_are_integers_) {
        for (double k = std::floor(a) + 1.0; k < b; k += 1.0)
            if (k > a) out.push_back(k);
        return out;
    }
    for (double j : jump_points_)
        if (j > a && j < b) out.push_back(j);
    return out;
}

std::vector<Atom> Integrator::atoms_in(double a, double b) const {
    std::vector<Atom> out;
    if (atoms_are_integers_) {
        for (double k = std::floor(a) + 1.0; k <= b; k += 1.0)
            if (k > a) out.push_back({k, 1.0});
        return out;
    }
    for (const Atom& at : atoms_)
        if (at.x > a && at.x <= b) out.push_back(at);
    return out;
}

Integrand as_integrand(const Integrator& f) {
    if (f.poly()) return Integrand(*f.poly());
    Integrand g{std::function<double(double)>([f](double x) { return f(x); })};
    // the integrator's jumps become declared discontinuities of the integrand
    std::vector<double> jumps = f.jumps_in(-std::numeric_limits<double>::infinity(),
                                           std::numeric_limits<double>::infinity());
    if (!jumps.empty()) g.declare_discontinuities(std::move(jumps));
    return g;
}

// ---------------------------------------------------------------------------
// Partition and plain sums

Partition Partition::uniform(double a, double b, int n) {
    if (!(a < b) || n < 1) throw std::invalid_argument("uniform partition requires a < b and n >= 1");
    Partition p;
    p.points.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) p.points[static_cast<std::size_t>(i)] = a + (b - a) * i / n;
    p.points.back() = b;
    return p;
}

Partition Partition::with_midpoint_tags() const {
    Partition p = *this;
    p.tags.resize(points.size() - 1);
    for (std::size_t i = 0; i + 1 < points.size(); ++i) p.tags[i] = 0.5 * (points[i] + points[i + 1]);
    return p;
}

Partition Partition::refined_with(std::vector<double> extra) const {
    Partition p;
    p.points = points;
    for (double x : extra)
        if (x > a() && x < b()) p.points.push_back(x);
    p.points = sorted_unique(std::move(p.points));
    return p;
}

double Partition::norm() const {
    double n = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) n = std::max(n, points[i + 1] - points[i]);
    return n;
}

void Partition::validate() const {
    if (points.size() < 2) throw std::invalid_argument("partition needs at least two points");
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (!(points[i] < points[i + 1])) throw std::invalid_argument("partition points must be strictly increasing");
    if (!tags.empty()) {
        if (tags.size() != points.size() - 1)
            throw std::invalid_argument("tag count must match subinterval count");
        for (std::size_t i = 0; i < tags.size(); ++i)
            if (!(tags[i] >= points[i] && tags[i] <= points[i + 1]))
                throw std::invalid_argument("tags must lie inside their subintervals");
    }
}

namespace {

double subinterval_weight(const Integrator& F, double x0, double x1) {
    const double w = F(x1) - F(x0);
    if (w < -1e-12 * std::max(1.0, std::abs(F(x1))))
        throw hypothesis_error("integrator is not monotone non-decreasing on the partition");
    return std::max(w, 0.0);
}

}  // namespace

double lower_sum(const Integrand& f, const Integrator& F, const Partition& p) {
    p.validate();
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < p.points.size(); ++i)
        s += f.range_on(p.points[i], p.points[i + 1]).first * subinterval_weight(F, p.points[i], p.points[i + 1]);
    return s;
}

double upper_sum(const Integrand& f, const Integrator& F, const Partition& p) {
    p.validate();
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < p.points.size(); ++i)
        s += f.range_on(p.points[i], p.points[i + 1]).second * subinterval_weight(F, p.points[i], p.points[i + 1]);
    return s;
}

double rs_sum(const Integrand& f, const Integrator& F, const Partition& p) {
    p.validate();
    if (!p.has_tags()) throw std::invalid_argument("rs_sum requires a tagged partition");
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < p.points.size(); ++i)
        s += f(p.tags[i]) * subinterval_weight(F, p.points[i], p.points[i + 1]);
    return s;
}

// ---------------------------------------------------------------------------
// Adaptive integration

namespace {

struct Segment {
    double x0, x1;
    double w;     // F(x1) - F(x0)
    double m, M;  // inf/sup estimates of f
    double fmid;  // midpoint tag value
    bool alive = true;
    double contrib() const { return (M - m) * w; }
    bool splittable() const {
        const double mid = 0.5 * (x0 + x1);
        return mid > x0 && mid < x1;
    }
};

IntegrationResult exact_result(double value) {
    IntegrationResult r;
    r.value = r.lower = r.upper = value;
    r.gap = 0.0;
    r.converged = true;
    return r;
}

}  // namespace

IntegrationResult integrate(const Integrand& f, const Integrator& F, double a, double b, double tol,
                            std::size_t max_refinements) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (a == b) return exact_result(0.0);
    if (a > b) {
        IntegrationResult r = integrate(f, F, b, a, tol, max_refinements);
        return {-r.value, -r.upper, -r.lower, r.gap, r.refinements, r.converged};
    }

    // Purely atomic integrator: exact weighted sum over (a, b].
    if (F.purely_atomic()) {
        std::vector<double> terms;
        for (const Atom& at : F.atoms_in(a, b)) terms.push_back(f(at.x) * at.mass);
        return exact_result(kahan(terms));
    }

    // Polynomial against polynomial: closed form.
    if (f.poly() && F.poly()) {
        const Polynomial fprime = F.poly()->derivative();
        if (fprime.range_on(a, b).first < -1e-9 * std::max(1.0, std::abs((*F.poly())(b))))
            throw hypothesis_error("polynomial integrator is decreasing on [a, b]");
        return exact_result(((*f.poly()) * fprime).definite_integral(a, b));
    }

    // Shared discontinuities make the bracketing criterion unattainable.
    {
        const std::vector<double> fj = F.jumps_in(a, b);
        for (double d : f.discontinuities())
            if (std::binary_search(fj.begin(), fj.end(), d))
                throw non_integrable_error("integrand and integrator share a discontinuity at x = " +
                                           std::to_string(d));
    }

    std::vector<double> pts{a, b};
    for (double j : F.jumps_in(a, b)) pts.push_back(j);
    for (double d : f.discontinuities())
        if (d > a && d < b) pts.push_back(d);
    pts = sorted_unique(std::move(pts));

    std::vector<Segment> segs;
    segs.reserve(1024);
    const auto make_segment = [&](double x0, double x1) {
        Segment s;
        s.x0 = x0;
        s.x1 = x1;
        s.w = subinterval_weight(F, x0, x1);
        const auto [mn, mx] = f.range_on(x0, x1);
        s.m = mn;
        s.M = mx;
        s.fmid = f(0.5 * (x0 + x1));
        return s;
    };
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) segs.push_back(make_segment(pts[i], pts[i + 1]));

    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry> heap;
    double gap = 0.0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        gap += segs[i].contrib();
        heap.emplace(segs[i].contrib(), i);
    }

    const auto exact_sums = [&]() {
        std::vector<double> ls, us;
        ls.reserve(segs.size());
        us.reserve(segs.size());
        for (const Segment& s : segs) {
            if (!s.alive) continue;
            ls.push_back(s.m * s.w);
            us.push_back(s.M * s.w);
        }
        return std::pair<double, double>{kahan(ls), kahan(us)};
    };

    std::size_t refinements = 0;
    while (refinements < max_refinements) {
        if (gap <= tol) {
            const auto [lo, hi] = exact_sums();
            gap = hi - lo;
            if (gap <= tol) break;
        }
        // pop the live segment with the largest contribution
        std::size_t idx = segs.size();
        while (!heap.empty()) {
            const auto [contrib, i] = heap.top();
            heap.pop();
            if (segs[i].alive && segs[i].splittable() && contrib == segs[i].contrib()) {
                idx = i;
                break;
            }
        }
        if (idx == segs.size()) break;  // nothing left to split

        Segment& parent = segs[idx];
        const double mid = 0.5 * (parent.x0 + parent.x1);
        const Segment left = make_segment(parent.x0, mid);
        const Segment right = make_segment(mid, parent.x1);
        gap += left.contrib() + right.contrib() - parent.contrib();
        parent.alive = false;
        segs.push_back(left);
        heap.emplace(left.contrib(), segs.size() - 1);
        segs.push_back(right);
        heap.emplace(right.contrib(), segs.size() - 1);
        ++refinements;
    }

    std::vector<double> vs;
    vs.reserve(segs.size());
    for (const Segment& s : segs)
        if (s.alive) vs.push_back(s.fmid * s.w);
    const auto [lo, hi] = exact_sums();

    IntegrationResult r;
    r.value = kahan(vs);
    r.lower = lo;
    r.upper = hi;
    r.gap = hi - lo;
    r.refinements = refinements;
    r.converged = r.gap < tol || r.gap <= tol * (1.0 + 1e-12);
    return r;
}

double integrate_jump(const Integrand& f, const Integrator& F, double a, double b, double c) {
    if (!(a < c && c < b)) throw std::invalid_argument("integrate_jump requires a < c < b");
    const double before = F(a), after = F(b);
    for (int k = 1; k <= 16; ++k) {
        const double xl = a + (c - a) * k / 17.0;
        const double xr = c + (b - c) * k / 16.0;
        if (F(xl) != before || F(xr) != after)
            throw std::invalid_argument("integrator is not a two-piece step around c");
    }
    return f(c) * (after - before);
}

namespace {

// Integral of g with the (piecewise) monotone function `weight` as
// integrator. Splits at declared or polynomial critical points; decreasing
// stretches go through the negation identity.
double integral_against_function(const Integrand& g, const Integrand& weight, double a, double b, double tol) {
    std::vector<double> cuts{a, b};
    if (weight.poly()) {
        for (double cpt : weight.poly()->critical_points(a, b)) cuts.push_back(cpt);
    } else if (!weight.extrema().empty()) {
        for (double e : weight.extrema())
            if (e > a && e < b) cuts.push_back(e);
    } else {
        // direction probe; reject if mixed
        const int n = 128;
        int sign = 0;
        double prev = weight(a);
        for (int i = 1; i <= n; ++i) {
            const double x = a + (b - a) * i / n;
            const double cur = weight(x);
            if (cur > prev) {
                if (sign < 0) throw hypothesis_error("function integrator is not monotone; declare its extrema");
                sign = 1;
            } else if (cur < prev) {
                if (sign > 0) throw hypothesis_error("function integrator is not monotone; declare its extrema");
                sign = -1;
            }
            prev = cur;
        }
    }
    cuts = sorted_unique(std::move(cuts));

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double u = cuts[i], v = cuts[i + 1];
        const bool increasing = weight(v) >= weight(u);
        Integrator seg = [&]() {
            if (weight.poly())
                return Integrator::from_polynomial(increasing ? *weight.poly() : *weight.poly() * -1.0);
            if (increasing) return Integrator::from_function([weight](double x) { return weight(x); });
            return Integrator::from_function([weight](double x) { return -weight(x); });
        }();
        const double part = integrate(g, seg, u, v, tol).value;
        total += increasing ? part : -part;
    }
    return total;
}

}  // namespace

double integration_by_parts_residual(const Integrand& f, const Integrator& F, double a, double b, double tol) {
    const IntegrationResult f_dF = integrate(f, F, a, b, tol);
    const double F_df = integral_against_function(as_integrand(F), f, a, b, tol);
    const double boundary = F(b) * f(b) - F(a) * f(a);
    return std::abs(f_dF.value + F_df - boundary);
}

ChangeOfVariablesResult change_of_variables(const Integrand& f, const Integrator& F,
                                            const std::function<double(double)>& g, double c, double d,
                                            double tol) {
    if (!(c < d)) throw std::invalid_argument("change_of_variables requires c < d");
    const int n = 128;
    int dir = 0;
    double prev = g(c);
    for (int i = 1; i <= n; ++i) {
        const double x = c + (d - c) * i / n;
        const double cur = g(x);
        if (cur > prev) {
            if (dir < 0) throw hypothesis_error("g is not strictly monotone on [c, d]");
            dir = 1;
        } else if (cur < prev) {
            if (dir > 0) throw hypothesis_error("g is not strictly monotone on [c, d]");
            dir = -1;
        } else {
            throw hypothesis_error("g is not strictly monotone on [c, d]");
        }
        prev = cur;
    }

    const double ga = g(c), gb = g(d);
    Integrand h{std::function<double(double)>([&f, &g](double x) { return f(g(x)); })};

    // pull F's jumps back through g so they stay pinned
    std::vector<double> pulled;
    const double lo = std::min(ga, gb), hi = std::max(ga, gb);
    for (double j : F.jumps_in(lo, hi)) {
        double u = c, v = d;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (u + v);
            if (mid == u || mid == v) break;
            const bool past = dir > 0 ? g(mid) >= j : g(mid) <= j;
            (past ? v : u) = mid;
        }
        pulled.push_back(0.5 * (u + v));
    }

    ChangeOfVariablesResult out{};
    IntegrationResult lhs;
    if (dir > 0) {
        Integrator G = Integrator::from_function([&F, &g](double x) { return F(g(x)); }, pulled);
        lhs = integrate(h, G, c, d, tol);
        out.substituted = lhs.value;
    } else {
        Integrator G = Integrator::from_function([&F, &g](double x) { return -F(g(x)); }, pulled);
        lhs = integrate(h, G, c, d, tol);
        out.substituted = -lhs.value;
    }
    const IntegrationResult rhs = integrate(f, F, ga, gb, tol);
    out.direct = rhs.value;
    out.discrepancy = std::abs(out.substituted - out.direct);
    const double allowance = lhs.gap + rhs.gap + std::max(tol, 1e-9 * (1.0 + std::abs(out.direct)));
    if (out.discrepancy > allowance)
        throw std::runtime_error("change of variables routes disagree beyond combined tolerance");
    return out;
}

double finite_sum_as_integral(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("finite_sum_as_integral requires at least one term");
    const auto n = static_cast<double>(values.size());
    Integrand step{std::function<double(double)>([vals = std::vector<double>(values.begin(), values.end())](double x) {
        const auto k = static_cast<std::ptrdiff_t>(std::ceil(x));
        if (k < 1 || k > static_cast<std::ptrdiff_t>(vals.size())) return 0.0;
        return vals[static_cast<std::size_t>(k - 1)];
    })};
    return integrate(step, Integrator::floor_function(), 0.0, n).value;
}

double euler_summation(const std::function<double(double)>& f, const std::function<double(double)>& f_prime,
                       double a, double b, double tol) {
    if (!(a <= b)) throw std::invalid_argument("euler_summation requires a <= b");
    const double boundary = f(a) * (a - std::floor(a)) - f(b) * (b - std::floor(b));
    if (a == b) return boundary;

    std::vector<double> cuts{a, b};
    for (double k = std::floor(a) + 1.0; k < b; k += 1.0)
        if (k > a) cuts.push_back(k);
    cuts = sorted_unique(std::move(cuts));

    const double per = tol / (2.0 * static_cast<double>(cuts.size()));
    double total = boundary;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double u = cuts[i], v = cuts[i + 1];
        const double k = std::floor(u);  // sawtooth is x - k on this stretch
        Integrand plain{std::function<double(double)>(f)};
        Integrand saw{std::function<double(double)>([&f_prime, k](double x) { return f_prime(x) * (x - k); })};
        total += integrate(plain, Integrator::identity(), u, v, per).value;
        total += integrate(saw, Integrator::identity(), u, v, per).value;
    }
    return total;
}

double euler_summation(const Polynomial& f, double a, double b) {
    if (!(a <= b)) throw std::invalid_argument("euler_summation requires a <= b");
    const Polynomial fp = f.derivative();
    double total = f.definite_integral(a, b) + f(a) * (a - std::floor(a)) - f(b) * (b - std::floor(b));
    if (a == b) return total - f.definite_integral(a, b);

    std::vector<double> cuts{a, b};
    for (double k = std::floor(a) + 1.0; k < b; k += 1.0)
        if (k > a) cuts.push_back(k);
    cuts = sorted_unique(std::move(cuts));
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double k = std::floor(cuts[i]);
        total += (fp * Polynomial({-k, 1.0})).definite_integral(cuts[i], cuts[i + 1]);
    }
    return total;
}

IntegrationResult reduce_to_riemann(const Integrand& f, const Integrand& f_prime_of_F, double a, double b,
                                    double tol, std::size_t max_refinements) {
    if (f.poly() && f_prime_of_F.poly()) {
        Integrand prod((*f.poly()) * (*f_prime_of_F.poly()));
        return integrate(prod, Integrator::identity(), a, b, tol, max_refinements);
    }
    Integrand prod{std::function<double(double)>([f, f_prime_of_F](double x) { return f(x) * f_prime_of_F(x); })};
    std::vector<double> disc = f.discontinuities();
    disc.insert(disc.end(), f_prime_of_F.discontinuities().begin(), f_prime_of_F.discontinuities().end());
    if (!disc.empty()) prod.declare_discontinuities(std::move(disc));
    return integrate(prod, Integrator::identity(), a, b, tol, max_refinements);
}

}  // namespace probkit
