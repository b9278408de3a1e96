#include "probkit/lebesgue.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace probkit {

FiniteMeasureSpace::FiniteMeasureSpace(std::vector<double> points, std::vector<double> weights,
                                       std::vector<std::string> labels)
    : points_(std::move(points)), weights_(std::move(weights)), labels_(std::move(labels)) {
    if (points_.empty() || points_.size() != weights_.size())
        throw std::invalid_argument("space needs matching nonempty points/weights");
    for (double w : weights_)
        if (!(w >= 0.0)) throw std::invalid_argument("weights must be nonnegative");
    if (labels_.empty()) {
        labels_.resize(points_.size());
        for (std::size_t i = 0; i < points_.size(); ++i) labels_[i] = "a" + std::to_string(i);
    }
    if (labels_.size() != points_.size()) throw std::invalid_argument("label count mismatch");
}

FiniteMeasureSpace FiniteMeasureSpace::counting(std::vector<double> points) {
    std::vector<double> w(points.size(), 1.0);
    return FiniteMeasureSpace(std::move(points), std::move(w));
}

FiniteMeasureSpace FiniteMeasureSpace::grid(double a, double b, int n) {
    if (!(a < b) || n < 1) throw std::invalid_argument("grid requires a < b and n >= 1");
    const double h = (b - a) / n;
    std::vector<double> pts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = a + (i + 0.5) * h;
    std::vector<double> w(static_cast<std::size_t>(n), h);
    return FiniteMeasureSpace(std::move(pts), std::move(w));
}

double FiniteMeasureSpace::measure(const std::vector<std::size_t>& subset) const {
    double s = 0.0;
    for (std::size_t i : subset) {
        if (i >= points_.size()) throw std::out_of_range("atom index out of range");
        s += weights_[i];
    }
    return s;
}

double FiniteMeasureSpace::total() const {
    double s = 0.0;
    for (double w : weights_) s += w;
    return s;
}

SimpleOnSpace SimpleOnSpace::from_pieces(std::vector<Piece> pieces, std::size_t space_size) {
    std::set<std::size_t> seen;
    for (const Piece& p : pieces) {
        for (std::size_t a : p.atoms) {
            if (a >= space_size) throw std::invalid_argument("piece references an atom outside the space");
            if (!seen.insert(a).second) throw std::invalid_argument("simple-function pieces must be disjoint");
        }
    }
    SimpleOnSpace s;
    s.pieces_ = std::move(pieces);
    s.space_size_ = space_size;
    for (auto& p : s.pieces_) std::sort(p.atoms.begin(), p.atoms.end());
    return s;
}

SimpleOnSpace SimpleOnSpace::from_values(const std::vector<double>& values) {
    std::map<double, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < values.size(); ++i) groups[values[i]].push_back(i);
    std::vector<Piece> pieces;
    for (auto& [v, atoms] : groups)
        if (v != 0.0) pieces.push_back({v, std::move(atoms)});
    return from_pieces(std::move(pieces), values.size());
}

double SimpleOnSpace::at(std::size_t atom) const {
    for (const Piece& p : pieces_)
        if (std::binary_search(p.atoms.begin(), p.atoms.end(), atom)) return p.value;
    return 0.0;
}

double integrate_simple(const SimpleOnSpace& s, const FiniteMeasureSpace& mu) {
    if (s.space_size() != mu.size()) throw std::invalid_argument("simple function and space sizes differ");
    double total = 0.0;
    for (const auto& p : s.pieces()) total += p.value * mu.measure(p.atoms);
    return total;
}

double integrate_simple(const SimpleOnSpace& s, const FiniteMeasureSpace& mu,
                        const std::vector<std::size_t>& within) {
    if (s.space_size() != mu.size()) throw std::invalid_argument("simple function and space sizes differ");
    double total = 0.0;
    for (const auto& p : s.pieces()) {
        double w = 0.0;
        for (std::size_t a : p.atoms)
            if (std::binary_search(within.begin(), within.end(), a)) w += mu.weight(a);
        total += p.value * w;
    }
    return total;
}

std::pair<SimpleOnSpace, SimpleOnSpace> pos_neg_split(const SimpleOnSpace& s) {
    std::vector<SimpleOnSpace::Piece> pos, neg;
    for (const auto& p : s.pieces()) {
        if (p.value > 0.0) pos.push_back(p);
        if (p.value < 0.0) neg.push_back({-p.value, p.atoms});
    }
    return {SimpleOnSpace::from_pieces(std::move(pos), s.space_size()),
            SimpleOnSpace::from_pieces(std::move(neg), s.space_size())};
}

SimpleOnSpace approximate_by_simple(const std::function<double(double)>& f, const FiniteMeasureSpace& space,
                                    int level) {
    if (level < 0) throw std::invalid_argument("approximation level must be nonnegative");
    const double scale = std::pow(2.0, level);
    std::vector<double> values(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        const double v = f(space.point(i));
        if (v < 0.0) throw std::invalid_argument("approximate_by_simple requires a nonnegative function");
        values[i] = std::min(static_cast<double>(level), std::floor(v * scale) / scale);
    }
    return SimpleOnSpace::from_values(values);
}

FiniteMeasureSpace measure_from_density(const std::function<double(double)>& f, const FiniteMeasureSpace& mu) {
    std::vector<double> pts(mu.size()), w(mu.size());
    std::vector<std::string> labels(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const double d = f(mu.point(i));
        if (d < 0.0) throw std::invalid_argument("density must be nonnegative");
        pts[i] = mu.point(i);
        w[i] = d * mu.weight(i);
        labels[i] = mu.label(i);
    }
    return FiniteMeasureSpace(std::move(pts), std::move(w), std::move(labels));
}

// ---------------------------------------------------------------------------

SimpleOnLine SimpleOnLine::from_pieces(std::vector<LinePiece> pieces) {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto* a = std::get_if<IntervalUnion>(&pieces[i].set);
        if (!a) continue;
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            const auto* b = std::get_if<IntervalUnion>(&pieces[j].set);
            if (b && !set_intersect(*a, *b).is_empty())
                throw std::invalid_argument("simple-function pieces must be disjoint");
        }
    }
    SimpleOnLine s;
    s.pieces_ = std::move(pieces);
    return s;
}

SimpleOnLine SimpleOnLine::indicator(const IntervalUnion& a, double value) {
    return from_pieces({LinePiece{value, a}});
}

double SimpleOnLine::at(double x) const {
    for (const auto& p : pieces_) {
        const auto* iv = std::get_if<IntervalUnion>(&p.set);
        if (iv && iv->contains(x)) return p.value;
    }
    return 0.0;
}

std::optional<std::pair<double, double>> SimpleOnLine::bounded_hull() const {
    std::optional<std::pair<double, double>> hull;
    for (const auto& p : pieces_) {
        const auto* iv = std::get_if<IntervalUnion>(&p.set);
        if (!iv || iv->is_empty()) continue;
        for (const auto& piece : iv->pieces()) {
            if (!piece.is_bounded()) continue;
            const double lo = piece.lower.value(), hi = piece.upper.value();
            if (!hull) {
                hull = {lo, hi};
            } else {
                hull->first = std::min(hull->first, lo);
                hull->second = std::max(hull->second, hi);
            }
        }
    }
    return hull;
}

double integrate_simple(const SimpleOnLine& s, const DistributionFunction* f, const IntervalUnion& within) {
    double total = 0.0;
    for (const auto& p : s.pieces()) {
        if (std::holds_alternative<TaggedNullSet>(p.set)) continue;  // length zero by construction
        const IntervalUnion cut = set_intersect(std::get<IntervalUnion>(p.set), within);
        if (cut.is_empty()) continue;
        total += p.value * (f ? length_under(*f, cut) : lebesgue_length(cut));
    }
    return total;
}

double integrate_simple(const SimpleOnLine& s, const DistributionFunction* f) {
    return integrate_simple(s, f, IntervalUnion::whole_line());
}

std::pair<SimpleOnLine, SimpleOnLine> pos_neg_split(const SimpleOnLine& s) {
    std::vector<LinePiece> pos, neg;
    for (const auto& p : s.pieces()) {
        if (p.value > 0.0) pos.push_back(p);
        if (p.value < 0.0) neg.push_back({-p.value, p.set});
    }
    return {SimpleOnLine::from_pieces(std::move(pos)), SimpleOnLine::from_pieces(std::move(neg))};
}

// ---------------------------------------------------------------------------

namespace {

ConvergenceReport run_space_check(const std::function<double(int, double)>& fn,
                                  const std::function<double(double)>& limit, const std::vector<int>& schedule,
                                  const FiniteMeasureSpace& space, double threshold, bool monotone_mode,
                                  const std::function<double(double)>& dominator) {
    if (schedule.empty()) throw std::invalid_argument("schedule must be nonempty");
    ConvergenceReport rep;
    rep.threshold = threshold;

    const auto integral_of = [&](const std::function<double(double)>& g) {
        double s = 0.0;
        for (std::size_t i = 0; i < space.size(); ++i) s += g(space.point(i)) * space.weight(i);
        return s;
    };
    rep.limit_integral = integral_of(limit);

    for (std::size_t k = 0; k < schedule.size(); ++k) {
        const int n = schedule[k];
        for (std::size_t i = 0; i < space.size(); ++i) {
            const double x = space.point(i);
            const double v = fn(n, x);
            if (monotone_mode) {
                if (v < 0.0) {
                    rep.hypothesis_ok = false;
                    rep.hypothesis_note = "f_" + std::to_string(n) + " is negative at x = " + std::to_string(x);
                }
                if (k > 0 && v < fn(schedule[k - 1], x) - 1e-12) {
                    rep.hypothesis_ok = false;
                    rep.hypothesis_note =
                        "sequence is not monotone at x = " + std::to_string(x) + " between n = " +
                        std::to_string(schedule[k - 1]) + " and n = " + std::to_string(n);
                }
                if (v > limit(x) + 1e-12) {
                    rep.hypothesis_ok = false;
                    rep.hypothesis_note = "f_" + std::to_string(n) +
                                          " exceeds the declared limit at x = " + std::to_string(x);
                }
            } else if (dominator && std::abs(v) > dominator(x) + 1e-12) {
                rep.hypothesis_ok = false;
                rep.hypothesis_note = "domination fails at n = " + std::to_string(n) +
                                      ", x = " + std::to_string(x);
            }
        }
        const double in = integral_of([&](double x) { return fn(n, x); });
        rep.entries.push_back({n, in, std::abs(in - rep.limit_integral)});
    }
    rep.final_integral = rep.entries.back().integral_n;
    rep.conclusion_holds = rep.entries.back().gap_n <= threshold;
    return rep;
}

std::vector<double> probe_grid_for(const std::vector<SimpleOnLine const*>& fns) {
    double lo = 0.0, hi = 1.0;
    bool found = false;
    for (const auto* f : fns) {
        const auto hull = f->bounded_hull();
        if (!hull) continue;
        if (!found) {
            lo = hull->first;
            hi = hull->second;
            found = true;
        } else {
            lo = std::min(lo, hull->first);
            hi = std::max(hi, hull->second);
        }
    }
    std::vector<double> grid;
    const int n = 257;
    for (int i = 0; i <= n; ++i) grid.push_back(lo + (hi - lo) * i / n);
    return grid;
}

ConvergenceReport run_line_check(const std::function<SimpleOnLine(int)>& gen, const SimpleOnLine& limit,
                                 const std::vector<int>& schedule, const DistributionFunction* f,
                                 double threshold, bool monotone_mode, const SimpleOnLine* dominator) {
    if (schedule.empty()) throw std::invalid_argument("schedule must be nonempty");
    ConvergenceReport rep;
    rep.threshold = threshold;
    rep.limit_integral = integrate_simple(limit, f);

    SimpleOnLine prev = SimpleOnLine::zero();
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        const int n = schedule[k];
        const SimpleOnLine fn_n = gen(n);
        std::vector<SimpleOnLine const*> fns{&fn_n, &limit};
        if (dominator) fns.push_back(dominator);
        if (k > 0) fns.push_back(&prev);
        const std::vector<double> grid = probe_grid_for(fns);
        for (double x : grid) {
            const double v = fn_n.at(x);
            if (monotone_mode) {
                if (v < -1e-12 || (k > 0 && v < prev.at(x) - 1e-12) || v > limit.at(x) + 1e-12) {
                    rep.hypothesis_ok = false;
                    rep.hypothesis_note = "monotone hypothesis fails at n = " + std::to_string(n) +
                                          ", x = " + std::to_string(x);
                }
            } else if (dominator && std::abs(v) > dominator->at(x) + 1e-12) {
                rep.hypothesis_ok = false;
                rep.hypothesis_note = "domination fails at n = " + std::to_string(n) +
                                      ", x = " + std::to_string(x);
            }
        }
        const double in = integrate_simple(fn_n, f);
        rep.entries.push_back({n, in, std::abs(in - rep.limit_integral)});
        prev = fn_n;
    }
    rep.final_integral = rep.entries.back().integral_n;
    rep.conclusion_holds = rep.entries.back().gap_n <= threshold;
    return rep;
}

}  // namespace

ConvergenceReport mct_check(const std::function<double(int, double)>& fn,
                            const std::function<double(double)>& limit, const std::vector<int>& schedule,
                            const FiniteMeasureSpace& space, double threshold) {
    return run_space_check(fn, limit, schedule, space, threshold, true, nullptr);
}

ConvergenceReport dct_check(const std::function<double(int, double)>& fn,
                            const std::function<double(double)>& limit,
                            const std::function<double(double)>& dominator, const std::vector<int>& schedule,
                            const FiniteMeasureSpace& space, double threshold) {
    if (!dominator) throw std::invalid_argument("dct_check requires a dominator");
    return run_space_check(fn, limit, schedule, space, threshold, false, dominator);
}

ConvergenceReport mct_check_line(const std::function<SimpleOnLine(int)>& gen, const SimpleOnLine& limit,
                                 const std::vector<int>& schedule, const DistributionFunction* f,
                                 double threshold) {
    return run_line_check(gen, limit, schedule, f, threshold, true, nullptr);
}

ConvergenceReport dct_check_line(const std::function<SimpleOnLine(int)>& gen, const SimpleOnLine& limit,
                                 const SimpleOnLine& dominator, const std::vector<int>& schedule,
                                 const DistributionFunction* f, double threshold) {
    return run_line_check(gen, limit, schedule, f, threshold, false, &dominator);
}

StaircaseResult unbounded_integrable_demo(int terms) {
    if (terms < 1) throw std::invalid_argument("need at least one term");
    double s = 0.0;
    for (int n = terms; n >= 1; --n) {
        const double d = n + 1.0;
        s += n / (d * d * d);
    }
    return {s, 1.0 / (terms + 1.0), terms};
}

}  // namespace probkit
