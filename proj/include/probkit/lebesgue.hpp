#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "probkit/distribution.hpp"
#include "probkit/errors.hpp"
#include "probkit/intervals.hpp"

namespace probkit {

/// Finite measure space: labeled atoms at real locations with nonnegative
/// weights. Counting measure is the all-ones weighting.
class FiniteMeasureSpace {
public:
    FiniteMeasureSpace(std::vector<double> points, std::vector<double> weights,
                       std::vector<std::string> labels = {});

    static FiniteMeasureSpace counting(std::vector<double> points);
    /// Uniform grid of n midpoint atoms on [a, b], each of weight (b-a)/n.
    static FiniteMeasureSpace grid(double a, double b, int n);

    std::size_t size() const { return points_.size(); }
    double point(std::size_t i) const { return points_[i]; }
    double weight(std::size_t i) const { return weights_[i]; }
    const std::string& label(std::size_t i) const { return labels_[i]; }

    /// Measure of an atom subset (ascending indices).
    double measure(const std::vector<std::size_t>& subset) const;
    double total() const;

private:
    std::vector<double> points_;
    std::vector<double> weights_;
    std::vector<std::string> labels_;
};

/// Simple function over a finite measure space: disjoint atom sets with one
/// value each; atoms outside every piece carry value 0.
class SimpleOnSpace {
public:
    struct Piece {
        double value;
        std::vector<std::size_t> atoms;  // ascending
    };

    static SimpleOnSpace from_pieces(std::vector<Piece> pieces, std::size_t space_size);
    /// One value per atom (pieces grouped by equal value).
    static SimpleOnSpace from_values(const std::vector<double>& values);

    const std::vector<Piece>& pieces() const { return pieces_; }
    std::size_t space_size() const { return space_size_; }
    double at(std::size_t atom) const;

private:
    std::vector<Piece> pieces_;
    std::size_t space_size_ = 0;
};

double integrate_simple(const SimpleOnSpace& s, const FiniteMeasureSpace& mu);
double integrate_simple(const SimpleOnSpace& s, const FiniteMeasureSpace& mu,
                        const std::vector<std::size_t>& within);

std::pair<SimpleOnSpace, SimpleOnSpace> pos_neg_split(const SimpleOnSpace& s);

/// Dyadic approximation min(n, floor(2^n f) / 2^n) of a nonnegative f,
/// evaluated on the atoms of the space.
SimpleOnSpace approximate_by_simple(const std::function<double(double)>& f, const FiniteMeasureSpace& space,
                                    int level);

/// Measure with density f against mu: weights become f(atom) * weight.
FiniteMeasureSpace measure_from_density(const std::function<double(double)>& f, const FiniteMeasureSpace& mu);

// ---------------------------------------------------------------------------
// Simple functions on the line, integrated against a length measure.

/// Marker for a tagged measure-zero set (the rationals). Any length measure
/// of it, and of its intersection with anything, is 0 by construction.
struct TaggedNullSet {
    std::string name = "Q";
};

struct LinePiece {
    double value;
    std::variant<IntervalUnion, TaggedNullSet> set;
};

/// Simple function on the line: finitely many values on disjoint interval
/// unions (plus optional tagged null pieces).
class SimpleOnLine {
public:
    static SimpleOnLine from_pieces(std::vector<LinePiece> pieces);
    static SimpleOnLine indicator(const IntervalUnion& a, double value = 1.0);
    static SimpleOnLine zero() { return from_pieces({}); }

    const std::vector<LinePiece>& pieces() const { return pieces_; }
    /// Pointwise value; tagged null pieces are skipped (a.e. evaluation).
    double at(double x) const;
    /// Hull of the interval pieces, for probe grids. Nullopt when empty.
    std::optional<std::pair<double, double>> bounded_hull() const;

private:
    std::vector<LinePiece> pieces_;
};

/// Lebesgue integral of a simple line function over B: sum of value * length
/// of (piece intersect B). Pass a distribution for F-length, nullptr for
/// plain length.
double integrate_simple(const SimpleOnLine& s, const DistributionFunction* f, const IntervalUnion& within);
double integrate_simple(const SimpleOnLine& s, const DistributionFunction* f);  // over the whole line

std::pair<SimpleOnLine, SimpleOnLine> pos_neg_split(const SimpleOnLine& s);

// ---------------------------------------------------------------------------
// Convergence-theorem checks

struct ConvergenceEntry {
    int n;
    double integral_n;
    double gap_n;  // |integral_n - integral of the declared limit|
};

struct ConvergenceReport {
    std::vector<ConvergenceEntry> entries;
    double limit_integral = 0.0;   // integral of the declared limit
    double final_integral = 0.0;   // integral at the last n checked
    bool hypothesis_ok = true;     // monotonicity / domination on probes
    std::string hypothesis_note;
    bool conclusion_holds = false;  // final gap below the threshold
    double threshold = 1e-6;
};

/// Monotone-convergence check on a finite space: fn(n, x) evaluated on atoms.
ConvergenceReport mct_check(const std::function<double(int, double)>& fn,
                            const std::function<double(double)>& limit, const std::vector<int>& schedule,
                            const FiniteMeasureSpace& space, double threshold = 1e-6);

/// Dominated-convergence check on a finite space.
ConvergenceReport dct_check(const std::function<double(int, double)>& fn,
                            const std::function<double(double)>& limit,
                            const std::function<double(double)>& dominator, const std::vector<int>& schedule,
                            const FiniteMeasureSpace& space, double threshold = 1e-6);

/// Same checks for simple-function sequences on the line against a length
/// measure (F-length or plain length when f is nullptr). Integrals are exact.
ConvergenceReport mct_check_line(const std::function<SimpleOnLine(int)>& gen, const SimpleOnLine& limit,
                                 const std::vector<int>& schedule, const DistributionFunction* f = nullptr,
                                 double threshold = 1e-6);
ConvergenceReport dct_check_line(const std::function<SimpleOnLine(int)>& gen, const SimpleOnLine& limit,
                                 const SimpleOnLine& dominator, const std::vector<int>& schedule,
                                 const DistributionFunction* f = nullptr, double threshold = 1e-6);

// ---------------------------------------------------------------------------

struct StaircaseResult {
    double partial_sum;
    double tail_bound;
    int terms;
};

/// Partial sum of n / (n+1)^3 for n = 1..N with the 1/(N+1) tail bound: an
/// unbounded function with a finite integral.
StaircaseResult unbounded_integrable_demo(int terms = 1000);

}  // namespace probkit
