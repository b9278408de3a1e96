#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "probkit/errors.hpp"

namespace probkit {

/// Extended real endpoint: finite value, -inf or +inf as explicit tags so the
/// length formulas never do arithmetic on sentinel floats.
class ExtendedReal {
public:
    static ExtendedReal neg_inf() { return ExtendedReal(Kind::NegInf, 0.0); }
    static ExtendedReal pos_inf() { return ExtendedReal(Kind::PosInf, 0.0); }
    static ExtendedReal finite(double v);
    ExtendedReal() : ExtendedReal(Kind::Finite, 0.0) {}

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    double value() const;  // throws unless finite

    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b);
    friend bool operator<(const ExtendedReal& a, const ExtendedReal& b);
    friend bool operator<=(const ExtendedReal& a, const ExtendedReal& b) { return a < b || a == b; }

    std::string str() const;

private:
    enum class Kind { NegInf, Finite, PosInf };
    ExtendedReal(Kind k, double v) : kind_(k), value_(v) {}
    Kind kind_;
    double value_;
};

/// Semi-open interval (lower, upper]. Unbounded forms (-inf, b] and (a, +inf)
/// are allowed; (-inf, +inf) denotes the whole line and only appears as the
/// merge of the two (complement of the empty set).
struct SemiOpenInterval {
    ExtendedReal lower;
    ExtendedReal upper;

    SemiOpenInterval(ExtendedReal lo, ExtendedReal hi);
    SemiOpenInterval(double lo, double hi);

    bool contains(double x) const;
    bool is_bounded() const { return lower.is_finite() && upper.is_finite(); }
};

class IntervalUnion;

/// Canonicalize an arbitrary finite collection of semi-open intervals.
/// Overlapping or adjacent pieces merge; membership is preserved.
IntervalUnion normalize(std::vector<SemiOpenInterval> raw);

/// Canonical element of the field of finite disjoint unions of semi-open
/// intervals: pieces sorted, pairwise disjoint and non-adjacent.
class IntervalUnion {
public:
    IntervalUnion() = default;  // empty set

    static IntervalUnion empty() { return IntervalUnion(); }
    static IntervalUnion whole_line();
    static IntervalUnion of(double lo, double hi) { return normalize({SemiOpenInterval(lo, hi)}); }

    const std::vector<SemiOpenInterval>& pieces() const { return pieces_; }
    bool is_empty() const { return pieces_.empty(); }
    std::size_t size() const { return pieces_.size(); }
    bool contains(double x) const;

private:
    std::vector<SemiOpenInterval> pieces_;
    friend IntervalUnion normalize(std::vector<SemiOpenInterval> raw);
};

IntervalUnion set_union(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion set_intersect(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion set_complement(const IntervalUnion& a);  // within (-inf, +inf)

/// Lebesgue length (identity integrator). Throws infinite_length_error on any
/// unbounded piece.
double lebesgue_length(const IntervalUnion& b);

/// Affine image {shift + scale * t : t in B} for scale > 0; semi-open shape is
/// preserved. Requires bounded B.
IntervalUnion scale_translate(const IntervalUnion& b, double shift, double scale);

class DistributionFunction;  // distribution.hpp

/// Length induced by a distribution function: sum of F(b_i) - F(a_i) with
/// F(-inf) = 0 and F(+inf) = 1.
double length_under(const DistributionFunction& f, const IntervalUnion& b);

}  // namespace probkit
