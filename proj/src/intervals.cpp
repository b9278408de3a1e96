#include "probkit/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "probkit/distribution.hpp"

namespace probkit {

ExtendedReal ExtendedReal::finite(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("ExtendedReal::finite requires a finite value");
    return ExtendedReal(Kind::Finite, v);
}

double ExtendedReal::value() const {
    if (kind_ != Kind::Finite) throw std::domain_error("value() on an infinite endpoint");
    return value_;
}

bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != ExtendedReal::Kind::Finite || a.value_ == b.value_;
}

bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
    using K = ExtendedReal::Kind;
    if (a.kind_ == K::NegInf) return b.kind_ != K::NegInf;
    if (a.kind_ == K::PosInf) return false;
    if (b.kind_ == K::NegInf) return false;
    if (b.kind_ == K::PosInf) return true;
    return a.value_ < b.value_;
}

std::string ExtendedReal::str() const {
    if (is_neg_inf()) return "-inf";
    if (is_pos_inf()) return "+inf";
    std::ostringstream os;
    os << value_;
    return os.str();
}

SemiOpenInterval::SemiOpenInterval(ExtendedReal lo, ExtendedReal hi) : lower(lo), upper(hi) {
    if (!(lower < upper)) {
        throw std::invalid_argument("malformed interval (" + lower.str() + ", " + upper.str() +
                                    "]: lower endpoint must be strictly below upper");
    }
}

SemiOpenInterval::SemiOpenInterval(double lo, double hi)
    : SemiOpenInterval(std::isinf(lo) && lo < 0 ? ExtendedReal::neg_inf() : ExtendedReal::finite(lo),
                       std::isinf(hi) && hi > 0 ? ExtendedReal::pos_inf() : ExtendedReal::finite(hi)) {}

bool SemiOpenInterval::contains(double x) const {
    const bool above = lower.is_neg_inf() || x > lower.value();
    const bool below = upper.is_pos_inf() || x <= upper.value();
    return above && below;
}

IntervalUnion IntervalUnion::whole_line() {
    return normalize({SemiOpenInterval(ExtendedReal::neg_inf(), ExtendedReal::pos_inf())});
}

bool IntervalUnion::contains(double x) const {
    // pieces are sorted; binary search by lower endpoint
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x, [](double v, const SemiOpenInterval& s) {
        return s.lower.is_finite() ? v < s.lower.value() : !s.lower.is_neg_inf();
    });
    if (it == pieces_.begin()) return pieces_.empty() ? false : pieces_.front().contains(x);
    return std::prev(it)->contains(x) || (it != pieces_.end() && it->contains(x));
}

IntervalUnion normalize(std::vector<SemiOpenInterval> raw) {
    IntervalUnion out;
    if (raw.empty()) return out;
    std::sort(raw.begin(), raw.end(), [](const SemiOpenInterval& a, const SemiOpenInterval& b) {
        if (a.lower < b.lower) return true;
        if (b.lower < a.lower) return false;
        return a.upper < b.upper;
    });
    std::vector<SemiOpenInterval> merged;
    merged.push_back(raw.front());
    for (std::size_t i = 1; i < raw.size(); ++i) {
        SemiOpenInterval& cur = merged.back();
        const SemiOpenInterval& nxt = raw[i];
        // (a,b] u (c,d] merges whenever c <= b (overlap or adjacency)
        if (nxt.lower <= cur.upper) {
            if (cur.upper < nxt.upper) cur = SemiOpenInterval(cur.lower, nxt.upper);
        } else {
            merged.push_back(nxt);
        }
    }
    out.pieces_ = std::move(merged);
    return out;
}

IntervalUnion set_union(const IntervalUnion& a, const IntervalUnion& b) {
    std::vector<SemiOpenInterval> all = a.pieces();
    all.insert(all.end(), b.pieces().begin(), b.pieces().end());
    return normalize(std::move(all));
}

IntervalUnion set_intersect(const IntervalUnion& a, const IntervalUnion& b) {
    std::vector<SemiOpenInterval> out;
    std::size_t i = 0, j = 0;
    const auto& pa = a.pieces();
    const auto& pb = b.pieces();
    while (i < pa.size() && j < pb.size()) {
        const ExtendedReal lo = std::max(pa[i].lower, pb[j].lower, [](const ExtendedReal& x, const ExtendedReal& y) { return x < y; });
        const ExtendedReal hi = std::min(pa[i].upper, pb[j].upper, [](const ExtendedReal& x, const ExtendedReal& y) { return x < y; });
        if (lo < hi) out.emplace_back(lo, hi);
        if (pa[i].upper < pb[j].upper) ++i; else ++j;
    }
    return normalize(std::move(out));
}

IntervalUnion set_complement(const IntervalUnion& a) {
    if (a.is_empty()) return IntervalUnion::whole_line();
    std::vector<SemiOpenInterval> out;
    const auto& p = a.pieces();
    if (!p.front().lower.is_neg_inf()) out.emplace_back(ExtendedReal::neg_inf(), p.front().lower);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.emplace_back(p[i].upper, p[i + 1].lower);
    if (!p.back().upper.is_pos_inf()) out.emplace_back(p.back().upper, ExtendedReal::pos_inf());
    return normalize(std::move(out));
}

double lebesgue_length(const IntervalUnion& b) {
    double total = 0.0;
    for (const auto& piece : b.pieces()) {
        if (!piece.is_bounded()) {
            throw infinite_length_error("length of an unbounded set is infinite: (" + piece.lower.str() +
                                        ", " + piece.upper.str() + "]");
        }
        total += piece.upper.value() - piece.lower.value();
    }
    return total;
}

IntervalUnion scale_translate(const IntervalUnion& b, double shift, double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("scale_translate requires scale > 0");
    std::vector<SemiOpenInterval> out;
    for (const auto& piece : b.pieces()) {
        if (!piece.is_bounded()) throw std::invalid_argument("scale_translate requires a bounded union");
        out.emplace_back(shift + scale * piece.lower.value(), shift + scale * piece.upper.value());
    }
    return normalize(std::move(out));
}

double length_under(const DistributionFunction& f, const IntervalUnion& b) {
    double total = 0.0;
    for (const auto& piece : b.pieces()) {
        const double hi = piece.upper.is_pos_inf() ? 1.0 : f.cdf(piece.upper.value());
        const double lo = piece.lower.is_neg_inf() ? 0.0 : f.cdf(piece.lower.value());
        total += hi - lo;
    }
    return total;
}

}  // namespace probkit
