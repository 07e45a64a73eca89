#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pptrack/rational.hpp"

namespace pptrack {

// Bounded interval with per-endpoint topology. Valid states: lo < hi, or
// lo == hi with both endpoints closed (a single point). Anything that would
// denote the empty set is rejected at construction.
struct Interval {
    Rational lo;
    Rational hi;
    bool lo_closed = true;
    bool hi_closed = true;

    Interval() = default;  // the point {0}
    Interval(Rational lo_, Rational hi_, bool lo_closed_, bool hi_closed_);

    static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, true}; }
    static Interval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, false}; }
    static Interval point(Rational x) { Rational y = x; return {std::move(x), std::move(y), true, true}; }
    static std::optional<Interval> try_make(Rational lo, Rational hi, bool lo_closed, bool hi_closed);

    bool contains(const Rational& x) const;
    bool is_point() const { return lo == hi; }
    Rational length() const { return hi - lo; }

    std::string str() const;  // e.g. "[76, 76.9]" or "(76.9, 77)"

    friend bool operator==(const Interval&, const Interval&) = default;
};

// Canonical finite union of disjoint intervals: parts sorted by lo, no two
// parts overlap, and any two parts whose union would be a single interval
// (touching endpoints, at least one closed) are merged.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(Interval iv) : parts_{std::move(iv)} {}
    static IntervalSet from_parts(std::vector<Interval> parts);

    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    const std::vector<Interval>& parts() const { return parts_; }

    bool contains(const Rational& x) const;
    // Index of the connected component containing x, if any.
    std::optional<std::size_t> component_index(const Rational& x) const;

    // Total length of all parts; endpoint topology does not affect measure.
    Rational measure() const;

    std::string str() const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> parts_;
};

enum class SetOp { Union, Intersect, Subtract };

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_subtract(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_combine(const IntervalSet& a, const IntervalSet& b, SetOp op);

// Exact image {scale*x + offset : x in s}. Openness of endpoints is
// preserved (lo/hi swap when scale < 0). scale == 0 is rejected.
IntervalSet affine_image(const IntervalSet& s, const Rational& scale, const Rational& offset);

}  // namespace pptrack
