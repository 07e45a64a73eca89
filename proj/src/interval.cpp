#include "pptrack/interval.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pptrack {

Interval::Interval(Rational lo_, Rational hi_, bool lo_closed_, bool hi_closed_)
    : lo(std::move(lo_)), hi(std::move(hi_)), lo_closed(lo_closed_), hi_closed(hi_closed_) {
    if (lo > hi || (lo == hi && !(lo_closed && hi_closed)))
        throw std::invalid_argument("empty or inverted interval: " + str());
}

std::optional<Interval> Interval::try_make(Rational lo, Rational hi, bool lo_closed, bool hi_closed) {
    if (lo > hi || (lo == hi && !(lo_closed && hi_closed))) return std::nullopt;
    return Interval(std::move(lo), std::move(hi), lo_closed, hi_closed);
}

bool Interval::contains(const Rational& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
}

std::string Interval::str() const {
    std::ostringstream os;
    os << (lo_closed ? '[' : '(') << lo.str() << ", " << hi.str() << (hi_closed ? ']' : ')');
    return os.str();
}

namespace {

// Ordering for canonicalization: by lo; closed lower endpoints first so the
// sweep always extends from the most inclusive start.
bool part_less(const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.lo_closed != b.lo_closed) return a.lo_closed;
    return a.hi < b.hi;
}

// True when cur and nxt (with cur.lo <= nxt.lo in sweep order) form a
// connected union.
bool connects(const Interval& cur, const Interval& nxt) {
    if (nxt.lo < cur.hi) return true;
    if (nxt.lo == cur.hi) return cur.hi_closed || nxt.lo_closed;
    return false;
}

}  // namespace

IntervalSet IntervalSet::from_parts(std::vector<Interval> parts) {
    if (parts.empty()) return {};
    std::sort(parts.begin(), parts.end(), part_less);
    std::vector<Interval> merged;
    merged.push_back(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) {
        Interval& cur = merged.back();
        const Interval& nxt = parts[i];
        if (!connects(cur, nxt)) {
            merged.push_back(nxt);
            continue;
        }
        if (nxt.hi > cur.hi) {
            cur.hi = nxt.hi;
            cur.hi_closed = nxt.hi_closed;
        } else if (nxt.hi == cur.hi) {
            cur.hi_closed = cur.hi_closed || nxt.hi_closed;
        }
    }
    IntervalSet out;
    out.parts_ = std::move(merged);
    return out;
}

bool IntervalSet::contains(const Rational& x) const {
    return component_index(x).has_value();
}

std::optional<std::size_t> IntervalSet::component_index(const Rational& x) const {
    // Binary search for the last part with lo <= x.
    std::size_t lo = 0, hi = parts_.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (parts_[mid].lo <= x)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == 0) return std::nullopt;
    if (parts_[lo - 1].contains(x)) return lo - 1;
    return std::nullopt;
}

Rational IntervalSet::measure() const {
    Rational total;
    for (const Interval& p : parts_) total += p.length();
    return total;
}

std::string IntervalSet::str() const {
    if (parts_.empty()) return "{}";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << " u ";
        os << parts_[i].str();
    }
    return os.str();
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return IntervalSet::from_parts(std::move(parts));
}

IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const Interval& A = a.parts()[i];
        const Interval& B = b.parts()[j];

        Rational lo;
        bool lo_closed;
        if (A.lo > B.lo) {
            lo = A.lo;
            lo_closed = A.lo_closed;
        } else if (B.lo > A.lo) {
            lo = B.lo;
            lo_closed = B.lo_closed;
        } else {
            lo = A.lo;
            lo_closed = A.lo_closed && B.lo_closed;
        }

        Rational hi;
        bool hi_closed;
        if (A.hi < B.hi) {
            hi = A.hi;
            hi_closed = A.hi_closed;
        } else if (B.hi < A.hi) {
            hi = B.hi;
            hi_closed = B.hi_closed;
        } else {
            hi = A.hi;
            hi_closed = A.hi_closed && B.hi_closed;
        }

        if (auto piece = Interval::try_make(std::move(lo), std::move(hi), lo_closed, hi_closed))
            out.push_back(std::move(*piece));

        if (A.hi < B.hi)
            ++i;
        else if (B.hi < A.hi)
            ++j;
        else {
            ++i;
            ++j;
        }
    }
    return IntervalSet::from_parts(std::move(out));
}

IntervalSet set_subtract(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    for (const Interval& A : a.parts()) {
        // Carve every overlapping part of b out of A, left to right.
        std::optional<Interval> rest = A;
        for (const Interval& B : b.parts()) {
            if (!rest) break;
            if (B.hi < rest->lo || (B.hi == rest->lo && !(B.hi_closed && rest->lo_closed))) continue;
            if (B.lo > rest->hi || (B.lo == rest->hi && !(B.lo_closed && rest->hi_closed))) break;

            // Piece of rest strictly left of B.
            if (auto left = Interval::try_make(rest->lo, B.lo, rest->lo_closed, !B.lo_closed))
                out.push_back(std::move(*left));
            // Remainder right of B.
            rest = Interval::try_make(B.hi, rest->hi, !B.hi_closed, rest->hi_closed);
        }
        if (rest) out.push_back(std::move(*rest));
    }
    return IntervalSet::from_parts(std::move(out));
}

IntervalSet set_combine(const IntervalSet& a, const IntervalSet& b, SetOp op) {
    switch (op) {
        case SetOp::Union: return set_union(a, b);
        case SetOp::Intersect: return set_intersect(a, b);
        case SetOp::Subtract: return set_subtract(a, b);
    }
    throw std::logic_error("unknown set operation");
}

IntervalSet affine_image(const IntervalSet& s, const Rational& scale, const Rational& offset) {
    if (scale.is_zero()) throw std::invalid_argument("degenerate affine map");
    std::vector<Interval> out;
    out.reserve(s.size());
    for (const Interval& p : s.parts()) {
        Rational lo = scale * p.lo + offset;
        Rational hi = scale * p.hi + offset;
        if (scale.sign() > 0)
            out.emplace_back(std::move(lo), std::move(hi), p.lo_closed, p.hi_closed);
        else
            out.emplace_back(std::move(hi), std::move(lo), p.hi_closed, p.lo_closed);
    }
    return IntervalSet::from_parts(std::move(out));
}

}  // namespace pptrack
