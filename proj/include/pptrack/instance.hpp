#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pptrack/interval.hpp"
#include "pptrack/rational.hpp"

namespace pptrack {

// One tracking problem: privacy lower bound rp, tracking upper bound rt,
// per-step diameter growth delta, and c sensor set-points (c+1 output
// classes). delta is the full growth of the prior: the target moves at most
// delta/2 either way, so |prior| = |posterior| + delta.
struct ProblemInstance {
    Rational rp;
    Rational rt;
    Rational delta;
    long c = 1;
    std::optional<Interval> eta0;

    // Non-fatal diagnostics; empty means the instance is well-formed.
    std::vector<std::string> validate() const;
    // Throws std::invalid_argument if any parameter is non-positive or c < 1.
    void ensure_positive() const;
};

// A sensing choice abstracted to the cell count of an even split. Plus and
// Minus are the basis actions: split into a and a+1 parts respectively,
// where a is derived from the instance.
struct Action {
    enum class Kind { Plus, Minus, Split };
    Kind kind = Kind::Plus;
    long parts = 0;  // meaningful only for Kind::Split

    static Action plus() { return {Kind::Plus, 0}; }
    static Action minus() { return {Kind::Minus, 0}; }
    static Action split(long i) { return {Kind::Split, i}; }

    // Number of cells this action splits the prior into, for the given
    // instance. Throws "exceeds sensor capability" when the sensor cannot
    // realize it (more than c+1 cells, or fewer than 1).
    long resolve(const ProblemInstance& p) const;

    std::string token() const;  // "+", "-", or "s<i>"

    friend bool operator==(const Action&, const Action&) = default;
};

// Finite prefix followed by a cycle repeated forever.
struct StrategyWord {
    std::vector<Action> prefix;
    std::vector<Action> cycle;  // non-empty for a playable word

    Action at(long k) const;

    // Text form: "(+---)*" or "+-|(-)*" (prefix before '|').
    std::string str() const;
    static std::optional<StrategyWord> parse(std::string_view text);
    static StrategyWord parse_or_throw(std::string_view text);

    friend bool operator==(const StrategyWord&, const StrategyWord&) = default;
};

// Strictly increasing set-points u_1 < ... < u_c defining sensor cells
// (-inf, u_1], (u_1, u_2], ..., (u_c, +inf).
struct SensingVector {
    std::vector<Rational> set_points;

    explicit SensingVector(std::vector<Rational> points);
};

}  // namespace pptrack
