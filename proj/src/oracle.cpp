#include "pptrack/oracle.hpp"

#include <map>
#include <stdexcept>

#include "pptrack/dynamics.hpp"

namespace pptrack {

OracleResult maximal_invariant_set(const ProblemInstance& p, long iteration_cap) {
    p.ensure_positive();
    if (iteration_cap < 1) throw std::invalid_argument("iteration cap must be at least 1");

    OracleResult result;
    if (p.rp > p.rt) {  // no admissible sizes at all
        result.converged = true;
        return result;
    }

    long a = derived_a(p);
    std::vector<Rational> factors;
    if (a <= p.c + 1) factors.emplace_back(a);
    if (a + 1 <= p.c + 1) factors.emplace_back(a + 1);

    IntervalSet s(Interval::closed(p.rp, p.rt));
    while (result.iterations < iteration_cap) {
        if (s.empty()) {
            result.converged = true;
            break;
        }
        IntervalSet pre;
        for (const Rational& f : factors)
            pre = set_union(pre, affine_image(s, f, -p.delta));
        IntervalSet next = set_intersect(s, pre);
        ++result.iterations;
        if (next == s) {
            result.converged = true;
            break;
        }
        s = std::move(next);
    }
    // When unconverged, safe_set is the last iterate: an over-approximation,
    // not a verdict.
    result.safe_set = std::move(s);
    return result;
}

namespace {

struct SurvivalMemo {
    // Exact survival counts are absolute; "at least" entries depend on the
    // budget they were proven under and are reusable only for smaller
    // budgets.
    std::map<Rational, long> exact;
    std::map<Rational, long> at_least;
};

long survive(const ProblemInstance& p, const Rational& x, long budget, SurvivalMemo& memo) {
    if (budget == 0) return 0;
    if (auto it = memo.exact.find(x); it != memo.exact.end())
        return std::min(it->second, budget);
    if (auto it = memo.at_least.find(x); it != memo.at_least.end())
        if (it->second >= budget) return budget;

    long best = 0;
    for (long i = 1; i <= p.c + 1; ++i) {
        Rational y = (x + p.delta) / Rational(i);
        if (y < p.rp || y > p.rt) continue;
        best = std::max(best, survive(p, y, budget - 1, memo));
        if (best == budget - 1) break;
    }
    long r = 1 + best;
    if (r < budget)
        memo.exact[x] = r;
    else if (auto [it, inserted] = memo.at_least.try_emplace(x, r); !inserted)
        it->second = std::max(it->second, r);
    return r;
}

}  // namespace

long brute_force_survival(const ProblemInstance& p, const Rational& eta0_size, long depth) {
    p.ensure_positive();
    if (depth < 1) throw std::invalid_argument("depth must be at least 1");
    if (eta0_size < p.rp || eta0_size > p.rt)
        throw std::invalid_argument("initial I-state size outside [rp, rt]");
    SurvivalMemo memo;
    return survive(p, eta0_size, depth, memo);
}

}  // namespace pptrack
