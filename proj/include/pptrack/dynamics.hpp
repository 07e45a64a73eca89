#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pptrack/instance.hpp"

namespace pptrack {

// Largest number of rt-sized pieces inside one step of motion:
// a = ceil(delta / rt), so delta lies in ((a-1)*rt, a*rt].
long derived_a(const ProblemInstance& p);

// Posterior size after acting on a posterior of size x: (x + delta) / i
// where i is the action's cell count. f_plus(x) = (x+delta)/a and
// f_minus(x) = (x+delta)/(a+1).
Rational step_size(const Rational& x, const Action& act, const ProblemInstance& p);

// Exact inverse: the size whose image under act is y, i.e. i*y - delta.
Rational step_size_inv(const Rational& y, const Action& act, const ProblemInstance& p);

// Posterior I-state from an absolute-interval prior, a sensing vector and
// the target's true position. Cells follow the half-open convention
// (-inf, u1], (u1, u2], ..., (uc, +inf). Throws "inconsistent observation"
// when pos lies outside the prior.
Interval posterior_from_sensing(const Interval& prior, const SensingVector& v, const Rational& pos);

// Smallest and largest nonempty cell sizes induced on a prior of the given
// size by cuts at the given relative positions; cuts outside (0, size) are
// ignored (they contribute empty cells).
std::pair<Rational, Rational> worst_case_cells(const Rational& prior_size,
                                               const std::vector<Rational>& cuts);

struct SimStep {
    long k = 0;
    Rational prior_size;
    Action action;
    Rational posterior_size;
    bool ppc_ok = true;  // posterior >= rp
    bool ttc_ok = true;  // posterior <= rt
};

struct SimTrace {
    std::vector<SimStep> steps;
    bool violated = false;               // last recorded step broke a bound
    bool stopped_without_action = false;  // policy had no action to offer
    std::optional<long> violation_step;
};

// Play a strategy word from a posterior of size eta0_size for up to
// `horizon` steps, stopping at the first PPC/TTC violation. The size
// recurrence is position-independent under even splits, so only sizes are
// tracked. eta0_size must lie in [rp, rt].
SimTrace simulate(const ProblemInstance& p, const StrategyWord& w, const Rational& eta0_size,
                  long horizon);

// As above but actions come from a state-feedback policy on the current
// posterior size. A nullopt action ends the run.
using SizePolicy = std::function<std::optional<Action>(const Rational&)>;
SimTrace simulate_policy(const ProblemInstance& p, const SizePolicy& policy,
                         const Rational& eta0_size, long horizon);

}  // namespace pptrack
