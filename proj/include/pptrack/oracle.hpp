#pragma once

#include "pptrack/instance.hpp"
#include "pptrack/interval.hpp"

// Independent verification path. This header (and its implementation) must
// not depend on the classifier or the boundary analysis: agreement between
// the two routes is the whole point.

namespace pptrack {

struct OracleResult {
    IntervalSet safe_set;
    bool converged = false;
    long iterations = 0;
};

// Greatest fixpoint of S -> S n (pre_plus(S) u pre_minus(S)) starting from
// S0 = [rp, rt], over the basis actions the sensor can realize. Preimages of
// the affine size maps are themselves affine images, so every step is exact.
// Hitting the cap is not an error; the result is just flagged unconverged.
OracleResult maximal_invariant_set(const ProblemInstance& p, long iteration_cap = 10000);

// Maximum number of steps survivable from eta0_size using any sequence over
// all splits s(1)..s(c+1), capped at depth. Exhaustive search with
// memoization on exact sizes.
long brute_force_survival(const ProblemInstance& p, const Rational& eta0_size, long depth);

}  // namespace pptrack
