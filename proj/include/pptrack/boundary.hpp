#pragma once

#include <optional>
#include <vector>

#include "pptrack/classify.hpp"
#include "pptrack/instance.hpp"
#include "pptrack/interval.hpp"

namespace pptrack {

// Partition of [rp, rt] for a boundary instance. Cell chains are indexed
// outward from the central zone: plus_cells[0] touches the zone's left edge
// and the chain walks left toward rp; minus_cells[0] touches the right edge
// and walks right toward rt. From a size in plus_cells[j] exactly j+1 Plus
// steps fit before Plus would break the tracking bound; symmetrically for
// minus_cells and the privacy bound.
struct Partition {
    std::vector<Interval> plus_cells;
    std::vector<Interval> minus_cells;
    Interval zone0;  // open (a*rt - delta, (a+1)*rp - delta)
    long p = 0;      // == plus_cells.size()
    long m = 0;      // == minus_cells.size()
};

struct Zone {
    long index;   // sizes here are forced into a violation within index+1 steps
    Interval iv;
};

enum class BoundaryCase { L9, L10, L11, L12Feasible, L12Infeasible, Undetermined };

const char* to_string(BoundaryCase c);

struct ZoneReport {
    ProblemInstance instance;
    long a = 0;
    Partition partition;

    Rational plus_max;   // Plus is the only viable action at sizes <= plus_max
    Rational minus_min;  // Minus is the only viable action at sizes >= minus_min

    std::vector<Zone> zones;  // in back-propagation order, zone0 first
    IntervalSet zone_union;
    IntervalSet feasible;  // [rp, rt] minus all zones (when resolved)

    BoundaryCase label = BoundaryCase::Undetermined;
    std::optional<Rational> ratio_w_over_v;
    bool resolved = false;  // false: cap exhausted, feasible left empty
    long periods_used = 0;
};

// Throws "not a boundary problem" unless classify(p) == Boundary.
Partition build_partition(const ProblemInstance& p);

// Back-propagates the central zone through the forced dynamics until no new
// zone appears, then labels the case from the closed-form tests. max_periods
// is a safety valve: exhausting it yields an explicit Undetermined result,
// never a wrong one.
ZoneReport backpropagate_zones(const ProblemInstance& p, long max_periods = 64);

// The unique viable strategy from a feasible initial size, as prefix+cycle.
// Throws "initial I-state infeasible" when eta0_size is not in the feasible
// set.
StrategyWord synthesize_strategy(const ZoneReport& report, const Rational& eta0_size);

// Forced-action policy of a boundary instance (nullopt inside the zone).
SizePolicy forced_policy(const ZoneReport& report);

// Sizes safe against an adversary who gives up after tau steps: the feasible
// set plus every zone of index >= tau.
IntervalSet tau_relaxed_feasible(const ZoneReport& report, long tau);

}  // namespace pptrack
