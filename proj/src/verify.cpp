#include "pptrack/verify.hpp"

#include <chrono>
#include <sstream>

#include "pptrack/boundary.hpp"
#include "pptrack/oracle.hpp"
#include "pptrack/samplers.hpp"

namespace pptrack {

namespace {

std::string describe(const ProblemInstance& p) {
    std::ostringstream os;
    os << "(rp=" << p.rp << ", rt=" << p.rt << ", delta=" << p.delta << ", c=" << p.c << ")";
    return os.str();
}

bool case_claims_feasible(BoundaryCase c) {
    return c == BoundaryCase::L10 || c == BoundaryCase::L12Feasible;
}

}  // namespace

VerifyReport run_verification_sweep(const VerifyConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport report;
    Sampler sampler(cfg.seed);
    auto fail = [&](const ProblemInstance& p, const std::string& what) {
        report.failures.push_back(what + " at " + describe(p));
    };

    for (long k = 0; k < cfg.per_class; ++k) {
        ProblemInstance inst = sample_boundary_instance(sampler, cfg.cmax);
        ZoneReport zones = backpropagate_zones(inst, cfg.max_periods);
        if (!zones.resolved) {
            fail(inst, "zone back-propagation undetermined");
            continue;
        }
        if (zones.partition.p != 1 && zones.partition.m != 1)
            fail(inst, "partition has p > 1 and m > 1");
        OracleResult orc = maximal_invariant_set(inst, cfg.oracle_cap);
        if (!orc.converged) {
            fail(inst, "oracle fixpoint unconverged");
            continue;
        }
        if (!(orc.safe_set == zones.feasible))
            fail(inst, "oracle safe set " + orc.safe_set.str() + " != zone feasible set " +
                           zones.feasible.str());
        if (case_claims_feasible(zones.label) != !zones.feasible.empty())
            fail(inst, std::string("case label ") + to_string(zones.label) +
                           " contradicts feasible set " + zones.feasible.str());
        ++report.boundary_checked;
    }

    for (long k = 0; k < cfg.per_class; ++k) {
        ProblemInstance inst = sample_under_instance(sampler, cfg.cmax);
        OracleResult orc = maximal_invariant_set(inst, cfg.oracle_cap);
        IntervalSet full(Interval::closed(inst.rp, inst.rt));
        if (!orc.converged)
            fail(inst, "oracle fixpoint unconverged");
        else if (!(orc.safe_set == full))
            fail(inst, "under-constrained safe set is " + orc.safe_set.str());
        ++report.under_checked;
    }

    for (long k = 0; k < cfg.per_class; ++k) {
        ProblemInstance inst = sample_over_instance(sampler, cfg.cmax);
        OracleResult orc = maximal_invariant_set(inst, cfg.oracle_cap);
        if (!orc.converged)
            fail(inst, "oracle fixpoint unconverged");
        else if (!orc.safe_set.empty())
            fail(inst, "over-constrained safe set is " + orc.safe_set.str());
        ++report.over_checked;
    }

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace pptrack
