#pragma once

#include <iosfwd>

#include <json.hpp>

#include "pptrack/analysis.hpp"
#include "pptrack/boundary.hpp"
#include "pptrack/dynamics.hpp"
#include "pptrack/oracle.hpp"
#include "pptrack/verify.hpp"

namespace pptrack {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);  // "p/q" string
json to_json(const Interval& iv);
json to_json(const IntervalSet& s);
json to_json(const ProblemInstance& p);

json classification_json(const ProblemInstance& p, const Classification& cl);
json zone_report_json(const ZoneReport& report);
json oracle_json(const OracleResult& result);
json power_json(const PowerEstimate& est, long c);
json verify_json(const VerifyReport& report, std::uint64_t seed);

// CSV trace: k,action,prior_size,posterior_size,ppc_ok,ttc_ok
void write_trace_csv(const SimTrace& trace, std::ostream& os);

}  // namespace pptrack
