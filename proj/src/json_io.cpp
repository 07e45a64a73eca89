#include "pptrack/json_io.hpp"

#include <ostream>

namespace pptrack {

json to_json(const Rational& r) { return r.str(); }

json to_json(const Interval& iv) {
    return json{{"lo", iv.lo.str()},
                {"hi", iv.hi.str()},
                {"lo_closed", iv.lo_closed},
                {"hi_closed", iv.hi_closed}};
}

json to_json(const IntervalSet& s) {
    json arr = json::array();
    for (const Interval& p : s.parts()) arr.push_back(to_json(p));
    return arr;
}

json to_json(const ProblemInstance& p) {
    json j{{"rp", p.rp.str()}, {"rt", p.rt.str()}, {"delta", p.delta.str()}, {"c", p.c}};
    if (p.eta0) j["eta0"] = to_json(*p.eta0);
    return j;
}

json classification_json(const ProblemInstance& p, const Classification& cl) {
    json j;
    j["instance"] = to_json(p);
    j["class"] = to_string(cl.cls);
    if (cl.lemma != LemmaTag::None) j["lemma"] = to_string(cl.lemma);
    j["a"] = cl.a;
    if (cl.witness_word) j["witness_strategy"] = cl.witness_word->str();
    if (cl.witness_minus_at_or_above)
        j["witness_policy"] = json{{"minus_at_or_above", cl.witness_minus_at_or_above->str()},
                                   {"plus_below", cl.witness_minus_at_or_above->str()}};
    return j;
}

json zone_report_json(const ZoneReport& report) {
    json j;
    j["instance"] = to_json(report.instance);
    j["class"] = "boundary";
    j["a"] = report.a;
    j["p"] = report.partition.p;
    j["m"] = report.partition.m;
    j["case"] = to_string(report.label);
    j["resolved"] = report.resolved;
    j["zone0"] = to_json(report.partition.zone0);

    json zones = json::array();
    for (const Zone& z : report.zones) {
        json zj = to_json(z.iv);
        zj["j"] = z.index;
        zones.push_back(std::move(zj));
    }
    j["zones"] = std::move(zones);

    json plus = json::array(), minus = json::array();
    for (const Interval& cell : report.partition.plus_cells) plus.push_back(to_json(cell));
    for (const Interval& cell : report.partition.minus_cells) minus.push_back(to_json(cell));
    j["plus_cells"] = std::move(plus);
    j["minus_cells"] = std::move(minus);

    j["feasible"] = to_json(report.feasible);
    j["strategy_rule"] = json{{"plus_when_at_most", report.plus_max.str()},
                              {"minus_when_at_least", report.minus_min.str()}};
    if (report.ratio_w_over_v) j["ratio_w_over_v"] = report.ratio_w_over_v->str();
    return j;
}

json oracle_json(const OracleResult& result) {
    return json{{"safe_set", to_json(result.safe_set)},
                {"converged", result.converged},
                {"iterations", result.iterations}};
}

json power_json(const PowerEstimate& est, long c) {
    return json{{"c", c},
                {"resolution", est.resolution},
                {"value", est.value.str()},
                {"value_decimal", est.value.to_double()},
                {"error_bound", est.error_bound.str()},
                {"error_bound_decimal", est.error_bound.to_double()},
                {"included_cells", est.included_cells},
                {"edge_cells", est.edge_cells}};
}

// No timing field: equal seeds must give byte-identical reports.
json verify_json(const VerifyReport& report, std::uint64_t seed) {
    json j{{"seed", seed},
           {"boundary_checked", report.boundary_checked},
           {"under_checked", report.under_checked},
           {"over_checked", report.over_checked},
           {"ok", report.ok()}};
    j["failures"] = report.failures;
    return j;
}

void write_trace_csv(const SimTrace& trace, std::ostream& os) {
    os << "k,action,prior_size,posterior_size,ppc_ok,ttc_ok\n";
    for (const SimStep& s : trace.steps)
        os << s.k << ',' << s.action.token() << ',' << s.prior_size.str() << ','
           << s.posterior_size.str() << ',' << (s.ppc_ok ? 1 : 0) << ',' << (s.ttc_ok ? 1 : 0)
           << '\n';
}

}  // namespace pptrack
