// pptrack: exact analyzer for one-dimensional privacy-constrained tracking.
//
// Every numeric argument is parsed as an exact rational ("101.3", "1013/10");
// no binary floating point enters the analysis. Identical invocations produce
// byte-identical output.
//
// Exit codes: 0 success; 1 usage error; 2 infeasible or out-of-scope input
// (reported, not crashed); 3 analysis undetermined at its iteration cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pptrack/analysis.hpp"
#include "pptrack/boundary.hpp"
#include "pptrack/classify.hpp"
#include "pptrack/json_io.hpp"
#include "pptrack/oracle.hpp"
#include "pptrack/verify.hpp"

namespace {

using namespace pptrack;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUndetermined = 3;

// Malformed arguments abort before any computation, with a distinct exit
// code from infeasible-but-well-formed inputs.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename F>
auto parse_phase(F&& f) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

struct InstanceArgs {
    std::string rp, rt, delta;
    long c = 1;

    ProblemInstance to_instance() const {
        return parse_phase([&] {
            ProblemInstance p;
            p.rp = Rational::parse_or_throw(rp);
            p.rt = Rational::parse_or_throw(rt);
            p.delta = Rational::parse_or_throw(delta);
            p.c = c;
            p.ensure_positive();
            return p;
        });
    }
};

void add_instance_flags(CLI::App* cmd, InstanceArgs& args) {
    cmd->add_option("--rp", args.rp, "privacy lower bound (exact decimal or p/q)")->required();
    cmd->add_option("--rt", args.rt, "tracking upper bound")->required();
    cmd->add_option("--delta", args.delta, "per-step diameter growth")->required();
    cmd->add_option("--c", args.c, "number of sensor set-points")->required();
}

// Output path resolution: "-" or empty means stdout; relative paths are
// placed under $PPTRACK_OUT_DIR when that is set.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        std::string resolved = path;
        const char* dir = std::getenv("PPTRACK_OUT_DIR");
        if (dir && *dir && path.front() != '/') resolved = std::string(dir) + "/" + path;
        file_ = std::make_unique<std::ofstream>(resolved);
        if (!*file_) throw std::runtime_error("cannot open output file: " + resolved);
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void emit(const json& j, const std::string& out_path) {
    Output out(out_path);
    out.stream() << j.dump(2) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact analyzer for 1-D privacy-constrained target tracking"};
    app.require_subcommand(1);

    // classify
    auto* c_classify = app.add_subcommand("classify", "classify an instance");
    InstanceArgs classify_args;
    std::string classify_out;
    add_instance_flags(c_classify, classify_args);
    c_classify->add_option("--out", classify_out, "output path (default stdout)");

    // zones
    auto* c_zones = app.add_subcommand("zones", "boundary-instance zone analysis");
    InstanceArgs zones_args;
    std::string zones_out;
    long zones_tau = -1, zones_periods = 64;
    add_instance_flags(c_zones, zones_args);
    c_zones->add_option("--tau", zones_tau, "adversary patience for the relaxed feasible set");
    c_zones->add_option("--max-periods", zones_periods, "safety cap on back-propagation periods");
    c_zones->add_option("--out", zones_out, "output path (default stdout)");

    // strategy
    auto* c_strategy = app.add_subcommand("strategy", "synthesize the unique viable strategy");
    InstanceArgs strategy_args;
    std::string strategy_eta0, strategy_out;
    add_instance_flags(c_strategy, strategy_args);
    c_strategy->add_option("--eta0", strategy_eta0, "initial I-state size")->required();
    c_strategy->add_option("--out", strategy_out, "output path (default stdout)");

    // simulate
    auto* c_sim = app.add_subcommand("simulate", "run the exact size recurrence");
    InstanceArgs sim_args;
    std::string sim_word, sim_policy, sim_eta0, sim_out;
    long sim_horizon = 100;
    add_instance_flags(c_sim, sim_args);
    c_sim->add_option("--strategy", sim_word, "strategy word, e.g. \"(+---)*\" or \"+-|(-)*\"");
    c_sim->add_option("--policy", sim_policy, "built-in policy: forced | witness")
        ->check(CLI::IsMember({"forced", "witness"}));
    c_sim->add_option("--eta0", sim_eta0, "initial I-state size")->required();
    c_sim->add_option("--horizon", sim_horizon, "number of steps")->required();
    c_sim->add_option("--out", sim_out, "output path (default stdout)");

    // oracle
    auto* c_oracle = app.add_subcommand("oracle", "maximal invariant set by fixpoint iteration");
    InstanceArgs oracle_args;
    std::string oracle_out;
    long oracle_cap = 10000;
    add_instance_flags(c_oracle, oracle_args);
    c_oracle->add_option("--cap", oracle_cap, "iteration cap");
    c_oracle->add_option("--out", oracle_out, "output path (default stdout)");

    // rtstar
    auto* c_rtstar = app.add_subcommand("rtstar", "tightest solvable tracking bound");
    std::string rtstar_rp, rtstar_delta, rtstar_out, rtstar_format = "text";
    long rtstar_c = 1;
    c_rtstar->add_option("--rp", rtstar_rp)->required();
    c_rtstar->add_option("--delta", rtstar_delta)->required();
    c_rtstar->add_option("--c", rtstar_c)->required();
    c_rtstar->add_option("--format", rtstar_format)->check(CLI::IsMember({"text", "json"}));
    c_rtstar->add_option("--out", rtstar_out, "output path (default stdout)");

    // map
    auto* c_map = app.add_subcommand("map", "parameter-space classification grid (delta = 2)");
    long map_c = 2, map_res = 200;
    std::string map_csv, map_svg, map_window = "0,2,0,2";
    c_map->add_option("--c", map_c)->required();
    c_map->add_option("--resolution", map_res)->required();
    c_map->add_option("--window", map_window, "rp0,rp1,rt0,rt1 (default 0,2,0,2)");
    c_map->add_option("--csv", map_csv, "CSV output path ('-' for stdout)");
    c_map->add_option("--svg", map_svg, "SVG output path");

    // power
    auto* c_power = app.add_subcommand("power", "solvable-area measure of sensing power");
    long power_c = 1, power_res = 400;
    std::string power_out;
    c_power->add_option("--c", power_c)->required();
    c_power->add_option("--resolution", power_res)->required();
    c_power->add_option("--out", power_out, "output path (default stdout)");

    // verify
    auto* c_verify = app.add_subcommand("verify", "randomized oracle-vs-analyzer sweep");
    std::uint64_t verify_seed = 1;
    long verify_count = 100, verify_cmax = 6, verify_cap = 20000;
    std::string verify_out;
    c_verify->add_option("--seed", verify_seed)->required();
    c_verify->add_option("--count", verify_count, "instances per class");
    c_verify->add_option("--cmax", verify_cmax, "largest sensing power sampled");
    c_verify->add_option("--cap", verify_cap, "oracle iteration cap");
    c_verify->add_option("--out", verify_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the parse error
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (c_classify->parsed()) {
        ProblemInstance p = classify_args.to_instance();
        emit(classification_json(p, classify(p)), classify_out);
        return kExitOk;
    }

    if (c_zones->parsed()) {
        ProblemInstance p = zones_args.to_instance();
        Classification cl = classify(p);
        if (cl.cls != ProblemClass::Boundary) {
            json j = classification_json(p, cl);
            j["error"] = "not a boundary problem";
            emit(j, zones_out);
            return kExitInfeasible;
        }
        ZoneReport report = backpropagate_zones(p, zones_periods);
        json j = zone_report_json(report);
        if (!report.resolved) {
            j["error"] = "undetermined at period cap";
            emit(j, zones_out);
            return kExitUndetermined;
        }
        if (zones_tau >= 0) {
            j["tau"] = zones_tau;
            j["tau_feasible"] = to_json(tau_relaxed_feasible(report, zones_tau));
        }
        emit(j, zones_out);
        return kExitOk;
    }

    if (c_strategy->parsed()) {
        ProblemInstance p = strategy_args.to_instance();
        Rational eta0 = parse_phase([&] { return Rational::parse_or_throw(strategy_eta0); });
        Classification cl = classify(p);
        Output out(strategy_out);
        if (cl.cls == ProblemClass::UnderConstrained && cl.witness_word) {
            out.stream() << cl.witness_word->str() << "\n";
            return kExitOk;
        }
        if (cl.cls != ProblemClass::Boundary) {
            out.stream() << "error: no single strategy word for class "
                         << to_string(cl.cls)
                         << (cl.cls == ProblemClass::UnderConstrained
                                 ? " with a feedback witness; see `classify`"
                                 : "")
                         << "\n";
            return kExitInfeasible;
        }
        ZoneReport report = backpropagate_zones(p);
        if (!report.resolved) return kExitUndetermined;
        try {
            out.stream() << synthesize_strategy(report, eta0).str() << "\n";
        } catch (const std::runtime_error& e) {
            out.stream() << "error: " << e.what() << "\n";
            return kExitInfeasible;
        }
        return kExitOk;
    }

    if (c_sim->parsed()) {
        ProblemInstance p = sim_args.to_instance();
        Rational eta0 = parse_phase([&] { return Rational::parse_or_throw(sim_eta0); });
        if (sim_word.empty() == sim_policy.empty()) {
            std::cerr << "simulate needs exactly one of --strategy / --policy\n";
            return kExitUsage;
        }
        SimTrace trace;
        try {
            if (!sim_word.empty()) {
                StrategyWord word =
                    parse_phase([&] { return StrategyWord::parse_or_throw(sim_word); });
                trace = simulate(p, word, eta0, sim_horizon);
            } else if (sim_policy == "forced") {
                ZoneReport report = backpropagate_zones(p);
                trace = simulate_policy(p, forced_policy(report), eta0, sim_horizon);
            } else {
                Classification cl = classify(p);
                trace = simulate_policy(p, witness_policy(cl), eta0, sim_horizon);
            }
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitInfeasible;
        }
        Output out(sim_out);
        write_trace_csv(trace, out.stream());
        return kExitOk;
    }

    if (c_oracle->parsed()) {
        ProblemInstance p = oracle_args.to_instance();
        OracleResult result = maximal_invariant_set(p, oracle_cap);
        emit(oracle_json(result), oracle_out);
        return result.converged ? kExitOk : kExitUndetermined;
    }

    if (c_rtstar->parsed()) {
        Rational rp = parse_phase([&] { return Rational::parse_or_throw(rtstar_rp); });
        Rational delta = parse_phase([&] { return Rational::parse_or_throw(rtstar_delta); });
        Rational value = rt_star(rp, delta, rtstar_c);
        Output out(rtstar_out);
        if (rtstar_format == "json")
            out.stream() << json{{"rt_star", value.str()}, {"c_star", c_star(rp, delta)}}.dump(2)
                         << "\n";
        else
            out.stream() << value.str() << "\n";
        return kExitOk;
    }

    if (c_map->parsed()) {
        Rational w[4];
        {
            std::stringstream ss(map_window);
            std::string part;
            int i = 0;
            while (std::getline(ss, part, ',') && i < 4)
                w[i++] = parse_phase([&] { return Rational::parse_or_throw(part); });
            if (i != 4) {
                std::cerr << "bad --window, expected rp0,rp1,rt0,rt1\n";
                return kExitUsage;
            }
        }
        RegionGrid grid = region_map(map_c, map_res, w[0], w[1], w[2], w[3]);
        if (map_csv.empty() && map_svg.empty()) map_csv = "-";
        if (!map_csv.empty()) {
            Output out(map_csv);
            write_region_csv(grid, out.stream());
        }
        if (!map_svg.empty()) {
            Output out(map_svg);
            write_region_svg(grid, out.stream());
        }
        return kExitOk;
    }

    if (c_power->parsed()) {
        PowerEstimate est = tracking_power(power_c, power_res);
        emit(power_json(est, power_c), power_out);
        return kExitOk;
    }

    if (c_verify->parsed()) {
        VerifyConfig cfg;
        cfg.seed = verify_seed;
        cfg.per_class = verify_count;
        cfg.cmax = verify_cmax;
        cfg.oracle_cap = verify_cap;
        VerifyReport report = run_verification_sweep(cfg);
        emit(verify_json(report, verify_seed), verify_out);
        return report.ok() ? kExitOk : kExitInfeasible;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
