#include "pptrack/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

namespace pptrack {

long derived_a(const ProblemInstance& p) {
    p.ensure_positive();
    mpz_class a = ceil_div(p.delta, p.rt);
    if (!a.fits_slong_p()) throw std::overflow_error("derived split count does not fit a long");
    return a.get_si();
}

Rational step_size(const Rational& x, const Action& act, const ProblemInstance& p) {
    if (x.sign() <= 0) throw std::invalid_argument("I-state size must be positive");
    long i = act.resolve(p);
    return (x + p.delta) / Rational(i);
}

Rational step_size_inv(const Rational& y, const Action& act, const ProblemInstance& p) {
    if (y.sign() <= 0) throw std::invalid_argument("I-state size must be positive");
    long i = act.resolve(p);
    return Rational(i) * y - p.delta;
}

Interval posterior_from_sensing(const Interval& prior, const SensingVector& v, const Rational& pos) {
    if (!prior.contains(pos)) throw std::runtime_error("inconsistent observation");

    const auto& u = v.set_points;
    // Cell containing pos: first index with pos <= u[idx]; u.size() means the
    // rightmost unbounded cell.
    std::size_t idx = 0;
    while (idx < u.size() && pos > u[idx]) ++idx;

    Rational lo = prior.lo;
    bool lo_closed = prior.lo_closed;
    if (idx > 0) {
        const Rational& cut = u[idx - 1];  // cell is open at its lower cut
        if (cut > lo || (cut == lo && lo_closed)) {
            lo = cut;
            lo_closed = false;
        }
    }

    Rational hi = prior.hi;
    bool hi_closed = prior.hi_closed;
    if (idx < u.size()) {
        const Rational& cut = u[idx];  // cell is closed at its upper cut
        if (cut < hi) {
            hi = cut;
            hi_closed = true;
        }
    }

    auto cell = Interval::try_make(std::move(lo), std::move(hi), lo_closed, hi_closed);
    if (!cell) throw std::runtime_error("inconsistent observation");
    return *cell;
}

std::pair<Rational, Rational> worst_case_cells(const Rational& prior_size,
                                               const std::vector<Rational>& cuts) {
    if (prior_size.sign() <= 0) throw std::invalid_argument("prior size must be positive");
    std::vector<Rational> inside;
    for (const Rational& c : cuts)
        if (c.sign() > 0 && c < prior_size) inside.push_back(c);
    std::sort(inside.begin(), inside.end());
    inside.erase(std::unique(inside.begin(), inside.end()), inside.end());

    Rational prev = 0;
    Rational min_cell = prior_size, max_cell = 0;
    for (const Rational& c : inside) {
        Rational w = c - prev;
        min_cell = min(min_cell, w);
        max_cell = max(max_cell, w);
        prev = c;
    }
    Rational last = prior_size - prev;
    min_cell = min(min_cell, last);
    max_cell = max(max_cell, last);
    return {min_cell, max_cell};
}

namespace {

SimTrace run_steps(const ProblemInstance& p, const Rational& eta0_size, long horizon,
                   const std::function<std::optional<Action>(long, const Rational&)>& pick) {
    p.ensure_positive();
    if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
    if (eta0_size < p.rp || eta0_size > p.rt)
        throw std::invalid_argument("initial I-state size outside [rp, rt]");

    SimTrace trace;
    Rational x = eta0_size;
    for (long k = 0; k < horizon; ++k) {
        auto act = pick(k, x);
        if (!act) {
            trace.stopped_without_action = true;
            break;
        }
        Rational prior = x + p.delta;
        Rational post = step_size(x, *act, p);
        SimStep step{k, std::move(prior), *act, post, post >= p.rp, post <= p.rt};
        bool bad = !step.ppc_ok || !step.ttc_ok;
        trace.steps.push_back(std::move(step));
        if (bad) {
            trace.violated = true;
            trace.violation_step = k;
            break;
        }
        x = std::move(post);
    }
    return trace;
}

}  // namespace

SimTrace simulate(const ProblemInstance& p, const StrategyWord& w, const Rational& eta0_size,
                  long horizon) {
    if (w.cycle.empty()) throw std::invalid_argument("strategy word needs a non-empty cycle");
    return run_steps(p, eta0_size, horizon,
                     [&](long k, const Rational&) { return std::optional<Action>(w.at(k)); });
}

SimTrace simulate_policy(const ProblemInstance& p, const SizePolicy& policy,
                         const Rational& eta0_size, long horizon) {
    return run_steps(p, eta0_size, horizon,
                     [&](long, const Rational& x) { return policy(x); });
}

}  // namespace pptrack
