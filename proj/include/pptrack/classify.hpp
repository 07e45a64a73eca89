#pragma once

#include <optional>

#include "pptrack/dynamics.hpp"
#include "pptrack/instance.hpp"

namespace pptrack {

enum class ProblemClass { TriviallyInfeasible, UnderConstrained, OverConstrained, Boundary };

enum class LemmaTag { None, L3, L4, L5, L6i, L6ii };

struct Classification {
    ProblemClass cls = ProblemClass::TriviallyInfeasible;
    LemmaTag lemma = LemmaTag::None;
    long a = 0;

    // Under-constrained witnesses. L3 carries a fixed word ("(-)*"). L5
    // carries a feedback rule: Minus at or above the threshold, Plus below;
    // a single ultimately-periodic word valid from every start need not
    // exist, so the rule itself is the witness.
    std::optional<StrategyWord> witness_word;
    std::optional<Rational> witness_minus_at_or_above;
};

const char* to_string(ProblemClass cls);
const char* to_string(LemmaTag lemma);

// Total, exact classification. Throws std::invalid_argument on non-positive
// parameters; every positive-rational instance gets a verdict.
Classification classify(const ProblemInstance& p);

// Feedback policy realizing an under-constrained witness; call only when
// cls == UnderConstrained.
SizePolicy witness_policy(const Classification& cl);

}  // namespace pptrack
