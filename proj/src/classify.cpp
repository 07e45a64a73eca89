#include "pptrack/classify.hpp"

#include <stdexcept>

namespace pptrack {

const char* to_string(ProblemClass cls) {
    switch (cls) {
        case ProblemClass::TriviallyInfeasible: return "trivially_infeasible";
        case ProblemClass::UnderConstrained: return "under_constrained";
        case ProblemClass::OverConstrained: return "over_constrained";
        case ProblemClass::Boundary: return "boundary";
    }
    return "?";
}

const char* to_string(LemmaTag lemma) {
    switch (lemma) {
        case LemmaTag::None: return "";
        case LemmaTag::L3: return "L3";
        case LemmaTag::L4: return "L4";
        case LemmaTag::L5: return "L5";
        case LemmaTag::L6i: return "L6i";
        case LemmaTag::L6ii: return "L6ii";
    }
    return "?";
}

// Every equality sits on a region border; the routing below is fixed once,
// here, and nowhere else:
//
//   rp == rt                 -> proceed (only rp > rt is trivially infeasible)
//   delta == c*rt            -> NOT over-constrained (that interval is open);
//                               falls through with a == c
//   delta == a*rp            -> under-constrained (closed interval end)
//   delta == a*rt            -> under-constrained (then a*rp <= a*rt == delta)
//   a*rt == (a+1)*rp         -> under-constrained via the feedback rule
//                               (degenerate, empty central zone)
//   rp == a*rt - delta       -> boundary (closed end)
//   (a+1)*rp - delta == rt   -> boundary (closed end)
//   both over-constrained strict tests hold -> first one wins
Classification classify(const ProblemInstance& p) {
    p.ensure_positive();

    Classification out;
    if (p.rp > p.rt) {
        out.cls = ProblemClass::TriviallyInfeasible;
        out.a = derived_a(p);
        return out;
    }

    if (p.delta > Rational(p.c) * p.rt) {
        out.cls = ProblemClass::OverConstrained;
        out.lemma = LemmaTag::L4;
        out.a = derived_a(p);
        return out;
    }

    long a = derived_a(p);  // delta <= c*rt ensures a <= c here
    out.a = a;
    Rational ra(a);

    if (p.delta >= ra * p.rp) {
        out.cls = ProblemClass::UnderConstrained;
        out.lemma = LemmaTag::L3;
        out.witness_word = StrategyWord{{}, {Action::minus()}};
        return out;
    }

    // From here delta lies in the gap ((a-1)*rt, a*rp).
    if (ra * p.rt >= (ra + 1) * p.rp) {
        out.cls = ProblemClass::UnderConstrained;
        out.lemma = LemmaTag::L5;
        out.witness_minus_at_or_above = (ra + 1) * p.rp - p.delta;
        return out;
    }

    if (p.rp <= ra * p.rt - p.delta && (ra + 1) * p.rp - p.delta <= p.rt) {
        out.cls = ProblemClass::Boundary;
        return out;
    }

    out.cls = ProblemClass::OverConstrained;
    out.lemma = (p.delta > ra * p.rt - p.rp) ? LemmaTag::L6i : LemmaTag::L6ii;
    return out;
}

SizePolicy witness_policy(const Classification& cl) {
    if (cl.cls != ProblemClass::UnderConstrained)
        throw std::invalid_argument("witness policy exists only for under-constrained instances");
    if (cl.lemma == LemmaTag::L3)
        return [](const Rational&) { return Action::minus(); };
    Rational threshold = *cl.witness_minus_at_or_above;
    return [threshold](const Rational& x) {
        return x >= threshold ? Action::minus() : Action::plus();
    };
}

}  // namespace pptrack
