#pragma once

#include <cstdint>
#include <random>

#include "pptrack/instance.hpp"

namespace pptrack {

// Deterministic, seed-driven generator of exact rationals and instances.
// Denominators are kept small so the sampled instances stay far from
// degenerate seams and resolve quickly under fixpoint iteration.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long int_in(long lo, long hi);  // inclusive
    Rational rational_in(const Rational& lo, const Rational& hi, long max_den = 400);

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Instance generators at delta = 2 (classification is scale invariant, so
// this loses no generality). Each asserts the produced class and retries a
// bounded number of times.
ProblemInstance sample_boundary_instance(Sampler& s, long cmax);
ProblemInstance sample_under_instance(Sampler& s, long cmax);
ProblemInstance sample_over_instance(Sampler& s, long cmax);

}  // namespace pptrack
