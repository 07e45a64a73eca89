#pragma once

#include <random>
#include <vector>

#include "pptrack/interval.hpp"
#include "pptrack/rational.hpp"

namespace pptrack::testutil {

// Small-denominator rational in [-range, range].
inline Rational rand_rational(std::mt19937_64& rng, long range = 20, long max_den = 12) {
    std::uniform_int_distribution<long> den(1, max_den);
    long d = den(rng);
    std::uniform_int_distribution<long> num(-range * d, range * d);
    return Rational(num(rng), d);
}

inline Rational rand_positive(std::mt19937_64& rng, long range = 20, long max_den = 12) {
    std::uniform_int_distribution<long> den(1, max_den);
    long d = den(rng);
    std::uniform_int_distribution<long> num(1, range * d);
    return Rational(num(rng), d);
}

inline Interval rand_interval(std::mt19937_64& rng) {
    Rational a = rand_rational(rng), b = rand_rational(rng);
    if (a == b) return Interval::point(a);
    if (b < a) std::swap(a, b);
    std::bernoulli_distribution flag(0.5);
    return Interval(a, b, flag(rng), flag(rng));
}

inline IntervalSet rand_set(std::mt19937_64& rng, int max_parts = 4) {
    std::uniform_int_distribution<int> n(0, max_parts);
    std::vector<Interval> parts;
    int count = n(rng);
    for (int i = 0; i < count; ++i) parts.push_back(rand_interval(rng));
    return IntervalSet::from_parts(std::move(parts));
}

}  // namespace pptrack::testutil
