#include "pptrack/samplers.hpp"

#include <stdexcept>

#include "pptrack/analysis.hpp"
#include "pptrack/classify.hpp"

namespace pptrack {

long Sampler::int_in(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Rational Sampler::rational_in(const Rational& lo, const Rational& hi, long max_den) {
    if (!(lo < hi)) throw std::invalid_argument("rational_in needs lo < hi");
    for (int attempt = 0; attempt < 64; ++attempt) {
        long den = int_in(1, max_den);
        Rational rden(den);
        mpz_class num_lo = (lo * rden).ceil();
        mpz_class num_hi = (hi * rden).floor();
        if (num_lo > num_hi) continue;  // denominator too coarse for the range
        if (!num_lo.fits_slong_p() || !num_hi.fits_slong_p()) continue;
        long num = int_in(num_lo.get_si(), num_hi.get_si());
        Rational v(num, den);
        if (lo < v && v < hi) return v;
    }
    return (lo + hi) / Rational(2);
}

namespace {

ProblemInstance at_delta2(Rational rp, Rational rt, long c) {
    ProblemInstance inst;
    inst.rp = std::move(rp);
    inst.rt = std::move(rt);
    inst.delta = Rational(2);
    inst.c = c;
    return inst;
}

}  // namespace

ProblemInstance sample_boundary_instance(Sampler& s, long cmax) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        long a = s.int_in(1, cmax);
        long c = s.int_in(std::max<long>(a, 1), cmax);
        ProblemInstance inst;
        if (a == 1) {
            // The unbounded a = 1 boundary region: rp > 2 with
            // max(rp + 2, 2*rp - 2) <= rt < 2*rp.
            Rational rp = s.rational_in(Rational(21, 10), Rational(6));
            Rational lo = max(rp + 2, 2 * rp - 2);
            Rational hi = 2 * rp;
            inst = at_delta2(std::move(rp), s.rational_in(lo, hi), c);
        } else {
            // Interior point of the triangle for this a, by integer
            // barycentric weights.
            Triangle tri = boundary_triangles(a).back();
            Rational w0(s.int_in(1, 97)), w1(s.int_in(1, 97)), w2(s.int_in(1, 97));
            Rational total = w0 + w1 + w2;
            Rational rp = (w0 * tri.vertices[0].first + w1 * tri.vertices[1].first +
                           w2 * tri.vertices[2].first) /
                          total;
            Rational rt = (w0 * tri.vertices[0].second + w1 * tri.vertices[1].second +
                           w2 * tri.vertices[2].second) /
                          total;
            inst = at_delta2(std::move(rp), std::move(rt), c);
        }
        if (classify(inst).cls == ProblemClass::Boundary) return inst;
    }
    throw std::logic_error("boundary sampler failed to produce a boundary instance");
}

ProblemInstance sample_under_instance(Sampler& s, long cmax) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        long c = s.int_in(1, cmax);
        Rational rp = s.rational_in(Rational(1, 100), Rational(2));
        Rational rt = s.rational_in(rp, Rational(2));
        ProblemInstance inst = at_delta2(std::move(rp), std::move(rt), c);
        if (classify(inst).cls == ProblemClass::UnderConstrained) return inst;
    }
    throw std::logic_error("under-constrained sampler exhausted its attempts");
}

ProblemInstance sample_over_instance(Sampler& s, long cmax) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        long c = s.int_in(1, cmax);
        Rational rp = s.rational_in(Rational(1, 100), Rational(2));
        Rational rt = s.rational_in(rp, Rational(2));
        ProblemInstance inst = at_delta2(std::move(rp), std::move(rt), c);
        if (classify(inst).cls == ProblemClass::OverConstrained) return inst;
    }
    throw std::logic_error("over-constrained sampler exhausted its attempts");
}

}  // namespace pptrack
