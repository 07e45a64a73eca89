#pragma once

#include <array>
#include <iosfwd>
#include <utility>
#include <vector>

#include "pptrack/classify.hpp"
#include "pptrack/rational.hpp"

namespace pptrack {

// Smallest tracking bound that keeps the instance solvable for every
// admissible initial I-state, given privacy bound rp, motion delta and
// sensing power c. Exact five-case closed form; c_star = ceil(delta / rp).
Rational rt_star(const Rational& rp, const Rational& delta, long c);
long c_star(const Rational& rp, const Rational& delta);

// One boundary-region triangle in the (rp, rt) plane, in units of delta/2
// (i.e. with delta normalized to 2).
struct Triangle {
    long a;
    std::array<std::pair<Rational, Rational>, 3> vertices;

    std::pair<Rational, Rational> centroid() const;
    Rational min_rt() const;
    Rational max_rt() const;
};

// Triangles for a = 2..c; empty when c < 2. Vertex formulas do not depend
// on c, so raising c only appends triangles.
std::vector<Triangle> boundary_triangles(long c);

struct CellLabel {
    ProblemClass cls;
    LemmaTag lemma;
};

// Grid of classifications over an (rp, rt) window at delta = 2. Cell (i, j)
// is labeled by classify() at its center.
struct RegionGrid {
    long c = 0;
    long resolution = 0;
    Rational x0, x1, y0, y1;  // rp range, rt range
    std::vector<CellLabel> cells;  // row-major, rows indexed by rt

    const CellLabel& at(long i, long j) const {
        return cells[static_cast<std::size_t>(j * resolution + i)];
    }
    Rational cell_center_x(long i) const;
    Rational cell_center_y(long j) const;
};

RegionGrid region_map(long c, long resolution, const Rational& x0, const Rational& x1,
                      const Rational& y0, const Rational& y1);

// Area of the solvable-or-boundary part of {0 <= rp <= rt <= 2} at delta = 2,
// by counting grid cells whose center classifies under-constrained or
// boundary. error_bound is the total area of cells adjacent to a change of
// inclusion (the region boundary is piecewise linear, so those cells carry
// the discretization error; features thinner than one cell can additionally
// contribute at most their own area).
struct PowerEstimate {
    Rational value;
    Rational error_bound;
    long resolution = 0;
    long included_cells = 0;
    long edge_cells = 0;
};

PowerEstimate tracking_power(long c, long resolution);

// CSV: header "r_p,r_t,class,lemma", one row per cell.
void write_region_csv(const RegionGrid& grid, std::ostream& os);
// SVG: fixed 800x800 canvas, one rect per cell, embedded legend.
void write_region_svg(const RegionGrid& grid, std::ostream& os);

}  // namespace pptrack
