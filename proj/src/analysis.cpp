#include "pptrack/analysis.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace pptrack {

long c_star(const Rational& rp, const Rational& delta) {
    if (rp.sign() <= 0 || delta.sign() <= 0)
        throw std::invalid_argument("c_star needs positive rp and delta");
    mpz_class v = ceil_div(delta, rp);
    if (!v.fits_slong_p()) throw std::overflow_error("c_star does not fit a long");
    return v.get_si();
}

Rational rt_star(const Rational& rp, const Rational& delta, long c) {
    if (rp.sign() <= 0 || delta.sign() <= 0 || c < 1)
        throw std::invalid_argument("rt_star needs positive rp, delta and c >= 1");

    if (rp >= delta) return Rational(2) * rp;
    if (c == 1) return delta;

    long cs = c_star(rp, delta);  // >= 2 since rp < delta
    if (c < cs) return delta / Rational(c);

    Rational rcs(cs);
    // rp >= delta/c_star holds by definition of c_star; the split point is
    // delta*c_star/(c_star^2 - 1).
    if (rp <= delta * rcs / (rcs * rcs - 1)) return (rcs + 1) * rp / rcs;
    return delta / (rcs - 1);
}

std::pair<Rational, Rational> Triangle::centroid() const {
    Rational x = (vertices[0].first + vertices[1].first + vertices[2].first) / Rational(3);
    Rational y = (vertices[0].second + vertices[1].second + vertices[2].second) / Rational(3);
    return {std::move(x), std::move(y)};
}

Rational Triangle::min_rt() const {
    Rational m = vertices[0].second;
    for (int i = 1; i < 3; ++i) m = min(m, vertices[i].second);
    return m;
}

Rational Triangle::max_rt() const {
    Rational m = vertices[0].second;
    for (int i = 1; i < 3; ++i) m = max(m, vertices[i].second);
    return m;
}

std::vector<Triangle> boundary_triangles(long c) {
    std::vector<Triangle> out;
    for (long a = 2; a <= c; ++a) {
        Rational ra(a);
        Triangle t;
        t.a = a;
        t.vertices[0] = {Rational(2) / ra, (2 * ra + 2) / (ra * ra)};
        t.vertices[1] = {2 * ra / (ra * ra - 1), Rational(2) / (ra - 1)};
        t.vertices[2] = {2 * (ra + 1) / (ra * ra + ra - 1),
                         2 * (ra + 1) * (ra + 1) / (ra * ra + ra - 1) - 2};
        out.push_back(std::move(t));
    }
    return out;
}

Rational RegionGrid::cell_center_x(long i) const {
    return x0 + (x1 - x0) * Rational(2 * i + 1, 2 * resolution);
}

Rational RegionGrid::cell_center_y(long j) const {
    return y0 + (y1 - y0) * Rational(2 * j + 1, 2 * resolution);
}

RegionGrid region_map(long c, long resolution, const Rational& x0, const Rational& x1,
                      const Rational& y0, const Rational& y1) {
    if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
    if (!(x0 < x1) || !(y0 < y1)) throw std::invalid_argument("empty map window");

    RegionGrid grid;
    grid.c = c;
    grid.resolution = resolution;
    grid.x0 = x0;
    grid.x1 = x1;
    grid.y0 = y0;
    grid.y1 = y1;
    grid.cells.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));

    ProblemInstance inst;
    inst.delta = Rational(2);
    inst.c = c;
    for (long j = 0; j < resolution; ++j) {
        inst.rt = grid.cell_center_y(j);
        for (long i = 0; i < resolution; ++i) {
            inst.rp = grid.cell_center_x(i);
            Classification cl = classify(inst);
            grid.cells.push_back({cl.cls, cl.lemma});
        }
    }
    return grid;
}

PowerEstimate tracking_power(long c, long resolution) {
    if (resolution < 100) throw std::invalid_argument("resolution must be at least 100");

    // Inclusion mask over the [0,2]^2 grid; a cell counts when its center
    // has rp <= rt and classifies under-constrained or boundary.
    std::vector<char> included(static_cast<std::size_t>(resolution) *
                               static_cast<std::size_t>(resolution));
    ProblemInstance inst;
    inst.delta = Rational(2);
    inst.c = c;
    long count = 0;
    for (long j = 0; j < resolution; ++j) {
        inst.rt = Rational(2 * j + 1, 2 * resolution) * 2;
        for (long i = 0; i <= j; ++i) {  // centers with rp > rt can never count
            inst.rp = Rational(2 * i + 1, 2 * resolution) * 2;
            Classification cl = classify(inst);
            bool in = cl.cls == ProblemClass::UnderConstrained || cl.cls == ProblemClass::Boundary;
            included[static_cast<std::size_t>(j * resolution + i)] = in;
            count += in;
        }
    }

    auto is_in = [&](long i, long j) {
        return included[static_cast<std::size_t>(j * resolution + i)] != 0;
    };
    long edge = 0;
    for (long j = 0; j < resolution; ++j)
        for (long i = 0; i < resolution; ++i) {
            bool me = is_in(i, j);
            bool boundary_cell = (i + 1 < resolution && is_in(i + 1, j) != me) ||
                                 (i > 0 && is_in(i - 1, j) != me) ||
                                 (j + 1 < resolution && is_in(i, j + 1) != me) ||
                                 (j > 0 && is_in(i, j - 1) != me);
            edge += boundary_cell;
        }

    Rational cell_area = Rational(4) / Rational(resolution * resolution);
    PowerEstimate est;
    est.resolution = resolution;
    est.included_cells = count;
    est.edge_cells = edge;
    est.value = Rational(count) * cell_area;
    est.error_bound = Rational(edge) * cell_area;
    return est;
}

namespace {

const char* css_fill(ProblemClass cls) {
    switch (cls) {
        case ProblemClass::UnderConstrained: return "#5cb85c";
        case ProblemClass::OverConstrained: return "#9e9e9e";
        case ProblemClass::Boundary: return "#f4a6c8";
        case ProblemClass::TriviallyInfeasible: return "#ffffff";
    }
    return "#000000";
}

}  // namespace

void write_region_csv(const RegionGrid& grid, std::ostream& os) {
    os << "r_p,r_t,class,lemma\n";
    for (long j = 0; j < grid.resolution; ++j) {
        std::string rt = grid.cell_center_y(j).decimal_str();
        for (long i = 0; i < grid.resolution; ++i) {
            const CellLabel& cell = grid.at(i, j);
            os << grid.cell_center_x(i).decimal_str() << ',' << rt << ','
               << to_string(cell.cls) << ',' << to_string(cell.lemma) << '\n';
        }
    }
}

void write_region_svg(const RegionGrid& grid, std::ostream& os) {
    constexpr double kCanvas = 800.0;
    constexpr double kMargin = 70.0;
    const double plot = kCanvas - 2 * kMargin;
    const double cell = plot / static_cast<double>(grid.resolution);

    char buf[256];
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
          "viewBox=\"0 0 800 800\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";

    for (long j = 0; j < grid.resolution; ++j) {
        double y = kMargin + plot - (static_cast<double>(j) + 1.0) * cell;  // rt grows upward
        for (long i = 0; i < grid.resolution; ++i) {
            double x = kMargin + static_cast<double>(i) * cell;
            std::snprintf(buf, sizeof buf,
                          "<rect x=\"%.3f\" y=\"%.3f\" width=\"%.3f\" height=\"%.3f\" "
                          "fill=\"%s\"/>\n",
                          x, y, cell, cell, css_fill(grid.at(i, j).cls));
            os << buf;
        }
    }

    // Frame and axis labels.
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"none\" "
                  "stroke=\"#000\" stroke-width=\"1\"/>\n",
                  kMargin, kMargin, plot, plot);
    os << buf;
    os << "<text x=\"400\" y=\"780\" text-anchor=\"middle\" font-size=\"18\">r_p (units of "
          "delta/2)</text>\n";
    os << "<text x=\"20\" y=\"400\" text-anchor=\"middle\" font-size=\"18\" "
          "transform=\"rotate(-90 20 400)\">r_t (units of delta/2)</text>\n";
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"14\">%s</text>\n", kMargin - 4,
                  kCanvas - kMargin + 20, grid.x0.decimal_str().c_str());
    os << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\" font-size=\"14\">%s</text>\n",
                  kCanvas - kMargin, kCanvas - kMargin + 20, grid.x1.decimal_str().c_str());
    os << buf;

    // Legend.
    struct Item { ProblemClass cls; const char* label; };
    const Item items[] = {
        {ProblemClass::UnderConstrained, "under-constrained"},
        {ProblemClass::OverConstrained, "over-constrained"},
        {ProblemClass::Boundary, "boundary"},
        {ProblemClass::TriviallyInfeasible, "trivially infeasible"},
    };
    double ly = 16.0;
    for (const Item& item : items) {
        std::snprintf(buf, sizeof buf,
                      "<rect x=\"76\" y=\"%.1f\" width=\"14\" height=\"14\" fill=\"%s\" "
                      "stroke=\"#000\" stroke-width=\"0.5\"/>"
                      "<text x=\"96\" y=\"%.1f\" font-size=\"13\">%s</text>\n",
                      ly, css_fill(item.cls), ly + 12, item.label);
        os << buf;
        ly += 20.0;
    }
    os << "</svg>\n";
}

}  // namespace pptrack
