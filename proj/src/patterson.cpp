#include "qcsurf/patterson.hpp"

#include "qcsurf/density.hpp"
#include "qcsurf/textio.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qcsurf::patterson {

namespace {

constexpr double kAxisTol = 1e-9;

}  // namespace

double overlap_exact(const icosa::Triacontahedron& window, const GoldenScalar& eta,
                     const icosa::ModuleVector6& shift) {
    const icosa::StarImage image = icosa::star_map(shift);
    if (std::abs(image.par.z) >= kAxisTol)
        throw std::domain_error("overlap_exact: shift is not parallel to the plane");

    const icosa::SectionPolygon section = window.section(eta);
    if (section.vertices.size() < 3) return 0.0;

    // In-plane translation in window units (the section lives in tau*b5).
    const icosa::Vec2 t{image.perp.x / std::numbers::phi, image.perp.y / std::numbers::phi};
    std::vector<icosa::Vec2> shifted = section.vertices;
    for (icosa::Vec2& v : shifted) v = v + t;

    return icosa::polygon_area(icosa::convex_intersection(section.vertices, shifted));
}

double overlap_circle(const GoldenScalar& eta, double d) {
    if (d < 0) throw std::invalid_argument("overlap_circle: negative distance");
    const double area = density::section_area(eta).value();
    const double r = std::sqrt(area / std::numbers::pi);
    if (d >= 2.0 * r) return 0.0;
    return 2.0 * r * r * std::acos(d / (2.0 * r)) -
           0.5 * d * std::sqrt(4.0 * r * r - d * d);
}

double evaluate(const icosa::Triacontahedron& window, const Query& query) {
    if (query.mode == Mode::exact_polygon)
        return overlap_exact(window, query.eta, query.shift);
    const icosa::StarImage image = icosa::star_map(query.shift);
    if (std::abs(image.par.z) >= kAxisTol)
        throw std::domain_error("evaluate: shift is not parallel to the plane");
    const double d =
        std::hypot(image.perp.x, image.perp.y) / std::numbers::phi;  // window units
    return overlap_circle(query.eta, d);
}

std::vector<std::vector<double>> surface(const std::vector<GoldenScalar>& etas,
                                         const std::vector<double>& distances) {
    std::vector<std::vector<double>> values;
    values.reserve(etas.size());
    for (const GoldenScalar& eta : etas) {
        std::vector<double> row;
        row.reserve(distances.size());
        for (double d : distances) row.push_back(overlap_circle(eta, d));
        values.push_back(std::move(row));
    }
    return values;
}

Report report(const icosa::Triacontahedron& window, const std::array<GoldenScalar, 3>& etas,
              const std::vector<LabeledShift>& shifts, Mode mode, double b5_angstrom,
              bool normalize) {
    Report rep;
    rep.etas = etas;

    ReportRow zero;
    zero.label = "0";
    zero.v_par_angstrom = 0.0;
    for (size_t k = 0; k < 3; ++k) zero.value[k] = density::section_area(etas[k]).value();
    rep.rows.push_back(zero);

    for (const LabeledShift& ls : shifts) {
        ReportRow row;
        row.label = ls.label;
        row.v_par_angstrom = icosa::star_map(ls.shift).par.norm() * b5_angstrom;
        for (size_t k = 0; k < 3; ++k)
            row.value[k] = evaluate(window, Query{etas[k], ls.shift, mode});
        rep.rows.push_back(std::move(row));
    }

    if (normalize) {
        for (ReportRow& row : rep.rows)
            for (size_t k = 0; k < 3; ++k)
                row.value[k] = zero.value[k] > 0 ? row.value[k] / zero.value[k] : 0.0;
    }
    return rep;
}

std::vector<LabeledShift> read_shift_file(std::istream& is) {
    std::vector<LabeledShift> shifts;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        LabeledShift s;
        ls >> s.label;
        if (s.label.empty()) continue;
        for (size_t i = 0; i < 6; ++i) {
            if (!(ls >> s.shift.n[i]))
                throw std::invalid_argument("shift file line " + std::to_string(line_no) +
                                            ": expected \"label n1 n2 n3 n4 n5 n6\"");
        }
        shifts.push_back(std::move(s));
    }
    return shifts;
}

void write_report_csv(std::ostream& os, const Report& report, int precision) {
    os << "label,v_par_angstrom,P_eta1,P_eta2,P_eta3\n";
    for (const ReportRow& row : report.rows) {
        os << row.label << ',' << format_fixed(row.v_par_angstrom, 2);
        for (double v : row.value) os << ',' << format_fixed(v, precision);
        os << '\n';
    }
}

void write_surface_csv(std::ostream& os, const std::vector<GoldenScalar>& etas,
                       const std::vector<double>& distances,
                       const std::vector<std::vector<double>>& values, int precision) {
    os << "eta";
    for (double d : distances) os << ',' << format_fixed(d, precision);
    os << '\n';
    for (size_t r = 0; r < etas.size(); ++r) {
        os << format_fixed(etas[r].to_double(), precision);
        for (double v : values[r]) os << ',' << format_fixed(v, precision);
        os << '\n';
    }
}

void write_report_svg(std::ostream& os, const Report& report) {
    // One row of circles per eta, areas proportional to the tabulated
    // values, mirroring the familiar glyph plots.
    const double cell = 40.0;
    const double max_radius = cell * 0.45;
    double vmax = 0.0;
    for (const ReportRow& row : report.rows)
        for (double v : row.value) vmax = std::max(vmax, v);
    if (vmax <= 0.0) vmax = 1.0;

    const double width = cell * (static_cast<double>(report.rows.size()) + 1.0);
    const double height = cell * 4.0;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_fixed(width, 0)
       << "\" height=\"" << format_fixed(height, 0) << "\">\n";
    for (size_t k = 0; k < 3; ++k) {
        const double cy = cell * (static_cast<double>(k) + 1.0);
        os << "  <text x=\"4\" y=\"" << format_fixed(cy + 4, 0)
           << "\" font-size=\"10\">eta" << (k + 1) << "</text>\n";
        for (size_t c = 0; c < report.rows.size(); ++c) {
            const double v = report.rows[c].value[k];
            const double radius = max_radius * std::sqrt(std::max(v, 0.0) / vmax);
            const double cx = cell * (static_cast<double>(c) + 1.5);
            os << "  <circle cx=\"" << format_fixed(cx, 1) << "\" cy=\""
               << format_fixed(cy, 1) << "\" r=\"" << format_fixed(radius, 2)
               << "\" fill=\"black\"/>\n";
        }
    }
    const double label_y = cell * 3.5;
    for (size_t c = 0; c < report.rows.size(); ++c) {
        os << "  <text x=\"" << format_fixed(cell * (static_cast<double>(c) + 1.5), 1)
           << "\" y=\"" << format_fixed(label_y, 1)
           << "\" font-size=\"10\" text-anchor=\"middle\">" << report.rows[c].label
           << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace qcsurf::patterson
