#pragma once

#include "qcsurf/golden.hpp"
#include "qcsurf/icosa.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace qcsurf::patterson {

/**
 * Planar autocorrelation within a plane perpendicular to the five-fold
 * axis.  For a cut-and-project set the autocorrelation weight of a module
 * shift v is the overlap area of the window section with its copy
 * translated by the perpendicular image of v; the delta-comb over parallel
 * positions is represented as a discrete map from shift vectors to these
 * coefficients.
 */
enum class Mode { exact_polygon, circle };

struct Query {
    GoldenScalar eta;
    icosa::ModuleVector6 shift;
    Mode mode = Mode::exact_polygon;
};

/**
 * Exact overlap area of the section at eta with itself translated by the
 * in-plane perpendicular image of `shift`, in the same units as the
 * section-area profile.  The shift must be parallel to the sectioning
 * plane (its parallel image has no axial component); anything else throws
 * std::domain_error rather than being silently projected.
 */
double overlap_exact(const icosa::Triacontahedron& window, const GoldenScalar& eta,
                     const icosa::ModuleVector6& shift);

/**
 * Circle approximation: lens area of two circles of radius
 * r(eta) = sqrt(F(eta)/pi) at center distance d.  Reduces to F(eta) at
 * d = 0 and vanishes for d >= 2 r(eta).
 */
double overlap_circle(const GoldenScalar& eta, double d);

double evaluate(const icosa::Triacontahedron& window, const Query& query);

/// overlap_circle on the product grid; rows indexed by eta, columns by d.
std::vector<std::vector<double>> surface(const std::vector<GoldenScalar>& etas,
                                         const std::vector<double>& distances);

struct LabeledShift {
    std::string label;
    icosa::ModuleVector6 shift;
};

struct ReportRow {
    std::string label;
    double v_par_angstrom = 0;     // length of the parallel image
    std::array<double, 3> value{};  // one column per eta
};

struct Report {
    std::array<GoldenScalar, 3> etas;
    std::vector<ReportRow> rows;  // first row is the zero shift
};

/**
 * Autocorrelation table for user-supplied labeled shifts at three heights.
 * The zero-shift row (the plain densities) always leads.  With `normalize`
 * every column is divided by its zero-shift value.
 */
Report report(const icosa::Triacontahedron& window, const std::array<GoldenScalar, 3>& etas,
              const std::vector<LabeledShift>& shifts, Mode mode, double b5_angstrom,
              bool normalize = false);

/// Parses one labeled shift per line: "label n1 n2 n3 n4 n5 n6"; blank
/// lines and lines starting with '#' are skipped.
std::vector<LabeledShift> read_shift_file(std::istream& is);

void write_report_csv(std::ostream& os, const Report& report, int precision = 4);
/// Matrix CSV: header row of distances, one row per eta.
void write_surface_csv(std::ostream& os, const std::vector<GoldenScalar>& etas,
                       const std::vector<double>& distances,
                       const std::vector<std::vector<double>>& values, int precision = 4);
/// Circle-area glyph rows (one row per eta, one circle per shift).
void write_report_svg(std::ostream& os, const Report& report);

}  // namespace qcsurf::patterson
