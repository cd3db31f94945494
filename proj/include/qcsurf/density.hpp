#pragma once

#include "qcsurf/golden.hpp"

namespace qcsurf::density {

/**
 * Section area carrying its irrational unit symbolically: the value is
 * coeff * (tau+2)^(-3/2) in window units (tau*b5)^2.  Keeping the golden
 * coefficient exact means equality and ordering of areas never touch
 * floating point.
 */
struct AreaValue {
    GoldenScalar coeff;

    double value() const;
};

/// Breakpoints of the piecewise section-area profile:
/// tau^-1/(tau+2) < tau/(tau+2) < tau^2/(tau+2).
const GoldenScalar& breakpoint_prism();
const GoldenScalar& breakpoint_middle();
const GoldenScalar& breakpoint_fibonacci();

/**
 * Exact area of the window cross-section at height eta: a four-branch
 * piecewise quadratic in |eta|, constant 10*tau on the central decagonal
 * prism and vanishing at the five-fold apices |eta| = 1.  Branch selection
 * is by exact comparison; adjacent branches agree exactly at breakpoints.
 * Throws std::domain_error for |eta| > 1.
 */
AreaValue section_area(const GoldenScalar& eta);

/// Relative point density F(eta)/F(0) in [0, 1].
double relative_density(const GoldenScalar& eta);

/// Which decoration species a density value refers to.
enum class Provenance {
    vertex,
    bergman_face_center,
    bergman_face_vertex,
    cut_pentagon_center,
    cut_pentagon_vertex,
};

struct DensityValue {
    double value = 0;  // points per square angstrom
    Provenance kind = Provenance::vertex;
};

/// Density of tiling vertices in the densest planes, per square angstrom.
double max_vertex_density(double b5_angstrom);

/**
 * Absolute planar density for the given species.  Vertex points and pentagon
 * centers share one functional form; face-pentagon corners contribute five
 * points per pentagon, while the tau-scaled cut pentagons share corners and
 * carry the exact factor (7*tau+4)/tau^3 = tau+2 instead.
 */
DensityValue absolute_density(const GoldenScalar& eta, Provenance kind, double b5_angstrom);

/// Edge length of the equilateral-triangle tiling with the same point
/// density; throws std::domain_error for density <= 0.
double equivalent_triangle_edge(double density_per_angstrom2);

/// Measured density of pentagonal surface holes, for comparison reports
/// only (experimental value, not derived from the model).
inline constexpr double experimental_hole_density = 4.2e-3;

}  // namespace qcsurf::density
