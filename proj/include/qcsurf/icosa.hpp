#pragma once

#include "qcsurf/golden.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace qcsurf::icosa {

/// Physical (parallel) or internal (perpendicular) invariant 3-space.
enum class Space { parallel, perpendicular };

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const;
    Vec3 normalized() const;
};

struct Vec2 {
    double x = 0, y = 0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const;
};

/**
 * Projections of the six hypercubic basis vectors, all of unit length in
 * five-fold units (b5) and pointing along five-fold axes.  e1 lies on the
 * third coordinate axis in both spaces; the ring vectors e2..e6 sit at
 * cos = +tau/(tau+2) from e1 in parallel space and -tau/(tau+2) in
 * perpendicular space, with successive azimuths 2*pi/5 and 4*pi/5.
 */
const std::array<Vec3, 6>& basis(Space space);

/// Integer point of the six-dimensional icosahedral module.  Even index sum
/// marks tiling-vertex candidates, odd index sum cluster-center candidates.
struct ModuleVector6 {
    std::array<long long, 6> n{};

    int parity() const;
    bool is_even() const { return parity() == 0; }
    bool is_zero() const;

    ModuleVector6 operator+(const ModuleVector6& o) const;
    ModuleVector6 operator-(const ModuleVector6& o) const;
    ModuleVector6 operator-() const;
    ModuleVector6 operator*(long long s) const;
    bool operator==(const ModuleVector6& o) const { return n == o.n; }
};

/// Pair of projections of one module point; the star map between them.
struct StarImage {
    Vec3 par;
    Vec3 perp;
};

StarImage star_map(const ModuleVector6& v);

/**
 * Planar cross-section of the triacontahedral window perpendicular to the
 * five-fold axis, at dimensionless height eta (physical height eta*tau*b5).
 * Vertices are ordered counterclockwise and expressed in window units of
 * tau*b5, in which the shoelace area of the section equals the closed-form
 * section-area profile F(eta).
 */
struct SectionPolygon {
    GoldenScalar eta;
    std::vector<Vec2> vertices;

    double area() const;
};

double polygon_area(const std::vector<Vec2>& polygon);

/// Clips a convex polygon to the half-plane a.p <= b (inclusive).
std::vector<Vec2> clip_half_plane(const std::vector<Vec2>& polygon, const Vec2& a, double b);

/// Intersection of two convex counterclockwise polygons.
std::vector<Vec2> convex_intersection(const std::vector<Vec2>& p, const std::vector<Vec2>& q);

/**
 * The rhombic triacontahedron acceptance window in perpendicular space,
 * built as the intersection of 30 half-spaces over the fifteen projected
 * two-fold axes with equal support distance, calibrated so the five-fold
 * vertices sit at radius tau (in b5 units).  Immutable after construction;
 * all queries are read-only.
 */
class Triacontahedron {
public:
    Triacontahedron();

    /// 30 outward unit face normals (15 two-fold axes, both signs).
    const std::vector<Vec3>& face_normals() const { return normals_; }
    /// Common support distance of all faces, b5 units.
    double support() const { return support_; }
    /// All 32 vertices: 12 five-fold type at radius tau, 20 three-fold type.
    const std::vector<Vec3>& vertices() const { return vertices_; }

    bool contains(const Vec3& p, double tol = 1e-9) const;

    /// Distance from the center to a five-fold vertex, b5 units.
    static double five_fold_vertex_radius();
    /// Half the thickness of the central decagonal prism of one five-fold
    /// axis, b5 units.
    static double prism_half_thickness();

    /**
     * Cross-section at height eta in [-1, 1] (exact comparison); |eta| = 1
     * degenerates to a single five-fold vertex of area zero.  Throws
     * std::domain_error for |eta| > 1.
     */
    SectionPolygon section(const GoldenScalar& eta) const;

    /**
     * The subset of the six five-fold axes whose central decagonal prism
     * contains p (1-based axis labels, prism boundaries included).  An empty
     * result means p lies in one of the five-fold vertex caps that the
     * prism-union approximation omits.  Throws std::domain_error when p is
     * outside the window.
     */
    std::vector<int> prism_membership(const Vec3& p_perp) const;

private:
    std::vector<Vec3> normals_;
    double support_;
    std::vector<Vec3> vertices_;
};

/// Section vertices as CSV (x,y in angstrom), one vertex per line.
void write_section_csv(std::ostream& os, const SectionPolygon& section, double b5_angstrom,
                       int precision = 4);
/// Section outline as a single-path SVG.
void write_section_svg(std::ostream& os, const SectionPolygon& section, double b5_angstrom);

}  // namespace qcsurf::icosa
