#include "qcsurf/icosa.hpp"

#include "qcsurf/textio.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace qcsurf::icosa {

namespace {

constexpr double kTau = std::numbers::phi;
constexpr double kGeomEps = 1e-12;

std::array<Vec3, 6> make_basis(Space space) {
    // cos(e1, ei) = tau/(tau+2) = 1/sqrt(5), with the sign flipped in the
    // perpendicular representation; ring azimuths advance by 2*pi/5 there
    // and by twice that here.
    const double polar = (space == Space::parallel ? 1.0 : -1.0) / std::sqrt(5.0);
    const double ring = std::sqrt(1.0 - polar * polar);
    const double azimuth_step =
        (space == Space::parallel ? 2.0 : 4.0) * std::numbers::pi / 5.0;

    std::array<Vec3, 6> e;
    e[0] = {0.0, 0.0, 1.0};
    for (int k = 0; k < 5; ++k) {
        const double a = azimuth_step * k;
        e[static_cast<size_t>(k) + 1] = {ring * std::cos(a), ring * std::sin(a), polar};
    }
    return e;
}

}  // namespace

double Vec3::norm() const { return std::sqrt(dot(*this)); }

Vec3 Vec3::normalized() const {
    const double n = norm();
    return {x / n, y / n, z / n};
}

double Vec2::norm() const { return std::sqrt(x * x + y * y); }

const std::array<Vec3, 6>& basis(Space space) {
    static const std::array<Vec3, 6> par = make_basis(Space::parallel);
    static const std::array<Vec3, 6> perp = make_basis(Space::perpendicular);
    return space == Space::parallel ? par : perp;
}

int ModuleVector6::parity() const {
    long long sum = 0;
    for (long long v : n) sum += v;
    return static_cast<int>(((sum % 2) + 2) % 2);
}

bool ModuleVector6::is_zero() const {
    return std::all_of(n.begin(), n.end(), [](long long v) { return v == 0; });
}

ModuleVector6 ModuleVector6::operator+(const ModuleVector6& o) const {
    ModuleVector6 r;
    for (size_t i = 0; i < 6; ++i) r.n[i] = n[i] + o.n[i];
    return r;
}

ModuleVector6 ModuleVector6::operator-(const ModuleVector6& o) const {
    ModuleVector6 r;
    for (size_t i = 0; i < 6; ++i) r.n[i] = n[i] - o.n[i];
    return r;
}

ModuleVector6 ModuleVector6::operator-() const {
    ModuleVector6 r;
    for (size_t i = 0; i < 6; ++i) r.n[i] = -n[i];
    return r;
}

ModuleVector6 ModuleVector6::operator*(long long s) const {
    ModuleVector6 r;
    for (size_t i = 0; i < 6; ++i) r.n[i] = n[i] * s;
    return r;
}

StarImage star_map(const ModuleVector6& v) {
    const auto& epar = basis(Space::parallel);
    const auto& eperp = basis(Space::perpendicular);
    StarImage image;
    for (size_t i = 0; i < 6; ++i) {
        image.par = image.par + epar[i] * static_cast<double>(v.n[i]);
        image.perp = image.perp + eperp[i] * static_cast<double>(v.n[i]);
    }
    return image;
}

double polygon_area(const std::vector<Vec2>& polygon) {
    if (polygon.size() < 3) return 0.0;
    double twice = 0.0;
    for (size_t i = 0; i < polygon.size(); ++i) {
        const Vec2& p = polygon[i];
        const Vec2& q = polygon[(i + 1) % polygon.size()];
        twice += p.cross(q);
    }
    return std::abs(twice) / 2.0;
}

std::vector<Vec2> clip_half_plane(const std::vector<Vec2>& polygon, const Vec2& a, double b) {
    std::vector<Vec2> out;
    const size_t m = polygon.size();
    if (m == 0) return out;
    out.reserve(m + 1);
    for (size_t i = 0; i < m; ++i) {
        const Vec2& p = polygon[i];
        const Vec2& q = polygon[(i + 1) % m];
        const double dp = a.x * p.x + a.y * p.y - b;
        const double dq = a.x * q.x + a.y * q.y - b;
        if (dp <= kGeomEps) out.push_back(p);
        if ((dp < -kGeomEps && dq > kGeomEps) || (dp > kGeomEps && dq < -kGeomEps)) {
            const double t = dp / (dp - dq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    // Clipping at a tangency can emit coincident vertices; merge them.
    std::vector<Vec2> dedup;
    dedup.reserve(out.size());
    for (const Vec2& v : out) {
        if (dedup.empty() || (v - dedup.back()).norm() > kGeomEps) dedup.push_back(v);
    }
    while (dedup.size() > 1 && (dedup.front() - dedup.back()).norm() <= kGeomEps)
        dedup.pop_back();
    return dedup;
}

std::vector<Vec2> convex_intersection(const std::vector<Vec2>& p, const std::vector<Vec2>& q) {
    if (p.size() < 3 || q.size() < 3) return {};
    std::vector<Vec2> result = p;
    for (size_t i = 0; i < q.size() && !result.empty(); ++i) {
        const Vec2& u = q[i];
        const Vec2& v = q[(i + 1) % q.size()];
        // Interior of the counterclockwise polygon q is the left side of
        // edge u->v: (v-u) x (x-u) >= 0, i.e. n.x <= n.u with n the outward
        // edge normal.
        const Vec2 normal{v.y - u.y, u.x - v.x};
        result = clip_half_plane(result, normal, normal.x * u.x + normal.y * u.y);
    }
    return result;
}

double SectionPolygon::area() const { return polygon_area(vertices); }

double Triacontahedron::five_fold_vertex_radius() { return kTau; }

double Triacontahedron::prism_half_thickness() { return 1.0 / (kTau + 2.0); }

Triacontahedron::Triacontahedron() {
    // Face axes: the fifteen distinct directions of the projected two-fold
    // module vectors ei +- ej.
    const auto& e = basis(Space::perpendicular);
    std::vector<Vec3> axes;
    for (size_t i = 0; i < 6; ++i) {
        for (size_t j = i + 1; j < 6; ++j) {
            for (double sgn : {1.0, -1.0}) {
                const Vec3 u = (e[i] + e[j] * sgn).normalized();
                const bool known = std::any_of(axes.begin(), axes.end(), [&](const Vec3& a) {
                    return (a - u).norm() < 1e-9 || (a + u).norm() < 1e-9;
                });
                if (!known) axes.push_back(u);
            }
        }
    }
    if (axes.size() != 15)
        throw std::logic_error("triacontahedron: expected 15 two-fold axes");

    normals_.reserve(30);
    for (const Vec3& a : axes) {
        normals_.push_back(a);
        normals_.push_back(-a);
    }

    // Support distance that puts the five-fold vertices at radius tau: the
    // faces around a five-fold axis have normals at cos = tau/sqrt(tau+2).
    support_ = kTau * kTau / std::sqrt(kTau + 2.0);

    // Vertices from all feasible triple-plane intersections.
    for (size_t i = 0; i < normals_.size(); ++i) {
        for (size_t j = i + 1; j < normals_.size(); ++j) {
            for (size_t k = j + 1; k < normals_.size(); ++k) {
                const Vec3& a = normals_[i];
                const Vec3& b = normals_[j];
                const Vec3& c = normals_[k];
                const double det = a.dot(b.cross(c));
                if (std::abs(det) < 1e-9) continue;
                const Vec3 p =
                    (b.cross(c) + c.cross(a) + a.cross(b)) * (support_ / det);
                if (!contains(p, 1e-9)) continue;
                const bool known =
                    std::any_of(vertices_.begin(), vertices_.end(),
                                [&](const Vec3& q) { return (p - q).norm() < 1e-7; });
                if (!known) vertices_.push_back(p);
            }
        }
    }
    if (vertices_.size() != 32)
        throw std::logic_error("triacontahedron: expected 32 vertices");
}

bool Triacontahedron::contains(const Vec3& p, double tol) const {
    return std::all_of(normals_.begin(), normals_.end(),
                       [&](const Vec3& n) { return n.dot(p) <= support_ + tol; });
}

SectionPolygon Triacontahedron::section(const GoldenScalar& eta) const {
    const int abs_cmp = (eta.abs() - GoldenScalar(1)).sign();
    if (abs_cmp > 0) throw std::domain_error("section: |eta| > 1, plane misses the window");
    if (abs_cmp == 0) return {eta, {Vec2{0.0, 0.0}}};  // five-fold apex, area 0

    const double z = kTau * eta.to_double();

    // Clip a generous bounding square against all face half-spaces
    // restricted to the plane of height z.
    std::vector<Vec2> poly{{-4.0, -4.0}, {4.0, -4.0}, {4.0, 4.0}, {-4.0, 4.0}};
    for (const Vec3& n : normals_) {
        poly = clip_half_plane(poly, Vec2{n.x, n.y}, support_ - z * n.z);
        if (poly.empty()) break;
    }

    SectionPolygon result{eta, std::move(poly)};
    for (Vec2& v : result.vertices) {
        v.x /= kTau;  // window units: five-fold vertex radius 1
        v.y /= kTau;
    }

    // The clipped square was counterclockwise and clipping preserves
    // orientation; assert rather than silently reorder.
    double twice = 0.0;
    for (size_t i = 0; i < result.vertices.size(); ++i)
        twice += result.vertices[i].cross(result.vertices[(i + 1) % result.vertices.size()]);
    if (result.vertices.size() >= 3 && twice < 0.0)
        std::reverse(result.vertices.begin(), result.vertices.end());
    return result;
}

std::vector<int> Triacontahedron::prism_membership(const Vec3& p_perp) const {
    if (!contains(p_perp, 1e-9))
        throw std::domain_error("prism_membership: point outside the window");

    const auto& axes = basis(Space::perpendicular);
    const double half = prism_half_thickness();
    std::vector<int> members;
    for (int i = 0; i < 6; ++i) {
        // Closed inclusion toward the prism at the cap boundary.
        if (std::abs(p_perp.dot(axes[static_cast<size_t>(i)])) <= half + kGeomEps)
            members.push_back(i + 1);
    }
    return members;
}

void write_section_csv(std::ostream& os, const SectionPolygon& section, double b5_angstrom,
                       int precision) {
    const double scale = kTau * b5_angstrom;  // window units -> angstrom
    os << "x_angstrom,y_angstrom\n";
    for (const Vec2& v : section.vertices)
        os << format_fixed(v.x * scale, precision) << ','
           << format_fixed(v.y * scale, precision) << '\n';
}

void write_section_svg(std::ostream& os, const SectionPolygon& section, double b5_angstrom) {
    const double scale = kTau * b5_angstrom;
    double extent = 1.0;
    for (const Vec2& v : section.vertices)
        extent = std::max({extent, std::abs(v.x * scale), std::abs(v.y * scale)});
    const double view = extent * 1.1;

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << format_fixed(-view, 3) << ' ' << format_fixed(-view, 3) << ' '
       << format_fixed(2 * view, 3) << ' ' << format_fixed(2 * view, 3) << "\">\n";
    os << "  <path d=\"";
    for (size_t i = 0; i < section.vertices.size(); ++i) {
        const Vec2& v = section.vertices[i];
        os << (i == 0 ? 'M' : 'L') << format_fixed(v.x * scale, 4) << ' '
           << format_fixed(-v.y * scale, 4);  // SVG y grows downward
    }
    os << "Z\" fill=\"none\" stroke=\"black\" stroke-width=\""
       << format_fixed(view / 200.0, 4) << "\"/>\n";
    os << "</svg>\n";
}

}  // namespace qcsurf::icosa
