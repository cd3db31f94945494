#include "qcsurf/density.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcsurf::density {

namespace {

const GoldenScalar& tau_plus_2() {
    static const GoldenScalar v = GoldenScalar::tau() + GoldenScalar(2);
    return v;
}

double area_unit() {
    static const double u = std::pow(std::numbers::phi + 2.0, -1.5);
    return u;
}

}  // namespace

double AreaValue::value() const { return coeff.to_double() * area_unit(); }

const GoldenScalar& breakpoint_prism() {
    static const GoldenScalar v = GoldenScalar::tau_pow(-1) / tau_plus_2();
    return v;
}

const GoldenScalar& breakpoint_middle() {
    static const GoldenScalar v = GoldenScalar::tau() / tau_plus_2();
    return v;
}

const GoldenScalar& breakpoint_fibonacci() {
    static const GoldenScalar v = GoldenScalar::tau_pow(2) / tau_plus_2();
    return v;
}

AreaValue section_area(const GoldenScalar& eta) {
    static const GoldenScalar ten_tau = GoldenScalar(10) * GoldenScalar::tau();
    // 5 (tau+2)^2 / tau and 5 (tau+2)^2
    static const GoldenScalar q5 =
        GoldenScalar(5) * tau_plus_2() * tau_plus_2() / GoldenScalar::tau();
    static const GoldenScalar r5 = GoldenScalar(5) * tau_plus_2() * tau_plus_2();

    const GoldenScalar e = eta.abs();
    if (e <= breakpoint_prism()) return {ten_tau};
    if (e <= breakpoint_middle()) {
        const GoldenScalar d = e - breakpoint_prism();
        return {ten_tau - q5 * d * d};
    }
    if (e <= breakpoint_fibonacci()) {
        const GoldenScalar rise = breakpoint_fibonacci() - e;
        const GoldenScalar run = e - breakpoint_middle();
        return {GoldenScalar(10) + q5 * rise * rise - r5 * run * run};
    }
    if (e <= GoldenScalar(1)) {
        const GoldenScalar d = GoldenScalar(1) - e;
        return {r5 * d * d};
    }
    throw std::domain_error("section_area: |eta| > 1");
}

double relative_density(const GoldenScalar& eta) {
    static const GoldenScalar full = GoldenScalar(10) * GoldenScalar::tau();
    return (section_area(eta).coeff / full).to_double();
}

double max_vertex_density(double b5_angstrom) {
    // Equals s^-2 * 2 tau^2 / (tau+2)^(3/2) with s the tau-scaled short
    // edge 2 tau / sqrt(tau+2) * b5; the s-form cancels to this.
    return 1.0 / (2.0 * std::sqrt(std::numbers::phi + 2.0) * b5_angstrom * b5_angstrom);
}

DensityValue absolute_density(const GoldenScalar& eta, Provenance kind, double b5_angstrom) {
    double v = max_vertex_density(b5_angstrom) * relative_density(eta);
    switch (kind) {
        case Provenance::vertex:
        case Provenance::bergman_face_center:
        case Provenance::cut_pentagon_center:
            break;
        case Provenance::bergman_face_vertex:
            v *= 5.0;
            break;
        case Provenance::cut_pentagon_vertex:
            // (7 tau + 4) / tau^3 = tau + 2 exactly
            v *= std::numbers::phi + 2.0;
            break;
    }
    return {v, kind};
}

double equivalent_triangle_edge(double density_per_angstrom2) {
    if (!(density_per_angstrom2 > 0.0))
        throw std::domain_error("equivalent_triangle_edge: density must be positive");
    return std::sqrt(2.0 / (std::sqrt(3.0) * density_per_angstrom2));
}

}  // namespace qcsurf::density
