#include "qcsurf/patterson.hpp"

#include "qcsurf/density.hpp"
#include "qcsurf/terraces.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace qcsurf;
using namespace qcsurf::patterson;
using icosa::ModuleVector6;

namespace {

const icosa::Triacontahedron& window() {
    static const icosa::Triacontahedron t;
    return t;
}

// In-plane module vectors (no axial component in either space), picked for
// their perpendicular-image lengths.
const ModuleVector6 kShort{{0, 0, -2, -1, 1, 2}};     // t = 0.248 window units
const ModuleVector6 kMid{{0, -1, 1, 1, 0, -1}};       // t = 0.402
const ModuleVector6 kNear{{0, 1, 0, -1, 0, 0}};       // t = 0.650
const ModuleVector6 kFar{{0, 1, -1, 0, 0, 0}};        // t = 1.051
const ModuleVector6 kDisjoint = kFar * 2;             // t = 2.103 > diameter

std::array<GoldenScalar, 3> row16_heights() {
    const auto records = terraces::plane_sequence(terraces::canonical_eta0(), 16);
    const auto& rec = records.back();
    return {rec.eta1, rec.eta2, rec.eta3};
}

double in_plane_distance(const ModuleVector6& shift) {
    const auto im = icosa::star_map(shift);
    return std::hypot(im.perp.x, im.perp.y) / std::numbers::phi;
}

}  // namespace

TEST_CASE("zero shift reproduces the section area") {
    for (const GoldenScalar& eta : row16_heights()) {
        const double overlap = overlap_exact(window(), eta, ModuleVector6{});
        CHECK(std::abs(overlap - density::section_area(eta).value()) < 1e-9);
    }
}

TEST_CASE("disjoint translates overlap nothing") {
    CHECK(overlap_exact(window(), GoldenScalar(0), kDisjoint) == 0.0);
}

TEST_CASE("shifts with an axial component are rejected") {
    CHECK_THROWS_AS(overlap_exact(window(), GoldenScalar(0), ModuleVector6{{1, 0, 0, 0, 0, 0}}),
                    std::domain_error);
    // Sum of ring indices nonzero tilts the parallel image as well.
    CHECK_THROWS_AS(overlap_exact(window(), GoldenScalar(0), ModuleVector6{{0, 1, 0, 0, 0, 0}}),
                    std::domain_error);
}

TEST_CASE("overlap symmetry and monotonicity along a ray") {
    const GoldenScalar eta(Rational(1, 10));
    for (const ModuleVector6& v : {kShort, kMid, kNear, kFar}) {
        CHECK(overlap_exact(window(), eta, v) ==
              doctest::Approx(overlap_exact(window(), eta, -v)).epsilon(1e-12));
    }
    double prev = overlap_exact(window(), eta, ModuleVector6{});
    for (long long k = 1; k <= 4; ++k) {
        const double cur = overlap_exact(window(), eta, kShort * k);
        CHECK(cur <= prev + 1e-12);
        prev = cur;
    }
}

TEST_CASE("circle approximation") {
    const double f0 = density::section_area(GoldenScalar(0)).value();
    const double r0 = std::sqrt(f0 / std::numbers::pi);

    SUBCASE("full overlap at zero distance") {
        CHECK(std::abs(overlap_circle(GoldenScalar(0), 0.0) - f0) < 1e-12);
    }
    SUBCASE("vanishes exactly at twice the radius") {
        CHECK(overlap_circle(GoldenScalar(0), 2.0 * r0) == 0.0);
        CHECK(overlap_circle(GoldenScalar(0), 2.0 * r0 + 0.5) == 0.0);
    }
    SUBCASE("lens value at one radius") {
        const double expected = r0 * r0 * (2.0 * std::numbers::pi / 3.0 - std::sqrt(3.0) / 2.0);
        CHECK(overlap_circle(GoldenScalar(0), r0) == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("non-increasing in the distance") {
        double prev = overlap_circle(GoldenScalar(Rational(1, 4)), 0.0);
        for (int k = 1; k <= 40; ++k) {
            const double cur = overlap_circle(GoldenScalar(Rational(1, 4)), 0.05 * k);
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
    }
    SUBCASE("negative distance is rejected") {
        CHECK_THROWS_AS(overlap_circle(GoldenScalar(0), -0.1), std::invalid_argument);
    }
    SUBCASE("stays within 15 percent of the exact decagon overlap up to one radius") {
        for (const ModuleVector6& v : {kShort, kMid, kNear}) {
            const double d = in_plane_distance(v);
            REQUIRE(d <= r0);
            const double exact = overlap_exact(window(), GoldenScalar(0), v);
            const double approx = overlap_circle(GoldenScalar(0), d);
            CHECK(std::abs(approx - exact) / exact < 0.15);
        }
    }
}

TEST_CASE("exact overlap matches a Monte Carlo oracle") {
    const GoldenScalar eta(0);
    const auto section = window().section(eta);
    int idx = 0;
    for (const ModuleVector6& v : {kShort, kMid, kNear, kFar}) {
        const auto im = icosa::star_map(v);
        std::vector<icosa::Vec2> shifted = section.vertices;
        for (auto& p : shifted) {
            p.x += im.perp.x / std::numbers::phi;
            p.y += im.perp.y / std::numbers::phi;
        }
        const auto mc = testutil::mc_overlap_area(section.vertices, shifted, 1000000,
                                                  0xC0FFEE + static_cast<unsigned>(idx++));
        const double exact = overlap_exact(window(), eta, v);
        CHECK(std::abs(exact - mc.estimate) < 3.0 * mc.sigma + 1e-9);
    }
}

TEST_CASE("surface grid") {
    std::vector<GoldenScalar> etas;
    for (int k = -8; k <= 8; ++k) etas.emplace_back(Rational(k, 8));
    std::vector<double> distances;
    for (int k = 0; k <= 10; ++k) distances.push_back(0.2 * k);

    const auto values = surface(etas, distances);
    REQUIRE(values.size() == etas.size());
    const double f0 = density::section_area(GoldenScalar(0)).value();
    for (size_t r = 0; r < etas.size(); ++r) {
        REQUIRE(values[r].size() == distances.size());
        // Zero-distance column is the section-area profile.
        CHECK(values[r][0] ==
              doctest::Approx(density::section_area(etas[r]).value()).epsilon(1e-12));
        for (size_t c = 0; c < distances.size(); ++c) {
            CHECK(values[r][c] >= 0.0);
            CHECK(values[r][c] <= f0 + 1e-12);
            // Even in the height.
            CHECK(values[r][c] ==
                  doctest::Approx(values[etas.size() - 1 - r][c]).epsilon(1e-12));
        }
    }

    std::ostringstream os;
    write_surface_csv(os, etas, distances, values, 4);
    CHECK(os.str().rfind("eta,0.0000,0.2000", 0) == 0);
}

TEST_CASE("report") {
    const auto heights = row16_heights();

    SUBCASE("empty shift list leaves only the densities row") {
        const Report rep = report(window(), heights, {}, Mode::exact_polygon, 4.56);
        REQUIRE(rep.rows.size() == 1);
        CHECK(rep.rows[0].label == "0");
        for (size_t k = 0; k < 3; ++k)
            CHECK(rep.rows[0].value[k] ==
                  doctest::Approx(density::section_area(heights[k]).value()).epsilon(1e-12));
        // At table row 16 the shifted-down column has the lowest density.
        CHECK(rep.rows[0].value[1] < rep.rows[0].value[0]);
        CHECK(rep.rows[0].value[1] < rep.rows[0].value[2]);
    }
    SUBCASE("parallel length is reported in angstrom") {
        const Report rep =
            report(window(), heights, {{"I'", kNear}}, Mode::exact_polygon, 4.56);
        REQUIRE(rep.rows.size() == 2);
        // tau-scaled short two-fold length: tau * 2/sqrt(tau+2) * 4.56.
        CHECK(rep.rows[1].v_par_angstrom == doctest::Approx(7.7579).epsilon(1e-4));

        std::ostringstream os;
        write_report_csv(os, rep, 4);
        CHECK(os.str().find("I',7.76,") != std::string::npos);
    }
    SUBCASE("normalization divides by the zero-shift column") {
        const Report rep =
            report(window(), heights, {{"a", kShort}, {"b", kFar}}, Mode::circle, 4.56, true);
        for (size_t k = 0; k < 3; ++k) CHECK(rep.rows[0].value[k] == 1.0);
        for (const ReportRow& row : rep.rows)
            for (double v : row.value) {
                CHECK(v >= 0.0);
                CHECK(v <= 1.0 + 1e-12);
            }
    }
    SUBCASE("svg glyphs") {
        const Report rep =
            report(window(), heights, {{"I", kShort}}, Mode::exact_polygon, 4.56);
        std::ostringstream os;
        write_report_svg(os, rep);
        CHECK(os.str().find("<circle") != std::string::npos);
    }
}

TEST_CASE("shift file parsing") {
    std::istringstream good("# comment\nI' 0 1 0 -1 0 0\n\nII 0 1 -1 0 0 0\n");
    const auto shifts = read_shift_file(good);
    REQUIRE(shifts.size() == 2);
    CHECK(shifts[0].label == "I'");
    CHECK(shifts[0].shift == kNear);
    CHECK(shifts[1].shift == kFar);

    std::istringstream bad("I 0 1 0\n");
    CHECK_THROWS_AS(read_shift_file(bad), std::invalid_argument);
}

TEST_CASE("query evaluation dispatches on mode") {
    const GoldenScalar eta(Rational(1, 10));
    const Query exact_q{eta, kMid, Mode::exact_polygon};
    const Query circle_q{eta, kMid, Mode::circle};
    CHECK(evaluate(window(), exact_q) ==
          doctest::Approx(overlap_exact(window(), eta, kMid)).epsilon(1e-12));
    CHECK(evaluate(window(), circle_q) ==
          doctest::Approx(overlap_circle(eta, in_plane_distance(kMid))).epsilon(1e-12));
}
