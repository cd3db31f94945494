#include "qcsurf/fibonacci.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace qcsurf;
using namespace qcsurf::fibonacci;

namespace {

const GoldenScalar tau = GoldenScalar::tau();
const GoldenScalar half(Rational(1, 2));

// Window coordinates selected directly from a square-lattice scan: shift the
// lattice projections by the initial coordinate, keep the ones inside the
// vertex window, order them by the parallel coordinate, and read the tile
// lengths off the gaps.  Independent of the step recursion.
std::string brute_force_tiles(const GoldenScalar& y0, int steps) {
    const GoldenScalar x0 = (y0 + half) / tau;
    const Window1D& window = vertex_window();

    std::vector<std::pair<GoldenScalar, GoldenScalar>> selected;  // (x_par, x_perp)
    const int range = steps;
    for (int n1 = -2; n1 <= range; ++n1) {
        for (int n2 = -2; n2 <= range; ++n2) {
            const LatticePoint2 p{n1, n2};
            const GoldenScalar x_perp = x0 + p.x_perp();
            if (window.contains(x_perp)) selected.emplace_back(p.x_par(), x_perp);
        }
    }
    std::sort(selected.begin(), selected.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // Start from the origin's image and read forward.
    const auto origin = std::find_if(selected.begin(), selected.end(),
                                     [&](const auto& p) { return p.first == GoldenScalar(0); });
    REQUIRE(origin != selected.end());

    std::string tiles;
    for (auto it = origin; tiles.size() < static_cast<size_t>(steps); ++it) {
        const auto next = std::next(it);
        REQUIRE(next != selected.end());
        const GoldenScalar gap = next->first - it->first;
        if (gap == tau)
            tiles.push_back('L');
        else if (gap == GoldenScalar(1))
            tiles.push_back('S');
        else
            FAIL("unexpected gap in lattice scan");
    }
    return tiles;
}

}  // namespace

TEST_CASE("vertex type subwindows") {
    CHECK(vertex_type(GoldenScalar(Rational(-1, 2))) == VertexType::LS);
    CHECK(vertex_type(tau - GoldenScalar(1)) == VertexType::LL);  // boundary included
    CHECK(vertex_type(GoldenScalar(1)) == VertexType::SL);
    CHECK(vertex_type(GoldenScalar(0)) == VertexType::LS);  // half-open at 0
    CHECK(vertex_type(tau) == VertexType::SL);
    CHECK_THROWS_AS(vertex_type(GoldenScalar(-1)), std::domain_error);
    CHECK_THROWS_AS(vertex_type(tau + GoldenScalar(1)), std::domain_error);
}

TEST_CASE("single step branches") {
    const Window1D& w = midpoint_window();

    SUBCASE("short step from the lower subwindow edge") {
        const StepResult r = step({-half, 0});
        CHECK(r.tile == Tile::S);
        CHECK(r.next.y_perp == tau + half);
        CHECK(r.next.y_perp == w.hi);  // lands exactly on the included edge
        CHECK(r.next.step_index == 1);
    }
    SUBCASE("long step") {
        const StepResult r = step({half, 0});
        CHECK(r.tile == Tile::L);
        CHECK(r.next.y_perp == half - tau);
    }
    SUBCASE("long step from the included upper boundary") {
        const StepResult r = step({w.hi, 0});
        CHECK(r.tile == Tile::L);
        CHECK(r.next.y_perp == w.hi - tau);
    }
}

TEST_CASE("sequence basics") {
    SUBCASE("count zero") {
        const Trace t = sequence(GoldenScalar(0), 0);
        CHECK(t.y.size() == 1);
        CHECK(t.tiles.empty());
    }
    SUBCASE("canonical start emits the known 24-step string") {
        const Trace t = sequence(-half, 24);
        CHECK(t.tiles == "SLLSLLSLSLLSLLSLSLLSLSLL");
        CHECK(t.y[1] == tau + half);
        CHECK(t.y[2] == half);
    }
    SUBCASE("start outside the window") {
        CHECK_THROWS_AS(sequence(GoldenScalar(3), 1), std::domain_error);
    }
}

TEST_CASE("find_string") {
    SUBCASE("experimental terrace string") {
        const auto stable = find_string(-half, "LLSLLSLSLL", 24, true);
        REQUIRE(stable.size() == 1);
        CHECK(stable.front() == 9);

        // The raw scan also sees a grazing occurrence at N=1 whose highest
        // coordinate sits exactly on the included window edge.
        const auto raw = find_string(-half, "LLSLLSLSLL", 24);
        CHECK(raw == std::vector<long long>{1, 9});
    }
    SUBCASE("single tile") {
        CHECK(find_string(-half, "L", 3) == std::vector<long long>{1, 2});
    }
    SUBCASE("pattern longer than horizon") {
        CHECK(find_string(-half, "LLSLLSLSLL", 5).empty());
    }
    SUBCASE("invalid pattern") {
        CHECK_THROWS_AS(find_string(-half, "LXL", 10), std::invalid_argument);
        CHECK_THROWS_AS(find_string(-half, "", 10), std::invalid_argument);
    }
}

TEST_CASE("window play of the terrace string occurrence") {
    const WindowPlay play = shift_bounds_y(-half, "LLSLLSLSLL", 9);
    // Distances of the occurrence extremes to the window edges.
    CHECK(play.up == GoldenScalar(2) * tau - GoldenScalar(3));
    CHECK(play.down == GoldenScalar(3) * tau - GoldenScalar(5));
    CHECK(play.up.to_double() == doctest::Approx(0.2360679).epsilon(1e-6));
    CHECK(play.down.to_double() == doctest::Approx(-0.1458980).epsilon(1e-6));

    CHECK_THROWS_AS(shift_bounds_y(-half, "LLSLLSLSLL", 2), std::domain_error);
}

TEST_CASE("window invariance over long runs") {
    const Trace t = sequence(-half, 10000);
    const Window1D& w = midpoint_window();
    for (const GoldenScalar& y : t.y) REQUIRE(w.contains(y));
}

TEST_CASE("step recursion matches the lattice-scan oracle") {
    for (const GoldenScalar& y0 :
         {-half, GoldenScalar(0), GoldenScalar(Rational(7, 13), Rational(-1, 9))}) {
        const Trace t = sequence(y0, 200);
        CHECK(t.tiles == brute_force_tiles(y0, 200));
    }
}

TEST_CASE("LL vertices form a tau^3-scaled golden word") {
    const GoldenScalar y0(Rational(1, 5), Rational(1, 23));
    const Trace t = sequence(y0, 10000);
    const Window1D& ll = vertex_type_window(VertexType::LL);
    // In midpoint-scaled coordinates the LL subwindow is (-1/2, 1/2].
    const Window1D ll_mid{GoldenScalar(Rational(-1, 2)), GoldenScalar(Rational(1, 2))};

    std::vector<size_t> positions;
    for (size_t k = 0; k < t.y.size(); ++k) {
        const GoldenScalar x = (t.y[k] + half) / tau;
        const bool in_ll = ll.contains(x);
        CHECK(in_ll == ll_mid.contains(t.y[k]));
        if (in_ll) positions.push_back(k);
    }
    REQUIRE(positions.size() > 2000);

    // Gaps between consecutive LL vertices span 3 or 5 steps, and the gap
    // word follows its own exact two-interval exchange on (-1/2, 1/2]:
    // subtract tau^-1 when that stays inside (3-step gap), else add tau^-2.
    const GoldenScalar inv_tau = GoldenScalar::tau_pow(-1);
    const GoldenScalar inv_tau2 = GoldenScalar::tau_pow(-2);
    size_t gaps3 = 0, gaps5 = 0;
    for (size_t i = 0; i + 1 < positions.size(); ++i) {
        const size_t gap = positions[i + 1] - positions[i];
        const GoldenScalar& z = t.y[positions[i]];
        const GoldenScalar& z_next = t.y[positions[i + 1]];
        if (gap == 3) {
            ++gaps3;
            REQUIRE(z_next == z - inv_tau);
        } else if (gap == 5) {
            ++gaps5;
            REQUIRE(z_next == z + inv_tau2);
        } else {
            FAIL("gap between LL vertices must be 3 or 5 steps, got " << gap);
        }
    }
    // Long-to-short gap ratio approaches tau.
    const double ratio = static_cast<double>(gaps5) / static_cast<double>(gaps3);
    CHECK(ratio == doctest::Approx(1.618).epsilon(0.02));
}

TEST_CASE("tile frequency approaches the golden ratio") {
    const Trace t = sequence(GoldenScalar(Rational(1, 3)), 10000);
    const auto longs = std::count(t.tiles.begin(), t.tiles.end(), 'L');
    const auto shorts = std::count(t.tiles.begin(), t.tiles.end(), 'S');
    CHECK(static_cast<double>(longs) / static_cast<double>(shorts) ==
          doctest::Approx(1.6180339887).epsilon(0.01));
}
