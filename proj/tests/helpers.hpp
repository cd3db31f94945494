#pragma once

#include "qcsurf/golden.hpp"
#include "qcsurf/icosa.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace testutil {

using qcsurf::GoldenScalar;
using qcsurf::Rational;

inline Rational random_rational(std::mt19937_64& rng, long long max_abs = 1000,
                                long long max_den = 60) {
    std::uniform_int_distribution<long long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline GoldenScalar random_golden(std::mt19937_64& rng, long long max_abs = 1000) {
    return GoldenScalar(random_rational(rng, max_abs), random_rational(rng, max_abs));
}

struct MonteCarloArea {
    double estimate = 0;
    double sigma = 0;
};

/// Monte Carlo estimate of area(a intersect b), sampling the intersection
/// of the two bounding boxes (a superset of the overlap); deterministic for
/// a fixed seed.
inline MonteCarloArea mc_overlap_area(const std::vector<qcsurf::icosa::Vec2>& a,
                                      const std::vector<qcsurf::icosa::Vec2>& b,
                                      std::size_t samples, std::uint64_t seed) {
    using qcsurf::icosa::Vec2;
    auto inside = [](const std::vector<Vec2>& poly, const Vec2& p) {
        const std::size_t m = poly.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Vec2& u = poly[i];
            const Vec2& v = poly[(i + 1) % m];
            if ((v.x - u.x) * (p.y - u.y) - (v.y - u.y) * (p.x - u.x) < 0) return false;
        }
        return true;
    };
    auto bbox = [](const std::vector<Vec2>& poly, double& lo_x, double& hi_x, double& lo_y,
                   double& hi_y) {
        lo_x = hi_x = poly[0].x;
        lo_y = hi_y = poly[0].y;
        for (const Vec2& v : poly) {
            lo_x = std::min(lo_x, v.x);
            hi_x = std::max(hi_x, v.x);
            lo_y = std::min(lo_y, v.y);
            hi_y = std::max(hi_y, v.y);
        }
    };

    double alo_x, ahi_x, alo_y, ahi_y, blo_x, bhi_x, blo_y, bhi_y;
    bbox(a, alo_x, ahi_x, alo_y, ahi_y);
    bbox(b, blo_x, bhi_x, blo_y, bhi_y);
    const double lo_x = std::max(alo_x, blo_x), hi_x = std::min(ahi_x, bhi_x);
    const double lo_y = std::max(alo_y, blo_y), hi_y = std::min(ahi_y, bhi_y);
    if (lo_x >= hi_x || lo_y >= hi_y) return {};
    const double box_area = (hi_x - lo_x) * (hi_y - lo_y);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(lo_x, hi_x);
    std::uniform_real_distribution<double> uy(lo_y, hi_y);
    std::size_t hits = 0;
    for (std::size_t k = 0; k < samples; ++k) {
        const Vec2 p{ux(rng), uy(rng)};
        if (inside(a, p) && inside(b, p)) ++hits;
    }
    const double frac = static_cast<double>(hits) / static_cast<double>(samples);
    MonteCarloArea result;
    result.estimate = box_area * frac;
    result.sigma = box_area * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
    return result;
}

}  // namespace testutil
