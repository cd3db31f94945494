#pragma once

#include "qcsurf/golden.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qcsurf::fibonacci {

/// Long / short interval of the 1D golden tiling.
enum class Tile { L, S };

char tile_char(Tile t);

/// Vertex configuration (previous tile, next tile) at a tiling vertex.
enum class VertexType { LS, LL, SL };

/**
 * Half-open acceptance interval (lo, hi] on the internal line.  The lower
 * endpoint is excluded and the upper included, which removes all coding
 * ambiguity at boundary points.
 */
struct Window1D {
    GoldenScalar lo;  // excluded
    GoldenScalar hi;  // included

    bool contains(const GoldenScalar& x) const { return x > lo && x <= hi; }
    GoldenScalar length() const { return hi - lo; }
};

/// Acceptance window (-1, tau] for the staircase vertex coordinate x_perp.
const Window1D& vertex_window();
/// Window (-tau^3/2, tau^3/2] of the midpoint-scaled coordinate y_perp.
const Window1D& midpoint_window();
/// Subwindow of vertex_window() selecting one vertex configuration.
const Window1D& vertex_type_window(VertexType type);

/// Classifies x_perp in (-1, tau]: LS on (-1,0], LL on (0,tau-1], SL above.
/// Throws std::domain_error outside the vertex window.
VertexType vertex_type(const GoldenScalar& x_perp);

/**
 * A point of the square lattice whose staircase projects to the tiling.
 * x_par = n1*tau + n2 and x_perp = -n1 + n2*tau; the staircase vertices are
 * enumerated by the single index n1 + n2.
 */
struct LatticePoint2 {
    long long n1 = 0;
    long long n2 = 0;

    GoldenScalar x_par() const { return GoldenScalar(n2, n1); }
    GoldenScalar x_perp() const { return GoldenScalar(-n1, n2); }
    long long step_index() const { return n1 + n2; }
};

/// Walker state: midpoint-scaled window coordinate plus step index.
struct State {
    GoldenScalar y_perp;
    long long step_index = 0;
};

struct StepResult {
    State next;
    Tile tile;
};

/**
 * One propagation step.  In the midpoint-scaled coordinate the walker moves
 * by -tau when that stays inside the window (emitting L, parallel advance
 * tau) and by +tau^2 otherwise (emitting S, parallel advance 1).  Exactly
 * one branch applies for every in-window state.
 */
StepResult step(const State& state);

/**
 * Full trace of `count` steps from y0: y holds count+1 window coordinates
 * (y[k] belongs to step index k), tiles the emitted L/S string of length
 * `count`.  Throws std::domain_error when y0 is outside the window.
 */
struct Trace {
    std::vector<GoldenScalar> y;
    std::string tiles;
};

Trace sequence(const GoldenScalar& y0, long long count);

/**
 * All start indices N within [0, horizon - pattern.size()] at which the
 * emitted tile string from y0 matches `pattern` (symbols L and S only).
 *
 * With `interior_only`, occurrences whose highest window coordinate sits
 * exactly on the included upper window edge are dropped: such a grazing
 * occurrence is destroyed by an arbitrarily small upward shift of the whole
 * line, so only the shift-stable occurrences remain.  (The lower edge is
 * excluded by the half-open convention and cannot be grazed.)
 */
std::vector<long long> find_string(const GoldenScalar& y0, std::string_view pattern,
                                   long long horizon = 10000, bool interior_only = false);

/**
 * Admissible vertical play of a pattern occurrence in window coordinates:
 * `up` (>= 0) is the distance of the occurrence's highest y value to the
 * included upper window edge, `down` (<= 0) the signed distance of its
 * lowest value to the excluded lower edge.  Shifting the whole line by any
 * amount in (down, up] keeps the occurrence inside the window.
 *
 * Throws std::domain_error when the pattern does not occur at `start`.
 */
struct WindowPlay {
    GoldenScalar up;
    GoldenScalar down;
};

WindowPlay shift_bounds_y(const GoldenScalar& y0, std::string_view pattern, long long start);

}  // namespace qcsurf::fibonacci
