#pragma once

#include "qcsurf/fibonacci.hpp"
#include "qcsurf/golden.hpp"

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace qcsurf::terraces {

/**
 * Height coding of planes perpendicular to a five-fold axis.  The walker
 * coordinate y of the one-dimensional Fibonacci system maps linearly to the
 * dimensionless section height eta = (2 tau^-1/(tau+2)) * y, so the plane
 * sequence inherits the Fibonacci propagation law.  eta ranges over the
 * half-open window (-tau^2/(tau+2), tau^2/(tau+2)].
 */
const GoldenScalar& eta_scale();
const fibonacci::Window1D& eta_window();

/// Exact height code of a window coordinate; throws std::domain_error when
/// y lies outside the walker window.
GoldenScalar eta_of_y(const GoldenScalar& y);
GoldenScalar y_of_eta(const GoldenScalar& eta);

/// Canonical starting height -tau^-1/(tau+2) (walker start y0 = -1/2).
const GoldenScalar& canonical_eta0();
/// Height offset 1/(tau+2) between vertex planes and the planes of Bergman
/// cluster centers touching them.
const GoldenScalar& bergman_shift();

/// eta + delta reduced modulo the window size 2 tau^2/(tau+2) into the
/// half-open eta window; exact.
GoldenScalar wrap_eta(const GoldenScalar& eta, const GoldenScalar& delta);

/**
 * One plane of the sequence: eta1 codes the reference species, eta2/eta3
 * the companion species displaced by -/+ the Bergman shift (wrapped into
 * the window when the raw shift leaves it; the wrapped flags record that).
 * F1..F3 are the section areas at the three heights, in units
 * (tau+2)^(-3/2).
 */
struct PlaneRecord {
    long long step_index = 0;
    GoldenScalar eta1, eta2, eta3;
    bool eta2_wrapped = false;
    bool eta3_wrapped = false;
    double F1 = 0, F2 = 0, F3 = 0;
    std::optional<fibonacci::Tile> tile_to_next;
};

/// count+1 records driven by the Fibonacci step law from eta0; throws
/// std::domain_error when eta0 is outside the eta window.
std::vector<PlaneRecord> plane_sequence(const GoldenScalar& eta0, long long count);

/**
 * The three correlation models for pentagon motifs within planes:
 *   I   - vertex planes host Bergman top faces where the eta2 shift needed
 *         no wrap; wrapped planes carry the larger cut pentagons instead.
 *   II  - Bergman-face planes host extra vertex points where the eta3 shift
 *         needed no wrap.
 *   III - cut-pentagon planes host vertex points only where eta3 wrapped.
 * A plane carrying top faces never carries cut pentagons and vice versa.
 */
enum class Model { I, II, III };

struct OccupancyFlags {
    bool vertex_points = false;
    bool bergman_top_face = false;
    bool bergman_top_cut = false;
};

std::vector<OccupancyFlags> occupancy(const std::vector<PlaneRecord>& records, Model model);

/**
 * Companion low-density planes with spacing scaled by tau^-1, present only
 * for planes with tau/(tau+2) <= |eta1| <= tau^2/(tau+2) (both bounds
 * included).  The companion height is displaced by the full window size
 * toward the window interior; sign '+' marks a companion above the plane
 * (eta1 < 0), '-' below.
 */
struct ExtraPlane {
    long long step_index = 0;
    int terrace = 0;  // step_index - 8; terraces 1..11 <-> indices 9..19
    char sign = '+';
    GoldenScalar eta_extra;
};

std::vector<ExtraPlane> extra_planes(const std::vector<PlaneRecord>& records);

/// Terrace label for a step index under the standard correspondence.
inline int terrace_number(long long step_index) { return static_cast<int>(step_index - 8); }

/// Perpendicular spacings: tile L -> 2 tau^2/(tau+2) b5, S -> 2 tau/(tau+2) b5.
double tile_spacing_angstrom(fibonacci::Tile tile, double b5_angstrom);
std::vector<double> spacing_in_angstrom(const std::vector<PlaneRecord>& records,
                                        double b5_angstrom);

/// Admissible vertical shift of the plane sequence keeping a pattern
/// occurrence intact, in eta units; up >= 0, down <= 0.
struct ShiftBounds {
    GoldenScalar up;
    GoldenScalar down;
};

ShiftBounds string_shift_bounds(const GoldenScalar& eta0, std::string_view pattern,
                                long long start);

/// CSV with columns N,eta1,eta2,eta3,F_eta1,F_eta2,F_eta3.
void write_table_csv(std::ostream& os, const std::vector<PlaneRecord>& records,
                     int precision = 4);

}  // namespace qcsurf::terraces
