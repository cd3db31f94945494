#include "qcsurf/terraces.hpp"

#include "qcsurf/density.hpp"
#include "qcsurf/textio.hpp"

#include <numbers>
#include <ostream>
#include <stdexcept>

namespace qcsurf::terraces {

namespace {

const GoldenScalar& eta_window_half() {
    static const GoldenScalar v =
        GoldenScalar::tau_pow(2) / (GoldenScalar::tau() + GoldenScalar(2));
    return v;
}

const GoldenScalar& eta_window_size() {
    static const GoldenScalar v = GoldenScalar(2) * eta_window_half();
    return v;
}

}  // namespace

const GoldenScalar& eta_scale() {
    static const GoldenScalar v = GoldenScalar(2) * GoldenScalar::tau_pow(-1) /
                                  (GoldenScalar::tau() + GoldenScalar(2));
    return v;
}

const fibonacci::Window1D& eta_window() {
    static const fibonacci::Window1D w{-eta_window_half(), eta_window_half()};
    return w;
}

GoldenScalar eta_of_y(const GoldenScalar& y) {
    if (!fibonacci::midpoint_window().contains(y))
        throw std::domain_error("eta_of_y: coordinate outside the walker window");
    return eta_scale() * y;
}

GoldenScalar y_of_eta(const GoldenScalar& eta) {
    if (!eta_window().contains(eta))
        throw std::domain_error("y_of_eta: height outside the eta window");
    return eta / eta_scale();
}

const GoldenScalar& canonical_eta0() {
    static const GoldenScalar v =
        -(GoldenScalar::tau_pow(-1) / (GoldenScalar::tau() + GoldenScalar(2)));
    return v;
}

const GoldenScalar& bergman_shift() {
    static const GoldenScalar v = GoldenScalar(1) / (GoldenScalar::tau() + GoldenScalar(2));
    return v;
}

GoldenScalar wrap_eta(const GoldenScalar& eta, const GoldenScalar& delta) {
    GoldenScalar e = eta + delta;
    const fibonacci::Window1D& w = eta_window();
    while (e <= w.lo) e += eta_window_size();
    while (e > w.hi) e -= eta_window_size();
    return e;
}

std::vector<PlaneRecord> plane_sequence(const GoldenScalar& eta0, long long count) {
    const GoldenScalar y0 = y_of_eta(eta0);
    const fibonacci::Trace trace = fibonacci::sequence(y0, count);

    std::vector<PlaneRecord> records;
    records.reserve(trace.y.size());
    for (size_t k = 0; k < trace.y.size(); ++k) {
        PlaneRecord rec;
        rec.step_index = static_cast<long long>(k);
        rec.eta1 = eta_scale() * trace.y[k];
        const GoldenScalar raw2 = rec.eta1 - bergman_shift();
        const GoldenScalar raw3 = rec.eta1 + bergman_shift();
        rec.eta2 = wrap_eta(raw2, GoldenScalar(0));
        rec.eta3 = wrap_eta(raw3, GoldenScalar(0));
        rec.eta2_wrapped = rec.eta2 != raw2;
        rec.eta3_wrapped = rec.eta3 != raw3;
        rec.F1 = density::section_area(rec.eta1).value();
        rec.F2 = density::section_area(rec.eta2).value();
        rec.F3 = density::section_area(rec.eta3).value();
        if (k < trace.tiles.size())
            rec.tile_to_next =
                trace.tiles[k] == 'L' ? fibonacci::Tile::L : fibonacci::Tile::S;
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<OccupancyFlags> occupancy(const std::vector<PlaneRecord>& records, Model model) {
    std::vector<OccupancyFlags> flags;
    flags.reserve(records.size());
    for (const PlaneRecord& rec : records) {
        OccupancyFlags f;
        switch (model) {
            case Model::I:
                f.vertex_points = true;
                f.bergman_top_face = !rec.eta2_wrapped;
                f.bergman_top_cut = rec.eta2_wrapped;
                break;
            case Model::II:
                f.bergman_top_face = true;
                f.vertex_points = !rec.eta3_wrapped;
                f.bergman_top_cut = false;
                break;
            case Model::III:
                f.bergman_top_cut = true;
                f.vertex_points = rec.eta3_wrapped;
                f.bergman_top_face = false;
                break;
        }
        flags.push_back(f);
    }
    return flags;
}

std::vector<ExtraPlane> extra_planes(const std::vector<PlaneRecord>& records) {
    std::vector<ExtraPlane> extras;
    for (const PlaneRecord& rec : records) {
        const GoldenScalar mag = rec.eta1.abs();
        if (mag < density::breakpoint_middle() || mag > density::breakpoint_fibonacci())
            continue;
        ExtraPlane extra;
        extra.step_index = rec.step_index;
        extra.terrace = terrace_number(rec.step_index);
        if (rec.eta1.sign() > 0) {
            extra.sign = '-';
            extra.eta_extra = rec.eta1 - eta_window_size();
        } else {
            extra.sign = '+';
            extra.eta_extra = rec.eta1 + eta_window_size();
        }
        extras.push_back(std::move(extra));
    }
    return extras;
}

double tile_spacing_angstrom(fibonacci::Tile tile, double b5_angstrom) {
    const double tau = std::numbers::phi;
    const double unit = 2.0 * tau / (tau + 2.0) * b5_angstrom;
    return tile == fibonacci::Tile::S ? unit : unit * tau;
}

std::vector<double> spacing_in_angstrom(const std::vector<PlaneRecord>& records,
                                        double b5_angstrom) {
    // Gaps between consecutive records only; a trailing tile that leads out
    // of the given run does not contribute.
    std::vector<double> spacings;
    if (records.size() < 2) return spacings;
    for (size_t k = 0; k + 1 < records.size(); ++k)
        if (records[k].tile_to_next)
            spacings.push_back(tile_spacing_angstrom(*records[k].tile_to_next, b5_angstrom));
    return spacings;
}

ShiftBounds string_shift_bounds(const GoldenScalar& eta0, std::string_view pattern,
                                long long start) {
    const fibonacci::WindowPlay play =
        fibonacci::shift_bounds_y(y_of_eta(eta0), pattern, start);
    return {eta_scale() * play.up, eta_scale() * play.down};
}

void write_table_csv(std::ostream& os, const std::vector<PlaneRecord>& records,
                     int precision) {
    os << "N,eta1,eta2,eta3,F_eta1,F_eta2,F_eta3\n";
    for (const PlaneRecord& rec : records) {
        os << rec.step_index;
        for (const GoldenScalar* eta : {&rec.eta1, &rec.eta2, &rec.eta3})
            os << ',' << format_fixed(eta->to_double(), precision);
        for (double f : {rec.F1, rec.F2, rec.F3}) os << ',' << format_fixed(f, precision);
        os << '\n';
    }
}

}  // namespace qcsurf::terraces
