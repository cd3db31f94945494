#include "qcsurf/cli.hpp"

#include "qcsurf/density.hpp"
#include "qcsurf/fibonacci.hpp"
#include "qcsurf/golden.hpp"
#include "qcsurf/icosa.hpp"
#include "qcsurf/patterson.hpp"
#include "qcsurf/terraces.hpp"
#include "qcsurf/textio.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

namespace qcsurf::cli {

namespace {

struct Options {
    double b5 = 4.56;  // angstrom per five-fold unit
    std::string eta0 = "-1/(tau*(tau+2))";
    long long horizon = 24;
    int precision = 4;
    std::string format = "csv";
    std::string out = "-";

    std::string pattern = "LLSLLSLSLL";
    std::string eta = "0";
    std::string shifts_file;
    std::string mode = "exact";
    long long row = 16;
    std::string eta1, eta2, eta3;
    int steps = 100;
    int eta_steps = 40;
    int d_steps = 40;
    double d_max = 1.8;
    bool normalize = false;
    bool include_boundary = false;
};

void with_output(const std::string& path, const std::function<void(std::ostream&)>& emit) {
    if (path == "-") {
        emit(std::cout);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    emit(file);
}

std::string tiles_of(const std::vector<terraces::PlaneRecord>& records) {
    std::string tiles;
    for (const auto& rec : records)
        if (rec.tile_to_next) tiles.push_back(fibonacci::tile_char(*rec.tile_to_next));
    return tiles;
}

void cmd_table(const Options& opt) {
    const auto records = terraces::plane_sequence(parse_golden(opt.eta0), opt.horizon);
    with_output(opt.out, [&](std::ostream& os) {
        if (opt.format == "pretty") {
            os << "  N    eta1    eta2    eta3  F(eta1) F(eta2) F(eta3)\n";
            for (const auto& rec : records) {
                char buf[160];
                std::snprintf(buf, sizeof(buf), "%3lld %7.4f %7.4f %7.4f %8.4f %7.4f %7.4f\n",
                              rec.step_index, rec.eta1.to_double(), rec.eta2.to_double(),
                              rec.eta3.to_double(), rec.F1, rec.F2, rec.F3);
                os << buf;
            }
        } else {
            terraces::write_table_csv(os, records, opt.precision);
        }
    });
}

void cmd_density(const Options& opt) {
    if (opt.steps < 1) throw std::invalid_argument("density: --steps must be >= 1");

    // Exact rational grid over [0, 1] with the three profile breakpoints
    // inserted, so every branch boundary appears as a row.
    std::vector<GoldenScalar> grid;
    for (int k = 0; k <= opt.steps; ++k)
        grid.emplace_back(Rational(k, opt.steps));
    grid.push_back(density::breakpoint_prism());
    grid.push_back(density::breakpoint_middle());
    grid.push_back(density::breakpoint_fibonacci());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const double f_floor = density::section_area(density::breakpoint_fibonacci()).value();
    const double eta_max = density::breakpoint_fibonacci().to_double();

    with_output(opt.out, [&](std::ostream& os) {
        if (opt.format == "svg") {
            const double w = 480, h = 320, mx = 40, my = 20;
            const double fmax = density::section_area(GoldenScalar(0)).value();
            auto px = [&](double eta) { return mx + eta * (w - 2 * mx); };
            auto py = [&](double f) { return h - my - f / fmax * (h - 2 * my); };
            os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
               << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
               << "\" height=\"" << h << "\">\n";
            os << "  <polyline fill=\"none\" stroke=\"black\" points=\"";
            for (const auto& eta : grid)
                os << format_fixed(px(eta.to_double()), 2) << ','
                   << format_fixed(py(density::section_area(eta).value()), 2) << ' ';
            os << "\"/>\n";
            os << "  <line x1=\"" << format_fixed(px(0), 2) << "\" y1=\""
               << format_fixed(py(f_floor), 2) << "\" x2=\"" << format_fixed(px(1), 2)
               << "\" y2=\"" << format_fixed(py(f_floor), 2)
               << "\" stroke=\"gray\" stroke-dasharray=\"4\"/>\n";
            os << "  <line x1=\"" << format_fixed(px(eta_max), 2) << "\" y1=\""
               << format_fixed(py(0), 2) << "\" x2=\"" << format_fixed(px(eta_max), 2)
               << "\" y2=\"" << format_fixed(py(fmax), 2)
               << "\" stroke=\"gray\" stroke-dasharray=\"4\"/>\n";
            os << "</svg>\n";
            return;
        }
        os << "# marker,F_fibonacci_min," << format_fixed(f_floor, opt.precision) << '\n';
        os << "# marker,eta_fibonacci_max," << format_fixed(eta_max, opt.precision) << '\n';
        os << "eta,F,D_rel,D_abs\n";
        for (const auto& eta : grid) {
            os << format_fixed(eta.to_double(), opt.precision) << ','
               << format_fixed(density::section_area(eta).value(), opt.precision) << ','
               << format_fixed(density::relative_density(eta), opt.precision) << ','
               << format_fixed(
                      density::absolute_density(eta, density::Provenance::vertex, opt.b5)
                          .value,
                      opt.precision + 2)
               << '\n';
        }
    });
}

void cmd_search(const Options& opt) {
    const GoldenScalar eta0 = parse_golden(opt.eta0);
    const GoldenScalar y0 = terraces::y_of_eta(eta0);
    const auto matches =
        fibonacci::find_string(y0, opt.pattern, opt.horizon, !opt.include_boundary);

    with_output(opt.out, [&](std::ostream& os) {
        if (opt.format == "csv") {
            os << "start_index\n";
            for (long long n : matches) os << n << '\n';
            return;
        }
        os << "pattern " << opt.pattern << '\n';
        os << "horizon " << opt.horizon << '\n';
        os << "matches " << matches.size() << '\n';
        if (matches.empty()) {
            os << "first match: none\n";
            return;
        }
        os << "first match N=" << matches.front() << '\n';
        const auto bounds = terraces::string_shift_bounds(eta0, opt.pattern, matches.front());
        os << "admissible eta shift interval (" << format_fixed(bounds.down.to_double(), 5)
           << ", " << format_fixed(bounds.up.to_double(), 5) << "]\n";
    });
}

void cmd_spacing(const Options& opt) {
    const auto records = terraces::plane_sequence(parse_golden(opt.eta0), opt.horizon);
    const auto spacings = terraces::spacing_in_angstrom(records, opt.b5);
    const std::string tiles = tiles_of(records);

    with_output(opt.out, [&](std::ostream& os) {
        if (opt.format == "pretty") {
            double total = 0;
            for (double s : spacings) total += s;
            os << "tiles " << tiles << '\n';
            for (size_t k = 0; k < spacings.size(); ++k)
                os << "step " << k << " -> " << k + 1 << ": " << tiles[k] << "  "
                   << format_fixed(spacings[k], 2) << " A\n";
            os << "total " << format_fixed(total, 2) << " A\n";
            return;
        }
        os << "step,tile,spacing_angstrom\n";
        for (size_t k = 0; k < spacings.size(); ++k)
            os << k << ',' << tiles[k] << ',' << format_fixed(spacings[k], opt.precision)
               << '\n';
    });
}

void cmd_section(const Options& opt, const icosa::Triacontahedron& window) {
    const auto section = window.section(parse_golden(opt.eta));
    with_output(opt.out, [&](std::ostream& os) {
        if (opt.format == "svg")
            icosa::write_section_svg(os, section, opt.b5);
        else
            icosa::write_section_csv(os, section, opt.b5, opt.precision);
    });
}

std::array<GoldenScalar, 3> report_heights(const Options& opt) {
    if (!opt.eta1.empty() || !opt.eta2.empty() || !opt.eta3.empty()) {
        if (opt.eta1.empty() || opt.eta2.empty() || opt.eta3.empty())
            throw std::invalid_argument("patterson: give all of --eta1 --eta2 --eta3");
        return {parse_golden(opt.eta1), parse_golden(opt.eta2), parse_golden(opt.eta3)};
    }
    const auto records = terraces::plane_sequence(parse_golden(opt.eta0), opt.row);
    const auto& rec = records.at(static_cast<size_t>(opt.row));
    return {rec.eta1, rec.eta2, rec.eta3};
}

void cmd_patterson(const Options& opt, const icosa::Triacontahedron& window) {
    std::vector<patterson::LabeledShift> shifts;
    if (!opt.shifts_file.empty()) {
        std::ifstream file(opt.shifts_file);
        if (!file) throw std::invalid_argument("cannot open shift file: " + opt.shifts_file);
        shifts = patterson::read_shift_file(file);
    }
    const patterson::Mode mode =
        opt.mode == "circle" ? patterson::Mode::circle : patterson::Mode::exact_polygon;
    const auto rep =
        patterson::report(window, report_heights(opt), shifts, mode, opt.b5, opt.normalize);

    with_output(opt.out, [&](std::ostream& os) {
        if (opt.format == "svg")
            patterson::write_report_svg(os, rep);
        else
            patterson::write_report_csv(os, rep, opt.precision);
    });
}

void cmd_surface(const Options& opt) {
    if (opt.eta_steps < 1 || opt.d_steps < 1)
        throw std::invalid_argument("surface: step counts must be >= 1");
    std::vector<GoldenScalar> etas;
    for (int k = -opt.eta_steps; k <= opt.eta_steps; ++k)
        etas.emplace_back(Rational(k, opt.eta_steps));
    std::vector<double> distances;
    for (int k = 0; k <= opt.d_steps; ++k)
        distances.push_back(opt.d_max * k / opt.d_steps);

    const auto values = patterson::surface(etas, distances);
    with_output(opt.out, [&](std::ostream& os) {
        patterson::write_surface_csv(os, etas, distances, values, opt.precision);
    });
}

}  // namespace

int run(int argc, const char* const* argv) {
    Options opt;
    CLI::App app{"Cut-and-project analysis of five-fold atomic plane sequences in the "
                 "icosahedral tiling model: Fibonacci plane coding, window sections, "
                 "planar densities and autocorrelations."};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--b5", opt.b5, "five-fold unit length in angstrom")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--eta0", opt.eta0,
                   "starting height as an exact golden expression (floats rejected)")
        ->capture_default_str();
    app.add_option("--horizon", opt.horizon, "number of propagation steps")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--precision", opt.precision, "output decimal places")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "svg", "pretty"}))
        ->capture_default_str();
    app.add_option("--out", opt.out, "output file, - for stdout")->capture_default_str();

    auto* table = app.add_subcommand("table", "plane-sequence table (eta and area columns)");
    auto* dens = app.add_subcommand("density", "section-area and density profile over eta");
    dens->add_option("--steps", opt.steps, "uniform grid intervals on [0,1]")
        ->capture_default_str();
    auto* search = app.add_subcommand("search", "locate a tile string along the sequence");
    search->add_option("--pattern", opt.pattern, "tile string over L/S")
        ->capture_default_str();
    search->add_flag("--include-boundary", opt.include_boundary,
                     "also report occurrences grazing the window edge, which an "
                     "arbitrarily small shift removes");
    auto* spacing = app.add_subcommand("spacing", "inter-plane spacings in angstrom");
    auto* section = app.add_subcommand("section", "window cross-section polygon");
    section->add_option("--eta", opt.eta, "section height as a golden expression")
        ->capture_default_str();
    auto* patt = app.add_subcommand("patterson", "autocorrelation report for module shifts");
    patt->add_option("--shifts", opt.shifts_file,
                     "query file, one \"label n1 n2 n3 n4 n5 n6\" per line");
    patt->add_option("--mode", opt.mode, "overlap evaluation mode")
        ->check(CLI::IsMember({"exact", "circle"}))
        ->capture_default_str();
    patt->add_option("--row", opt.row, "table row supplying eta1..eta3")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    patt->add_option("--eta1", opt.eta1, "explicit first height");
    patt->add_option("--eta2", opt.eta2, "explicit second height");
    patt->add_option("--eta3", opt.eta3, "explicit third height");
    patt->add_flag("--normalize", opt.normalize, "divide each column by its zero-shift value");
    auto* surf = app.add_subcommand("surface", "autocorrelation surface over (eta, distance)");
    surf->add_option("--eta-steps", opt.eta_steps, "eta half-grid intervals")
        ->capture_default_str();
    surf->add_option("--d-steps", opt.d_steps, "distance grid intervals")
        ->capture_default_str();
    surf->add_option("--d-max", opt.d_max, "largest center distance (window units)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (table->parsed()) {
            cmd_table(opt);
        } else if (dens->parsed()) {
            cmd_density(opt);
        } else if (search->parsed()) {
            cmd_search(opt);
        } else if (spacing->parsed()) {
            cmd_spacing(opt);
        } else if (section->parsed() || patt->parsed()) {
            const icosa::Triacontahedron window;
            if (section->parsed())
                cmd_section(opt, window);
            else
                cmd_patterson(opt, window);
        } else if (surf->parsed()) {
            cmd_surface(opt);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

}  // namespace qcsurf::cli
