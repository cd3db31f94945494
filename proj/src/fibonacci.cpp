#include "qcsurf/fibonacci.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcsurf::fibonacci {

char tile_char(Tile t) { return t == Tile::L ? 'L' : 'S'; }

const Window1D& vertex_window() {
    static const Window1D w{GoldenScalar(-1), GoldenScalar::tau()};
    return w;
}

const Window1D& midpoint_window() {
    static const Window1D w = [] {
        const GoldenScalar half_width = GoldenScalar::tau_pow(3) / GoldenScalar(2);
        return Window1D{-half_width, half_width};
    }();
    return w;
}

const Window1D& vertex_type_window(VertexType type) {
    static const Window1D ls{GoldenScalar(-1), GoldenScalar(0)};
    static const Window1D ll{GoldenScalar(0), GoldenScalar::tau() - GoldenScalar(1)};
    static const Window1D sl{GoldenScalar::tau() - GoldenScalar(1), GoldenScalar::tau()};
    switch (type) {
        case VertexType::LS: return ls;
        case VertexType::LL: return ll;
        case VertexType::SL: return sl;
    }
    throw std::logic_error("unreachable");
}

VertexType vertex_type(const GoldenScalar& x_perp) {
    if (!vertex_window().contains(x_perp))
        throw std::domain_error("vertex_type: coordinate outside the vertex window");
    if (vertex_type_window(VertexType::LS).contains(x_perp)) return VertexType::LS;
    if (vertex_type_window(VertexType::LL).contains(x_perp)) return VertexType::LL;
    return VertexType::SL;
}

StepResult step(const State& state) {
    static const GoldenScalar tau = GoldenScalar::tau();
    static const GoldenScalar tau_sq = GoldenScalar::tau_pow(2);
    const Window1D& window = midpoint_window();

    GoldenScalar down = state.y_perp - tau;
    if (window.contains(down)) return {{std::move(down), state.step_index + 1}, Tile::L};

    GoldenScalar up = state.y_perp + tau_sq;
    if (!window.contains(up))
        throw std::domain_error("step: state outside the acceptance window");
    return {{std::move(up), state.step_index + 1}, Tile::S};
}

Trace sequence(const GoldenScalar& y0, long long count) {
    if (!midpoint_window().contains(y0))
        throw std::domain_error("sequence: initial coordinate outside the window");
    if (count < 0) throw std::invalid_argument("sequence: negative step count");

    Trace trace;
    trace.y.reserve(static_cast<size_t>(count) + 1);
    trace.tiles.reserve(static_cast<size_t>(count));
    State state{y0, 0};
    trace.y.push_back(state.y_perp);
    for (long long k = 0; k < count; ++k) {
        StepResult r = step(state);
        trace.tiles.push_back(tile_char(r.tile));
        state = std::move(r.next);
        trace.y.push_back(state.y_perp);
    }
    return trace;
}

namespace {

void check_pattern(std::string_view pattern) {
    if (pattern.empty()) throw std::invalid_argument("pattern must be nonempty");
    for (char c : pattern)
        if (c != 'L' && c != 'S')
            throw std::invalid_argument("pattern may contain only 'L' and 'S'");
}

}  // namespace

std::vector<long long> find_string(const GoldenScalar& y0, std::string_view pattern,
                                   long long horizon, bool interior_only) {
    check_pattern(pattern);
    if (horizon < 0) throw std::invalid_argument("find_string: negative horizon");

    std::vector<long long> matches;
    if (static_cast<long long>(pattern.size()) > horizon) return matches;

    const Trace trace = sequence(y0, horizon);
    const GoldenScalar& top = midpoint_window().hi;
    for (size_t n = 0; n + pattern.size() <= trace.tiles.size(); ++n) {
        if (std::string_view(trace.tiles).substr(n, pattern.size()) != pattern) continue;
        if (interior_only) {
            bool grazes = false;
            for (size_t k = n; k <= n + pattern.size() && !grazes; ++k)
                grazes = trace.y[k] == top;
            if (grazes) continue;
        }
        matches.push_back(static_cast<long long>(n));
    }
    return matches;
}

WindowPlay shift_bounds_y(const GoldenScalar& y0, std::string_view pattern, long long start) {
    check_pattern(pattern);
    if (start < 0) throw std::invalid_argument("shift_bounds_y: negative start index");

    const long long len = static_cast<long long>(pattern.size());
    const Trace trace = sequence(y0, start + len);
    if (std::string_view(trace.tiles).substr(static_cast<size_t>(start)) != pattern)
        throw std::domain_error("shift_bounds_y: pattern does not occur at the given index");

    // The occurrence spans the len+1 vertices start .. start+len; its extreme
    // window coordinates bound the admissible vertical shift.
    GoldenScalar hi = trace.y[static_cast<size_t>(start)];
    GoldenScalar lo = hi;
    for (long long k = start + 1; k <= start + len; ++k) {
        const GoldenScalar& y = trace.y[static_cast<size_t>(k)];
        if (y > hi) hi = y;
        if (y < lo) lo = y;
    }
    const Window1D& window = midpoint_window();
    return {window.hi - hi, window.lo - lo};
}

}  // namespace qcsurf::fibonacci
