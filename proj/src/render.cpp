#include "lpm/render.hpp"

#include "lpm/errors.hpp"

namespace lpm {

std::string emit_dot(const ExchangeGraph& g, Convention conv) {
    if (g.vertices.empty()) return "digraph { }\n";

    // Sinks: no strictly smaller neighbor.
    const int nv = static_cast<int>(g.vertices.size());
    std::vector<char> has_smaller(static_cast<size_t>(nv), 0);
    std::vector<Ordering> dir(g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const auto& edge = g.edges[e];
        dir[e] = compare_l(g.vertices[static_cast<size_t>(edge.u)],
                           g.vertices[static_cast<size_t>(edge.v)], conv);
        if (dir[e] == Ordering::Greater) has_smaller[static_cast<size_t>(edge.u)] = 1;
        else has_smaller[static_cast<size_t>(edge.v)] = 1;
    }

    std::string out = "digraph {\n";
    out += "  rankdir=TB;\n";
    for (int u = 0; u < nv; ++u) {
        const Vertex& vert = g.vertices[static_cast<size_t>(u)];
        out += "  v" + std::to_string(u) + " [label=\"" + vert.vertex_str() + "\"";
        if (is_thin(vert).thin) out += ", style=filled, fillcolor=lightblue";
        if (!has_smaller[static_cast<size_t>(u)]) out += ", peripheries=2";
        out += "];\n";
    }
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const auto& edge = g.edges[e];
        int from = dir[e] == Ordering::Greater ? edge.u : edge.v;
        int to = dir[e] == Ordering::Greater ? edge.v : edge.u;
        out += "  v" + std::to_string(from) + " -> v" + std::to_string(to) + " [label=\"" +
               format_move(edge.move) + "\"];\n";
    }
    out += "}\n";
    return out;
}

namespace {

constexpr int kUnit = 24;
constexpr int kMargin = 24;

// Fixed palette for the bold argument paths, cycled.
const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string polyline(const LatticePath& p, int r, const std::string& stroke, int width) {
    std::string pts;
    int x = 0, y = 0;
    auto emit = [&](int px, int py) {
        if (!pts.empty()) pts += ' ';
        pts += std::to_string(kMargin + kUnit * px) + "," + std::to_string(kMargin + kUnit * (r - py));
    };
    emit(x, y);
    for (char step : p.word()) {
        if (step == 'N') ++y;
        else ++x;
        emit(x, y);
    }
    return "  <polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
           std::to_string(width) + "\" points=\"" + pts + "\"/>\n";
}

} // namespace

std::string render_paths_svg(const std::vector<LatticePath>& paths, const BoundingPair& bounds) {
    const int n = bounds.n();
    const int r = bounds.r();
    for (const LatticePath& p : paths) {
        if (p.n() != n || p.r() != r)
            throw InputError("path " + p.word() + " does not fit the (" + std::to_string(n) + ", " +
                             std::to_string(r) + ") grid");
    }
    const int w = 2 * kMargin + kUnit * n;
    const int h = 2 * kMargin + kUnit * r;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
                      std::to_string(w) + "\" height=\"" + std::to_string(h) + "\">\n";
    for (int x = 0; x <= n; ++x) {
        int px = kMargin + kUnit * x;
        out += "  <line x1=\"" + std::to_string(px) + "\" y1=\"" + std::to_string(kMargin) +
               "\" x2=\"" + std::to_string(px) + "\" y2=\"" + std::to_string(kMargin + kUnit * r) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    }
    for (int y = 0; y <= r; ++y) {
        int py = kMargin + kUnit * y;
        out += "  <line x1=\"" + std::to_string(kMargin) + "\" y1=\"" + std::to_string(py) +
               "\" x2=\"" + std::to_string(kMargin + kUnit * n) + "\" y2=\"" + std::to_string(py) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    }
    out += polyline(bounds.alpha(), r, "#999999", 2);
    out += polyline(bounds.omega(), r, "#999999", 2);
    for (size_t i = 0; i < paths.size(); ++i)
        out += polyline(paths[i], r, kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))], 4);
    out += "</svg>\n";
    return out;
}

} // namespace lpm
