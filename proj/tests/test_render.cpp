#include <doctest.h>

#include "lpm/errors.hpp"
#include "lpm/render.hpp"

using namespace lpm;

namespace {

Monomial mono(const PolymatroidInstance& inst, const char* text) {
    return Monomial::parse(text, inst.nvars());
}

size_t count_of(const std::string& haystack, const std::string& needle) {
    size_t count = 0, pos = 0;
    while ((pos = haystack.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

} // namespace

TEST_CASE("emit_dot") {
    PolymatroidInstance free12 = PolymatroidInstance::free_instance(1, 2);
    std::string dot = emit_dot(build_graph(free12, mono(free12, "x0^2*x1^2")), Convention::HI);
    CHECK(count_of(dot, "->") == 1);
    CHECK(count_of(dot, "peripheries=2") == 1);   // one sink
    CHECK(count_of(dot, "fillcolor=lightblue") == 1); // one thin vertex
    // the HI edge points from the split pair to the thin doubled pair
    CHECK(dot.find("\"{x0^2, x1^2}\"") != std::string::npos);

    PolymatroidInstance demo{BoundingPair::parse("NNENENEE", "EENENENN")};
    CHECK(emit_dot(build_graph(demo, mono(demo, "x0^8")), Convention::HI) == "digraph { }\n");

    PolymatroidInstance free54 = PolymatroidInstance::free_instance(5, 4);
    std::string chain = emit_dot(build_graph(free54, mono(free54, "x0^4*x4^4")), Convention::HI);
    CHECK(count_of(chain, "->") == 2);
}

TEST_CASE("render_paths_svg") {
    BoundingPair demo = BoundingPair::parse("NNENENEE", "EENENENN");
    std::vector<LatticePath> trio{demo.alpha(), demo.omega(), LatticePath::parse("ENNNEENE")};
    std::string svg = render_paths_svg(trio, demo);
    CHECK(count_of(svg, "<polyline") == 5); // two bounds + three paths
    CHECK(svg.find("width=\"144\"") != std::string::npos); // 2*24 margin + 4*24 grid
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);

    std::string single = render_paths_svg({demo.alpha()}, demo);
    CHECK(count_of(single, "<polyline") == 3);

    CHECK_THROWS_AS(render_paths_svg({LatticePath::parse("NE")}, demo), InputError);

    // determinism
    CHECK(render_paths_svg(trio, demo) == render_paths_svg(trio, demo));
}
