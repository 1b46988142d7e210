#ifndef LPM_RENDER_HPP
#define LPM_RENDER_HPP

#include <string>
#include <vector>

#include "lpm/exchange.hpp"

namespace lpm {

/// DOT digraph of a fiber: node labels are canonical vertex text, edges
/// point from the order-larger endpoint to the smaller one, sinks get
/// doubled borders and the thin vertex is filled.
std::string emit_dot(const ExchangeGraph& g, Convention conv);

/// Standalone SVG of lattice paths on the bounding grid: unit grid lines,
/// the bounds drawn thin, the argument paths bold. 24 px per unit, fixed
/// palette, byte-stable output.
std::string render_paths_svg(const std::vector<LatticePath>& paths, const BoundingPair& bounds);

} // namespace lpm

#endif
