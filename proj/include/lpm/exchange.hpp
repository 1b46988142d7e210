#ifndef LPM_EXCHANGE_HPP
#define LPM_EXCHANGE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lpm/order.hpp"
#include "lpm/polymatroid.hpp"

namespace lpm {

/// A fiber vertex: a multiset of t bases whose product is mu. Multiset
/// semantics matter — the thin vertex can repeat a basis — so vertices
/// share the canonical-sorted representation of base ring monomials.
using Vertex = BaseRingMonomial;

/// One symmetric exchange between factor slots p < q (0-based positions in
/// the source vertex's canonical order): factor p becomes (x_j/x_i) m_p,
/// factor q becomes (x_i/x_j) m_q.
struct Move {
    int p;
    int q;
    int i;
    int j;
    bool operator==(const Move&) const = default;
};

/// "swap(i=0, j=4) on factors (1,2)" — slots printed 1-based.
std::string format_move(const Move& m);

/// "{x0^2*x4^2, x0^2*x4^2}" text form (factors in canonical order).
std::vector<LatticePath> parse_vertex(const PolymatroidInstance& inst, std::string_view text);

/// All multisets of deg(mu)/rank bases with product mu, duplicate-free, in
/// the deterministic order induced by nondecreasing basis indices.
/// Recursive search with monomial-division pruning.
std::vector<Vertex> fiber_vertices(const PolymatroidInstance& inst, const Monomial& mu);

struct NeighborEntry {
    Vertex vertex;
    Move move;
};

/// All distinct vertices reachable by one symmetric exchange, excluding
/// moves that reproduce V itself; each carries the first move (in slot /
/// index order) that produces it.
std::vector<NeighborEntry> neighbors(const PolymatroidInstance& inst, const Vertex& V);

struct ThinReport {
    bool thin = false;
    std::string witness; ///< first violating pair or east index when not thin
};

/// Thin: all factor pairs are comparable under >= and every east step's
/// heights span at most one unit across the factors.
ThinReport is_thin(const Vertex& V);

struct DescentOutcome {
    bool thin = false;      ///< V is thin; no move proposed
    std::optional<Vertex> next;
    Move move{};
    int case_used = 0;      ///< 1 = wide gap, 2 = crossing pair
    Ordering comparison = Ordering::Equal; ///< compare_l(V, next) so callers can audit descent
};

/// Executes the two-case descent construction on a non-thin vertex. The
/// proposed neighbor always exists; whether the order actually decreases
/// is reported, never assumed.
DescentOutcome descent_move(const PolymatroidInstance& inst, const Vertex& V, Convention conv);

/// Column-by-column construction of the unique thin candidate for the
/// fiber of mu with t factors: at each column the extra north steps are
/// forced onto specific factors by the two-adjacent-levels state. Returns
/// the vertex, or nullopt when no factorization exists.
std::optional<Vertex> greedy_thin_vertex(const PolymatroidInstance& inst, const Monomial& mu, int t);

struct ExchangeGraph {
    Monomial mu;
    std::vector<Vertex> vertices;
    struct Edge {
        int u;
        int v;
        Move move; ///< as performed from vertices[u]
    };
    std::vector<Edge> edges;
};

ExchangeGraph build_graph(const PolymatroidInstance& inst, const Monomial& mu);

struct ConnectivityReport {
    bool connected = true;
    int components = 0;
};

/// Breadth-first component count; the empty graph counts as connected.
ConnectivityReport is_connected(const ExchangeGraph& g);

struct SinkWalk {
    Vertex sink;
    std::vector<std::pair<Move, Vertex>> steps;
};

/// Walks to a vertex with no strictly order-smaller neighbor, preferring
/// the descent construction's proposal whenever it actually descends and
/// falling back to the order-smallest neighbor otherwise.
SinkWalk reduce_to_sink(const PolymatroidInstance& inst, const Vertex& V, Convention conv);

struct FiberWalk {
    std::vector<Vertex> vertices; ///< walk endpoints included; moves.size() + 1 entries
    std::vector<Move> moves;
};

/// A walk from V to W through the fiber: both are reduced to their sinks
/// and the walks spliced; if the sinks differ a breadth-first search is
/// used. Throws InvariantError("disconnected fiber...") when no walk
/// exists, i.e. the fiber graph is disconnected.
FiberWalk connect_path(const PolymatroidInstance& inst, const Vertex& V, const Vertex& W,
                       Convention conv);

/// Same, but routed by breadth-first search on a prebuilt graph.
FiberWalk connect_path(const PolymatroidInstance& inst, const ExchangeGraph& g, const Vertex& V,
                       const Vertex& W);

} // namespace lpm

#endif
