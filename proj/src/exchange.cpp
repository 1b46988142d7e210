#include "lpm/exchange.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "lpm/errors.hpp"

namespace lpm {

std::string format_move(const Move& m) {
    return "swap(i=" + std::to_string(m.i) + ", j=" + std::to_string(m.j) + ") on factors (" +
           std::to_string(m.p + 1) + "," + std::to_string(m.q + 1) + ")";
}

std::vector<LatticePath> parse_vertex(const PolymatroidInstance& inst, std::string_view text) {
    size_t b = text.find('{');
    size_t e = text.rfind('}');
    if (b == std::string_view::npos || e == std::string_view::npos || e < b)
        throw InputError("vertex must be of the form {m1, m2, ...}");
    std::string_view body = text.substr(b + 1, e - b - 1);
    std::vector<LatticePath> factors;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        Monomial m = Monomial::parse(tok, inst.nvars());
        if (!inst.is_basis(m)) throw InputError(m.str() + " is not a basis of this instance");
        factors.push_back(inst.witness(m));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (factors.empty()) throw InputError("vertex needs at least one factor");
    return factors;
}

std::vector<Vertex> fiber_vertices(const PolymatroidInstance& inst, const Monomial& mu) {
    if (mu.nvars() != inst.nvars())
        throw InputError("mu has " + std::to_string(mu.nvars()) + " variables, instance has " +
                         std::to_string(inst.nvars()));
    const int r = inst.rank();
    if (r == 0 || mu.degree() == 0 || mu.degree() % r != 0)
        throw InputError("degree " + std::to_string(mu.degree()) +
                         " is not a positive multiple of the rank " + std::to_string(r));
    const int t = mu.degree() / r;
    const auto& bases = inst.bases();

    std::vector<Vertex> out;
    std::vector<int> picked;
    picked.reserve(static_cast<size_t>(t));

    auto rec = [&](auto&& self, int min_index, const Monomial& remaining, int left) -> void {
        if (left == 0) {
            if (!remaining.is_unit()) return;
            std::vector<LatticePath> factors;
            factors.reserve(picked.size());
            for (int idx : picked) factors.push_back(inst.witness_at(idx));
            out.emplace_back(std::move(factors));
            return;
        }
        for (int idx = min_index; idx < static_cast<int>(bases.size()); ++idx) {
            const Monomial& b = bases[static_cast<size_t>(idx)];
            if (!b.divides(remaining)) continue;
            picked.push_back(idx);
            self(self, idx, remaining / b, left - 1);
            picked.pop_back();
        }
    };
    rec(rec, 0, mu, t);
    return out;
}

std::vector<NeighborEntry> neighbors(const PolymatroidInstance& inst, const Vertex& V) {
    // Adjacency is the symmetric closure of the exchange relation: the
    // transfer (i, j) on factors (p, q) joins V to W when either pair is
    // obtained from the other by a valid symmetric exchange. The reverse
    // reading works out to the two slack inequalities below.
    std::vector<NeighborEntry> out;
    std::unordered_set<std::string> seen{V.key()};
    const auto& factors = V.factors();
    const int t = V.degree();
    for (int p = 0; p < t; ++p) {
        Monomial mp = path_monomial(factors[static_cast<size_t>(p)]);
        for (int q = p + 1; q < t; ++q) {
            Monomial mq = path_monomial(factors[static_cast<size_t>(q)]);
            for (int i = 0; i < inst.nvars(); ++i) {
                if (mp.exponent(i) == 0) continue;
                for (int j = 0; j < inst.nvars(); ++j) {
                    if (i == j || mq.exponent(j) == 0) continue;
                    bool forward = mp.exponent(i) > mq.exponent(i) && mp.exponent(j) < mq.exponent(j);
                    bool reverse = mp.exponent(i) <= mq.exponent(i) + 1 &&
                                   mp.exponent(j) >= mq.exponent(j) - 1;
                    if (!forward && !reverse) continue;
                    Monomial a = mp.swap_var(i, j);
                    Monomial b = mq.swap_var(j, i);
                    if (!inst.is_basis(a) || !inst.is_basis(b)) continue;
                    std::vector<LatticePath> next = factors;
                    next[static_cast<size_t>(p)] = inst.witness(a);
                    next[static_cast<size_t>(q)] = inst.witness(b);
                    Vertex w(std::move(next));
                    if (w == V) continue;
                    if (seen.insert(w.key()).second)
                        out.push_back(NeighborEntry{std::move(w), Move{p, q, i, j}});
                }
            }
        }
    }
    return out;
}

ThinReport is_thin(const Vertex& V) {
    if (V.is_unit()) throw InputError("thinness is undefined for the empty vertex");
    const auto& factors = V.factors();
    const int t = V.degree();
    const int n = V.n();

    for (int p = 0; p < t; ++p) {
        for (int q = p + 1; q < t; ++q) {
            bool above = true, below = true;
            for (int k = 0; k < n; ++k) {
                int hp = factors[static_cast<size_t>(p)].east_heights()[static_cast<size_t>(k)];
                int hq = factors[static_cast<size_t>(q)].east_heights()[static_cast<size_t>(k)];
                if (hp < hq) above = false;
                if (hp > hq) below = false;
            }
            if (!above && !below)
                return ThinReport{false, "factors " + std::to_string(p + 1) + " and " +
                                             std::to_string(q + 1) + " are incomparable"};
        }
    }
    for (int k = 0; k < n; ++k) {
        int mn = factors[0].east_heights()[static_cast<size_t>(k)];
        int mx = mn;
        for (int p = 1; p < t; ++p) {
            int h = factors[static_cast<size_t>(p)].east_heights()[static_cast<size_t>(k)];
            mn = std::min(mn, h);
            mx = std::max(mx, h);
        }
        if (mx - mn > 1)
            return ThinReport{false, "east step " + std::to_string(k + 1) + " heights span " +
                                         std::to_string(mx - mn) + " units"};
    }
    return ThinReport{true, ""};
}

namespace {

int column_degree(const LatticePath& p, int col) {
    // d_col of the path monomial without materializing it.
    const auto& h = p.east_heights();
    int lo = col == 0 ? 0 : h[static_cast<size_t>(col - 1)];
    int hi = col == p.n() ? p.r() : h[static_cast<size_t>(col)];
    return hi - lo;
}

} // namespace

DescentOutcome descent_move(const PolymatroidInstance& inst, const Vertex& V, Convention conv) {
    DescentOutcome out;
    ThinReport thin = is_thin(V);
    if (thin.thin) {
        out.thin = true;
        return out;
    }
    const auto& factors = V.factors();
    const int t = V.degree();
    const int n = V.n();

    auto height = [&](int slot, int east_step_1based) {
        return factors[static_cast<size_t>(slot)].east_heights()[static_cast<size_t>(east_step_1based - 1)];
    };

    int slot_p = -1, slot_q = -1, col_i = -1, col_j = -1;

    // Case 1: some pair of (i+1)-st east steps more than a unit apart.
    for (int i = 0; i < n && col_i < 0; ++i) {
        int mx = height(0, i + 1), mn = mx, arg_mx = 0, arg_mn = 0;
        for (int s = 1; s < t; ++s) {
            int h = height(s, i + 1);
            if (h > mx) { mx = h; arg_mx = s; }
            if (h < mn) { mn = h; arg_mn = s; }
        }
        if (mx - mn > 1) {
            col_i = i;
            slot_p = arg_mx;
            slot_q = arg_mn;
        }
    }

    if (col_i >= 0) {
        // sigma_p loses a north step at column i and gains one at column j,
        // where j is the least column past i at which q overtakes p.
        for (int j = col_i + 1; j <= n && col_j < 0; ++j) {
            if (column_degree(factors[static_cast<size_t>(slot_p)], j) <
                column_degree(factors[static_cast<size_t>(slot_q)], j))
                col_j = j;
        }
        if (col_j < 0) throw InvariantError("descent case 1: no exchange column found");
        out.case_used = 1;
        out.move = Move{slot_p, slot_q, col_i, col_j};
    } else {
        // Case 2: all gaps are at most a unit, so some pair crosses. Find
        // the least line x = i where a so-far-dominating pair swaps order.
        for (int i = 0; i < n && col_i < 0; ++i) {
            for (int a = 0; a < t && col_i < 0; ++a) {
                for (int b = 0; b < t; ++b) {
                    if (a == b) continue;
                    bool dominates = true, strict = false;
                    for (int k = 1; k <= i; ++k) {
                        int ha = height(a, k), hb = height(b, k);
                        if (ha < hb) { dominates = false; break; }
                        if (ha > hb) strict = true;
                    }
                    if (!dominates || !strict) continue;
                    if (height(b, i + 1) == height(a, i + 1) + 1) {
                        col_i = i;
                        slot_p = a; // dominator, about to be overtaken
                        slot_q = b;
                        break;
                    }
                }
            }
        }
        if (col_i < 0) throw InvariantError("descent case 2: no crossing pair found in a non-thin vertex");
        for (int j = col_i + 1; j <= n && col_j < 0; ++j) {
            if (column_degree(factors[static_cast<size_t>(slot_p)], j) >
                column_degree(factors[static_cast<size_t>(slot_q)], j))
                col_j = j;
        }
        if (col_j < 0) throw InvariantError("descent case 2: no exchange column found");
        out.case_used = 2;
        // Here sigma_q is the factor with the surplus at column i.
        out.move = Move{slot_q, slot_p, col_i, col_j};
    }

    // Execute the exchange; both results must be bases.
    Monomial m_loser = path_monomial(factors[static_cast<size_t>(out.move.p)]);
    Monomial m_gainer = path_monomial(factors[static_cast<size_t>(out.move.q)]);
    Monomial a = m_loser.swap_var(out.move.i, out.move.j);
    Monomial b = m_gainer.swap_var(out.move.j, out.move.i);
    if (!inst.is_basis(a) || !inst.is_basis(b))
        throw InvariantError("descent move left the instance: " + a.str() + " / " + b.str());
    std::vector<LatticePath> next = factors;
    next[static_cast<size_t>(out.move.p)] = inst.witness(a);
    next[static_cast<size_t>(out.move.q)] = inst.witness(b);
    out.next = Vertex(std::move(next));
    out.comparison = compare_l(V, *out.next, conv);
    return out;
}

std::optional<Vertex> greedy_thin_vertex(const PolymatroidInstance& inst, const Monomial& mu, int t) {
    if (mu.nvars() != inst.nvars())
        throw InputError("mu has " + std::to_string(mu.nvars()) + " variables, instance has " +
                         std::to_string(inst.nvars()));
    if (t < 1) throw InputError("factor count t must be positive");
    const int r = inst.rank();
    if (mu.degree() != t * r)
        throw InputError("degree of mu must be t * rank = " + std::to_string(t * r));
    if (r == 0) return std::nullopt;

    const int n = inst.n();
    const auto& alpha_h = inst.bounds().alpha().east_heights();
    const auto& omega_h = inst.bounds().omega().east_heights();

    // Factor heights stay nonincreasing with at most two adjacent values:
    // factors 1..k at level p, the rest at p - 1 (k = t, p = 0 initially).
    std::vector<int> heights(static_cast<size_t>(t), 0);
    std::vector<std::vector<int>> east(static_cast<size_t>(t));
    int k = t;

    for (int col = 0; col < n; ++col) {
        int d = mu.exponent(col);
        int q = d / t;
        int rem = d % t;
        std::vector<int> gains(static_cast<size_t>(t), q);
        if (rem > 0) {
            if (rem <= t - k) {
                for (int f = k; f < k + rem; ++f) ++gains[static_cast<size_t>(f)];
                k = k + rem;
            } else {
                for (int f = 0; f < rem - t + k; ++f) ++gains[static_cast<size_t>(f)];
                for (int f = k; f < t; ++f) ++gains[static_cast<size_t>(f)];
                k = rem - t + k;
            }
        }
        for (int f = 0; f < t; ++f) {
            heights[static_cast<size_t>(f)] += gains[static_cast<size_t>(f)];
            int h = heights[static_cast<size_t>(f)];
            if (h < omega_h[static_cast<size_t>(col)] || h > alpha_h[static_cast<size_t>(col)])
                return std::nullopt;
            east[static_cast<size_t>(f)].push_back(h);
        }
    }
    // Column n north steps are forced by the endpoint.
    for (int f = 0; f < t; ++f) {
        if (heights[static_cast<size_t>(f)] > r) return std::nullopt;
    }
    // Exponents of mu beyond column n must be absent (checked by width),
    // and the forced remainders already account for d_n(mu) since the
    // total degree matches.

    std::vector<LatticePath> factors;
    factors.reserve(static_cast<size_t>(t));
    Monomial product(inst.nvars());
    for (int f = 0; f < t; ++f) {
        LatticePath p = LatticePath::from_east_heights(east[static_cast<size_t>(f)], r);
        Monomial m = path_monomial(p);
        if (!inst.is_basis(m)) return std::nullopt;
        product = product * m;
        factors.push_back(std::move(p));
    }
    if (!(product == mu)) return std::nullopt;
    Vertex v(std::move(factors));
    if (!is_thin(v).thin) throw InvariantError("greedy construction produced a non-thin vertex");
    return v;
}

ExchangeGraph build_graph(const PolymatroidInstance& inst, const Monomial& mu) {
    ExchangeGraph g{mu, fiber_vertices(inst, mu), {}};
    std::unordered_map<std::string, int> index;
    for (size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i].key()] = static_cast<int>(i);
    for (size_t u = 0; u < g.vertices.size(); ++u) {
        for (const NeighborEntry& nb : neighbors(inst, g.vertices[u])) {
            auto it = index.find(nb.vertex.key());
            if (it == index.end())
                throw InvariantError("neighbor outside the enumerated fiber of " + mu.str());
            int v = it->second;
            if (static_cast<int>(u) < v) g.edges.push_back({static_cast<int>(u), v, nb.move});
        }
    }
    return g;
}

ConnectivityReport is_connected(const ExchangeGraph& g) {
    const int nv = static_cast<int>(g.vertices.size());
    if (nv == 0) return ConnectivityReport{true, 0};
    std::vector<std::vector<int>> adj(static_cast<size_t>(nv));
    for (const auto& e : g.edges) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    std::vector<char> seen(static_cast<size_t>(nv), 0);
    int components = 0;
    for (int s = 0; s < nv; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        ++components;
        std::deque<int> queue{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[static_cast<size_t>(u)]) {
                if (!seen[static_cast<size_t>(v)]) {
                    seen[static_cast<size_t>(v)] = 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return ConnectivityReport{components <= 1, components};
}

SinkWalk reduce_to_sink(const PolymatroidInstance& inst, const Vertex& V, Convention conv) {
    SinkWalk walk{V, {}};
    std::unordered_set<std::string> visited{V.key()};
    Vertex cur = V;
    while (true) {
        std::vector<NeighborEntry> nbs = neighbors(inst, cur);
        const NeighborEntry* chosen = nullptr;

        DescentOutcome d = descent_move(inst, cur, conv);
        if (!d.thin && d.comparison == Ordering::Greater) {
            for (const NeighborEntry& nb : nbs) {
                if (nb.vertex == *d.next) {
                    chosen = &nb;
                    break;
                }
            }
        }
        if (!chosen) {
            // Order-smallest strictly descending neighbor.
            for (const NeighborEntry& nb : nbs) {
                if (compare_l(cur, nb.vertex, conv) != Ordering::Greater) continue;
                if (!chosen || compare_l(nb.vertex, chosen->vertex, conv) == Ordering::Less) chosen = &nb;
            }
        }
        if (!chosen) break;
        if (!visited.insert(chosen->vertex.key()).second)
            throw InvariantError("sink walk revisited a vertex; the order is not descending");
        walk.steps.emplace_back(chosen->move, chosen->vertex);
        cur = chosen->vertex;
    }
    walk.sink = cur;
    return walk;
}

namespace {

Move reverse_move(const PolymatroidInstance& inst, const Vertex& from, const Vertex& to) {
    for (const NeighborEntry& nb : neighbors(inst, from)) {
        if (nb.vertex == to) return nb.move;
    }
    throw InvariantError("no single exchange joins the given vertices");
}

} // namespace

FiberWalk connect_path(const PolymatroidInstance& inst, const Vertex& V, const Vertex& W,
                       Convention conv) {
    if (!(V.image() == W.image()))
        throw InputError("vertices lie in different fibers: " + V.image().str() + " vs " +
                         W.image().str());
    FiberWalk walk;
    walk.vertices.push_back(V);
    if (V == W) return walk;

    SinkWalk down_v = reduce_to_sink(inst, V, conv);
    SinkWalk down_w = reduce_to_sink(inst, W, conv);
    if (down_v.sink == down_w.sink) {
        for (const auto& [move, vertex] : down_v.steps) {
            walk.moves.push_back(move);
            walk.vertices.push_back(vertex);
        }
        // Ascend the reversed W-walk from the common sink.
        for (auto it = down_w.steps.rbegin(); it != down_w.steps.rend(); ++it) {
            const Vertex& target = std::next(it) == down_w.steps.rend() ? W : std::next(it)->second;
            walk.moves.push_back(reverse_move(inst, walk.vertices.back(), target));
            walk.vertices.push_back(target);
        }
        return walk;
    }
    // Different sinks: fall back to breadth-first search over the fiber.
    return connect_path(inst, build_graph(inst, V.image()), V, W);
}

FiberWalk connect_path(const PolymatroidInstance& inst, const ExchangeGraph& g, const Vertex& V,
                       const Vertex& W) {
    (void)inst;
    if (!(V.image() == W.image()))
        throw InputError("vertices lie in different fibers");
    FiberWalk walk;
    walk.vertices.push_back(V);
    if (V == W) return walk;

    std::unordered_map<std::string, int> index;
    for (size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i].key()] = static_cast<int>(i);
    auto vit = index.find(V.key());
    auto wit = index.find(W.key());
    if (vit == index.end() || wit == index.end())
        throw InputError("vertex is not in the supplied fiber graph");

    const int nv = static_cast<int>(g.vertices.size());
    std::vector<std::vector<std::pair<int, Move>>> adj(static_cast<size_t>(nv));
    for (const auto& e : g.edges) {
        adj[static_cast<size_t>(e.u)].emplace_back(e.v, e.move);
        Move back = reverse_move(inst, g.vertices[static_cast<size_t>(e.v)],
                                 g.vertices[static_cast<size_t>(e.u)]);
        adj[static_cast<size_t>(e.v)].emplace_back(e.u, back);
    }
    std::vector<int> parent(static_cast<size_t>(nv), -1);
    std::vector<Move> via(static_cast<size_t>(nv));
    std::deque<int> queue{vit->second};
    parent[static_cast<size_t>(vit->second)] = vit->second;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == wit->second) break;
        for (const auto& [v, move] : adj[static_cast<size_t>(u)]) {
            if (parent[static_cast<size_t>(v)] >= 0) continue;
            parent[static_cast<size_t>(v)] = u;
            via[static_cast<size_t>(v)] = move;
            queue.push_back(v);
        }
    }
    if (parent[static_cast<size_t>(wit->second)] < 0)
        throw InvariantError("disconnected fiber: no walk joins " + V.vertex_str() + " and " +
                             W.vertex_str() + " over mu = " + V.image().str());
    std::vector<std::pair<int, Move>> back;
    for (int u = wit->second; u != vit->second; u = parent[static_cast<size_t>(u)])
        back.emplace_back(u, via[static_cast<size_t>(u)]);
    for (auto it = back.rbegin(); it != back.rend(); ++it) {
        walk.moves.push_back(it->second);
        walk.vertices.push_back(g.vertices[static_cast<size_t>(it->first)]);
    }
    return walk;
}

} // namespace lpm
