#include "lpm/toric.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <unordered_map>

#include "engine.hpp"
#include "lpm/errors.hpp"

namespace lpm {

Monomial toric_image(const BaseRingMonomial& M) { return M.image(); }

std::string ExchangeBinomial::str() const { return lhs.str() + " - " + rhs.str(); }

std::string Binomial::str() const { return first.str() + " - " + second.str(); }

namespace {

std::string unordered_pair_key(const BaseRingMonomial& a, const BaseRingMonomial& b) {
    std::string ka = a.key();
    std::string kb = b.key();
    return ka <= kb ? ka + "||" + kb : kb + "||" + ka;
}

} // namespace

std::vector<ExchangeBinomial> exchange_binomials(const PolymatroidInstance& inst) {
    std::vector<ExchangeBinomial> out;
    std::unordered_map<std::string, char> seen;
    const auto& bases = inst.bases();
    for (size_t a = 0; a < bases.size(); ++a) {
        for (size_t b = a + 1; b < bases.size(); ++b) {
            const Monomial& m = bases[a];
            const Monomial& mp = bases[b];
            for (auto [i, j] : all_symmetric_exchanges(inst, m, mp)) {
                Monomial n1 = m.swap_var(i, j);
                Monomial n2 = mp.swap_var(j, i);
                BaseRingMonomial lhs({inst.witness(m), inst.witness(mp)});
                BaseRingMonomial rhs({inst.witness(n1), inst.witness(n2)});
                if (lhs == rhs) continue; // the exchange merely swapped the pair
                std::string key = unordered_pair_key(lhs, rhs);
                if (!seen.emplace(key, 1).second) continue;
                out.push_back(ExchangeBinomial{std::move(lhs), std::move(rhs), i, j});
            }
        }
    }
    return out;
}

Binomial s_pair(const ExchangeBinomial& f, const ExchangeBinomial& g, Convention conv) {
    const BaseRingMonomial& lead_f = compare_l(f.lhs, f.rhs, conv) == Ordering::Greater ? f.lhs : f.rhs;
    const BaseRingMonomial& trail_f = &lead_f == &f.lhs ? f.rhs : f.lhs;
    const BaseRingMonomial& lead_g = compare_l(g.lhs, g.rhs, conv) == Ordering::Greater ? g.lhs : g.rhs;
    const BaseRingMonomial& trail_g = &lead_g == &g.lhs ? g.rhs : g.lhs;
    BaseRingMonomial l = BaseRingMonomial::lcm(lead_f, lead_g);
    return Binomial{l.divide_by(lead_f) * trail_f, l.divide_by(lead_g) * trail_g};
}

namespace {

std::unordered_map<std::string, int> generator_pair_index(const std::vector<ExchangeBinomial>& gens) {
    std::unordered_map<std::string, int> idx;
    for (size_t g = 0; g < gens.size(); ++g)
        idx.emplace(unordered_pair_key(gens[g].lhs, gens[g].rhs), static_cast<int>(g));
    return idx;
}

Certificate certificate_from_walk(const PolymatroidInstance& inst, const FiberWalk& walk,
                                  const std::vector<ExchangeBinomial>& gens,
                                  const std::unordered_map<std::string, int>& pair_index) {
    Certificate cert{walk.vertices.front(), walk.vertices.back(), {}};
    for (size_t s = 0; s < walk.moves.size(); ++s) {
        const Vertex& from = walk.vertices[s];
        const Move& mv = walk.moves[s];
        Monomial m_p = path_monomial(from.factors()[static_cast<size_t>(mv.p)]);
        Monomial m_q = path_monomial(from.factors()[static_cast<size_t>(mv.q)]);
        BaseRingMonomial source({inst.witness(m_p), inst.witness(m_q)});
        BaseRingMonomial target({inst.witness(m_p.swap_var(mv.i, mv.j)),
                                 inst.witness(m_q.swap_var(mv.j, mv.i))});
        BaseRingMonomial cofactor = from.divide_by(source);
        auto it = pair_index.find(unordered_pair_key(source, target));
        if (it == pair_index.end())
            throw InvariantError("fiber move is not covered by the exchange binomial list");
        const ExchangeBinomial& gen = gens[static_cast<size_t>(it->second)];
        int sign = gen.lhs == source ? 1 : -1;
        cert.terms.push_back(CertificateTerm{std::move(cofactor), gen, sign, it->second});
    }
    return cert;
}

} // namespace

Certificate decompose_kernel_binomial(const PolymatroidInstance& inst, const Vertex& V,
                                      const Vertex& W, Convention conv) {
    std::vector<ExchangeBinomial> gens = exchange_binomials(inst);
    auto idx = generator_pair_index(gens);
    Certificate cert = certificate_from_walk(inst, connect_path(inst, V, W, conv), gens, idx);
    if (!verify_certificate(cert)) throw InvariantError("certificate expansion mismatch");
    return cert;
}

Certificate decompose_kernel_binomial(const PolymatroidInstance& inst, const ExchangeGraph& g,
                                      const std::vector<ExchangeBinomial>& gens, const Vertex& V,
                                      const Vertex& W) {
    auto idx = generator_pair_index(gens);
    Certificate cert = certificate_from_walk(inst, connect_path(inst, g, V, W), gens, idx);
    if (!verify_certificate(cert)) throw InvariantError("certificate expansion mismatch");
    return cert;
}

bool verify_certificate(const Certificate& cert) {
    std::map<std::string, long long> coeffs;
    auto add = [&coeffs](const BaseRingMonomial& m, long long c) {
        auto [it, inserted] = coeffs.emplace(m.key(), c);
        if (!inserted) it->second += c;
        if (it->second == 0) coeffs.erase(it);
    };
    for (const CertificateTerm& term : cert.terms) {
        add(term.cofactor * term.binomial.lhs, term.sign);
        add(term.cofactor * term.binomial.rhs, -term.sign);
    }
    add(cert.from, -1);
    add(cert.to, 1);
    return coeffs.empty();
}

namespace {

std::vector<engine::Generator> engine_generators(const engine::Table& tab,
                                                 const std::vector<ExchangeBinomial>& gens,
                                                 Convention conv) {
    std::vector<engine::Generator> out;
    out.reserve(gens.size());
    for (const ExchangeBinomial& g : gens) {
        engine::Term lhs = tab.to_term(g.lhs);
        engine::Term rhs = tab.to_term(g.rhs);
        bool lhs_leads = compare_l(g.lhs, g.rhs, conv) == Ordering::Greater;
        const engine::Term& lead = lhs_leads ? lhs : rhs;
        const engine::Term& trail = lhs_leads ? rhs : lhs;
        out.push_back(engine::Generator{{lead.idx[0], lead.idx[1]}, {trail.idx[0], trail.idx[1]}});
    }
    return out;
}

} // namespace

ReductionResult reduce_binomial(const Binomial& f, const std::vector<ExchangeBinomial>& gens,
                                Convention conv, const PolymatroidInstance& inst,
                                bool record_steps) {
    if (f.first.degree() != f.second.degree())
        throw InputError("reduction requires terms of equal degree");
    if (!f.first.is_unit() && !(f.first.image() == f.second.image()))
        throw InputError("reduction requires phi-equal terms");

    engine::Table tab(inst);
    std::vector<engine::Generator> egens = engine_generators(tab, gens, conv);
    std::vector<int> lead_index = engine::index_generators_by_lead(egens, tab.nb);
    std::vector<engine::EngineStep> esteps;
    engine::ReduceOutcome outcome =
        engine::reduce_terms(tab, tab.to_term(f.first), tab.to_term(f.second), egens, lead_index,
                             conv, record_steps ? &esteps : nullptr);

    ReductionResult result{outcome.zero, outcome.capped,
                           Binomial{tab.to_brm(outcome.first), tab.to_brm(outcome.second)},
                           outcome.iterations,
                           {}};
    for (const engine::EngineStep& s : esteps)
        result.steps.push_back(ReductionStep{s.side, tab.to_brm(s.cofactor), s.generator_index});
    return result;
}

BuchbergerReport buchberger_check(const PolymatroidInstance& inst, Convention conv, int jobs) {
    constexpr size_t kMaxFailures = 50;
    BuchbergerReport report;
    report.convention = conv;

    std::vector<ExchangeBinomial> gens = exchange_binomials(inst);
    const int ng = static_cast<int>(gens.size());
    report.generators = ng;
    report.pairs = static_cast<long long>(ng) * (ng - 1) / 2;
    if (ng < 2) {
        report.zeros = 0;
        return report;
    }

    engine::Table tab(inst);
    std::vector<engine::Generator> egens = engine_generators(tab, gens, conv);
    std::vector<int> lead_index = engine::index_generators_by_lead(egens, tab.nb);

    struct Shard {
        long long zeros = 0;
        std::vector<BuchbergerFailure> failures;
    };
    const int workers = std::max(1, jobs);
    std::vector<Shard> shards(static_cast<size_t>(workers));
    std::atomic<int> next_row{0};

    auto run = [&](int w) {
        Shard& shard = shards[static_cast<size_t>(w)];
        // S-pair of generators gi < gj; u = lcm \ lead_f appended to the
        // trailing terms, multiset-wise.
        while (true) {
            int gi = next_row.fetch_add(1);
            if (gi >= ng - 1) break;
            const engine::Generator& f = egens[static_cast<size_t>(gi)];
            for (int gj = gi + 1; gj < ng; ++gj) {
                const engine::Generator& g = egens[static_cast<size_t>(gj)];
                engine::Term t1, t2;
                t1.push(f.trail[0]);
                t1.push(f.trail[1]);
                t2.push(g.trail[0]);
                t2.push(g.trail[1]);
                bool used_f[2] = {false, false};
                for (int x = 0; x < 2; ++x) {
                    bool matched = false;
                    for (int y = 0; y < 2; ++y) {
                        if (!used_f[y] && f.lead[y] == g.lead[x]) {
                            used_f[y] = true;
                            matched = true;
                            break;
                        }
                    }
                    if (!matched) t1.push(g.lead[x]); // (lead_g \ lead_f) * trail_f
                }
                bool used_g[2] = {false, false};
                for (int x = 0; x < 2; ++x) {
                    bool matched = false;
                    for (int y = 0; y < 2; ++y) {
                        if (!used_g[y] && g.lead[y] == f.lead[x]) {
                            used_g[y] = true;
                            matched = true;
                            break;
                        }
                    }
                    if (!matched) t2.push(f.lead[x]);
                }
                if (t1 == t2) {
                    ++shard.zeros;
                    continue;
                }
                engine::ReduceOutcome red =
                    engine::reduce_terms(tab, t1, t2, egens, lead_index, conv, nullptr);
                if (red.zero) {
                    ++shard.zeros;
                } else if (shard.failures.size() < kMaxFailures) {
                    BuchbergerFailure fail;
                    fail.f_index = gi;
                    fail.g_index = gj;
                    fail.s_binomial = Binomial{tab.to_brm(t1), tab.to_brm(t2)}.str();
                    fail.cap_exceeded = red.capped;
                    if (!red.capped)
                        fail.normal_form = Binomial{tab.to_brm(red.first), tab.to_brm(red.second)}.str();
                    shard.failures.push_back(std::move(fail));
                }
            }
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (std::thread& th : pool) th.join();
    }

    for (Shard& shard : shards) {
        report.zeros += shard.zeros;
        for (BuchbergerFailure& f : shard.failures) report.failures.push_back(std::move(f));
    }
    std::sort(report.failures.begin(), report.failures.end(),
              [](const BuchbergerFailure& a, const BuchbergerFailure& b) {
                  return std::pair(a.f_index, a.g_index) < std::pair(b.f_index, b.g_index);
              });
    if (report.failures.size() > kMaxFailures) {
        report.failures.resize(kMaxFailures);
        report.failures_truncated = true;
    }
    if (report.pairs - report.zeros > static_cast<long long>(report.failures.size()))
        report.failures_truncated = true;
    return report;
}

// ---------------------------------------------------------------------------
// Fiber sweep

namespace {

struct FiberWork {
    int t = 0;
    std::vector<engine::Term> verts;
};

bool term_is_thin(const engine::Table& tab, const engine::Term& t) {
    const int n = tab.inst->n();
    for (int p = 0; p < t.size; ++p) {
        const auto& hp = tab.east[t.idx[static_cast<size_t>(p)]];
        for (int q = p + 1; q < t.size; ++q) {
            const auto& hq = tab.east[t.idx[static_cast<size_t>(q)]];
            bool above = true, below = true;
            for (int k = 0; k < n; ++k) {
                if (hp[static_cast<size_t>(k)] < hq[static_cast<size_t>(k)]) above = false;
                if (hp[static_cast<size_t>(k)] > hq[static_cast<size_t>(k)]) below = false;
                if (hp[static_cast<size_t>(k)] - hq[static_cast<size_t>(k)] > 1 ||
                    hq[static_cast<size_t>(k)] - hp[static_cast<size_t>(k)] > 1)
                    return false;
            }
            if (!above && !below) return false;
        }
    }
    return true;
}

struct FiberAnalysis {
    // convention-independent
    int vertices = 0;
    int edges = 0;
    bool connected = true;
    int thin_count = 0;
    int thin_idx = -1;
    bool greedy_matches = true;
    // per convention, indexed as the convs list
    std::vector<std::vector<int>> sinks;
    std::vector<int> proposal_ascents;
    std::vector<FiberDump> dumps; // one slot per convention, reason empty if clean
};

FiberAnalysis analyze_fiber(const PolymatroidInstance& inst, const engine::Table& tab,
                            const Monomial& mu, const FiberWork& work,
                            const std::vector<Convention>& convs) {
    FiberAnalysis fa;
    const int nv = static_cast<int>(work.verts.size());
    fa.vertices = nv;
    fa.sinks.resize(convs.size());
    fa.proposal_ascents.assign(convs.size(), 0);
    fa.dumps.resize(convs.size());

    std::unordered_map<uint64_t, int> local;
    local.reserve(static_cast<size_t>(nv) * 2);
    for (int u = 0; u < nv; ++u) local[work.verts[static_cast<size_t>(u)].packed()] = u;

    std::vector<std::vector<int>> adj(static_cast<size_t>(nv));
    std::vector<engine::Term> nbs;
    for (int u = 0; u < nv; ++u) {
        engine::term_neighbors(tab, work.verts[static_cast<size_t>(u)], nbs);
        for (const engine::Term& w : nbs) {
            auto it = local.find(w.packed());
            if (it == local.end())
                throw InvariantError("fiber of " + mu.str() + " is missing an exchange neighbor");
            adj[static_cast<size_t>(u)].push_back(it->second);
        }
    }
    for (int u = 0; u < nv; ++u) {
        for (int v : adj[static_cast<size_t>(u)]) {
            if (u < v) ++fa.edges;
        }
    }

    // Connectivity.
    {
        std::vector<char> seen(static_cast<size_t>(nv), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[static_cast<size_t>(u)]) {
                if (!seen[static_cast<size_t>(v)]) {
                    seen[static_cast<size_t>(v)] = 1;
                    ++reached;
                    stack.push_back(v);
                }
            }
        }
        fa.connected = reached == nv;
    }

    std::vector<char> thin(static_cast<size_t>(nv), 0);
    for (int u = 0; u < nv; ++u) {
        if (term_is_thin(tab, work.verts[static_cast<size_t>(u)])) {
            thin[static_cast<size_t>(u)] = 1;
            ++fa.thin_count;
            if (fa.thin_idx < 0) fa.thin_idx = u;
        }
    }

    std::optional<Vertex> greedy = greedy_thin_vertex(inst, mu, work.t);
    if (fa.thin_count == 1 && greedy) {
        fa.greedy_matches = tab.to_term(*greedy) == work.verts[static_cast<size_t>(fa.thin_idx)];
    } else {
        fa.greedy_matches = (fa.thin_count == 0 && !greedy);
    }

    // Descent proposals are convention-independent; only the comparison is
    // evaluated per convention.
    std::vector<engine::Term> proposals(static_cast<size_t>(nv));
    for (int u = 0; u < nv; ++u) {
        if (thin[static_cast<size_t>(u)]) continue;
        DescentOutcome d = descent_move(inst, tab.to_brm(work.verts[static_cast<size_t>(u)]),
                                        Convention::HI);
        proposals[static_cast<size_t>(u)] = tab.to_term(*d.next);
    }

    for (size_t c = 0; c < convs.size(); ++c) {
        Convention conv = convs[c];
        for (int u = 0; u < nv; ++u) {
            bool has_smaller = false;
            for (int v : adj[static_cast<size_t>(u)]) {
                if (engine::compare_terms(tab, work.verts[static_cast<size_t>(u)],
                                          work.verts[static_cast<size_t>(v)], conv) == Ordering::Greater) {
                    has_smaller = true;
                    break;
                }
            }
            if (!has_smaller) fa.sinks[c].push_back(u);
            if (!thin[static_cast<size_t>(u)]) {
                if (engine::compare_terms(tab, work.verts[static_cast<size_t>(u)],
                                          proposals[static_cast<size_t>(u)], conv) != Ordering::Greater)
                    ++fa.proposal_ascents[c];
            }
        }

        bool sink_unique = fa.sinks[c].size() == 1;
        bool sink_is_thin = !fa.sinks[c].empty() &&
                            std::all_of(fa.sinks[c].begin(), fa.sinks[c].end(),
                                        [&](int s) { return thin[static_cast<size_t>(s)] != 0; });
        bool gap = std::any_of(fa.sinks[c].begin(), fa.sinks[c].end(),
                               [&](int s) { return thin[static_cast<size_t>(s)] == 0; });

        std::string reason;
        if (!fa.connected) reason += "disconnected,";
        if (fa.thin_count != 1) reason += "thin_count=" + std::to_string(fa.thin_count) + ",";
        if (!fa.greedy_matches) reason += "greedy_mismatch,";
        if (!sink_unique) reason += "nonunique_sink,";
        if (!sink_is_thin) reason += "nonthin_sink,";
        if (gap) reason += "descent_gap,";
        if (!reason.empty()) {
            reason.pop_back();
            FiberDump& dump = fa.dumps[c];
            dump.reason = reason;
            dump.mu = mu.str();
            dump.t = work.t;
            for (int u = 0; u < nv; ++u) {
                dump.vertices.push_back(tab.to_brm(work.verts[static_cast<size_t>(u)]).vertex_str());
                dump.thin_flags.push_back(thin[static_cast<size_t>(u)] ? "thin" : "not thin");
            }
            for (int u = 0; u < nv; ++u) {
                for (int v : adj[static_cast<size_t>(u)]) {
                    if (u >= v) continue;
                    dump.edges.emplace_back(u, v);
                    Ordering o = engine::compare_terms(tab, work.verts[static_cast<size_t>(u)],
                                                       work.verts[static_cast<size_t>(v)], conv);
                    dump.directions.push_back(o == Ordering::Greater
                                                  ? std::to_string(u) + "->" + std::to_string(v)
                                                  : std::to_string(v) + "->" + std::to_string(u));
                }
            }
            dump.sinks = fa.sinks[c];
        }
    }
    return fa;
}

} // namespace

std::vector<SweepReport> verify_white_multi(const PolymatroidInstance& inst, int t_max,
                                            const std::vector<Convention>& convs, int jobs) {
    if (t_max < 2) throw InputError("t_max must be at least 2");
    if (t_max > 4) throw InputError("sweep supports t_max <= 4");
    if (inst.rank() == 0) throw InputError("fiber sweep needs positive rank");

    engine::Table tab(inst);
    const int nb = tab.nb;

    // Group every t-multiset of bases by its product.
    std::map<std::vector<int>, FiberWork> fibers; // key: mu exponents (deterministic order)
    for (int t = 2; t <= t_max; ++t) {
        engine::Term term;
        std::vector<int> acc(static_cast<size_t>(tab.nvars), 0);
        auto rec = [&](auto&& self, int min_idx, int left) -> void {
            if (left == 0) {
                auto [it, inserted] = fibers.try_emplace(acc);
                if (inserted) it->second.t = t;
                it->second.verts.push_back(term);
                return;
            }
            for (int b = min_idx; b < nb; ++b) {
                term.push(static_cast<uint16_t>(b));
                const auto& e = tab.exps[static_cast<size_t>(b)];
                for (int v = 0; v < tab.nvars; ++v) acc[static_cast<size_t>(v)] += e[static_cast<size_t>(v)];
                self(self, b, left - 1);
                for (int v = 0; v < tab.nvars; ++v) acc[static_cast<size_t>(v)] -= e[static_cast<size_t>(v)];
                term.remove_at(term.size - 1);
            }
        };
        rec(rec, 0, t);
    }

    struct WorkItem {
        Monomial mu;
        const FiberWork* fw;
    };
    std::vector<WorkItem> work;
    work.reserve(fibers.size());
    for (const auto& [key, fw] : fibers) work.push_back(WorkItem{Monomial(key), &fw});
    // Rows ordered by (t, mu); the map already iterates in mu order.
    std::stable_sort(work.begin(), work.end(),
                     [](const WorkItem& a, const WorkItem& b) { return a.fw->t < b.fw->t; });

    std::vector<FiberAnalysis> results(work.size());
    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            size_t at = cursor.fetch_add(1);
            if (at >= work.size()) break;
            results[at] = analyze_fiber(inst, tab, work[at].mu, *work[at].fw, convs);
        }
    };
    const int workers = std::max(1, jobs);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    constexpr size_t kMaxDumps = 200;
    std::vector<SweepReport> reports;
    for (size_t c = 0; c < convs.size(); ++c) {
        SweepReport rep;
        rep.alpha = inst.bounds().alpha().word();
        rep.omega = inst.bounds().omega().word();
        rep.matroid = inst.squarefree_only();
        rep.n = inst.n();
        rep.r = inst.rank();
        rep.t_max = t_max;
        rep.convention = convs[c];
        for (size_t at = 0; at < work.size(); ++at) {
            const FiberWork& fw = *work[at].fw;
            const FiberAnalysis& fa = results[at];
            FiberRow row;
            row.mu = work[at].mu.str();
            row.t = fw.t;
            row.vertices = fa.vertices;
            row.edges = fa.edges;
            row.connected = fa.connected;
            row.thin_count = fa.thin_count;
            if (fa.thin_idx >= 0)
                row.thin = tab.to_brm(fw.verts[static_cast<size_t>(fa.thin_idx)]).vertex_str();
            row.greedy_matches = fa.greedy_matches;
            for (int s : fa.sinks[c])
                row.sinks.push_back(tab.to_brm(fw.verts[static_cast<size_t>(s)]).vertex_str());
            row.sink_unique = fa.sinks[c].size() == 1;
            row.sink_is_thin = !fa.sinks[c].empty() &&
                               std::all_of(fa.sinks[c].begin(), fa.sinks[c].end(), [&](int s) {
                                   return term_is_thin(tab, fw.verts[static_cast<size_t>(s)]);
                               });
            row.descent_proposal_ascents = fa.proposal_ascents[c];
            row.descent_gap = !row.sink_is_thin;

            ++rep.fibers;
            if (fa.connected) ++rep.connected_fibers;
            else ++rep.disconnected_fibers;
            if (fa.thin_count != 1) ++rep.thin_anomalies;
            if (!fa.greedy_matches) ++rep.greedy_mismatches;
            if (!row.sink_unique) ++rep.nonunique_sink_fibers;
            if (!row.sink_is_thin) ++rep.nonthin_sink_fibers;
            if (row.descent_gap) ++rep.descent_gap_fibers;

            if (!fa.dumps[c].reason.empty()) {
                if (rep.anomalies.size() < kMaxDumps) rep.anomalies.push_back(fa.dumps[c]);
                else rep.anomalies_truncated = true;
            }
            rep.rows.push_back(std::move(row));
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

SweepReport verify_white_up_to(const PolymatroidInstance& inst, int t_max, Convention conv,
                               int jobs) {
    return verify_white_multi(inst, t_max, {conv}, jobs).front();
}

} // namespace lpm
