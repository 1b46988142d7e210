#include "engine.hpp"

#include <algorithm>

#include "lpm/errors.hpp"
#include "lpm/exchange.hpp"

namespace lpm::engine {

void Term::push(uint16_t b) {
    if (size >= kMaxTermFactors) throw InputError("term degree exceeds the supported bound");
    int pos = size;
    while (pos > 0 && idx[static_cast<size_t>(pos - 1)] > b) {
        idx[static_cast<size_t>(pos)] = idx[static_cast<size_t>(pos - 1)];
        --pos;
    }
    idx[static_cast<size_t>(pos)] = b;
    ++size;
}

void Term::remove_at(int pos) {
    for (int k = pos; k + 1 < size; ++k) idx[static_cast<size_t>(k)] = idx[static_cast<size_t>(k + 1)];
    --size;
}

bool Term::operator==(const Term& o) const {
    if (size != o.size) return false;
    for (int k = 0; k < size; ++k) {
        if (idx[static_cast<size_t>(k)] != o.idx[static_cast<size_t>(k)]) return false;
    }
    return true;
}

uint64_t Term::packed() const {
    uint64_t key = 0;
    for (int k = 0; k < size; ++k) key = (key << 16) | (idx[static_cast<size_t>(k)] + 1ull);
    return key;
}

Table::Table(const PolymatroidInstance& instance) : inst(&instance) {
    nb = static_cast<int>(instance.bases().size());
    nvars = instance.nvars();
    nr = instance.n() * instance.rank();
    lvec.reserve(static_cast<size_t>(nb));
    word.reserve(static_cast<size_t>(nb));
    exps.reserve(static_cast<size_t>(nb));
    east.reserve(static_cast<size_t>(nb));
    for (int b = 0; b < nb; ++b) {
        const LatticePath& p = instance.witness_at(b);
        lvec.push_back(l_vector(p));
        word.push_back(p.word());
        exps.push_back(instance.bases()[static_cast<size_t>(b)].exponents());
        east.push_back(p.east_heights());
    }
    swap_target.assign(static_cast<size_t>(nb) * nvars * nvars, -1);
    for (int b = 0; b < nb; ++b) {
        const Monomial& m = instance.bases()[static_cast<size_t>(b)];
        for (int i = 0; i < nvars; ++i) {
            if (m.exponent(i) == 0) continue;
            for (int j = 0; j < nvars; ++j) {
                if (i == j) continue;
                int t = instance.basis_index(m.swap_var(i, j));
                swap_target[(static_cast<size_t>(b) * nvars + i) * nvars + j] = static_cast<int16_t>(t);
            }
        }
    }
}

Monomial Table::image(const Term& t) const {
    std::vector<int> acc(static_cast<size_t>(nvars), 0);
    for (int k = 0; k < t.size; ++k) {
        const auto& e = exps[t.idx[static_cast<size_t>(k)]];
        for (int v = 0; v < nvars; ++v) acc[static_cast<size_t>(v)] += e[static_cast<size_t>(v)];
    }
    return Monomial(std::move(acc));
}

BaseRingMonomial Table::to_brm(const Term& t) const {
    if (t.size == 0) return BaseRingMonomial(inst->n(), inst->rank());
    std::vector<LatticePath> factors;
    factors.reserve(t.size);
    for (int k = 0; k < t.size; ++k) factors.push_back(inst->witness_at(t.idx[static_cast<size_t>(k)]));
    return BaseRingMonomial(std::move(factors));
}

Term Table::to_term(const BaseRingMonomial& M) const {
    Term t;
    for (const LatticePath& f : M.factors()) {
        int b = inst->basis_index(path_monomial(f));
        if (b < 0) throw InputError("factor is not a basis of this instance");
        t.push(static_cast<uint16_t>(b));
    }
    return t;
}

Ordering compare_terms(const Table& tab, const Term& a, const Term& b, Convention conv) {
    std::array<FactorRef, kMaxTermFactors> ra, rb;
    for (int k = 0; k < a.size; ++k) ra[static_cast<size_t>(k)] = tab.ref(a.idx[static_cast<size_t>(k)]);
    for (int k = 0; k < b.size; ++k) rb[static_cast<size_t>(k)] = tab.ref(b.idx[static_cast<size_t>(k)]);
    return compare_factor_lists({ra.data(), static_cast<size_t>(a.size)},
                                {rb.data(), static_cast<size_t>(b.size)}, tab.nr, conv);
}

void term_neighbors(const Table& tab, const Term& t, std::vector<Term>& out) {
    // Symmetric closure of the exchange relation, as in neighbors().
    out.clear();
    for (int p = 0; p < t.size; ++p) {
        int bp = t.idx[static_cast<size_t>(p)];
        const auto& ep = tab.exps[static_cast<size_t>(bp)];
        for (int q = p + 1; q < t.size; ++q) {
            int bq = t.idx[static_cast<size_t>(q)];
            const auto& eq = tab.exps[static_cast<size_t>(bq)];
            for (int i = 0; i < tab.nvars; ++i) {
                if (ep[static_cast<size_t>(i)] == 0) continue;
                for (int j = 0; j < tab.nvars; ++j) {
                    if (i == j || eq[static_cast<size_t>(j)] == 0) continue;
                    bool forward = ep[static_cast<size_t>(i)] > eq[static_cast<size_t>(i)] &&
                                   ep[static_cast<size_t>(j)] < eq[static_cast<size_t>(j)];
                    bool reverse = ep[static_cast<size_t>(i)] <= eq[static_cast<size_t>(i)] + 1 &&
                                   ep[static_cast<size_t>(j)] >= eq[static_cast<size_t>(j)] - 1;
                    if (!forward && !reverse) continue;
                    int np = tab.target(bp, i, j);
                    int nq = tab.target(bq, j, i);
                    if (np < 0 || nq < 0) continue;
                    Term w = t;
                    w.remove_at(q);
                    w.remove_at(p);
                    w.push(static_cast<uint16_t>(np));
                    w.push(static_cast<uint16_t>(nq));
                    if (w == t) continue;
                    bool dup = false;
                    for (const Term& seen : out) {
                        if (seen == w) { dup = true; break; }
                    }
                    if (!dup) out.push_back(w);
                }
            }
        }
    }
}

std::vector<int> index_generators_by_lead(const std::vector<Generator>& gens, int nb) {
    std::vector<int> map(static_cast<size_t>(nb) * static_cast<size_t>(nb), -1);
    for (size_t g = 0; g < gens.size(); ++g) {
        size_t key = static_cast<size_t>(gens[g].lead[0]) * static_cast<size_t>(nb) + gens[g].lead[1];
        if (map[key] < 0) map[key] = static_cast<int>(g);
    }
    return map;
}

namespace {

// Lowest-index generator whose leading pair divides the term.
int find_reducer(const Term& t, const std::vector<int>& first_gen, int nb) {
    int best = -1;
    for (int a = 0; a < t.size; ++a) {
        for (int b = a + 1; b < t.size; ++b) {
            size_t key = static_cast<size_t>(t.idx[static_cast<size_t>(a)]) * static_cast<size_t>(nb) +
                         t.idx[static_cast<size_t>(b)];
            int g = first_gen[key];
            if (g >= 0 && (best < 0 || g < best)) best = g;
        }
    }
    return best;
}

void rewrite(Term& t, const Generator& g) {
    // Remove the leading pair (last occurrences are fine: entries equal).
    for (int pass = 1; pass >= 0; --pass) {
        uint16_t needle = g.lead[static_cast<size_t>(pass)];
        for (int k = t.size - 1; k >= 0; --k) {
            if (t.idx[static_cast<size_t>(k)] == needle) {
                t.remove_at(k);
                break;
            }
        }
    }
    t.push(g.trail[0]);
    t.push(g.trail[1]);
}

} // namespace

ReduceOutcome reduce_terms(const Table& tab, Term a, Term b, const std::vector<Generator>& gens,
                           const std::vector<int>& first_gen_by_lead, Convention conv,
                           std::vector<EngineStep>* steps) {
    ReduceOutcome out;
    long long soft_cap = 512;
    long long hard_cap = -1;
    while (true) {
        if (a == b) {
            out.zero = true;
            break;
        }
        Ordering cmp = compare_terms(tab, a, b, conv);
        Term* larger = cmp == Ordering::Greater ? &a : &b;
        Term* smaller = cmp == Ordering::Greater ? &b : &a;
        Term* chosen = larger;
        int g = find_reducer(*larger, first_gen_by_lead, tab.nb);
        if (g < 0) {
            g = find_reducer(*smaller, first_gen_by_lead, tab.nb);
            chosen = smaller;
        }
        if (g < 0) break; // irreducible
        if (steps) {
            Term cofactor = *chosen;
            const Generator& gen = gens[static_cast<size_t>(g)];
            for (int pass = 1; pass >= 0; --pass) {
                uint16_t needle = gen.lead[static_cast<size_t>(pass)];
                for (int k = cofactor.size - 1; k >= 0; --k) {
                    if (cofactor.idx[static_cast<size_t>(k)] == needle) {
                        cofactor.remove_at(k);
                        break;
                    }
                }
            }
            steps->push_back(EngineStep{chosen == &a ? 0 : 1, cofactor, g});
        }
        rewrite(*chosen, gens[static_cast<size_t>(g)]);
        ++out.iterations;
        if (out.iterations >= soft_cap) {
            if (hard_cap < 0) {
                // The fiber of the common image bounds any strictly
                // descending rewrite sequence; exceeding it means the
                // order is cycling.
                long long fiber = static_cast<long long>(fiber_vertices(*tab.inst, tab.image(a)).size());
                hard_cap = std::max(2 * fiber + 2, soft_cap);
            }
            if (out.iterations > hard_cap) {
                out.capped = true;
                break;
            }
        }
    }
    out.first = a;
    out.second = b;
    return out;
}

} // namespace lpm::engine
