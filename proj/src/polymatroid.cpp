#include "lpm/polymatroid.hpp"

#include <algorithm>
#include <unordered_set>

#include "lpm/errors.hpp"

namespace lpm {

PolymatroidInstance::PolymatroidInstance(BoundingPair bounds, bool squarefree_only)
    : bounds_(std::move(bounds)), squarefree_only_(squarefree_only) {
    for (const LatticePath& p : enumerate_paths(bounds_)) {
        Monomial m = path_monomial(p);
        if (squarefree_only_ && !m.is_squarefree()) continue;
        auto [it, inserted] = index_.emplace(m, static_cast<int>(bases_.size()));
        if (!inserted) throw InvariantError("distinct bounded paths produced the same basis monomial");
        bases_.push_back(std::move(m));
        witnesses_.push_back(p);
    }
}

PolymatroidInstance PolymatroidInstance::free_instance(int n, int r) {
    return PolymatroidInstance(BoundingPair::free_pair(n, r));
}

PolymatroidInstance PolymatroidInstance::matroid_embedding(const BoundingPair& bp) {
    BoundingPair embedded(embed_squarefree(bp.alpha()), embed_squarefree(bp.omega()));
    return PolymatroidInstance(std::move(embedded), /*squarefree_only=*/true);
}

bool PolymatroidInstance::is_basis(const Monomial& m) const { return index_.count(m) != 0; }

int PolymatroidInstance::basis_index(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

const LatticePath& PolymatroidInstance::witness(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw InputError(m.str() + " is not a basis of this instance");
    return witnesses_[static_cast<size_t>(it->second)];
}

bool PolymatroidInstance::contains(const Monomial& m) const {
    if (m.nvars() != nvars()) throw InputError("monomial width mismatch with instance variables");
    for (const Monomial& b : bases_) {
        if (m.divides(b)) return true;
    }
    return false;
}

AxiomReport check_polymatroid_axioms(const std::vector<Monomial>& S) {
    AxiomReport report;
    std::unordered_set<Monomial, MonomialHash> members(S.begin(), S.end());

    // Property 1: closure under divisors, one variable at a time.
    for (const Monomial& m : S) {
        for (int i = 0; i < m.nvars(); ++i) {
            if (m.exponent(i) == 0) continue;
            Monomial d = m.div_var(i);
            if (!members.count(d)) {
                report.ok = false;
                report.property = 1;
                report.m = m;
                report.m_prime = d;
                report.detail = d.str() + " (divisor of " + m.str() + ") missing (property 1)";
                return report;
            }
        }
    }

    // Property 2: augmentation from any lower-degree member.
    for (const Monomial& m : S) {
        for (const Monomial& mp : S) {
            if (m.degree() <= mp.degree()) continue;
            bool augmented = false;
            for (int i = 0; i < m.nvars() && !augmented; ++i) {
                if (m.exponent(i) > mp.exponent(i) && members.count(mp.times_var(i))) augmented = true;
            }
            if (!augmented) {
                report.ok = false;
                report.property = 2;
                report.m = m;
                report.m_prime = mp;
                report.detail = "no index i with d_i(" + m.str() + ") > d_i(" + mp.str() + ") and x_i*" +
                                mp.str() + " in the set (property 2)";
                return report;
            }
        }
    }
    return report;
}

ExchangeWitness symmetric_exchange_witness(const PolymatroidInstance& inst, const Monomial& m,
                                           const Monomial& m_prime, int i) {
    if (!inst.is_basis(m) || !inst.is_basis(m_prime))
        throw InputError("symmetric exchange arguments must be bases");
    if (i < 0 || i >= m.nvars() || m.exponent(i) <= m_prime.exponent(i))
        throw InputError("exchange index i requires d_i(m) > d_i(m')");
    for (int j = 0; j < m.nvars(); ++j) {
        if (m.exponent(j) >= m_prime.exponent(j)) continue;
        Monomial a = m.swap_var(i, j);
        Monomial b = m_prime.swap_var(j, i);
        if (inst.is_basis(a) && inst.is_basis(b)) return ExchangeWitness{j, std::move(a), std::move(b)};
    }
    throw InvariantError("symmetric exchange property violated for bases " + m.str() + ", " +
                         m_prime.str() + " at i=" + std::to_string(i));
}

std::vector<std::pair<int, int>> all_symmetric_exchanges(const PolymatroidInstance& inst,
                                                         const Monomial& m, const Monomial& m_prime) {
    if (!inst.is_basis(m) || !inst.is_basis(m_prime))
        throw InputError("symmetric exchange arguments must be bases");
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.exponent(i) <= m_prime.exponent(i)) continue;
        for (int j = 0; j < m.nvars(); ++j) {
            if (m.exponent(j) >= m_prime.exponent(j)) continue;
            if (inst.is_basis(m.swap_var(i, j)) && inst.is_basis(m_prime.swap_var(j, i)))
                out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<long long> degree_sequence(const PolymatroidInstance& inst) {
    const int r = inst.rank();
    std::vector<long long> counts(static_cast<size_t>(r) + 1, 0);
    std::unordered_set<Monomial, MonomialHash> level(inst.bases().begin(), inst.bases().end());
    for (int k = r; k >= 0; --k) {
        counts[static_cast<size_t>(k)] = static_cast<long long>(level.size());
        if (k == 0) break;
        std::unordered_set<Monomial, MonomialHash> below;
        for (const Monomial& m : level) {
            for (int i = 0; i < m.nvars(); ++i) {
                if (m.exponent(i) > 0) below.insert(m.div_var(i));
            }
        }
        level = std::move(below);
    }
    return counts;
}

std::vector<long long> matroid_h_vector(const BoundingPair& bp) {
    const int d = bp.r();
    const int ground = bp.n() + bp.r();
    if (ground > 62) throw InputError("ground set too large for the h-vector computation");

    // Independent sets of M(alpha, omega): subsets of basis north sets.
    std::unordered_set<unsigned long long> independent;
    for (const LatticePath& p : enumerate_paths(bp)) {
        unsigned long long mask = 0;
        for (int pos : p.north_positions()) mask |= 1ull << (pos - 1);
        // Enumerate all submasks of the basis, including the empty set.
        unsigned long long sub = mask;
        while (true) {
            independent.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
    }
    std::vector<long long> f(static_cast<size_t>(d) + 1, 0);
    for (unsigned long long s : independent) ++f[static_cast<size_t>(__builtin_popcountll(s))];

    // sum_i f_i (x-1)^(d-i) = sum_k h_k x^(d-k)
    std::vector<std::vector<long long>> choose(static_cast<size_t>(d) + 1,
                                               std::vector<long long>(static_cast<size_t>(d) + 1, 0));
    for (int a = 0; a <= d; ++a) {
        choose[static_cast<size_t>(a)][0] = 1;
        for (int b = 1; b <= a; ++b)
            choose[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                choose[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)] +
                choose[static_cast<size_t>(a - 1)][static_cast<size_t>(b)];
    }
    std::vector<long long> h(static_cast<size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k) {
        long long acc = 0;
        for (int i = 0; i <= k; ++i) {
            long long c = choose[static_cast<size_t>(d - i)][static_cast<size_t>(k - i)];
            acc += ((k - i) % 2 == 0 ? 1 : -1) * f[static_cast<size_t>(i)] * c;
        }
        h[static_cast<size_t>(k)] = acc;
    }
    return h;
}

std::vector<Monomial> borel_closure(const Monomial& m) {
    std::unordered_set<Monomial, MonomialHash> seen{m};
    std::vector<Monomial> queue{m};
    while (!queue.empty()) {
        Monomial cur = queue.back();
        queue.pop_back();
        for (int j = 0; j < cur.nvars(); ++j) {
            if (cur.exponent(j) == 0) continue;
            for (int i = 0; i < j; ++i) {
                Monomial next = cur.swap_var(j, i);
                if (seen.insert(next).second) queue.push_back(std::move(next));
            }
        }
    }
    std::vector<Monomial> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace lpm
