#ifndef LPM_SRC_ENGINE_HPP
#define LPM_SRC_ENGINE_HPP

// Index-based views of one instance for the audit loops. Bases are
// referred to by their position in PolymatroidInstance::bases(); terms are
// sorted index multisets. Not part of the public surface.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lpm/order.hpp"
#include "lpm/polymatroid.hpp"

namespace lpm::engine {

constexpr int kMaxTermFactors = 12;

struct Term {
    std::array<uint16_t, kMaxTermFactors> idx{};
    uint8_t size = 0;

    void push(uint16_t b); // keeps the array sorted
    void remove_at(int pos);
    bool operator==(const Term& o) const;
    uint64_t packed() const; // unique for size <= 4
};

struct Table {
    const PolymatroidInstance* inst;
    int nb = 0;
    int nvars = 0;
    int nr = 0;
    std::vector<LVector> lvec;                 // per basis
    std::vector<std::string> word;             // per basis witness word
    std::vector<std::vector<int>> exps;        // per basis exponents
    std::vector<std::vector<int>> east;        // per basis east heights
    std::vector<int16_t> swap_target;          // [b * nvars * nvars + i * nvars + j] -> basis of (x_j/x_i) m_b, or -1

    explicit Table(const PolymatroidInstance& instance);

    FactorRef ref(int b) const { return FactorRef{lvec[static_cast<size_t>(b)].data(), word[static_cast<size_t>(b)]}; }
    int target(int b, int i, int j) const {
        return swap_target[(static_cast<size_t>(b) * nvars + i) * nvars + j];
    }
    Monomial image(const Term& t) const;
    BaseRingMonomial to_brm(const Term& t) const;
    Term to_term(const BaseRingMonomial& M) const;
};

Ordering compare_terms(const Table& tab, const Term& a, const Term& b, Convention conv);

/// All terms one symmetric exchange away from t (deduplicated, excluding t
/// itself), in slot/index scan order.
void term_neighbors(const Table& tab, const Term& t, std::vector<Term>& out);

struct Generator {
    uint16_t lead[2];  // ascending
    uint16_t trail[2]; // ascending
};

struct ReduceOutcome {
    bool zero = false;
    bool capped = false;
    Term first, second;
    long long iterations = 0;
};

struct EngineStep {
    int side;
    Term cofactor;
    int generator_index;
};

/// Shared reduction core; the public reduce_binomial wraps it with BRM
/// conversions. `steps` may be null when replay data is not needed.
ReduceOutcome reduce_terms(const Table& tab, Term a, Term b, const std::vector<Generator>& gens,
                           const std::vector<int>& first_gen_by_lead, Convention conv,
                           std::vector<EngineStep>* steps);

/// first_gen_by_lead: flat nb*nb array, entry lead0 * nb + lead1 -> lowest
/// generator index with that leading pair, or -1.
std::vector<int> index_generators_by_lead(const std::vector<Generator>& gens, int nb);

} // namespace lpm::engine

#endif
