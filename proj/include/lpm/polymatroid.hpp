#ifndef LPM_POLYMATROID_HPP
#define LPM_POLYMATROID_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lpm/lattice_path.hpp"
#include "lpm/monomial.hpp"

namespace lpm {

/// Gamma(alpha, omega): the basis monomials { m(sigma) : alpha >= sigma >= omega }
/// with their witness paths, materialized eagerly. With `squarefree_only`
/// the basis set is restricted to squarefree monomials, which realizes the
/// lattice path matroid M(alpha, omega) inside the embedded polymatroid.
class PolymatroidInstance {
public:
    explicit PolymatroidInstance(BoundingPair bounds, bool squarefree_only = false);

    static PolymatroidInstance free_instance(int n, int r);
    /// Gamma(alpha-bar, omega-bar) restricted to squarefree bases.
    static PolymatroidInstance matroid_embedding(const BoundingPair& bp);

    const BoundingPair& bounds() const { return bounds_; }
    int n() const { return bounds_.n(); }
    int rank() const { return bounds_.r(); }
    int nvars() const { return bounds_.n() + 1; }
    bool squarefree_only() const { return squarefree_only_; }

    /// Bases in east-height-lexicographic witness order.
    const std::vector<Monomial>& bases() const { return bases_; }
    bool is_basis(const Monomial& m) const;
    /// Position in bases(), or -1.
    int basis_index(const Monomial& m) const;
    const LatticePath& witness(const Monomial& m) const;
    const LatticePath& witness_at(int basis_index) const { return witnesses_[static_cast<size_t>(basis_index)]; }

    /// Membership in the polymatroid: divides some basis.
    bool contains(const Monomial& m) const;

private:
    BoundingPair bounds_;
    bool squarefree_only_;
    std::vector<Monomial> bases_;
    std::vector<LatticePath> witnesses_;
    std::unordered_map<Monomial, int, MonomialHash> index_;
};

struct AxiomReport {
    bool ok = true;
    int property = 0;                ///< 1 = divisor closure, 2 = augmentation
    std::optional<Monomial> m;       ///< witnesses when !ok
    std::optional<Monomial> m_prime;
    std::string detail;
};

/// Checks the two discrete-polymatroid properties on a finite monomial set:
/// closure under divisors, and augmentation between unequal degrees.
AxiomReport check_polymatroid_axioms(const std::vector<Monomial>& S);

struct ExchangeWitness {
    int j;
    Monomial exchanged_m;        ///< (x_j / x_i) m
    Monomial exchanged_m_prime;  ///< (x_i / x_j) m'
};

/// For bases m, m' and an index i with d_i(m) > d_i(m'), returns the
/// smallest j with d_j(m) < d_j(m') such that both exchanged monomials are
/// bases. The exchange property guarantees existence; absence raises an
/// InvariantError.
ExchangeWitness symmetric_exchange_witness(const PolymatroidInstance& inst, const Monomial& m,
                                           const Monomial& m_prime, int i);

/// All ordered pairs (i, j) realizing a symmetric exchange between two
/// bases, in (i, j)-lexicographic order.
std::vector<std::pair<int, int>> all_symmetric_exchanges(const PolymatroidInstance& inst,
                                                         const Monomial& m, const Monomial& m_prime);

/// Entry k counts the monomials of degree k in the divisor closure of the
/// basis set (the f-vector / degree sequence). Length rank + 1.
std::vector<long long> degree_sequence(const PolymatroidInstance& inst);

/// h-vector of the independence complex of M(alpha, omega), from the
/// f-vector via sum_i f_i (x-1)^(d-i) = sum_k h_k x^(d-k). Length rank + 1.
std::vector<long long> matroid_h_vector(const BoundingPair& bp);

/// Smallest set containing m and closed under swapping one x_j for any
/// x_i with i < j; the generators of the smallest Borel-fixed ideal
/// containing m. Sorted by exponent vector.
std::vector<Monomial> borel_closure(const Monomial& m);

} // namespace lpm

#endif
