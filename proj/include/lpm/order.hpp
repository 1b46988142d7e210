#ifndef LPM_ORDER_HPP
#define LPM_ORDER_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpm/lattice_path.hpp"
#include "lpm/monomial.hpp"

namespace lpm {

/// Direction read of "lexicographically precedes" at the first differing
/// coordinate. HI: the larger entry precedes (the default; forced by the
/// height-drop argument in the first descent case). LO: the smaller entry
/// precedes. Both are audited by the sweeps.
enum class Convention { HI, LO };

Convention parse_convention(std::string_view text);
std::string convention_name(Convention c);

enum class Ordering { Less, Equal, Greater };
Ordering reverse(Ordering o);

/// The nr-tuple flagging, per column i in [0, n-1], the row of the topmost
/// north step: coordinate (i, j) sits at flat index i*r + (r - j), so each
/// column block lists rows r down to 1. Column n is excluded.
using LVector = std::vector<int>;

LVector l_vector(const LatticePath& p);

/// "(0,0,0,1,...)" in the flat coordinate order.
std::string format_lvector(const LVector& v);

/// A monomial Y_{m_1}...Y_{m_t} of the base ring, kept as the multiset of
/// witness paths in canonical order (first by the HI "precedes" relation
/// on l-vectors, step word as the final tie-break).
class BaseRingMonomial {
public:
    /// The unit monomial 1 over paths to (n, r).
    BaseRingMonomial(int n, int r);
    explicit BaseRingMonomial(std::vector<LatticePath> factors);

    int n() const { return n_; }
    int r() const { return r_; }
    int degree() const { return static_cast<int>(factors_.size()); }
    bool is_unit() const { return factors_.empty(); }
    const std::vector<LatticePath>& factors() const { return factors_; }

    /// phi: the product of the factor monomials, width n + 1.
    Monomial image() const;

    friend BaseRingMonomial operator*(const BaseRingMonomial& a, const BaseRingMonomial& b);
    bool divides(const BaseRingMonomial& other) const;
    /// Exact multiset quotient; requires b.divides(*this).
    BaseRingMonomial divide_by(const BaseRingMonomial& b) const;
    static BaseRingMonomial lcm(const BaseRingMonomial& a, const BaseRingMonomial& b);

    bool operator==(const BaseRingMonomial& o) const;
    /// Deterministic identity key (joined factor words).
    std::string key() const;
    /// "Y{x1^3*x3}*Y{x0^2*x1*x2}" with factors in canonical order; "1" if unit.
    std::string str() const;
    /// Vertex text form "{x1^3*x3, x0^2*x1*x2}".
    std::string vertex_str() const;

private:
    int n_;
    int r_;
    std::vector<LatticePath> factors_;
};

/// Canonical factor order used everywhere factors are listed.
bool factor_precedes(const LatticePath& a, const LatticePath& b);

/// Strict "precedes" on l-vectors under a convention: first differing
/// coordinate, HI larger-wins / LO smaller-wins.
bool l_precedes(const LVector& a, const LVector& b, Convention conv);

/// Componentwise sum of the factors' l-vectors (the zero vector for 1).
LVector l_sum(const BaseRingMonomial& M);

/// Total order on base ring monomials: degree first, then the l-sums at
/// the first differing coordinate under the convention, then the inverted
/// factor-list tie-break (the monomial whose factor at the first differing
/// position is preceded by the other's factor is the greater one).
Ordering compare_l(const BaseRingMonomial& M, const BaseRingMonomial& M_prime,
                   Convention conv = Convention::HI);

/// Matroid base ring order: compare after embedding every factor via
/// embed_squarefree.
Ordering compare_L_matroid(const BaseRingMonomial& M, const BaseRingMonomial& M_prime,
                           Convention conv = Convention::HI);

/// Shared comparison core. A factor reference carries a borrowed l-vector
/// (length nr) and the step word for the final tie-break; the factor lists
/// need not be pre-sorted. Used by compare_l and by the index-based audit
/// engine so there is exactly one ordering implementation.
struct FactorRef {
    const int* lvec;
    std::string_view word;
};

Ordering compare_factor_lists(std::span<const FactorRef> a, std::span<const FactorRef> b, int nr,
                              Convention conv);

} // namespace lpm

#endif
