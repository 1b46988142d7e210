#ifndef LPM_MONOMIAL_HPP
#define LPM_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lpm {

/// Monomial in x_0..x_N as a fixed-width exponent vector. The width is set
/// per instance (N = n for plain instances, N = n + r for embedded ones)
/// and never changes under multiplication or variable swaps.
class Monomial {
public:
    /// The unit monomial 1 over `nvars` variables.
    explicit Monomial(int nvars);

    /// From an exponent vector; width is the vector length.
    explicit Monomial(std::vector<int> exponents);

    /// Accepts both text grammars: `x1^3*x3` (exponent ^1 omissible) and
    /// the vector form `[0,3,0,1,0]`. `1` denotes the unit.
    static Monomial parse(std::string_view text, int nvars);

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    int exponent(int i) const;
    const std::vector<int>& exponents() const { return exps_; }

    bool is_unit() const { return degree_ == 0; }
    bool is_squarefree() const;

    bool divides(const Monomial& other) const;
    Monomial times_var(int i) const;
    Monomial div_var(int i) const;
    /// (x_to / x_from) * m. Requires exponent(from) > 0.
    Monomial swap_var(int from, int to) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Exact quotient; requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);

    std::string str() const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    /// Deterministic order: width, then exponent vector lexicographically.
    std::strong_ordering operator<=>(const Monomial& o) const;

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

} // namespace lpm

#endif
