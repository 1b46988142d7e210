#ifndef LPM_LATTICE_PATH_HPP
#define LPM_LATTICE_PATH_HPP

#include <string>
#include <string_view>
#include <vector>

#include "lpm/monomial.hpp"

namespace lpm {

/// A north/east step word from the origin to (n, r).
///
/// Steps are 1-indexed (matching "the i-th step"); columns are 0-indexed
/// (x = 0..n, matching the variables of the path monomial). The step word
/// is the canonical representation; east heights and north positions are
/// derived caches.
class LatticePath {
public:
    /// Parses a word over the grammar [NE]+ (case-sensitive).
    static LatticePath parse(std::string_view word);

    /// From the east-height sequence (nondecreasing, values in [0, r]).
    static LatticePath from_east_heights(const std::vector<int>& heights, int r);

    /// From a 1-based north position set (strictly increasing values in
    /// [1, n + |set|]); the east count n must be supplied.
    static LatticePath from_north_set(const std::vector<int>& north_positions, int n);

    const std::string& word() const { return word_; }
    int n() const { return n_; }
    int r() const { return r_; }

    /// Height of the k-th east step, k = 1..n, stored at [k-1].
    const std::vector<int>& east_heights() const { return east_heights_; }
    /// N(sigma): 1-based indices of the north steps, sorted.
    const std::vector<int>& north_positions() const { return north_positions_; }

    bool operator==(const LatticePath& o) const { return word_ == o.word_; }
    bool operator!=(const LatticePath& o) const { return word_ != o.word_; }

private:
    LatticePath() = default;
    void rebuild_caches();

    std::string word_;
    int n_ = 0;
    int r_ = 0;
    std::vector<int> east_heights_;
    std::vector<int> north_positions_;
};

/// N(sigma) as a fresh vector.
std::vector<int> north_set(const LatticePath& p);

/// m(sigma): exponent of x_i counts the north steps along the line x = i.
/// Width n + 1 (variables x_0..x_n); total degree r.
Monomial path_monomial(const LatticePath& p);

/// a lies on or above b at every east step. Requires shared (n, r).
bool lies_above(const LatticePath& a, const LatticePath& b);

/// sigma^+: drop the final east step, prepend an east step. Requires the
/// final step to be east. Shifts the monomial exponents one column right.
LatticePath plus_shift(const LatticePath& p);

/// sigma-bar: the squarefree embedding into paths to (n + r, r), with
/// N(sigma-bar) = {a_k + k} and m(sigma-bar) = x_{a_1}...x_{a_r}.
LatticePath embed_squarefree(const LatticePath& p);

/// Two paths alpha >= omega cutting out a matroid / polymatroid.
class BoundingPair {
public:
    BoundingPair(LatticePath alpha, LatticePath omega);
    static BoundingPair parse(std::string_view alpha_word, std::string_view omega_word);
    /// alpha = N^r E^n, omega = E^n N^r: no constraint besides the endpoint.
    static BoundingPair free_pair(int n, int r);

    const LatticePath& alpha() const { return alpha_; }
    const LatticePath& omega() const { return omega_; }
    int n() const { return alpha_.n(); }
    int r() const { return alpha_.r(); }

private:
    LatticePath alpha_;
    LatticePath omega_;
};

/// alpha and omega share no north steps (equivalently alpha^+ >= omega).
bool is_coloop_free(const BoundingPair& bp);

/// All paths sigma with alpha >= sigma >= omega, duplicate-free, ordered
/// lexicographically by east heights. Backtracks over bounded height
/// intervals rather than filtering all words.
std::vector<LatticePath> enumerate_paths(const BoundingPair& bp);

/// "{1,2,4,6}" text form.
std::string format_north_set(const std::vector<int>& nset);
std::vector<int> parse_north_set(std::string_view text);

} // namespace lpm

#endif
