#ifndef LPM_TESTS_ORACLES_HPP
#define LPM_TESTS_ORACLES_HPP

// Independent oracles for the test suite. These deliberately avoid the
// library's enumeration and comparison code paths: counts come from a
// transfer recurrence, path sets from brute-force word filtering, and the
// l-vector round-trip from a standalone reconstruction.

#include <string>
#include <vector>

#include "lpm/lattice_path.hpp"
#include "lpm/order.hpp"

namespace oracle {

/// Number of bounded paths via the interval transfer recurrence
/// f_k(h) = sum_{h' <= h} f_{k-1}(h') over omega_k <= h <= alpha_k.
inline long long dp_path_count(const lpm::BoundingPair& bp) {
    const int n = bp.n();
    const int r = bp.r();
    const auto& hi = bp.alpha().east_heights();
    const auto& lo = bp.omega().east_heights();
    std::vector<long long> f(static_cast<size_t>(r) + 1, 0);
    f[0] = 1;
    for (int k = 0; k < n; ++k) {
        std::vector<long long> g(static_cast<size_t>(r) + 1, 0);
        long long prefix = 0;
        for (int h = 0; h <= r; ++h) {
            prefix += f[static_cast<size_t>(h)];
            if (h >= lo[static_cast<size_t>(k)] && h <= hi[static_cast<size_t>(k)])
                g[static_cast<size_t>(h)] = prefix;
        }
        f = std::move(g);
    }
    long long total = 0;
    for (long long v : f) total += v;
    return total;
}

/// Every word with n east and r north steps, filtered by the bounds.
inline std::vector<std::string> brute_force_paths(const lpm::BoundingPair& bp) {
    const int n = bp.n();
    const int r = bp.r();
    std::vector<std::string> out;
    std::string word(static_cast<size_t>(n + r), 'E');
    auto rec = [&](auto&& self, int pos, int norths) -> void {
        if (pos == n + r) {
            if (norths != r) return;
            lpm::LatticePath p = lpm::LatticePath::parse(word);
            if (lpm::lies_above(bp.alpha(), p) && lpm::lies_above(p, bp.omega())) out.push_back(word);
            return;
        }
        word[static_cast<size_t>(pos)] = 'E';
        self(self, pos + 1, norths);
        if (norths < r) {
            word[static_cast<size_t>(pos)] = 'N';
            self(self, pos + 1, norths + 1);
            word[static_cast<size_t>(pos)] = 'E';
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Rebuilds the path from its l-vector: within each column the flagged row
/// is the running height, columns without a flag carry the height over,
/// and the final column's north steps are forced by the endpoint.
inline lpm::LatticePath path_from_l_vector(const lpm::LVector& v, int n, int r) {
    std::vector<int> heights;
    int h = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = r; j >= 1; --j) {
            if (v[static_cast<size_t>(i * r + (r - j))] != 0) {
                h = j;
                break;
            }
        }
        heights.push_back(h);
    }
    return lpm::LatticePath::from_east_heights(heights, r);
}

/// All bounding pairs (alpha, omega) with alpha >= omega for one (n, r).
inline std::vector<lpm::BoundingPair> all_bounding_pairs(int n, int r) {
    auto paths = lpm::enumerate_paths(lpm::BoundingPair::free_pair(n, r));
    std::vector<lpm::BoundingPair> out;
    for (const auto& a : paths) {
        for (const auto& o : paths) {
            if (lpm::lies_above(a, o)) out.emplace_back(a, o);
        }
    }
    return out;
}

} // namespace oracle

#endif
