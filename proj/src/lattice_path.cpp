#include "lpm/lattice_path.hpp"

#include <algorithm>
#include <cctype>

#include "lpm/errors.hpp"

namespace lpm {

void LatticePath::rebuild_caches() {
    n_ = 0;
    r_ = 0;
    east_heights_.clear();
    north_positions_.clear();
    int height = 0;
    for (size_t k = 0; k < word_.size(); ++k) {
        if (word_[k] == 'N') {
            ++height;
            north_positions_.push_back(static_cast<int>(k) + 1);
        } else {
            east_heights_.push_back(height);
        }
    }
    n_ = static_cast<int>(east_heights_.size());
    r_ = height;
}

LatticePath LatticePath::parse(std::string_view word) {
    if (word.empty()) throw InputError("parse error: empty path word");
    for (size_t k = 0; k < word.size(); ++k) {
        if (word[k] != 'N' && word[k] != 'E')
            throw InputError("parse error at position " + std::to_string(k + 1) +
                             ": unexpected character '" + std::string(1, word[k]) + "'");
    }
    LatticePath p;
    p.word_.assign(word);
    p.rebuild_caches();
    return p;
}

LatticePath LatticePath::from_east_heights(const std::vector<int>& heights, int r) {
    if (r < 0) throw InputError("negative rank");
    int prev = 0;
    std::string word;
    for (int h : heights) {
        if (h < prev || h > r) throw InputError("east heights must be nondecreasing within [0, r]");
        word.append(static_cast<size_t>(h - prev), 'N');
        word += 'E';
        prev = h;
    }
    word.append(static_cast<size_t>(r - prev), 'N');
    if (word.empty()) throw InputError("empty path (n = r = 0)");
    LatticePath p;
    p.word_ = std::move(word);
    p.rebuild_caches();
    return p;
}

LatticePath LatticePath::from_north_set(const std::vector<int>& north_positions, int n) {
    int r = static_cast<int>(north_positions.size());
    int len = n + r;
    if (len < 1) throw InputError("empty path (n = r = 0)");
    std::string word(static_cast<size_t>(len), 'E');
    int prev = 0;
    for (int pos : north_positions) {
        if (pos <= prev || pos > len)
            throw InputError("north set must be strictly increasing within [1, " + std::to_string(len) + "]");
        word[static_cast<size_t>(pos - 1)] = 'N';
        prev = pos;
    }
    LatticePath p;
    p.word_ = std::move(word);
    p.rebuild_caches();
    return p;
}

std::vector<int> north_set(const LatticePath& p) { return p.north_positions(); }

Monomial path_monomial(const LatticePath& p) {
    std::vector<int> exps(static_cast<size_t>(p.n()) + 1, 0);
    int prev = 0;
    const auto& h = p.east_heights();
    for (int i = 0; i < p.n(); ++i) {
        exps[static_cast<size_t>(i)] = h[static_cast<size_t>(i)] - prev;
        prev = h[static_cast<size_t>(i)];
    }
    exps[static_cast<size_t>(p.n())] = p.r() - prev;
    return Monomial(std::move(exps));
}

bool lies_above(const LatticePath& a, const LatticePath& b) {
    if (a.n() != b.n() || a.r() != b.r())
        throw InputError("paths have different shapes: (" + std::to_string(a.n()) + "," +
                         std::to_string(a.r()) + ") vs (" + std::to_string(b.n()) + "," +
                         std::to_string(b.r()) + ")");
    for (int k = 0; k < a.n(); ++k) {
        if (a.east_heights()[static_cast<size_t>(k)] < b.east_heights()[static_cast<size_t>(k)]) return false;
    }
    return true;
}

LatticePath plus_shift(const LatticePath& p) {
    if (p.word().back() != 'E')
        throw InputError("plus shift requires the final step to be east");
    std::string word = "E" + p.word().substr(0, p.word().size() - 1);
    return LatticePath::parse(word);
}

LatticePath embed_squarefree(const LatticePath& p) {
    std::vector<int> shifted;
    shifted.reserve(p.north_positions().size());
    int k = 1;
    for (int a : p.north_positions()) shifted.push_back(a + k++);
    return LatticePath::from_north_set(shifted, p.n() + p.r());
}

BoundingPair::BoundingPair(LatticePath alpha, LatticePath omega)
    : alpha_(std::move(alpha)), omega_(std::move(omega)) {
    if (!lies_above(alpha_, omega_))
        throw InputError("alpha does not lie above omega");
}

BoundingPair BoundingPair::parse(std::string_view alpha_word, std::string_view omega_word) {
    return BoundingPair(LatticePath::parse(alpha_word), LatticePath::parse(omega_word));
}

BoundingPair BoundingPair::free_pair(int n, int r) {
    if (n < 0 || r < 0 || n + r < 1) throw InputError("free pair needs n + r >= 1");
    std::string a = std::string(static_cast<size_t>(r), 'N') + std::string(static_cast<size_t>(n), 'E');
    std::string o = std::string(static_cast<size_t>(n), 'E') + std::string(static_cast<size_t>(r), 'N');
    return BoundingPair(LatticePath::parse(a), LatticePath::parse(o));
}

bool is_coloop_free(const BoundingPair& bp) {
    const auto& a = bp.alpha().north_positions();
    const auto& o = bp.omega().north_positions();
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), o.begin(), o.end(), std::back_inserter(common));
    return common.empty();
}

std::vector<LatticePath> enumerate_paths(const BoundingPair& bp) {
    const int n = bp.n();
    const int r = bp.r();
    const auto& hi = bp.alpha().east_heights();
    const auto& lo = bp.omega().east_heights();
    std::vector<LatticePath> out;
    std::vector<int> cur(static_cast<size_t>(n), 0);

    // Heights are chosen left to right; each interval is clipped below by
    // the previous height, so no dead branches are entered.
    auto rec = [&](auto&& self, int k, int prev) -> void {
        if (k == n) {
            out.push_back(LatticePath::from_east_heights(cur, r));
            return;
        }
        int from = std::max(prev, lo[static_cast<size_t>(k)]);
        int to = hi[static_cast<size_t>(k)];
        for (int h = from; h <= to; ++h) {
            cur[static_cast<size_t>(k)] = h;
            self(self, k + 1, h);
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::string format_north_set(const std::vector<int>& nset) {
    std::string out = "{";
    for (size_t i = 0; i < nset.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(nset[i]);
    }
    out += '}';
    return out;
}

std::vector<int> parse_north_set(std::string_view text) {
    size_t b = text.find('{');
    size_t e = text.rfind('}');
    if (b == std::string_view::npos || e == std::string_view::npos || e < b)
        throw InputError("north set must be of the form {1,2,4,6}");
    std::vector<int> out;
    std::string_view body = text.substr(b + 1, e - b - 1);
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        int v = 0;
        bool any = false;
        for (char c : tok) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InputError("north set entry is not a number: '" + std::string(tok) + "'");
            v = v * 10 + (c - '0');
            any = true;
        }
        if (!any) throw InputError("empty north set entry");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace lpm
