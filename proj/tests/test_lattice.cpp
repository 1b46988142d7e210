#include <doctest.h>

#include <algorithm>
#include <set>

#include "lpm/errors.hpp"
#include "lpm/lattice_path.hpp"
#include "oracles.hpp"

using namespace lpm;

namespace {
const char* kDemoAlpha = "NNENENEE"; // N(alpha) = {1,2,4,6}
const char* kDemoOmega = "EENENENN"; // N(omega) = {3,5,7,8}
const char* kDemoSigma = "ENNNEENE"; // the bold path, m = x1^3*x3
} // namespace

TEST_CASE("parse_path") {
    LatticePath p = LatticePath::parse(kDemoAlpha);
    CHECK(p.n() == 4);
    CHECK(p.r() == 4);
    CHECK(p.north_positions() == std::vector<int>{1, 2, 4, 6});

    LatticePath q = LatticePath::parse("EN");
    CHECK(q.n() == 1);
    CHECK(q.r() == 1);
    CHECK(q.north_positions() == std::vector<int>{2});

    CHECK_THROWS_WITH_AS(LatticePath::parse("NXE"), doctest::Contains("position 2"), InputError);
    CHECK_THROWS_AS(LatticePath::parse(""), InputError);
}

TEST_CASE("north_set") {
    CHECK(north_set(LatticePath::parse(kDemoSigma)) == std::vector<int>{2, 3, 4, 7});
    CHECK(north_set(LatticePath::parse(kDemoOmega)) == std::vector<int>{3, 5, 7, 8});
    CHECK(north_set(LatticePath::parse("EN")) == std::vector<int>{2});
}

TEST_CASE("path_monomial") {
    CHECK(path_monomial(LatticePath::parse(kDemoSigma)).str() == "x1^3*x3");
    CHECK(path_monomial(LatticePath::parse(kDemoAlpha)).str() == "x0^2*x1*x2");
    CHECK(path_monomial(LatticePath::parse("EN")).str() == "x1");
}

TEST_CASE("lies_above") {
    LatticePath a = LatticePath::parse(kDemoAlpha);
    LatticePath o = LatticePath::parse(kDemoOmega);
    CHECK(lies_above(a, o));
    CHECK(lies_above(a, a));
    CHECK_FALSE(lies_above(o, a));
    CHECK_THROWS_AS(lies_above(a, LatticePath::parse("EN")), InputError);
}

TEST_CASE("plus_shift") {
    LatticePath shifted = plus_shift(LatticePath::parse(kDemoAlpha));
    CHECK(shifted.word() == "ENNENENE");
    CHECK(shifted.north_positions() == std::vector<int>{2, 3, 5, 7});
    CHECK(plus_shift(LatticePath::parse("NE")).word() == "EN");
    CHECK_THROWS_AS(plus_shift(LatticePath::parse("EN")), InputError);
}

TEST_CASE("plus_shift right-shifts the monomial exponents") {
    for (const LatticePath& p : enumerate_paths(BoundingPair::free_pair(3, 3))) {
        if (p.word().back() != 'E') continue;
        auto d = path_monomial(p).exponents();
        auto shifted = path_monomial(plus_shift(p)).exponents();
        CHECK(shifted[0] == 0);
        for (size_t i = 0; i + 1 < d.size(); ++i) CHECK(shifted[i + 1] == d[i]);
    }
}

TEST_CASE("is_coloop_free") {
    CHECK(is_coloop_free(BoundingPair::parse(kDemoAlpha, kDemoOmega)));
    CHECK_FALSE(is_coloop_free(BoundingPair::parse("NE", "NE")));
    CHECK_FALSE(is_coloop_free(BoundingPair::parse("NNEE", "ENEN")));
}

TEST_CASE("coloop-freeness implies the plus-shift criterion") {
    // Disjoint north index sets force disjoint north segments, so the
    // shifted upper path still bounds omega. The converse fails (same
    // index, different segment), e.g. alpha=NENEE, omega=EENNE.
    for (const BoundingPair& bp : oracle::all_bounding_pairs(3, 2)) {
        if (!is_coloop_free(bp)) continue;
        CHECK(bp.alpha().word().back() == 'E');
        CHECK(lies_above(plus_shift(bp.alpha()), bp.omega()));
    }
    BoundingPair pinched = BoundingPair::parse("NENEE", "EENNE");
    CHECK_FALSE(is_coloop_free(pinched));
    CHECK(lies_above(plus_shift(pinched.alpha()), pinched.omega()));
}

TEST_CASE("embed_squarefree") {
    LatticePath sigma = LatticePath::parse(kDemoSigma);
    LatticePath bar = embed_squarefree(sigma);
    CHECK(bar.north_positions() == std::vector<int>{3, 5, 7, 11});
    CHECK(path_monomial(bar).str() == "x2*x3*x4*x7");

    CHECK(embed_squarefree(LatticePath::parse("NE")).north_positions() == std::vector<int>{2});
    CHECK(path_monomial(embed_squarefree(LatticePath::parse("NE"))).str() == "x1");
    CHECK(embed_squarefree(LatticePath::parse("EN")).north_positions() == std::vector<int>{3});
    CHECK(path_monomial(embed_squarefree(LatticePath::parse("EN"))).str() == "x2");
}

TEST_CASE("enumerate_paths") {
    BoundingPair demo = BoundingPair::parse(kDemoAlpha, kDemoOmega);
    auto paths = enumerate_paths(demo);
    CHECK(paths.size() == 54);
    CHECK(oracle::dp_path_count(demo) == 54);

    LatticePath a = LatticePath::parse(kDemoAlpha);
    auto single = enumerate_paths(BoundingPair(a, a));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == a);

    CHECK(enumerate_paths(BoundingPair::free_pair(1, 1)).size() == 2);
}

TEST_CASE("enumeration agrees with the word-filter oracle and the DP count") {
    for (int n = 1; n <= 3; ++n) {
        for (int r = 1; r <= 3; ++r) {
            for (const BoundingPair& bp : oracle::all_bounding_pairs(n, r)) {
                auto fast = enumerate_paths(bp);
                auto brute = oracle::brute_force_paths(bp);
                REQUIRE(fast.size() == brute.size());
                CHECK(static_cast<long long>(fast.size()) == oracle::dp_path_count(bp));
                std::set<std::string> fast_words;
                for (const auto& p : fast) fast_words.insert(p.word());
                CHECK(fast_words == std::set<std::string>(brute.begin(), brute.end()));
            }
        }
    }
    // and the demo instance against the word filter
    BoundingPair demo = BoundingPair::parse(kDemoAlpha, kDemoOmega);
    CHECK(oracle::brute_force_paths(demo).size() == 54);
}

TEST_CASE("lies_above is a partial order") {
    auto paths = enumerate_paths(BoundingPair::free_pair(3, 2));
    for (const auto& a : paths) CHECK(lies_above(a, a));
    for (const auto& a : paths) {
        for (const auto& b : paths) {
            if (lies_above(a, b) && lies_above(b, a)) CHECK(a == b);
            for (const auto& c : paths) {
                if (lies_above(a, b) && lies_above(b, c)) CHECK(lies_above(a, c));
            }
        }
    }
}

TEST_CASE("north-set criterion for the bounding order") {
    for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 4; ++r) {
            auto paths = enumerate_paths(BoundingPair::free_pair(n, r));
            for (const auto& a : paths) {
                for (const auto& b : paths) {
                    bool criterion = true;
                    for (size_t k = 0; k < a.north_positions().size(); ++k) {
                        if (a.north_positions()[k] > b.north_positions()[k]) criterion = false;
                    }
                    CHECK(lies_above(a, b) == criterion);
                }
            }
        }
    }
}

TEST_CASE("embedding is injective, order-faithful, and squarefree") {
    for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 4; ++r) {
            auto paths = enumerate_paths(BoundingPair::free_pair(n, r));
            std::set<std::string> images;
            for (const auto& p : paths) {
                LatticePath bar = embed_squarefree(p);
                CHECK(bar.n() == n + r);
                CHECK(bar.r() == r);
                CHECK(path_monomial(bar).is_squarefree());
                images.insert(bar.word());
            }
            CHECK(images.size() == paths.size());
            for (const auto& a : paths) {
                for (const auto& b : paths) {
                    CHECK(lies_above(a, b) == lies_above(embed_squarefree(a), embed_squarefree(b)));
                }
            }
        }
    }
}

TEST_CASE("north set text form round-trips") {
    CHECK(format_north_set({1, 2, 4, 6}) == "{1,2,4,6}");
    CHECK(parse_north_set("{1,2,4,6}") == std::vector<int>{1, 2, 4, 6});
    LatticePath p = LatticePath::from_north_set({2, 3, 4, 7}, 4);
    CHECK(p.word() == std::string(kDemoSigma));
    CHECK_THROWS_AS(parse_north_set("1,2"), InputError);
    CHECK_THROWS_AS(LatticePath::from_north_set({3, 2}, 2), InputError);
}
