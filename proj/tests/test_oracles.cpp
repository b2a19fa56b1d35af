#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthopack/geometry.hpp"
#include "orthopack/oracles.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <numeric>

using namespace orthopack;
using namespace orthopack::testutil;

namespace {

// Exists-a-permutation reference for single-bin feasibility.
bool brute_feasible(std::vector<LShape> items) {
    std::vector<std::size_t> order(items.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end());
    do {
        GravityStack g;
        bool ok = true;
        for (auto i : order) ok = ok && g.try_add(items[i]).has_value();
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

// Exhaustive search over all set partitions (canonical restricted-growth
// enumeration), each block checked by the permutation oracle.
int brute_min_bins(const std::vector<LShape>& items) {
    int n = static_cast<int>(items.size());
    if (n == 0) return 0;
    int best = n;
    std::vector<std::vector<LShape>> blocks;
    auto rec = [&](auto&& self, int i) -> void {
        if (static_cast<int>(blocks.size()) >= best) return;  // prune
        if (i == n) {
            bool all = true;
            for (const auto& b : blocks) all = all && brute_feasible(b);
            if (all) best = std::min(best, static_cast<int>(blocks.size()));
            return;
        }
        for (std::size_t bi = 0, count = blocks.size(); bi < count; ++bi) {
            blocks[bi].push_back(items[i]);
            self(self, i + 1);
            blocks[bi].pop_back();
        }
        blocks.emplace_back(std::vector<LShape>{items[i]});
        self(self, i + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
    return best;
}

LShape sym(const Rational& l, const Rational& w) { return LShape(l, w, l, w); }

}  // namespace

TEST_CASE("edd feasibility boundary cases") {
    LShape copy = sym(Rational(9, 10), Rational(1, 20));
    CHECK(edd_feasible({copy, copy, copy}));             // last start exactly at the deadline
    CHECK_FALSE(edd_feasible({copy, copy, copy, copy}));  // one more breaks it
    CHECK(edd_feasible({sym(Rational(1), Rational(1))}));
    CHECK(edd_feasible({}));
    CHECK_THROWS(edd_feasible({LShape(Rational(1, 4), Rational(1, 8), Rational(1, 4),
                                      Rational(1, 8))}));  // not large
}

TEST_CASE("edd equals brute permutation search on random instances") {
    Rng rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<LShape> items;
        long n = rng.uniform(1, 7);
        for (long i = 0; i < n; ++i) items.push_back(random_large_symmetric(rng, 5));
        CHECK(edd_feasible(items) == brute_feasible(items));
    }
}

TEST_CASE("subset-DP optimum matches examples and brute force") {
    LShape stackable = sym(Rational(9, 10), Rational(1, 30));
    CHECK(opt_bins_large_symmetric({stackable, stackable, stackable}) == 1);

    // Items too wide to stack pairwise need a bin each.
    LShape alone = sym(Rational(3, 4), Rational(1, 2));
    CHECK(opt_bins_large_symmetric({alone, alone, alone}) == 3);
    CHECK(opt_bins_large_symmetric({}) == 0);

    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<LShape> items;
        long n = rng.uniform(1, 8);
        for (long i = 0; i < n; ++i) items.push_back(random_large_symmetric(rng, 4));
        CHECK(opt_bins_large_symmetric(items) == brute_min_bins(items));
    }
}

TEST_CASE("1d optimum") {
    CHECK(opt_bins_1d({Rational(1, 2), Rational(1, 2), Rational(3, 5)}, Rational(1)) == 2);
    CHECK(opt_bins_1d({}, Rational(1)) == 0);
    CHECK(opt_bins_1d({Rational(1), Rational(1)}, Rational(1)) == 2);
    CHECK_THROWS(opt_bins_1d({Rational(2)}, Rational(1)));
}

TEST_CASE("optima are monotone and at least the size bound") {
    Rng rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rational> sizes;
        long n = rng.uniform(1, 8);
        for (long i = 0; i < n; ++i) sizes.push_back(Rational(rng.uniform(1, 16), 16));
        int full = opt_bins_1d(sizes, Rational(1));
        Rational total;
        for (const auto& s : sizes) total += s;
        CHECK(full >= static_cast<int>((-((-total).floor()))));  // ceil(sum)
        std::vector<Rational> fewer(sizes.begin(), sizes.end() - 1);
        CHECK(opt_bins_1d(fewer, Rational(1)) <= full);
    }
}

TEST_CASE("competitive report bookkeeping") {
    auto r = competitive_report(41 * 7 + 9, 7, 9);
    CHECK(r.asymptotic == Rational(41));
    CHECK(r.valid);
    auto even = competitive_report(5, 5, 0);
    CHECK(even.absolute == Rational(1));
    auto bad = competitive_report(3, 0, 0);
    CHECK_FALSE(bad.valid);
    auto empty = competitive_report(0, 0, 0);
    CHECK(empty.valid);
}
