#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthopack/adversaries.hpp"
#include "orthopack/match.hpp"
#include "orthopack/packer_misc.hpp"
#include "test_util.hpp"

#include <numeric>

using namespace orthopack;

namespace {
const Rational one(1);
}

TEST_CASE("family shapes have the stated parameters") {
    LShape l1 = lk_shape(1, 8);
    CHECK(l1.lx == Rational(9, 16));
    CHECK(l1.wx == Rational(1, 16));
    CHECK(l1.ly == Rational(3, 4));
    CHECK(l1.wy == Rational(1, 4));

    LShape l3 = lk_shape(3, 8);
    CHECK(l3.ly == Rational(15, 16));
    CHECK(l3.wy == Rational(1, 16));

    for (long i = 1; i <= 12; ++i) {
        LShape li = lk_shape(i, 8);
        CHECK(li.ly + li.wy == one);
    }
}

TEST_CASE("descending packings are the only valid ones") {
    std::vector<long> all(8);
    std::iota(all.begin(), all.end(), 1);
    CHECK(packing_ok(pack_lk_descending(all, 8)));
    CHECK(packing_ok(pack_lk_descending({4}, 8)));
    CHECK_THROWS(pack_lk_descending({1, 2, 3, 4, 5}, 4));  // more than k
    CHECK_THROWS(pack_lk_descending({1, 1}, 4));           // duplicates
}

TEST_CASE("packing-to-sorting adapter translates positions into slots") {
    // A packer that stacks whatever arrives gravity style (valid exactly for
    // descending prefixes of the family).
    class StackPacker : public OnlinePacker {
    public:
        std::string name() const override { return "stack"; }
        long bins_used() const override { return 1; }
        Placement place(const Shape& s) override {
            auto pos = stack_.try_add(std::get<LShape>(s));
            REQUIRE(pos);
            return Placement{0, pos->first, pos->second};
        }
    private:
        GravityStack stack_;
    };
    StackPacker packer;
    SortingFromPacking adapter(packer, 8);
    // Descending numbers arrive left to right; the slot order mirrors x so
    // that the array reads increasing: x = 0 -> slot k-1, rightmost -> slot 0.
    CHECK(adapter.present(8).slot == 7);
    CHECK(adapter.present(7).slot == 6);
    CHECK(adapter.present(6).slot == 5);
    CHECK(adapter.arrays_used() == 1);
    CHECK(((Rational(1, 2) - Rational(1, 16)) * Rational(16)).floor() == 7);
}

TEST_CASE("adapter rejects invalid inner placements") {
    class OverlapPacker : public OnlinePacker {
    public:
        std::string name() const override { return "overlapping"; }
        long bins_used() const override { return 1; }
        Placement place(const Shape&) override { return Placement{0, Rational(0), Rational(0)}; }
    };
    OverlapPacker packer;
    SortingFromPacking adapter(packer, 8);
    adapter.present(3);
    CHECK_THROWS_AS(adapter.present(5), PackerFailure);
}

TEST_CASE("composed presenter forces many bins while the certificate needs one") {
    FirstFitGravityPacker baseline;
    LkMatch match = presenter_vs_lk_packer(12, baseline);
    CHECK(match.bins >= 4);  // ceil(12 / floor(log2 13)) = 4
    CHECK(packing_ok(match.packing));
    Packing cert = pack_lk_descending(match.presented, 12);
    CHECK(packing_ok(cert));
    CHECK(cert.bin_count() == 1);
}

TEST_CASE("strip reduction arithmetic and bounds") {
    // n=4, strip x = 5/8: slot 5 = 1*4 + 1 -> bin 1, x' = 1/8.
    class FixedStrip : public OnlineStripPacker {
    public:
        std::string name() const override { return "fixed"; }
        std::pair<Rational, Rational> place(const LShape&) override {
            return {Rational(5, 8), Rational(0)};
        }
    };
    FixedStrip strip;
    BinFromStrip reduce(strip, 4);
    Placement p = reduce.place(Shape(lk_shape(2, 4)));
    CHECK(p.bin == 1);
    CHECK(p.x == Rational(1, 8));
    CHECK(p.y == one - lk_shape(2, 4).ly);

    // Slot strip packer on a descending sequence lands everything in bin 0.
    SlotStripPacker slots(4);
    BinFromStrip reduce2(slots, 4);
    Packing packing;
    for (long i = 4; i >= 1; --i) {
        Shape s = lk_shape(i, 4);
        packing.add(s, reduce2.place(s));
    }
    CHECK(packing.bin_count() == 1);
    CHECK(packing_ok(packing));
    for (std::size_t j = 0; j < packing.items.size(); ++j)
        CHECK(packing.items[j].second.x == Rational(j, 8));

    // Shelf strip packer: always valid, bins within ceil(ceil(2n width)/n).
    ShelfStripPacker shelf;
    BinFromStrip reduce3(shelf, 6);
    Packing p3;
    for (long i = 1; i <= 6; ++i) {
        Shape s = lk_shape(i, 6);
        p3.add(s, reduce3.place(s));
    }
    CHECK(packing_ok(p3));
    CHECK(p3.bin_count() <= reduce3.bin_bound());
}

TEST_CASE("z adversary emits the halving sequence") {
    ZAdversary adv(4);
    ZSkeleton z1 = adv.next();
    CHECK(z1.w == Rational(3, 4));
    CHECK(z1.b == Rational(1, 2));
    CHECK(z1.a == Rational(1, 2));
    // response in the left half: interval shrinks below
    adv.observe(Rational(0));
    CHECK(adv.next().b == Rational(1, 4));
    adv.observe(Rational(1, 8));  // right branch: (1-w)/2 = 1/16 < 1/8
    CHECK(adv.next().b == Rational(3, 8));
    adv.observe(Rational(0));
    CHECK(adv.b_hi() == Rational(3, 8));
    CHECK(adv.b_hi() - adv.b_lo() == Rational(1, 8));
}

TEST_CASE("z adversary state: interval halves, values stay dyadic") {
    Rng rng(77);
    ZAdversary adv(10);
    while (!adv.done()) {
        long i = adv.iteration();
        ZSkeleton z = adv.next();
        // width denominator 2^(i+1), base height denominator dividing 2^i
        CHECK(z.w == Rational(1) - Rational::pow2(-i - 1));
        CHECK((Rational::pow2(i) * z.b).is_integer());
        adv.observe((Rational(1) - z.w) * Rational(rng.uniform(0, 4), 4));
        CHECK(adv.b_hi() - adv.b_lo() == Rational::pow2(-i));
    }
}

TEST_CASE("z conflict predicate matches the lemma cases") {
    ZSkeleton z(Rational(3, 4), Rational(1, 2), Rational(1, 2));
    ZSkeleton zp(Rational(7, 8), Rational(1, 4), Rational(3, 4));
    // x' <= x
    CHECK(zskel_conflict(z, Rational(1, 8), zp, Rational(0)));
    // x' + w' <= x + w
    CHECK(zskel_conflict(z, Rational(1, 4), zp, Rational(1, 8)));
    // neither
    CHECK_FALSE(zskel_conflict(z, Rational(0), zp, Rational(1, 16)));
    CHECK_THROWS(zskel_conflict(z, Rational(0), z, Rational(0)));  // equal b
}

TEST_CASE("conflict predicate agrees with geometry on random hypothesis instances") {
    Rng rng(4242);
    for (int trial = 0; trial < 10000; ++trial) {
        long den = 256;
        // w, w' > 1/2; a + b = a' + b' = 1; distinct base heights.
        Rational w(rng.uniform(den / 2 + 1, den), den);
        Rational wp(rng.uniform(den / 2 + 1, den), den);
        long bnum = rng.uniform(1, den - 1);
        long bpnum = rng.uniform(1, den - 1);
        if (bnum == bpnum) continue;
        ZSkeleton z(w, Rational(den - bnum, den), Rational(bnum, den));
        ZSkeleton zp(wp, Rational(den - bpnum, den), Rational(bpnum, den));
        Rational x = (Rational(1) - w) * Rational(rng.uniform(0, 16), 16);
        Rational xp = (Rational(1) - wp) * Rational(rng.uniform(0, 16), 16);
        bool conflict = zskel_conflict(z, x, zp, xp);
        bool disjoint = skeleton_disjoint(Shape(z), {0, x, Rational(1)}, Shape(zp),
                                          {0, xp, Rational(1)});
        CHECK(conflict == !disjoint);
    }
}

TEST_CASE("ordered subdivision splits around the last skeleton") {
    // n = 1: both groups empty.
    ZAdversary tiny(1);
    tiny.next();
    tiny.observe(Rational(0));
    auto split1 = ordered_subdivision(tiny.trace());
    CHECK(split1.a_indices.empty());
    CHECK(split1.b_indices.empty());

    // Always-left responses keep shrinking downward: all previous skeletons
    // sit above the pivot.
    ZMatch left = z_adversary_match(5, make_z_policy("left", 0));
    auto split = ordered_subdivision(left.trace);
    CHECK(split.a_indices.size() == 4);
    CHECK(split.b_indices.empty());

    // Alternating responses ("left" when the midpoint test says so) verify
    // the co/contra monotone structure; failure would throw.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ZMatch m = z_adversary_match(6, make_z_policy("random", seed));
        CHECK_NOTHROW(ordered_subdivision(m.trace));
    }
}

TEST_CASE("monotone L-region packing keeps the stated gaps") {
    ZMatch m = z_adversary_match(6, make_z_policy("random", 7));
    auto split = ordered_subdivision(m.trace);
    Rational eps(1, 64);
    if (!split.b_indices.empty()) {
        std::vector<ZSkeleton> zs;
        for (auto j : split.b_indices) zs.push_back(m.trace[j].z);
        auto packed = pack_monotone_lregion(zs, eps, RegionOrientation::base_rises_with_width);
        REQUIRE(packed.up_arm_x.size() == zs.size());
        long k = static_cast<long>(zs.size());
        for (long r = 0; r < k; ++r)
            CHECK(packed.up_arm_x[r] == eps * Rational(r + 1, k));
        CHECK(packed.container.wx == eps);
        CHECK(packed.container.lx == eps + zs.back().w);
        // All segments stay inside the container region.
        for (long r = 0; r < k; ++r) {
            Rational x = packed.up_arm_x[r];
            CHECK(x <= eps);                                // upward arm in the strip
            CHECK(x + zs[r].w <= packed.container.lx);      // base span
            CHECK(zs[r].b <= packed.container.wy);          // base height
        }
    }
    // Single skeleton: container hugs it, position eps.
    auto single = pack_monotone_lregion({m.trace[0].z}, eps,
                                        RegionOrientation::base_rises_with_width);
    CHECK(single.up_arm_x == std::vector<Rational>{eps});
}

TEST_CASE("region packing validates its monotonicity hypotheses") {
    ZSkeleton small(Rational(3, 4), Rational(1, 2), Rational(1, 2));
    ZSkeleton large(Rational(7, 8), Rational(1, 4), Rational(3, 4));
    Rational eps(1, 32);
    CHECK_THROWS(pack_monotone_lregion({large, small}, eps,
                                       RegionOrientation::base_rises_with_width));
    CHECK_THROWS(pack_monotone_lregion({small, large}, eps,
                                       RegionOrientation::base_falls_with_width));
    CHECK_THROWS(pack_monotone_lregion({small, large}, Rational(0),
                                       RegionOrientation::base_rises_with_width));
}

TEST_CASE("k=2 recursion halves the inner region") {
    ZSkeleton small(Rational(3, 4), Rational(1, 2), Rational(1, 2));
    ZSkeleton large(Rational(7, 8), Rational(1, 4), Rational(3, 4));
    Rational eps(1, 32);
    auto packed =
        pack_monotone_lregion({small, large}, eps, RegionOrientation::base_rises_with_width);
    CHECK(packed.up_arm_x[0] == eps / Rational(2));
    CHECK(packed.up_arm_x[1] == eps);
}

TEST_CASE("certificate packs every trace into one bin with audited gaps") {
    for (long n : {1L, 2L, 5L, 8L}) {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            ZMatch m = z_adversary_match(n, make_z_policy("random", seed));
            Packing cert = zskel_certificate(m.trace);
            CHECK(cert.bin_count() == 1);
            CHECK(packing_ok(cert));
            auto gap = min_horizontal_gap(cert);
            REQUIRE(gap.has_value());
            CHECK(*gap >= zgon_thickness(n));
            auto sep = min_base_separation(cert);
            if (n > 1) {
                REQUIRE(sep.has_value());
                CHECK(*sep >= Rational::pow2(-n));
            }
            // Width identity: 4 eps + w_n = 1 for eps = 2^-(n+3).
            CHECK(Rational(4) * Rational::pow2(-n - 3) + m.trace.back().z.w == one);
        }
    }
}

TEST_CASE("conflict totality against placement policies") {
    for (long n : {2L, 6L, 10L}) {
        for (const char* policy : {"left", "right"}) {
            ZMatch m = z_adversary_match(n, make_z_policy(policy, 0));
            CHECK(m.conflicts_total);
            CHECK(m.predicates_agree);
        }
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            ZMatch m = z_adversary_match(n, make_z_policy("random", seed));
            CHECK(m.conflicts_total);
            CHECK(m.predicates_agree);
        }
    }
}

TEST_CASE("thickening preserves the certificate and the conflicts") {
    // t = 0 keeps the skeleton geometry.
    ZSkeleton z(Rational(3, 4), Rational(1, 2), Rational(1, 2));
    ZShape degenerate = thicken(z, Rational(0));
    CHECK(degenerate.height() == one);

    // n = 4 trace: thickness 2^-7 / 4 = 1/512.
    CHECK(zgon_thickness(4) == Rational(1, 512));

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        ZMatch m = z_adversary_match(4, make_z_policy("random", seed));
        Packing cert = zskel_certificate(m.trace);
        Packing thick = thicken_packing(cert, zgon_thickness(4));
        CHECK(packing_ok(thick));

        ZMatch solid = zshape_adversary_match(4, make_z_policy("random", seed), seed);
        CHECK(solid.conflicts_total);
    }
}

TEST_CASE("density upper-bound instances fill bins to the stated capacity") {
    Rational t(3, 4), w(1, 100);
    CHECK(density_ub_bound(t) == Rational(3, 8));
    CHECK(density_ub_per_bin_capacity(t, w) == 26);

    auto items = density_ub_instance(t, w, 26);
    GravityStack g;
    long placed = 0;
    for (const auto& it : items)
        if (g.try_add(it)) ++placed;
    CHECK(placed == 26);
    CHECK_FALSE(g.try_add(items.front()).has_value());  // bin is full at capacity

    // One-bin total area identity.
    Rational total = Rational(26) * items.front().area();
    CHECK(total == Rational(149, 100) * Rational(26, 100));
    CHECK_THROWS(density_ub_instance(Rational(1, 3), w, 1));
}
