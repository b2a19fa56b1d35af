#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthopack/oracles.hpp"
#include "orthopack/packer_misc.hpp"
#include "test_util.hpp"

#include <set>

using namespace orthopack;
using namespace orthopack::testutil;

namespace {
LShape sym(const Rational& l, const Rational& w) { return LShape(l, w, l, w); }
}

TEST_CASE("trivial packer: one bin per item, always valid") {
    TrivialPacker p;
    Packing packing;
    packing.add(Shape(sym(Rational(1, 2), Rational(1, 4))),
                p.place(Shape(sym(Rational(1, 2), Rational(1, 4)))));
    Shape z(ZShape::equal_thickness(Rational(3, 4), Rational(1, 2), Rational(1, 2),
                                    Rational(1, 8)));
    packing.add(z, p.place(z));
    Shape zs(ZSkeleton(Rational(3, 4), Rational(1, 4), Rational(1, 4)));
    CHECK(p.place(zs).bin == 2);
    CHECK(p.bins_used() == 3);
    CHECK(packing_ok(packing));

    TrivialPacker empty;
    CHECK(empty.bins_used() == 0);
}

TEST_CASE("symmetric combiner routes by arm length, half goes small") {
    SymmetricPacker p;
    Packing packing;
    Shape small(sym(Rational(1, 2), Rational(1, 4)));  // exactly 1/2: small pool
    Shape large(sym(Rational(3, 4), Rational(1, 4)));
    packing.add(small, p.place(small));
    packing.add(large, p.place(large));
    CHECK(p.small_pool_bins() == 1);
    CHECK(p.large_pool_bins() == 1);
    CHECK(p.bins_used() == 2);
    CHECK(packing_ok(packing));

    CHECK_THROWS_AS(p.place(Shape(LShape(Rational(3, 4), Rational(1, 4), Rational(1, 2),
                                         Rational(1, 4)))),
                    PackerFailure);  // asymmetric
}

TEST_CASE("combiner with only small items equals the small pool") {
    Rng rng(3030);
    SymmetricPacker combined;
    SmallLPacker mirror;
    for (int i = 0; i < 200; ++i) {
        long den = 64;
        long l = rng.uniform(1, 32);
        LShape s = sym(Rational(l, den), Rational(rng.uniform(1, l), den));
        combined.place(Shape(s));
        mirror.place(Shape(s));
    }
    CHECK(combined.large_pool_bins() == 0);
    CHECK(combined.bins_used() == mirror.bins_used());
}

TEST_CASE("combiner bound: bins within 41 LB + 9 on mixed streams") {
    Rng rng(2024);
    for (int stream = 0; stream < 40; ++stream) {
        SymmetricPacker p;
        Packing packing;
        Rational area;
        std::vector<LShape> larges;
        long n = rng.uniform(1, 14);
        for (long i = 0; i < n; ++i) {
            LShape s = rng.coin() ? random_large_symmetric(rng) : [&] {
                long den = 64;
                long l = rng.uniform(1, den / 2);
                long w = rng.uniform(1, l);
                return sym(Rational(l, den), Rational(w, den));
            }();
            area += s.area();
            if (s.lx > Rational(1, 2)) larges.push_back(s);
            packing.add(Shape(s), p.place(Shape(s)));
        }
        CHECK(packing_ok(packing));
        long lb = std::max(1L, static_cast<long>((-(-area).floor())));
        if (!larges.empty() && larges.size() <= 15)
            lb = std::max(lb, static_cast<long>(opt_bins_large_symmetric(larges)));
        CHECK(p.bins_used() <= 41 * lb + 9);
        CHECK(p.bins_used() == p.small_pool_bins() + p.large_pool_bins());
    }
}

TEST_CASE("L-skeleton packer: diagonal rule with midpoint collisions") {
    LSkelPacker p;
    Placement first = p.place(Shape(LSkeleton(Rational(9, 10), Rational(7, 10))));
    CHECK(first.x == Rational(1, 10));  // 1 - max arm
    CHECK(first.y == first.x);
    Placement second = p.place(Shape(LSkeleton(Rational(9, 10), Rational(1, 2))));
    CHECK(second.x == Rational(1, 20));  // midpoint of (0, 1/10)
    Placement third = p.place(Shape(LSkeleton(Rational(9, 10), Rational(1, 5))));
    CHECK(third.x == Rational(3, 40));  // midpoint of (1/20, 1/10)
    CHECK(p.bins_used() == 1);

    CHECK_THROWS_AS(p.place(Shape(ZSkeleton(Rational(1, 2), Rational(1, 4), Rational(1, 4)))),
                    PackerFailure);
}

TEST_CASE("L-skeleton packer: full arms run NextFit") {
    LSkelPacker p;
    Packing packing;
    for (const Rational& ly : {Rational(1, 2), Rational(3, 5), Rational(1, 2)}) {
        Shape s(LSkeleton(Rational(1), ly));
        packing.add(s, p.place(s));
    }
    CHECK(p.nextfit_bins_s2() == 3);  // {1/2}, {3/5}, {1/2}
    CHECK(packing_ok(packing));
    // Exact 1D optimum is 2; NextFit respects 2 OPT - 1.
    CHECK(opt_bins_1d({Rational(1, 2), Rational(3, 5), Rational(1, 2)}, Rational(1)) == 2);
    CHECK(p.nextfit_bins_s2() <= 2 * 2 - 1);
}

TEST_CASE("L-skeleton packer: random mixed streams stay valid and bounded") {
    Rng rng(88);
    for (int stream = 0; stream < 60; ++stream) {
        LSkelPacker p;
        Packing packing;
        std::vector<Rational> s2, s3;
        bool s1 = false;
        long n = rng.uniform(1, 14);
        for (long i = 0; i < n; ++i) {
            long den = 64;
            LSkeleton s(Rational(1), Rational(1));
            switch (rng.uniform(0, 2)) {
                case 0:
                    s = LSkeleton(Rational(rng.uniform(1, den - 1), den),
                                  Rational(rng.uniform(1, den - 1), den));
                    s1 = true;
                    break;
                case 1:
                    s = LSkeleton(Rational(1), Rational(rng.uniform(1, den), den));
                    s2.push_back(s.ly);
                    break;
                default:
                    s = LSkeleton(Rational(rng.uniform(1, den), den), Rational(1));
                    s3.push_back(s.lx);
            }
            packing.add(Shape(s), p.place(Shape(s)));
        }
        CHECK(packing_ok(packing));
        long opt23 = opt_bins_1d(s2, Rational(1)) + opt_bins_1d(s3, Rational(1));
        CHECK(p.bins_used() <= std::max(1L, 2 * opt23));
        (void)s1;
    }
}

TEST_CASE("critical density layout for t = 1/2") {
    CriticalDensityPacker p(Rational(1, 2));
    CHECK(p.budget() == Rational(1, 1000));
    CHECK(p.small_threshold() == Rational(1, 20));  // a
    // Subcontainers tile the unit square edge to edge.
    CHECK(p.region_ll().x1 == Rational(3, 5));      // t + h
    CHECK(p.region_ls().y1 == Rational(1));         // t + h + 4h = 1
    CHECK(p.region_sl().x1 == Rational(1));
    CHECK(p.region_ss().x1 == Rational(1));
    CHECK(p.region_ss().y1 == Rational(1));
}

TEST_CASE("critical density subcontainers are disjoint and inside the bin") {
    for (const Rational& t : {Rational(3, 10), Rational(1, 2), Rational(9, 10), Rational(1, 7)}) {
        CriticalDensityPacker p(t);
        std::vector<Rect> regions{p.region_ll(), p.region_ls(), p.region_sl(), p.region_ss()};
        for (std::size_t i = 0; i < regions.size(); ++i) {
            CHECK(regions[i].x0 >= Rational(0));
            CHECK(regions[i].y0 >= Rational(0));
            CHECK(regions[i].x1 <= Rational(1));
            CHECK(regions[i].y1 <= Rational(1));
            for (std::size_t j = i + 1; j < regions.size(); ++j)
                CHECK_FALSE(interiors_overlap(regions[i], regions[j]));
        }
    }
}

TEST_CASE("critical density: budget-respecting streams stay in one valid bin") {
    std::uint64_t seed = 1;
    for (const Rational& t : {Rational(3, 10), Rational(1, 2), Rational(9, 10)}) {
        Rng rng(seed++);
        for (int stream = 0; stream < 60; ++stream) {
            CriticalDensityPacker p(t);
            Packing packing;
            for (int i = 0; i < 40; ++i) {
                long den = 256;
                Rational lx = t * Rational(rng.uniform(1, den), den);
                Rational ly = t * Rational(rng.uniform(1, den), den);
                Rational wx = lx * Rational(rng.uniform(1, den), den);
                Rational wy = ly * Rational(rng.uniform(1, den), den);
                LShape s(lx, wx, ly, wy);
                try {
                    packing.add(Shape(s), p.place(Shape(s)));
                } catch (const CriticalDensityPacker::OverBudget&) {
                    break;
                }
            }
            CHECK(p.bins_used() <= 1);
            CHECK(packing_ok(packing));
        }
    }
}

TEST_CASE("critical density routes tiny-armed items through the scaled sub-squares") {
    CriticalDensityPacker p(Rational(1, 2));  // a = 1/20
    Packing packing;
    Rect ss = p.region_ss();
    for (int i = 0; i < 10; ++i) {
        // both arms at most a: the scaled small packer owns these
        LShape s(Rational(1, 80), Rational(1, 160), Rational(1, 100), Rational(1, 200));
        Placement at = p.place(Shape(s));
        CHECK(at.x >= ss.x0);
        CHECK(at.y >= ss.y0);
        CHECK(at.x + s.lx <= ss.x1);
        CHECK(at.y + s.ly <= ss.y1);
        packing.add(Shape(s), at);
    }
    CHECK(packing_ok(packing));
}

TEST_CASE("zero-height full-arm skeletons never stack onto an occupied offset") {
    LSkelPacker p;
    Packing packing;
    // A zero-size item occupies the offset without advancing the fill; the
    // next item at the same offset must go to a fresh bin.
    Shape zero(LSkeleton(Rational(1), Rational(0)));
    Shape half(LSkeleton(Rational(1), Rational(1, 2)));
    packing.add(zero, p.place(zero));
    packing.add(zero, p.place(zero));  // same offset occupied -> new bin
    packing.add(half, p.place(half));  // again occupied -> new bin, then stacks
    packing.add(half, p.place(half));
    CHECK(packing_ok(packing));
}

TEST_CASE("critical density rejects items over the arm bound or budget") {
    CriticalDensityPacker p(Rational(1, 2));
    CHECK_THROWS_AS(p.place(Shape(sym(Rational(3, 4), Rational(1, 8)))), PackerFailure);
    // A single item bigger than the whole budget is rejected as over budget.
    CHECK_THROWS_AS(p.place(Shape(sym(Rational(1, 2), Rational(1, 2)))),
                    CriticalDensityPacker::OverBudget);
}

TEST_CASE("perimeter tiling phase stays within twice the anchored lower bound") {
    // One item per class: only tiling anchors are used. The bounding box of
    // the anchored rectangles is [0,2A]x[0,2B], perimeter at most 4(A+B),
    // while any packing needs at least 2(A+B).
    PerimeterPacker p;
    Rational A, B;
    Rng rng(11);
    for (long a = 0; a <= 4; ++a) {
        for (long b = 0; b <= 4; ++b) {
            Rational lx = Rational(3, 4) * Rational::pow2(-a - 1);  // in (2^-a-2, 2^-a-1]
            Rational ly = Rational(3, 4) * Rational::pow2(-b - 1);
            p.place(LShape(lx, lx * Rational(1, 2), ly, ly * Rational(1, 2)));
            A = max(A, Rational::pow2(-a));
            B = max(B, Rational::pow2(-b));
        }
    }
    CHECK(p.bbox_perimeter() <= Rational(4) * (A + B));
    CHECK(p.placements_ok());
}

TEST_CASE("perimeter packer: tiling first, shelves later, bound audited") {
    PerimeterPacker p;
    LShape item(Rational(1, 2), Rational(1, 4), Rational(1, 2), Rational(1, 4));
    auto first = p.place(item);
    // category (0,0): first rectangle anchored at (1,1)
    CHECK(first.x == Rational(1));
    CHECK(first.y == Rational(1));
    CHECK(p.bbox_perimeter() == Rational(4) * item.lx);  // square bbox of one item
    CHECK(p.perimeter_bound_ok());

    Rng rng(9);
    PerimeterPacker big;
    Rect before{Rational(0), Rational(0), Rational(0), Rational(0)};
    for (int i = 0; i < 1000; ++i) {
        LShape s = random_lshape(rng, 0, 512, 10);
        big.place(s);
        if (i > 0) {
            // bounding box grows monotonically
            CHECK(big.bbox().x0 <= before.x0);
            CHECK(big.bbox().y0 <= before.y0);
            CHECK(big.bbox().x1 >= before.x1);
            CHECK(big.bbox().y1 >= before.y1);
        }
        before = big.bbox();
    }
    CHECK(big.perimeter_bound_ok());
    CHECK(big.placements_ok());
}
