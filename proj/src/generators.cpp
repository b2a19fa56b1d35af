#include "orthopack/generators.hpp"

#include <stdexcept>

namespace orthopack {

namespace {
const Rational kOne(1);
constexpr int kBits = 10;  // denominators 2^10 keep all arithmetic small
}  // namespace

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational Rng::dyadic(long lo_num, long hi_num, int bits) {
    return Rational(uniform(lo_num, hi_num), 1L << bits);
}

namespace {

PackedItem item(Shape s) { return {std::move(s), std::nullopt, std::nullopt}; }

void gen_uniform_small(InstanceFile& f, Rng& rng, long n) {
    f.kind = "lshape";
    const long half = 1L << (kBits - 1);
    for (long i = 0; i < n; ++i) {
        long lx = rng.uniform(1, half), ly = rng.uniform(1, half);
        long wx = rng.uniform(1, lx), wy = rng.uniform(1, ly);
        f.items.push_back(item(LShape(Rational(lx, 1L << kBits), Rational(wx, 1L << kBits),
                                      Rational(ly, 1L << kBits), Rational(wy, 1L << kBits))));
    }
}

void gen_large_symmetric(InstanceFile& f, Rng& rng, long n) {
    f.kind = "lshape";
    const long full = 1L << kBits;
    for (long i = 0; i < n; ++i) {
        long l = rng.uniform(full / 2, full);
        long w = rng.uniform(1, l);
        Rational len(l, full), wid(w, full);
        f.items.push_back(item(LShape(len, wid, len, wid)));
    }
}

void gen_lk(InstanceFile& f, long n, long k) {
    f.kind = "lshape";
    for (long i = 1; i <= n; ++i) f.items.push_back(item(lk_shape(i, k)));
}

void gen_skeleton_mixed(InstanceFile& f, Rng& rng, long n) {
    f.kind = "lskeleton";
    const long full = 1L << kBits;
    for (long i = 0; i < n; ++i) {
        switch (rng.uniform(0, 2)) {
            case 0:  // both arms below 1
                f.items.push_back(item(LSkeleton(Rational(rng.uniform(1, full - 1), full),
                                                 Rational(rng.uniform(1, full - 1), full))));
                break;
            case 1:  // full horizontal arm
                f.items.push_back(
                    item(LSkeleton(kOne, Rational(rng.uniform(1, full), full))));
                break;
            default:  // full vertical arm
                f.items.push_back(
                    item(LSkeleton(Rational(rng.uniform(1, full), full), kOne)));
        }
    }
}

void gen_density_budget(InstanceFile& f, Rng& rng, long n, const Rational& t) {
    if (!(Rational(0) < t && t < kOne))
        throw std::invalid_argument("gen: density-budget needs 0 < t < 1");
    f.kind = "lshape";
    f.meta["t"] = t.str();
    const long full = 1L << kBits;
    Rational budget = (kOne - t) * (kOne - t) * (kOne - t) / Rational(125);
    Rational used(0);
    for (long i = 0; i < n; ++i) {
        Rational lx = t * Rational(rng.uniform(1, full), full);
        Rational ly = t * Rational(rng.uniform(1, full), full);
        Rational wx = lx * Rational(rng.uniform(1, full), full);
        Rational wy = ly * Rational(rng.uniform(1, full), full);
        // Halve the widths until the area budget accepts the item.
        for (int shrink = 0; shrink < 64; ++shrink) {
            LShape cand(lx, wx, ly, wy);
            if (used + cand.area() <= budget) {
                used += cand.area();
                f.items.push_back(item(std::move(cand)));
                break;
            }
            wx = wx / Rational(2);
            wy = wy / Rational(2);
        }
    }
}

}  // namespace

InstanceFile gen_instance(const std::string& family, long n, long k, const Rational& t,
                          std::uint64_t seed) {
    InstanceFile f;
    f.meta["family"] = family;
    f.meta["seed"] = std::to_string(seed);
    Rng rng(seed);
    if (family == "uniform-small") {
        gen_uniform_small(f, rng, n);
    } else if (family == "large-symmetric") {
        gen_large_symmetric(f, rng, n);
    } else if (family == "lk") {
        gen_lk(f, n, k > 0 ? k : n);
        f.meta["k"] = std::to_string(k > 0 ? k : n);
    } else if (family == "skeleton-mixed") {
        gen_skeleton_mixed(f, rng, n);
    } else if (family == "density-budget") {
        gen_density_budget(f, rng, n, t);
    } else {
        throw std::invalid_argument("gen: unknown family '" + family + "'");
    }
    return f;
}

}  // namespace orthopack
