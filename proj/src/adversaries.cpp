#include "orthopack/adversaries.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orthopack {

namespace {
const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);

long to_long(const BigInt& v) { return static_cast<long>(v); }
}  // namespace

LShape lk_shape(long i, long k) {
    if (i < 1 || k < 1) throw std::invalid_argument("lk_shape: need i >= 1, k >= 1");
    Rational half_slot(1, 2 * k);
    return LShape(kHalf + half_slot, half_slot, kOne - Rational::pow2(-i - 1),
                  Rational::pow2(-i - 1));
}

Packing pack_lk_descending(std::vector<long> indices, long k) {
    if (static_cast<long>(indices.size()) > k)
        throw std::invalid_argument("pack_lk_descending: more than k items cannot share a bin");
    std::set<long> dedup(indices.begin(), indices.end());
    if (dedup.size() != indices.size())
        throw std::invalid_argument("pack_lk_descending: duplicate indices");
    std::sort(indices.begin(), indices.end(), std::greater<>());
    // Descending order forms a stacked gravity packing: the j-th item sits at
    // ((j-1)/2k, sum of previous wy), every top edge ending at 1 - 2^-(k+1).
    Packing out;
    GravityStack stack;
    for (long i : indices) {
        LShape s = lk_shape(i, k);
        auto pos = stack.try_add(s);
        if (!pos) throw std::logic_error("pack_lk_descending: stack rejected a family item");
        out.add(std::move(s), Placement{0, pos->first, pos->second});
    }
    return out;
}

SortingFromPacking::SortingFromPacking(OnlinePacker& packer, long k)
    : packer_(packer), k_(k), game_(k) {}

SortMove SortingFromPacking::present(long number) {
    Shape item = lk_shape(number, k_);
    Placement p = packer_.place(item);
    // The placement must be valid before it can be read as a sorting move.
    Packing trial = packing_;
    trial.add(item, p);
    if (!packing_ok(trial))
        throw PackerFailure("packer " + packer_.name() + " produced an invalid placement");
    packing_ = std::move(trial);

    if (p.bin >= static_cast<int>(bin_to_array_.size())) bin_to_array_.resize(p.bin + 1, -1);
    if (bin_to_array_[p.bin] < 0) {
        bin_to_array_[p.bin] = static_cast<int>(game_.arrays_used());
    }
    long raw = to_long((p.x * Rational(2 * k_)).floor());
    if (raw < 0 || raw >= k_)
        throw PackerFailure("packer " + packer_.name() + " placed outside the slot range");
    // In a valid bin the family indices descend with x, so the slot order is
    // mirrored to keep the array increasing.
    SortMove mv{bin_to_array_[p.bin], static_cast<int>(k_ - 1 - raw)};
    game_.place(BigInt(number), mv.array, mv.slot);  // throws if the move were illegal
    return mv;
}

std::pair<Rational, Rational> ShelfStripPacker::place(const LShape& item) {
    Rational x = cursor_;
    cursor_ += item.lx;
    return {x, kZero};
}

std::pair<Rational, Rational> SlotStripPacker::place(const LShape&) {
    Rational x(placed_, 2 * n_);
    ++placed_;
    return {x, kZero};
}

BinFromStrip::BinFromStrip(OnlineStripPacker& strip, long n) : strip_(strip), n_(n) {
    if (n < 1) throw std::invalid_argument("BinFromStrip: need n >= 1");
}

Placement BinFromStrip::place(const Shape& item) {
    const auto* l = std::get_if<LShape>(&item);
    if (!l) throw PackerFailure("bin-from-strip handles L-shapes only");
    auto [x, y] = strip_.place(*l);
    (void)y;
    width_ = max(width_, x + l->lx);
    long slot = to_long((x * Rational(2 * n_)).floor());
    long m = slot / n_;
    long r = slot % n_;
    bins_ = std::max(bins_, m + 1);
    return Placement{static_cast<int>(m), Rational(r, 2 * n_), kOne - l->ly};
}

long BinFromStrip::bin_bound() const {
    BigInt cols = -((-(width_ * Rational(2 * n_))).floor());  // ceil(2n * width)
    BigInt bins = (cols + n_ - 1) / n_;
    return to_long(bins);
}

ZAdversary::ZAdversary(long n) : n_(n), lo_(0), hi_(1) {
    if (n < 1) throw std::invalid_argument("ZAdversary: need n >= 1");
}

ZSkeleton ZAdversary::next() {
    if (done()) throw std::logic_error("ZAdversary: horizon exhausted");
    if (awaiting_) throw std::logic_error("ZAdversary: observe() the previous response first");
    Rational b = (lo_ + hi_) / Rational(2);
    ZSkeleton z(kOne - Rational::pow2(-i_ - 1), kOne - b, b);
    trace_.push_back({i_, z, kZero});
    awaiting_ = true;
    return z;
}

void ZAdversary::observe(const Rational& x) {
    if (!awaiting_) throw std::logic_error("ZAdversary: nothing to observe");
    const ZSkeleton& z = trace_.back().z;
    if (x < kZero || x + z.w > kOne)
        throw PackerFailure("z-skeleton response leaves the bin; match forfeited");
    trace_.back().x_response = x;
    if (x <= (kOne - z.w) / Rational(2))
        hi_ = z.b;
    else
        lo_ = z.b;
    awaiting_ = false;
    ++i_;
}

bool zskel_conflict(const ZSkeleton& z, const Rational& x, const ZSkeleton& zp,
                    const Rational& xp) {
    auto hypothesis = [](const ZSkeleton& s) { return s.w > kHalf && s.a + s.b == kOne; };
    if (!hypothesis(z) || !hypothesis(zp) || z.b == zp.b)
        throw std::invalid_argument(
            "zskel_conflict: need w, w' > 1/2, a+b = a'+b' = 1, distinct base heights");
    // Normalize so that (lo, xlo) has the smaller base height.
    const bool swap = z.b > zp.b;
    const ZSkeleton& hi = swap ? z : zp;
    const Rational& xhi = swap ? x : xp;
    const ZSkeleton& lo = swap ? zp : z;
    const Rational& xlo = swap ? xp : x;
    return xhi <= xlo || xhi + hi.w <= xlo + lo.w;
}

MonotoneSplit ordered_subdivision(const std::vector<ZTraceRow>& trace) {
    if (trace.empty()) return {};
    MonotoneSplit split;
    const Rational& pivot = trace.back().z.b;
    for (std::size_t j = 0; j + 1 < trace.size(); ++j)
        (trace[j].z.b > pivot ? split.a_indices : split.b_indices).push_back(j);

    auto check = [&](const std::vector<std::size_t>& group, bool rises) {
        for (std::size_t r = 1; r < group.size(); ++r) {
            const ZSkeleton& prev = trace[group[r - 1]].z;
            const ZSkeleton& cur = trace[group[r]].z;
            bool ok = prev.w < cur.w && (rises ? prev.b < cur.b : prev.b > cur.b);
            if (!ok) throw std::logic_error("ordered_subdivision: monotonicity violated");
        }
    };
    check(split.b_indices, true);
    check(split.a_indices, false);
    return split;
}

LRegionPacking pack_monotone_lregion(const std::vector<ZSkeleton>& zs, const Rational& eps,
                                     RegionOrientation orientation) {
    if (eps <= kZero) throw std::invalid_argument("pack_monotone_lregion: need eps > 0");
    const long k = static_cast<long>(zs.size());
    const bool rises = orientation == RegionOrientation::base_rises_with_width;
    for (long r = 1; r < k; ++r) {
        bool ok = zs[r - 1].w < zs[r].w && (rises ? zs[r - 1].b < zs[r].b : zs[r - 1].b > zs[r].b);
        if (!ok) throw std::invalid_argument("pack_monotone_lregion: inputs not monotone");
    }
    LRegionPacking out{{}, LShape(kZero, kZero, kZero, kZero)};
    for (long r = 1; r <= k; ++r) {
        Rational arm = eps * Rational(r, k);
        out.up_arm_x.push_back(rises ? arm : -arm - zs[r - 1].w);
    }
    if (k > 0) {
        const ZSkeleton& last = zs.back();
        out.container = LShape(eps + last.w, eps, kOne, rises ? last.b : last.a);
    }
    return out;
}

Packing zskel_certificate(const std::vector<ZTraceRow>& trace) {
    Packing out;
    if (trace.empty()) return out;
    const long n = static_cast<long>(trace.size());
    const Rational eps = Rational::pow2(-n - 3);

    if (n == 1) {
        out.add(trace[0].z, Placement{0, eps * Rational(2), kOne});
        return out;
    }

    MonotoneSplit split = ordered_subdivision(trace);
    auto group = [&](const std::vector<std::size_t>& idx) {
        std::vector<ZSkeleton> zs;
        for (auto j : idx) zs.push_back(trace[j].z);
        return zs;
    };

    std::map<std::size_t, Rational> xs;
    if (!split.b_indices.empty()) {
        auto zs = group(split.b_indices);
        auto packed = pack_monotone_lregion(zs, eps, RegionOrientation::base_rises_with_width);
        for (std::size_t r = 0; r < zs.size(); ++r) xs[split.b_indices[r]] = packed.up_arm_x[r];
    }
    if (!split.a_indices.empty()) {
        auto zs = group(split.a_indices);
        auto packed = pack_monotone_lregion(zs, eps, RegionOrientation::base_falls_with_width);
        for (std::size_t r = 0; r < zs.size(); ++r)
            xs[split.a_indices[r]] = kOne + packed.up_arm_x[r];
    }
    xs[trace.size() - 1] = eps * Rational(3, 2);

    for (std::size_t j = 0; j < trace.size(); ++j)
        out.add(trace[j].z, Placement{0, xs.at(j), kOne});
    return out;
}

namespace {
struct VSeg {
    Rational x, y0, y1;
    std::size_t owner;  // item index; SIZE_MAX marks the bin walls
    int bin;
};

std::vector<VSeg> vertical_parts(const Packing& p) {
    std::vector<VSeg> segs;
    for (std::size_t i = 0; i < p.items.size(); ++i) {
        for (const auto& g : skeleton_segments(p.items[i].first, p.items[i].second))
            if (!g.horizontal() || (g.x0 == g.x1 && g.y0 == g.y1))
                segs.push_back({g.x0, min(g.y0, g.y1), max(g.y0, g.y1), i, p.items[i].second.bin});
    }
    for (int bin = 0; bin < p.bin_count(); ++bin) {
        segs.push_back({kZero, kZero, kOne, static_cast<std::size_t>(-1), bin});
        segs.push_back({kOne, kZero, kOne, static_cast<std::size_t>(-1), bin});
    }
    return segs;
}
}  // namespace

std::optional<Rational> min_horizontal_gap(const Packing& skeleton_packing) {
    auto segs = vertical_parts(skeleton_packing);
    std::optional<Rational> best;
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const auto& a = segs[i];
            const auto& b = segs[j];
            if (a.bin != b.bin || a.owner == b.owner) continue;
            if (min(a.y1, b.y1) <= max(a.y0, b.y0)) continue;  // no vertical overlap
            Rational gap = (a.x - b.x).abs();
            if (!best || gap < *best) best = gap;
        }
    return best;
}

std::optional<Rational> min_base_separation(const Packing& skeleton_packing) {
    std::vector<Rational> heights;
    for (const auto& [s, p] : skeleton_packing.items)
        if (const auto* z = std::get_if<ZSkeleton>(&s)) heights.push_back(p.y - z->a);
    std::optional<Rational> best;
    for (std::size_t i = 0; i < heights.size(); ++i)
        for (std::size_t j = i + 1; j < heights.size(); ++j) {
            Rational d = (heights[i] - heights[j]).abs();
            if (!best || d < *best) best = d;
        }
    return best;
}

Rational zgon_thickness(long n) { return Rational(1, n) * Rational::pow2(-n - 3); }

ZShape thicken(const ZSkeleton& s, const Rational& t) {
    return ZShape::equal_thickness(s.w, s.a, s.b, t);
}

Packing thicken_packing(const Packing& skeleton_packing, const Rational& t) {
    Packing out;
    for (const auto& [s, p] : skeleton_packing.items) {
        const auto* z = std::get_if<ZSkeleton>(&s);
        if (!z) throw std::invalid_argument("thicken_packing: z-skeletons only");
        out.add(thicken(*z, t), p);
    }
    return out;
}

std::vector<LShape> density_ub_instance(const Rational& t, const Rational& w, int count) {
    if (!(kHalf < t && t < kOne) || !(kZero < w && w <= t))
        throw std::invalid_argument("density_ub_instance: need 1/2 < t < 1 and 0 < w <= t");
    return std::vector<LShape>(count, LShape(t, w, t, w));
}

long density_ub_per_bin_capacity(const Rational& t, const Rational& w) {
    return to_long(((kOne - t) / w).floor()) + 1;
}

Rational density_ub_bound(const Rational& t) { return Rational(2) * t * (kOne - t); }

}  // namespace orthopack
