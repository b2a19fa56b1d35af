#include "orthopack/packer_symmetric.hpp"

#include <algorithm>
#include <stdexcept>

namespace orthopack {

namespace {
const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);

bool intersects(const Rational& alo, const Rational& ahi, const Rational& blo,
                const Rational& bhi) {
    return max(alo, blo) < min(ahi, bhi);  // open intervals
}

// Max point load of a set of open intervals (empty ones contribute nothing).
int max_point_load(const std::vector<std::pair<Rational, Rational>>& iv) {
    // Closing events sort before opening events at equal coordinates.
    std::vector<std::pair<Rational, int>> events;
    for (const auto& [lo, hi] : iv) {
        if (!(lo < hi)) continue;
        events.emplace_back(lo, +1);
        events.emplace_back(hi, -1);
    }
    std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    int load = 0, best = 0;
    for (const auto& [x, d] : events) {
        load += d;
        best = std::max(best, load);
    }
    return best;
}
}  // namespace

std::optional<SymCategory> categorize(const LShape& s) {
    if (!(s.is_large() && s.is_symmetric()))
        throw std::invalid_argument("categorize: large symmetric L-shapes only");
    Rational right = kOne - s.lx + s.wx;  // xhat + w
    if (right == kZero) return std::nullopt;
    long k = 0;
    while (right < Rational::pow2(-k)) ++k;
    return SymCategory{k, s.wx < Rational::pow2(-k - 2)};
}

int IntervalColorer::color(const Rational& lo, const Rational& hi) {
    // Level search: lowest m whose same-or-lower-level neighbours plus the
    // newcomer stay at clique number <= m. Empty intervals sit at level 1.
    int level = 1;
    if (lo < hi) {
        for (;; ++level) {
            std::vector<std::pair<Rational, Rational>> block{{lo, hi}};
            for (const auto& n : nodes_)
                if (n.level <= level && intersects(lo, hi, n.lo, n.hi))
                    block.emplace_back(n.lo, n.hi);
            if (max_point_load(block) <= level) break;
        }
    }
    // First-fit slot among same-level neighbours.
    std::vector<char> taken;
    for (const auto& n : nodes_)
        if (n.level == level && intersects(lo, hi, n.lo, n.hi)) {
            if (n.slot >= static_cast<int>(taken.size())) taken.resize(n.slot + 1, 0);
            taken[n.slot] = 1;
        }
    int slot = 0;
    while (slot < static_cast<int>(taken.size()) && taken[slot]) ++slot;

    if (level > static_cast<int>(level_slots_.size())) level_slots_.resize(level);
    auto& palette = level_slots_[level - 1];
    if (slot >= static_cast<int>(palette.size())) palette.resize(slot + 1, -1);
    if (palette[slot] < 0) palette[slot] = colors_used_++;
    int color = palette[slot];

    nodes_.push_back({lo, hi, level, slot, color});
    std::vector<std::pair<Rational, Rational>> all;
    for (const auto& n : nodes_) all.emplace_back(n.lo, n.hi);
    omega_ = std::max({omega_, max_point_load(all), nodes_.empty() ? 0 : 1});
    return color;
}

std::pair<int, Rational> ShortPool::place(long k, const Rational& w) {
    Rational lo = Rational::pow2(-k - 1);  // left end of I_{k+1}
    Rational hi = Rational::pow2(-k);
    for (std::size_t b = 0; b < bins_.size(); ++b) {
        auto [it, fresh] = bins_[b].try_emplace(k, lo);
        (void)fresh;
        if (it->second + w <= hi) {
            Rational x = it->second;
            it->second += w;
            return {static_cast<int>(b), x};
        }
    }
    bins_.emplace_back();
    bins_.back()[k] = lo + w;
    return {static_cast<int>(bins_.size()) - 1, lo};
}

int LasylPacker::global_bin(std::vector<int>& pool, std::size_t idx) {
    if (idx >= pool.size()) pool.resize(idx + 1, -1);
    if (pool[idx] < 0) pool[idx] = static_cast<int>(next_bin_++);
    return pool[idx];
}

void LasylPacker::audit_ikpp(const Rational& x, const Rational& w) const {
    // Every class interval the x-range meets must see at least a ninth of its
    // extended interval I_k^{++} covered.
    if (w == kZero) return;
    for (long k = 0;; ++k) {
        Rational ik_lo = Rational::pow2(-k);
        Rational ik_hi = Rational::pow2(-k + 1);
        if (ik_hi <= x) break;  // this and all later classes lie left of the range
        bool meets = x + w >= ik_lo && x < ik_hi;
        if (meets) {
            Rational ikpp_hi = ik_hi + Rational::pow2(-k - 2);
            Rational covered = min(x + w, ikpp_hi) - x;  // I_k^{++} starts at 0 <= x
            if (covered < Rational::pow2(-k - 2))
                throw std::logic_error("lasyl: I_k^{++} occupancy below 1/9");
        }
        if (x == kZero && ik_hi <= x + w) break;  // deeper classes are fully covered
    }
}

Placement LasylPacker::place(const Shape& item) {
    const auto* l = std::get_if<LShape>(&item);
    if (!l || !l->is_large() || !l->is_symmetric())
        throw PackerFailure("lasyl packer accepts large symmetric L-shapes only");
    auto cat = categorize(*l);
    Rational xhat = kOne - l->lx;
    if (cat && cat->short_item) {
        auto [pool_bin, x] = shorts_.place(cat->k, l->wx);
        return Placement{global_bin(short_bin_map_, pool_bin), x, x};
    }
    // Long (or degenerate) items sit at their rightmost valid position; the
    // bin is the color of the open x-range in the conflict graph.
    int color = colorer_.color(xhat, xhat + l->wx);
    if (colorer_.colors_used() > 3 * colorer_.omega())
        throw std::logic_error("lasyl: coloring exceeded 3 * omega");
    audit_ikpp(xhat, l->wx);
    ++long_placements_;
    return Placement{global_bin(color_bin_map_, color), xhat, xhat};
}

long LasylPacker::short_bins() const {
    return std::count_if(short_bin_map_.begin(), short_bin_map_.end(),
                         [](int b) { return b >= 0; });
}

long LasylPacker::long_bins() const {
    return std::count_if(color_bin_map_.begin(), color_bin_map_.end(),
                         [](int b) { return b >= 0; });
}

}  // namespace orthopack
