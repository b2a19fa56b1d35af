#pragma once

#include "orthopack/adversaries.hpp"
#include "orthopack/shapes.hpp"

#include <map>
#include <optional>
#include <vector>

namespace orthopack {

// Size class of a large symmetric L-shape by the rightmost point of its
// x-range: xhat + w in I_k = [2^-k, 2^-k+1). Short means w < 2^-k-2. Class
// indices start at 0: xhat + w = 1 (arm exactly 1/2, full width) lands in
// I_0 = [1, 2). The fully degenerate l = 1, w = 0 item has an empty x-range
// and no class.
struct SymCategory {
    long k;
    bool short_item;
};
std::optional<SymCategory> categorize(const LShape& s);

// Online interval-graph coloring in the level style: an arriving interval is
// assigned the lowest level whose intersecting same-or-lower-level intervals
// keep clique number within the level index, then first-fit colored inside
// its level. Proper, and never more than 3 * omega colors in total.
class IntervalColorer {
public:
    // Open interval (lo, hi); an empty interval conflicts with nothing.
    int color(const Rational& lo, const Rational& hi);

    int colors_used() const { return colors_used_; }
    int omega() const { return omega_; }
    int levels_used() const { return static_cast<int>(level_slots_.size()); }

private:
    struct Node {
        Rational lo, hi;
        int level;
        int slot;  // first-fit index within the level
        int color;
    };
    std::vector<Node> nodes_;
    std::vector<std::vector<int>> level_slots_;  // (level-1, slot) -> global color
    int colors_used_ = 0;
    int omega_ = 0;
};

// FirstFit pool for short items: every bin reserves, per class k, the
// interval I_{k+1}; an x-range goes leftmost into the first bin where its
// class interval still has room.
class ShortPool {
public:
    std::pair<int, Rational> place(long k, const Rational& w);  // (pool bin, x)
    long bins_used() const { return static_cast<long>(bins_.size()); }

private:
    std::vector<std::map<long, Rational>> bins_;  // per bin: class -> fill level
};

// The large-symmetric packer: shorts via ShortPool, longs pinned at their
// rightmost valid position and grouped into bins by interval color. Uses at
// most 6 OPT_short + 2 bins for the shorts and 27 OPT_long for the longs,
// 33 OPT + 2 in total.
class LasylPacker : public OnlinePacker {
public:
    std::string name() const override { return "lasyl"; }
    Placement place(const Shape& item) override;
    long bins_used() const override { return next_bin_; }

    long short_bins() const;
    long long_bins() const;
    const IntervalColorer& colorer() const { return colorer_; }
    long long_placements() const { return long_placements_; }

private:
    int global_bin(std::vector<int>& pool, std::size_t idx);
    void audit_ikpp(const Rational& x, const Rational& w) const;

    ShortPool shorts_;
    IntervalColorer colorer_;
    std::vector<int> short_bin_map_;  // pool bin -> global bin
    std::vector<int> color_bin_map_;  // color -> global bin
    long next_bin_ = 0;
    long long_placements_ = 0;
};

}  // namespace orthopack
