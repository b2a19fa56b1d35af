#pragma once

#include "orthopack/binsorting.hpp"
#include "orthopack/geometry.hpp"
#include "orthopack/shapes.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orthopack {

// Contract every online bin packing algorithm implements: one irrevocable
// placement per received item.
class OnlinePacker {
public:
    virtual ~OnlinePacker() = default;
    virtual std::string name() const = 0;
    virtual Placement place(const Shape& item) = 0;
    virtual long bins_used() const = 0;
};

// Raised when an inner packer hands back an invalid placement.
struct PackerFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- The L^k family ------------------------------------------------------

// L_i with lx = 1/2 + 1/2k, wx = 1/2k, ly = 1 - 2^-(i+1), wy = 2^-(i+1).
LShape lk_shape(long i, long k);

// One-bin packing of distinct L^k members in descending index order; the j-th
// item (descending) sits at ((j-1)/2k, 0). Refuses > k items or duplicates.
Packing pack_lk_descending(std::vector<long> indices, long k);

// Adapter: an online L-shape bin packer plays the k-slot sorting game.
// Number i maps to L_i; the observed bin becomes the array and
// floor(x * 2k) the slot. Moves are checked legal as they are derived.
class SortingFromPacking {
public:
    SortingFromPacking(OnlinePacker& packer, long k);

    SortMove present(long number);
    const SortGame& game() const { return game_; }
    const Packing& packing() const { return packing_; }
    long arrays_used() const { return game_.arrays_used(); }

private:
    OnlinePacker& packer_;
    long k_;
    SortGame game_;
    Packing packing_;
    std::vector<int> bin_to_array_;
};

// ---- Strip packing reduction ---------------------------------------------

class OnlineStripPacker {
public:
    virtual ~OnlineStripPacker() = default;
    virtual std::string name() const = 0;
    // Reference-point coordinates in the height-1 strip.
    virtual std::pair<Rational, Rational> place(const LShape& item) = 0;
};

// Places items side by side at x = sum of previous item widths (always valid).
class ShelfStripPacker : public OnlineStripPacker {
public:
    std::string name() const override { return "shelf-strip"; }
    std::pair<Rational, Rational> place(const LShape& item) override;

private:
    Rational cursor_;
};

// Places the j-th item at x = (j-1)/2n; valid exactly for descending L^n
// prefixes, which is what the reduction tests feed it.
class SlotStripPacker : public OnlineStripPacker {
public:
    explicit SlotStripPacker(long n) : n_(n) {}
    std::string name() const override { return "slot-strip"; }
    std::pair<Rational, Rational> place(const LShape& item) override;

private:
    long n_;
    long placed_ = 0;
};

// Wraps a strip packer into a bin packer for L^n instances: from the strip
// coordinate x, with floor(2n x) = m n + r, the item goes to bin m at
// (r/2n, 1 - ly).
class BinFromStrip : public OnlinePacker {
public:
    BinFromStrip(OnlineStripPacker& strip, long n);

    std::string name() const override { return "bin-from-" + strip_.name(); }
    Placement place(const Shape& item) override;
    long bins_used() const override { return bins_; }

    // Current strip width (max occupied x) and the bin bound it implies.
    const Rational& strip_width() const { return width_; }
    long bin_bound() const;

private:
    OnlineStripPacker& strip_;
    long n_;
    long bins_ = 0;
    Rational width_;
};

// ---- Z-skeleton adversary (the halving strategy) --------------------------

struct ZTraceRow {
    long i = 0;  // 1-based iteration
    ZSkeleton z{Rational(0), Rational(0), Rational(0)};
    Rational x_response;
};

class ZAdversary {
public:
    explicit ZAdversary(long n);

    bool done() const { return i_ > n_; }
    long n() const { return n_; }
    long iteration() const { return i_; }
    const Rational& b_lo() const { return lo_; }
    const Rational& b_hi() const { return hi_; }

    // Emits Z_i with w = 1 - 2^-(i+1) and base height the midpoint of the
    // active interval; observe() must be called with the algorithm's
    // x-coordinate before the next emission.
    ZSkeleton next();
    void observe(const Rational& x);

    const std::vector<ZTraceRow>& trace() const { return trace_; }

private:
    long n_;
    long i_ = 1;
    bool awaiting_ = false;
    Rational lo_, hi_;
    std::vector<ZTraceRow> trace_;
};

// Intersection test under the adversary's hypotheses (w, w' > 1/2,
// a + b = a' + b' = 1, distinct base heights): the skeletons placed at x and
// x' intersect iff the one with the higher base starts at or left of the
// other, or ends at or left of it.
bool zskel_conflict(const ZSkeleton& z, const Rational& x, const ZSkeleton& zp, const Rational& xp);

// Indices (into the trace) of the two monotone groups around the last
// skeleton: in B widths and base heights rise together, in A widths rise
// while base heights fall. Throws if the trace violates this structure.
struct MonotoneSplit {
    std::vector<std::size_t> a_indices;
    std::vector<std::size_t> b_indices;
};
MonotoneSplit ordered_subdivision(const std::vector<ZTraceRow>& trace);

enum class RegionOrientation {
    base_rises_with_width,  // packs into an L-region anchored at the left
    base_falls_with_width,  // packs into a 180-degree rotated region at the right
};

// Recursive placement of monotone Z-skeletons into an L-shaped region with
// all horizontal gaps at least eps/k. Returned x-coordinates are the upward
// arm positions relative to the region anchor (left edge, or right edge for
// the rotated orientation, where they come out negative).
struct LRegionPacking {
    std::vector<Rational> up_arm_x;
    LShape container;  // (eps + w_max, eps, 1, base-extent of the region)
};
LRegionPacking pack_monotone_lregion(const std::vector<ZSkeleton>& zs, const Rational& eps,
                                     RegionOrientation orientation);

// One-bin certificate for a full adversary trace: every generated skeleton
// placed with horizontal gaps of at least (1/n) 2^-(n+3) and base segments
// 2^-n apart, total width of the construction exactly 1.
Packing zskel_certificate(const std::vector<ZTraceRow>& trace);

// Audit helpers. Gaps are horizontal distances between vertically
// overlapping vertical segments of distinct items (bin walls included).
std::optional<Rational> min_horizontal_gap(const Packing& skeleton_packing);
std::optional<Rational> min_base_separation(const Packing& skeleton_packing);

// Thickness used to turn the skeleton adversary into a solid Z-shape one.
Rational zgon_thickness(long n);

ZShape thicken(const ZSkeleton& s, const Rational& t);
Packing thicken_packing(const Packing& skeleton_packing, const Rational& t);

// ---- Critical-density upper-bound family -----------------------------------

// `count` copies of the symmetric large L-shape with arms t and width w.
std::vector<LShape> density_ub_instance(const Rational& t, const Rational& w, int count);

// Items of the family that fit into one bin: floor((1-t)/w) + 1.
long density_ub_per_bin_capacity(const Rational& t, const Rational& w);

// The limit bound 2t(1-t) for 1/2 < t < 1.
Rational density_ub_bound(const Rational& t);

}  // namespace orthopack
