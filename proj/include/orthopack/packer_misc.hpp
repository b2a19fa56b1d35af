#pragma once

#include "orthopack/adversaries.hpp"
#include "orthopack/packer_small.hpp"
#include "orthopack/packer_symmetric.hpp"
#include "orthopack/shapes.hpp"

#include <map>
#include <set>
#include <vector>

namespace orthopack {

// Baseline: every item in its own bin at its lowest valid position.
class TrivialPacker : public OnlinePacker {
public:
    std::string name() const override { return "trivial"; }
    Placement place(const Shape& item) override { return lowest_placement(item, bins_++); }
    long bins_used() const override { return bins_; }

private:
    int bins_ = 0;
};

// Baseline for the lower-bound matches: FirstFit over bins, each a stacked
// gravity packing.
class FirstFitGravityPacker : public OnlinePacker {
public:
    std::string name() const override { return "first-fit-gravity"; }
    Placement place(const Shape& item) override;
    long bins_used() const override { return static_cast<long>(bins_.size()); }

private:
    std::vector<GravityStack> bins_;
};

// Symmetric combiner: small symmetric items to a SmallLPacker pool, large
// ones to a LasylPacker pool (arm length exactly 1/2 counts as small).
// At most 41 OPT + 9 bins.
class SymmetricPacker : public OnlinePacker {
public:
    std::string name() const override { return "symmetric"; }
    Placement place(const Shape& item) override;
    long bins_used() const override { return next_bin_; }

    long small_pool_bins() const { return small_.bins_used(); }
    long large_pool_bins() const { return large_.bins_used(); }
    const SmallLPacker& small_pool() const { return small_; }
    const LasylPacker& large_pool() const { return large_; }

private:
    SmallLPacker small_;
    LasylPacker large_;
    std::vector<int> small_map_, large_map_;
    long next_bin_ = 0;
};

// L-skeleton packer: items with both arms below 1 share one bin on the
// diagonal (longer arm touching the boundary, collisions resolved by the
// midpoint rule); items with a full-length arm run through NextFit on the
// other arm. At most 1 + NextFit(S2) + NextFit(S3) <= 2 OPT bins.
class LSkelPacker : public OnlinePacker {
public:
    std::string name() const override { return "lskel"; }
    Placement place(const Shape& item) override;
    long bins_used() const override { return next_bin_; }

    long nextfit_bins_s2() const { return s2_.bins; }
    long nextfit_bins_s3() const { return s3_.bins; }
    bool diagonal_bin_used() const { return s1_bin_ >= 0; }

private:
    struct NextFitState {
        Rational fill;
        std::set<Rational> used;  // occupied offsets in the active bin
        int active_bin = -1;
        long bins = 0;
        Rational last_closed_sum{-1};
    };
    Rational diagonal_value(const Rational& want);
    Rational nextfit_offset(NextFitState& st, const Rational& size);

    std::set<Rational> occupied_;
    int s1_bin_ = -1;
    NextFitState s2_, s3_;
    long next_bin_ = 0;
};

// Single-bin packer behind the positive critical density bound: with arms
// bounded by t and total area within (1-t)^3 / 125, every stream fits into
// one unit bin via four subcontainers.
class CriticalDensityPacker : public OnlinePacker {
public:
    explicit CriticalDensityPacker(Rational t);

    std::string name() const override { return "critical-density"; }
    // Throws OverBudget when the stream's area budget would be exceeded.
    Placement place(const Shape& item) override;
    long bins_used() const override { return used_ ? 1 : 0; }

    struct OverBudget : std::runtime_error {
        OverBudget() : std::runtime_error("critical-density: area budget exhausted") {}
    };

    const Rational& budget() const { return budget_; }
    const Rational& area_used() const { return area_used_; }
    const Rational& arm_bound() const { return t_; }
    const Rational& small_threshold() const { return a_; }

    // Subcontainer geometry (positions in the unit bin).
    Rect region_ll() const;
    Rect region_ls() const;
    Rect region_sl() const;
    Rect region_ss() const;

private:
    Placement place_impl(const LShape& item);

    Rational t_, a_, h_, budget_;
    Rational area_used_;
    bool used_ = false;

    GravityStack ll_stack_;
    DensePacker ls_dense_, sl_dense_;
    std::map<long, Rational> ls_rect_y_, sl_rect_x_;
    Rational ls_fill_, sl_fill_;
    SmallLPacker ss_packer_;
};

// Plane packer minimizing the bounding-box perimeter: per-class rectangles
// from the DensePacker, first rectangle of a class anchored on the power-of-
// two tiling, later ones shelf-packed in the mirrored quadrant below the
// axis.
class PerimeterPacker {
public:
    struct PlanePlacement {
        Rational x, y;
    };

    PlanePlacement place(const LShape& item);  // arms in (0,1]

    std::size_t items_placed() const { return items_.size(); }
    bool has_bbox() const { return !items_.empty(); }
    Rect bbox() const { return bbox_; }
    Rational bbox_perimeter() const;
    const Rational& total_item_area() const { return item_area_; }
    const Rational& max_item_width() const { return max_w_; }
    const Rational& max_item_height() const { return max_h_; }

    // Substitute audit for the shelf scheme: perimeter within 16x of
    // max(2(W*+H*), 4 sqrt(total area)), checked exactly.
    bool perimeter_bound_ok() const;

    // Pairwise validity of everything placed so far (test support).
    bool placements_ok() const;

private:
    PlanePlacement rect_origin(const CategoryAB& key, const Rational& w, const Rational& h);

    DensePacker dense_;
    std::map<long, PlanePlacement> origins_;
    std::set<CategoryAB> tiled_;

    struct Shelf {
        Rational y_top, height, fill, cap;
    };
    std::vector<Shelf> shelves_;
    Rational shelf_bottom_;
    Rational brick_area_;
    Rational widest_rect_;

    std::vector<std::pair<LShape, PlanePlacement>> items_;
    Rect bbox_{Rational(0), Rational(0), Rational(0), Rational(0)};
    Rational item_area_, max_w_, max_h_;
};

}  // namespace orthopack
