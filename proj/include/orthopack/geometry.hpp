#pragma once

#include "orthopack/shapes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orthopack {

// Solids are closed sets; two placed solids are compatible iff their
// interiors are disjoint (touching on boundaries is allowed). Shapes in
// different bins never conflict.
bool interior_disjoint(const Shape& a, const Placement& pa, const Shape& b, const Placement& pb);

// Skeletons are segment sets; two skeletons are compatible iff their segments
// meet only in points that are endpoints (unique extreme points) of at least
// one of the two skeletons.
bool skeleton_disjoint(const Shape& a, const Placement& pa, const Shape& b, const Placement& pb);

struct Violation {
    enum class Kind { containment, overlap };
    Kind kind;
    std::size_t first;
    std::size_t second;  // == first for containment violations
    std::string detail;
};

// Checks containment in the unit bin and pairwise compatibility
// (interior_disjoint for solids, skeleton_disjoint for skeletons).
// Violations are data, not errors; an empty result means the packing is ok.
// Mixing solids and skeletons in one packing is a usage error and throws.
std::vector<Violation> validate_packing(const Packing& packing);
bool packing_ok(const Packing& packing);

// Incremental stacked gravity packing into a rectangle of the given capacity
// (the unit bin by default). An L-shape fits on top of the stack iff
// sum(wx) + lx <= cap_x and sum(wy) + ly <= cap_y, and is then placed at
// (sum(wx), sum(wy)).
class GravityStack {
public:
    GravityStack() : cap_x_(1), cap_y_(1) {}
    GravityStack(Rational cap_x, Rational cap_y)
        : cap_x_(std::move(cap_x)), cap_y_(std::move(cap_y)) {}

    bool fits(const LShape& s) const;
    std::optional<std::pair<Rational, Rational>> try_add(const LShape& s);

    const Rational& sum_wx() const { return sum_wx_; }
    const Rational& sum_wy() const { return sum_wy_; }
    std::size_t count() const { return count_; }

private:
    Rational cap_x_, cap_y_;
    Rational sum_wx_, sum_wy_;
    std::size_t count_ = 0;
};

// One-shot form over an explicit stack prefix.
std::optional<std::pair<Rational, Rational>> fits_on_stack(const std::vector<LShape>& stack,
                                                           const LShape& next);

// True iff every arm, extended to the bin boundary in its own direction,
// hits no other item. All items must share one bin.
bool is_stacked(const std::vector<std::pair<LShape, Placement>>& bin_items);

// Reference points of a gravity stack of symmetric L-shapes, in stack order:
// the i-th point is (sum of previous widths, same).
std::vector<Rational> gravity_diagonal_positions(const std::vector<LShape>& stack);

struct RotatedItem {
    Shape shape;
    Placement place;
    Rotation rot = Rotation::R0;
};

// Placed point set of a rotated item (rotation about the reference point).
std::vector<Rect> rotated_solid_rects(const RotatedItem& it);
std::vector<Segment> rotated_skeleton_segments(const RotatedItem& it);

std::vector<Violation> validate_rotated_packing(const std::vector<RotatedItem>& items);

// Splits every bin of a rotation-tagged packing into one bin per rotation
// class present and re-expresses all items in canonical orientation. The
// output uses at most four times the input's bins and is translation-valid
// whenever the input was rotation-valid.
Packing split_rotational_packing(const std::vector<RotatedItem>& items);

}  // namespace orthopack
