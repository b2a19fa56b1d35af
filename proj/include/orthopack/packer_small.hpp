#pragma once

#include "orthopack/adversaries.hpp"
#include "orthopack/geometry.hpp"
#include "orthopack/shapes.hpp"

#include <map>
#include <optional>
#include <vector>

namespace orthopack {

// Size class of a small L-shape: 2^-a-2 < lx <= 2^-a-1 and
// 2^-b-2 < ly <= 2^-b-1 (a or b may be -1 for arms above 1/2, which the
// perimeter packer uses). Zero arm lengths have no class and are rejected.
struct CategoryAB {
    long a, b;
    auto operator<=>(const CategoryAB&) const = default;
};
CategoryAB category_ab(const LShape& s);

// Keyed gravity stacking into fixed-size rectangles: one active rectangle per
// key; when an item does not fit the active rectangle of its key, that
// rectangle is closed for good and a fresh one is opened.
class DensePacker {
public:
    struct Placed {
        long rect_id;
        Rational dx, dy;  // offset of the item inside its rectangle
        bool opened_new = false;
        std::optional<long> closed_rect_id;
    };
    struct RectInfo {
        CategoryAB key;
        Rational cap_x, cap_y;
        Rational item_area;
        std::size_t items = 0;
        bool closed = false;
    };

    Placed place(const CategoryAB& key, const Rational& cap_x, const Rational& cap_y,
                 const LShape& item);

    const RectInfo& info(long rect_id) const { return rects_.at(rect_id).info; }
    long rect_count() const { return static_cast<long>(rects_.size()); }

private:
    struct OpenRect {
        RectInfo info;
        GravityStack stack;
    };
    std::vector<OpenRect> rects_;
    std::map<CategoryAB, long> active_;
};

// FirstFit of power-of-two rectangles into width-1 strips of equal height and
// of strips into unit bins. Optimal per level on these strongly divisible
// sizes; total free area in all bins stays below 3.
class NiceRectanglePacker {
public:
    struct Spot {
        int bin;
        Rational x, y;
    };

    Spot place(const Rational& w, const Rational& h);

    long bins_used() const { return static_cast<long>(bin_fill_.size()); }
    Rational free_area() const;
    long strips_of_height(const Rational& h) const;

private:
    struct Strip {
        int bin;
        Rational y0, fill_x, height;
    };
    std::vector<Strip> strips_;
    std::vector<Rational> bin_fill_;
    Rational placed_area_;
};

// The family R of 2^-i x 2^-j rectangles tiles the plane with the (a x b)
// rectangle anchored at (a, b); the full family has total area 4.
Rational rtiling_total_area();
Rational rtiling_truncated_area(long imax, long jmax);
Rect rtiling_spot(long a, long b);  // also valid for negative class indices

// Online packer for small L-shapes: DensePacker into per-class rectangles,
// NiceRectanglePacker to put every fresh rectangle into a bin. Uses at most
// 8 * (total item area) + 7 bins.
class SmallLPacker : public OnlinePacker {
public:
    std::string name() const override { return "smalll"; }
    Placement place(const Shape& item) override;
    long bins_used() const override { return rects_.bins_used(); }

    const NiceRectanglePacker& rect_packer() const { return rects_; }
    const DensePacker& dense_packer() const { return dense_; }
    Rational total_item_area() const { return item_area_; }
    long closures_audited() const { return closures_; }

private:
    DensePacker dense_;
    NiceRectanglePacker rects_;
    std::map<long, NiceRectanglePacker::Spot> rect_spot_;
    Rational item_area_;
    long closures_ = 0;
};

}  // namespace orthopack
