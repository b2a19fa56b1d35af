#pragma once

#include "orthopack/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace orthopack {

// Union of a rectangle of width lx / height wy with a rectangle of width wx /
// height ly, lower-left corners coinciding at the reference point.
struct LShape {
    Rational lx, wx, ly, wy;

    LShape(Rational lx_, Rational wx_, Rational ly_, Rational wy_);

    friend bool operator==(const LShape&, const LShape&) = default;

    bool is_small() const;      // lx, ly <= 1/2
    bool is_large() const;      // lx, ly >= 1/2
    bool is_symmetric() const { return lx == ly && wx == wy; }
    Rational area() const;      // lx*wy + wx*ly - wx*wy
};

// Two segments sharing the reference corner: horizontal of length lx,
// vertical of length ly.
struct LSkeleton {
    Rational lx, ly;

    LSkeleton(Rational lx_, Rational ly_);

    friend bool operator==(const LSkeleton&, const LSkeleton&) = default;
};

// Base rectangle of width w and height t; an arm of width ta and height a
// whose lower-left corner coincides with the base's lower-left corner; an arm
// of width tb and height b whose upper-right corner coincides with the base's
// upper-right corner. The reference point is the top-left corner of the upper
// arm (the topmost point for a + b = 1 instances).
struct ZShape {
    Rational w, a, b, ta, tb, t;

    ZShape(Rational w_, Rational a_, Rational b_, Rational ta_, Rational tb_, Rational t_);
    static ZShape equal_thickness(Rational w, Rational a, Rational b, Rational t);

    friend bool operator==(const ZShape&, const ZShape&) = default;

    Rational area() const;
    Rational height() const;  // a + b - t (vertical extent below the reference point)
};

// Horizontal base segment of length w, vertical arm of length a going up from
// its left end, vertical arm of length b going down from its right end.
// Reference point = top of the upward arm.
struct ZSkeleton {
    Rational w, a, b;

    ZSkeleton(Rational w_, Rational a_, Rational b_);

    friend bool operator==(const ZSkeleton&, const ZSkeleton&) = default;
};

struct Placement {
    int bin = 0;
    Rational x, y;
};

enum class Rotation { R0 = 0, R90 = 1, R180 = 2, R270 = 3 };

using Shape = std::variant<LShape, ZShape, LSkeleton, ZSkeleton>;

bool is_solid(const Shape& s);
bool is_skeleton(const Shape& s);
Rational shape_area(const Shape& s);
std::string shape_kind(const Shape& s);

// Lowest valid reference point of a shape inside a unit bin (used by the
// trivial packer; for Z-shapes the reference sits above the bin floor).
Placement lowest_placement(const Shape& s, int bin);

struct Packing {
    std::vector<std::pair<Shape, Placement>> items;

    void add(Shape s, Placement p) { items.emplace_back(std::move(s), std::move(p)); }
    std::size_t size() const { return items.size(); }
    int bin_count() const;
};

// Axis-aligned closed rectangle; x0 <= x1, y0 <= y1 (degenerate allowed, its
// interior is then empty).
struct Rect {
    Rational x0, y0, x1, y1;

    Rational width() const { return x1 - x0; }
    Rational height() const { return y1 - y0; }
    Rect translated(const Rational& dx, const Rational& dy) const;
};

bool interiors_overlap(const Rect& a, const Rect& b);

// Constituent rectangles in bin coordinates for a placed solid shape.
std::vector<Rect> solid_rects(const LShape& s, const Placement& p);
std::vector<Rect> solid_rects(const ZShape& s, const Placement& p);
std::vector<Rect> solid_rects(const Shape& s, const Placement& p);

// Axis-aligned segment; either horizontal (y0 == y1) or vertical (x0 == x1).
struct Segment {
    Rational x0, y0, x1, y1;

    bool horizontal() const { return y0 == y1; }
};

struct Point {
    Rational x, y;
    friend bool operator==(const Point&, const Point&) = default;
};

std::vector<Segment> skeleton_segments(const LSkeleton& s, const Placement& p);
std::vector<Segment> skeleton_segments(const ZSkeleton& s, const Placement& p);
std::vector<Segment> skeleton_segments(const Shape& s, const Placement& p);

// Unique extreme points (topmost/bottommost/leftmost/rightmost when unique):
// the points at which another skeleton may legally be touched. For an
// L-skeleton with two positive arms these are exactly the two free arm tips;
// the shared corner qualifies only when an arm is degenerate and the corner
// becomes the unique leftmost/bottommost point.
std::vector<Point> skeleton_endpoints(const Shape& s, const Placement& p);

}  // namespace orthopack
