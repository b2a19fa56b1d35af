#include "orthopack/shapes.hpp"

#include <algorithm>
#include <stdexcept>

namespace orthopack {

namespace {
const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}
}  // namespace

LShape::LShape(Rational lx_, Rational wx_, Rational ly_, Rational wy_)
    : lx(std::move(lx_)), wx(std::move(wx_)), ly(std::move(ly_)), wy(std::move(wy_)) {
    require(kZero <= wx && wx <= lx && lx <= kOne, "LShape: need 0 <= wx <= lx <= 1");
    require(kZero <= wy && wy <= ly && ly <= kOne, "LShape: need 0 <= wy <= ly <= 1");
}

bool LShape::is_small() const { return lx <= kHalf && ly <= kHalf; }
bool LShape::is_large() const { return lx >= kHalf && ly >= kHalf; }

Rational LShape::area() const { return lx * wy + wx * ly - wx * wy; }

LSkeleton::LSkeleton(Rational lx_, Rational ly_) : lx(std::move(lx_)), ly(std::move(ly_)) {
    require(kZero <= lx && lx <= kOne && kZero <= ly && ly <= kOne,
            "LSkeleton: arm lengths must lie in [0,1]");
}

ZShape::ZShape(Rational w_, Rational a_, Rational b_, Rational ta_, Rational tb_, Rational t_)
    : w(std::move(w_)), a(std::move(a_)), b(std::move(b_)), ta(std::move(ta_)),
      tb(std::move(tb_)), t(std::move(t_)) {
    for (const Rational* v : {&w, &a, &b, &ta, &tb, &t})
        require(kZero <= *v && *v <= kOne, "ZShape: parameters must lie in [0,1]");
    require(ta <= w && tb <= w, "ZShape: need ta, tb <= w");
    require(t <= a && t <= b, "ZShape: arms must be at least as tall as the base");
}

ZShape ZShape::equal_thickness(Rational w, Rational a, Rational b, Rational t) {
    return ZShape(std::move(w), std::move(a), std::move(b), t, t, t);
}

Rational ZShape::area() const {
    // Arms overlap the base in ta*t and tb*t corners.
    return w * t + ta * (a - t) + tb * (b - t);
}

Rational ZShape::height() const { return a + b - t; }

ZSkeleton::ZSkeleton(Rational w_, Rational a_, Rational b_)
    : w(std::move(w_)), a(std::move(a_)), b(std::move(b_)) {
    require(kZero <= w && kZero <= a && kZero <= b, "ZSkeleton: parameters must be >= 0");
}

bool is_solid(const Shape& s) {
    return std::holds_alternative<LShape>(s) || std::holds_alternative<ZShape>(s);
}

bool is_skeleton(const Shape& s) { return !is_solid(s); }

Rational shape_area(const Shape& s) {
    if (const auto* l = std::get_if<LShape>(&s)) return l->area();
    if (const auto* z = std::get_if<ZShape>(&s)) return z->area();
    return Rational(0);
}

std::string shape_kind(const Shape& s) {
    switch (s.index()) {
        case 0: return "lshape";
        case 1: return "zshape";
        case 2: return "lskeleton";
        default: return "zskeleton";
    }
}

Placement lowest_placement(const Shape& s, int bin) {
    if (const auto* z = std::get_if<ZShape>(&s)) return {bin, kZero, z->height()};
    if (const auto* z = std::get_if<ZSkeleton>(&s)) return {bin, kZero, z->a + z->b};
    return {bin, kZero, kZero};
}

int Packing::bin_count() const {
    int m = -1;
    for (const auto& [s, p] : items) m = std::max(m, p.bin);
    return m + 1;
}

Rect Rect::translated(const Rational& dx, const Rational& dy) const {
    return {x0 + dx, y0 + dy, x1 + dx, y1 + dy};
}

bool interiors_overlap(const Rect& a, const Rect& b) {
    return max(a.x0, b.x0) < min(a.x1, b.x1) && max(a.y0, b.y0) < min(a.y1, b.y1);
}

std::vector<Rect> solid_rects(const LShape& s, const Placement& p) {
    return {
        Rect{kZero, kZero, s.wx, s.ly}.translated(p.x, p.y),  // vertical arm
        Rect{kZero, kZero, s.lx, s.wy}.translated(p.x, p.y),  // horizontal arm
    };
}

std::vector<Rect> solid_rects(const ZShape& s, const Placement& p) {
    // Local coordinates anchored at the reference point (top of the upper arm).
    Rect up{kZero, -s.a, s.ta, kZero};
    Rect base{kZero, -s.a, s.w, -s.a + s.t};
    Rect down{s.w - s.tb, -s.a + s.t - s.b, s.w, -s.a + s.t};
    return {up.translated(p.x, p.y), base.translated(p.x, p.y), down.translated(p.x, p.y)};
}

std::vector<Rect> solid_rects(const Shape& s, const Placement& p) {
    if (const auto* l = std::get_if<LShape>(&s)) return solid_rects(*l, p);
    if (const auto* z = std::get_if<ZShape>(&s)) return solid_rects(*z, p);
    throw std::invalid_argument("solid_rects: shape is a skeleton");
}

std::vector<Segment> skeleton_segments(const LSkeleton& s, const Placement& p) {
    return {
        Segment{p.x, p.y, p.x + s.lx, p.y},  // horizontal arm
        Segment{p.x, p.y, p.x, p.y + s.ly},  // vertical arm
    };
}

std::vector<Segment> skeleton_segments(const ZSkeleton& s, const Placement& p) {
    Rational base_y = p.y - s.a;
    return {
        Segment{p.x, base_y, p.x, p.y},                          // upward arm
        Segment{p.x, base_y, p.x + s.w, base_y},                 // base
        Segment{p.x + s.w, base_y - s.b, p.x + s.w, base_y},     // downward arm
    };
}

std::vector<Segment> skeleton_segments(const Shape& s, const Placement& p) {
    if (const auto* l = std::get_if<LSkeleton>(&s)) return skeleton_segments(*l, p);
    if (const auto* z = std::get_if<ZSkeleton>(&s)) return skeleton_segments(*z, p);
    throw std::invalid_argument("skeleton_segments: shape is a solid");
}

std::vector<Point> skeleton_endpoints(const Shape& s, const Placement& p) {
    auto segs = skeleton_segments(s, p);
    std::vector<Point> corners;
    for (const auto& g : segs) {
        Point a{g.x0, g.y0}, b{g.x1, g.y1};
        for (const auto& q : {a, b})
            if (std::find(corners.begin(), corners.end(), q) == corners.end())
                corners.push_back(q);
    }
    // A corner is an endpoint iff it is the unique extremum of the whole
    // segment set in one of the four axis directions.
    auto unique_extreme = [&](const Point& q) {
        bool top = true, bottom = true, left = true, right = true;
        for (const auto& g : segs) {
            for (const Point& r : {Point{g.x0, g.y0}, Point{g.x1, g.y1}}) {
                if (r == q) continue;
                if (r.y >= q.y) top = false;
                if (r.y <= q.y) bottom = false;
                if (r.x >= q.x) right = false;
                if (r.x <= q.x) left = false;
            }
        }
        return top || bottom || left || right;
    };
    std::vector<Point> out;
    for (const auto& q : corners)
        if (unique_extreme(q)) out.push_back(q);
    return out;
}

}  // namespace orthopack
