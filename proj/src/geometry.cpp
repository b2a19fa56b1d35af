#include "orthopack/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace orthopack {

namespace {

const Rational kZero(0);
const Rational kOne(1);

bool rects_disjoint(const std::vector<Rect>& ra, const std::vector<Rect>& rb) {
    for (const auto& a : ra)
        for (const auto& b : rb)
            if (interiors_overlap(a, b)) return false;
    return true;
}

struct SegHit {
    bool overlap = false;  // positive-length common part
    bool point = false;
    Point at;
};

// Axis-aligned segments coincide with their bounding boxes, so their
// intersection is the box intersection: empty, a point, or a segment.
SegHit segment_hit(const Segment& a, const Segment& b) {
    Rational x0 = max(min(a.x0, a.x1), min(b.x0, b.x1));
    Rational x1 = min(max(a.x0, a.x1), max(b.x0, b.x1));
    Rational y0 = max(min(a.y0, a.y1), min(b.y0, b.y1));
    Rational y1 = min(max(a.y0, a.y1), max(b.y0, b.y1));
    SegHit h;
    if (x0 > x1 || y0 > y1) return h;
    if (x0 == x1 && y0 == y1) {
        h.point = true;
        h.at = {x0, y0};
    } else {
        h.overlap = true;
    }
    return h;
}

bool point_in(const std::vector<Point>& pts, const Point& q) {
    return std::find(pts.begin(), pts.end(), q) != pts.end();
}

bool in_unit_bin(const Rect& r) {
    return r.x0 >= kZero && r.y0 >= kZero && r.x1 <= kOne && r.y1 <= kOne;
}

bool in_unit_bin(const Segment& s) {
    return min(s.x0, s.x1) >= kZero && min(s.y0, s.y1) >= kZero && max(s.x0, s.x1) <= kOne &&
           max(s.y0, s.y1) <= kOne;
}

Rect rotate_local(const Rect& r, Rotation rot) {
    switch (rot) {
        case Rotation::R0: return r;
        case Rotation::R90: return {-r.y1, r.x0, -r.y0, r.x1};
        case Rotation::R180: return {-r.x1, -r.y1, -r.x0, -r.y0};
        default: return {r.y0, -r.x1, r.y1, -r.x0};
    }
}

Point rotate_point(const Point& q, Rotation rot) {
    switch (rot) {
        case Rotation::R0: return q;
        case Rotation::R90: return {-q.y, q.x};
        case Rotation::R180: return {-q.x, -q.y};
        default: return {q.y, -q.x};
    }
}

}  // namespace

bool interior_disjoint(const Shape& a, const Placement& pa, const Shape& b, const Placement& pb) {
    if (pa.bin != pb.bin) return true;
    return rects_disjoint(solid_rects(a, pa), solid_rects(b, pb));
}

bool skeleton_disjoint(const Shape& a, const Placement& pa, const Shape& b, const Placement& pb) {
    if (pa.bin != pb.bin) return true;
    auto sa = skeleton_segments(a, pa);
    auto sb = skeleton_segments(b, pb);
    auto ea = skeleton_endpoints(a, pa);
    auto eb = skeleton_endpoints(b, pb);
    for (const auto& ga : sa) {
        for (const auto& gb : sb) {
            SegHit h = segment_hit(ga, gb);
            if (h.overlap) return false;
            if (h.point && !point_in(ea, h.at) && !point_in(eb, h.at)) return false;
        }
    }
    return true;
}

std::vector<Violation> validate_packing(const Packing& packing) {
    bool any_solid = false, any_skel = false;
    for (const auto& [s, p] : packing.items) (is_solid(s) ? any_solid : any_skel) = true;
    if (any_solid && any_skel)
        throw std::invalid_argument("validate_packing: mixed solid/skeleton packing");

    std::vector<Violation> out;
    const auto& items = packing.items;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& [s, p] = items[i];
        bool inside = true;
        if (p.bin < 0) inside = false;
        if (is_solid(s)) {
            for (const auto& r : solid_rects(s, p)) inside = inside && in_unit_bin(r);
        } else {
            for (const auto& g : skeleton_segments(s, p)) inside = inside && in_unit_bin(g);
        }
        if (!inside)
            out.push_back({Violation::Kind::containment, i, i, "item outside its unit bin"});
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            const auto& [si, pi] = items[i];
            const auto& [sj, pj] = items[j];
            bool ok = any_solid ? interior_disjoint(si, pi, sj, pj)
                                : skeleton_disjoint(si, pi, sj, pj);
            if (!ok) out.push_back({Violation::Kind::overlap, i, j, "items overlap"});
        }
    }
    return out;
}

bool packing_ok(const Packing& packing) { return validate_packing(packing).empty(); }

bool GravityStack::fits(const LShape& s) const {
    return sum_wx_ + s.lx <= cap_x_ && sum_wy_ + s.ly <= cap_y_;
}

std::optional<std::pair<Rational, Rational>> GravityStack::try_add(const LShape& s) {
    if (!fits(s)) return std::nullopt;
    auto pos = std::make_pair(sum_wx_, sum_wy_);
    sum_wx_ += s.wx;
    sum_wy_ += s.wy;
    ++count_;
    return pos;
}

std::optional<std::pair<Rational, Rational>> fits_on_stack(const std::vector<LShape>& stack,
                                                           const LShape& next) {
    GravityStack g;
    for (const auto& s : stack) {
        auto placed = g.try_add(s);
        if (!placed) throw std::invalid_argument("fits_on_stack: given stack is not feasible");
    }
    return g.try_add(next);
}

bool is_stacked(const std::vector<std::pair<LShape, Placement>>& bin_items) {
    for (std::size_t i = 0; i < bin_items.size(); ++i) {
        const auto& [s, p] = bin_items[i];
        if (i > 0 && bin_items[i].second.bin != bin_items[0].second.bin)
            throw std::invalid_argument("is_stacked: items must share one bin");
        Rect ext_h{p.x, p.y, kOne, p.y + s.wy};
        Rect ext_v{p.x, p.y, p.x + s.wx, kOne};
        for (std::size_t j = 0; j < bin_items.size(); ++j) {
            if (j == i) continue;
            for (const auto& r : solid_rects(bin_items[j].first, bin_items[j].second))
                if (interiors_overlap(ext_h, r) || interiors_overlap(ext_v, r)) return false;
        }
    }
    return true;
}

std::vector<Rational> gravity_diagonal_positions(const std::vector<LShape>& stack) {
    std::vector<Rational> pos;
    Rational sum(0);
    for (const auto& s : stack) {
        if (!(s.is_large() && s.is_symmetric()))
            throw std::invalid_argument("gravity_diagonal_positions: items must be large and symmetric");
        pos.push_back(sum);
        sum += s.wx;
    }
    return pos;
}

std::vector<Rect> rotated_solid_rects(const RotatedItem& it) {
    std::vector<Rect> out;
    for (const auto& r : solid_rects(it.shape, Placement{it.place.bin, kZero, kZero}))
        out.push_back(rotate_local(r, it.rot).translated(it.place.x, it.place.y));
    return out;
}

std::vector<Segment> rotated_skeleton_segments(const RotatedItem& it) {
    std::vector<Segment> out;
    for (const auto& g : skeleton_segments(it.shape, Placement{it.place.bin, kZero, kZero})) {
        Point a = rotate_point({g.x0, g.y0}, it.rot);
        Point b = rotate_point({g.x1, g.y1}, it.rot);
        out.push_back({a.x + it.place.x, a.y + it.place.y, b.x + it.place.x, b.y + it.place.y});
    }
    return out;
}

std::vector<Violation> validate_rotated_packing(const std::vector<RotatedItem>& items) {
    std::vector<Violation> out;
    std::vector<std::vector<Rect>> rects(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!is_solid(items[i].shape))
            throw std::invalid_argument("validate_rotated_packing: solids only");
        rects[i] = rotated_solid_rects(items[i]);
        for (const auto& r : rects[i])
            if (!in_unit_bin(r)) {
                out.push_back({Violation::Kind::containment, i, i, "item outside its unit bin"});
                break;
            }
    }
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            if (items[i].place.bin != items[j].place.bin) continue;
            if (!rects_disjoint(rects[i], rects[j]))
                out.push_back({Violation::Kind::overlap, i, j, "items overlap"});
        }
    return out;
}

Packing split_rotational_packing(const std::vector<RotatedItem>& items) {
    // (source bin, rotation class) -> output bin, in order of appearance.
    std::map<std::pair<int, int>, int> out_bin;
    Packing out;
    for (const auto& it : items) {
        auto key = std::make_pair(it.place.bin, static_cast<int>(it.rot));
        auto [pos, fresh] = out_bin.emplace(key, static_cast<int>(out_bin.size()));
        (void)fresh;
        const Rational& x = it.place.x;
        const Rational& y = it.place.y;
        Placement p;
        p.bin = pos->second;
        switch (it.rot) {
            case Rotation::R0: p.x = x; p.y = y; break;
            case Rotation::R90: p.x = y; p.y = kOne - x; break;
            case Rotation::R180: p.x = kOne - x; p.y = kOne - y; break;
            default: p.x = kOne - y; p.y = x; break;
        }
        out.add(it.shape, p);
    }
    return out;
}

}  // namespace orthopack
