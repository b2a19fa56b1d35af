#include "orthopack/svg_render.hpp"

#include "orthopack/geometry.hpp"

#include <cstdio>
#include <set>
#include <vector>

namespace orthopack {

namespace {

constexpr double kScale = 200.0;
constexpr double kPad = 20.0;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

struct BinFrame {
    double ox;
    double px(const Rational& x) const { return ox + x.to_double() * kScale; }
    double py(const Rational& y) const { return kPad + (1.0 - y.to_double()) * kScale; }
};

std::string polygon(const BinFrame& f, const std::vector<Point>& pts, const char* fill,
                    const char* stroke) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        d += (i == 0 ? "M" : "L");
        d += num(f.px(pts[i].x)) + " " + num(f.py(pts[i].y)) + " ";
    }
    d += "Z";
    return "  <path d=\"" + d + "\" fill=\"" + fill + "\" fill-opacity=\"0.55\" stroke=\"" +
           stroke + "\" stroke-width=\"1\"/>\n";
}

std::vector<Point> outline(const LShape& s, const Placement& p) {
    const Rational& x = p.x;
    const Rational& y = p.y;
    return {{x, y},          {x + s.lx, y},          {x + s.lx, y + s.wy}, {x + s.wx, y + s.wy},
            {x + s.wx, y + s.ly}, {x, y + s.ly}};
}

std::vector<Point> outline(const ZShape& s, const Placement& p) {
    const Rational& x = p.x;
    const Rational& y = p.y;
    Rational base_top = y - s.a + s.t;
    Rational base_bot = y - s.a;
    return {{x, y},
            {x + s.ta, y},
            {x + s.ta, base_top},
            {x + s.w, base_top},
            {x + s.w, base_top - s.b},
            {x + s.w - s.tb, base_top - s.b},
            {x + s.w - s.tb, base_bot},
            {x, base_bot}};
}

std::string polyline(const BinFrame& f, const std::vector<Segment>& segs, const char* stroke) {
    std::string out;
    for (const auto& g : segs) {
        out += "  <line x1=\"" + num(f.px(g.x0)) + "\" y1=\"" + num(f.py(g.y0)) + "\" x2=\"" +
               num(f.px(g.x1)) + "\" y2=\"" + num(f.py(g.y1)) + "\" stroke=\"" + stroke +
               "\" stroke-width=\"2\" stroke-linecap=\"round\"/>\n";
    }
    return out;
}

}  // namespace

std::string render_packing_svg(const InstanceFile& packing) {
    Packing p = packing.items.empty() ? Packing{} : packing.to_packing();
    std::set<std::size_t> bad;
    if (!p.items.empty()) {
        for (const auto& v : validate_packing(p)) {
            bad.insert(v.first);
            bad.insert(v.second);
        }
    }
    int bins = std::max(1, p.bin_count());
    double width = kPad + bins * (kScale + kPad);
    double height = kScale + 2 * kPad;

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
                      "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
                      num(height) + "\">\n";
    for (int b = 0; b < bins; ++b) {
        double ox = kPad + b * (kScale + kPad);
        svg += "  <rect x=\"" + num(ox) + "\" y=\"" + num(kPad) + "\" width=\"" + num(kScale) +
               "\" height=\"" + num(kScale) +
               "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    }
    static const char* palette[] = {"#4c78a8", "#f58518", "#54a24b", "#b279a2",
                                    "#e45756", "#72b7b2", "#eeca3b", "#9d755d"};
    for (std::size_t i = 0; i < p.items.size(); ++i) {
        const auto& [s, pl] = p.items[i];
        BinFrame f{kPad + pl.bin * (kScale + kPad)};
        bool violated = bad.count(i) > 0;
        const char* color = violated ? "#d62728" : palette[i % 8];
        const char* stroke = violated ? "#d62728" : "#222222";
        if (const auto* l = std::get_if<LShape>(&s)) {
            svg += polygon(f, outline(*l, pl), color, stroke);
        } else if (const auto* z = std::get_if<ZShape>(&s)) {
            svg += polygon(f, outline(*z, pl), color, stroke);
        } else {
            svg += polyline(f, skeleton_segments(s, pl), violated ? "#d62728" : color);
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace orthopack
