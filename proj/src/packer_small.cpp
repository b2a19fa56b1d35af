#include "orthopack/packer_small.hpp"

#include <stdexcept>

namespace orthopack {

namespace {
const Rational kZero(0);
const Rational kOne(1);

long class_index(const Rational& len) {
    if (len <= kZero || len > kOne)
        throw std::invalid_argument("category_ab: arm length must lie in (0,1]");
    long a = -1;
    while (len <= Rational::pow2(-a - 2)) ++a;
    return a;
}

bool is_pow2_fraction(const Rational& v) {
    if (v <= kZero || v > kOne || v.num() != 1) return false;
    BigInt d = v.den();
    return (d & (d - 1)) == 0;
}
}  // namespace

CategoryAB category_ab(const LShape& s) { return {class_index(s.lx), class_index(s.ly)}; }

DensePacker::Placed DensePacker::place(const CategoryAB& key, const Rational& cap_x,
                                       const Rational& cap_y, const LShape& item) {
    Placed out{};
    auto it = active_.find(key);
    if (it != active_.end()) {
        OpenRect& rect = rects_[it->second];
        if (auto pos = rect.stack.try_add(item)) {
            rect.info.item_area += item.area();
            ++rect.info.items;
            return {it->second, pos->first, pos->second, false, std::nullopt};
        }
        rect.info.closed = true;  // bypassed once means closed for good
        out.closed_rect_id = it->second;
    }
    long id = rect_count();
    rects_.push_back({RectInfo{key, cap_x, cap_y, kZero, 0, false},
                      GravityStack(cap_x, cap_y)});
    auto pos = rects_.back().stack.try_add(item);
    if (!pos)
        throw std::invalid_argument("DensePacker: item cannot fit an empty rectangle of its class");
    rects_.back().info.item_area += item.area();
    rects_.back().info.items = 1;
    active_[key] = id;
    out.rect_id = id;
    out.dx = pos->first;
    out.dy = pos->second;
    out.opened_new = true;
    return out;
}

NiceRectanglePacker::Spot NiceRectanglePacker::place(const Rational& w, const Rational& h) {
    if (!is_pow2_fraction(w) || !is_pow2_fraction(h))
        throw std::invalid_argument("NiceRectanglePacker: sides must be powers of two in (0,1]");
    placed_area_ += w * h;
    for (auto& s : strips_) {
        if (s.height == h && s.fill_x + w <= kOne) {
            Spot spot{s.bin, s.fill_x, s.y0};
            s.fill_x += w;
            return spot;
        }
    }
    // Open a strip, FirstFit over bins.
    int bin = -1;
    for (std::size_t b = 0; b < bin_fill_.size(); ++b) {
        if (bin_fill_[b] + h <= kOne) {
            bin = static_cast<int>(b);
            break;
        }
    }
    if (bin < 0) {
        bin = static_cast<int>(bin_fill_.size());
        bin_fill_.push_back(kZero);
    }
    Strip strip{bin, bin_fill_[bin], w, h};
    bin_fill_[bin] += h;
    strips_.push_back(strip);
    return {bin, kZero, strip.y0};
}

Rational NiceRectanglePacker::free_area() const {
    return Rational(bins_used()) - placed_area_;
}

long NiceRectanglePacker::strips_of_height(const Rational& h) const {
    long n = 0;
    for (const auto& s : strips_)
        if (s.height == h) ++n;
    return n;
}

Rational rtiling_total_area() { return Rational(4); }

Rational rtiling_truncated_area(long imax, long jmax) {
    Rational sum;
    for (long i = 0; i <= imax; ++i)
        for (long j = 0; j <= jmax; ++j) sum += Rational::pow2(-i) * Rational::pow2(-j);
    return sum;
}

Rect rtiling_spot(long a, long b) {
    Rational w = Rational::pow2(-a), h = Rational::pow2(-b);
    return {w, h, w + w, h + h};
}

Placement SmallLPacker::place(const Shape& item) {
    const auto* l = std::get_if<LShape>(&item);
    if (!l || !l->is_small())
        throw PackerFailure("smalll packer accepts small L-shapes only");
    CategoryAB cat = category_ab(*l);
    Rational cap_x = Rational::pow2(-cat.a), cap_y = Rational::pow2(-cat.b);
    auto placed = dense_.place(cat, cap_x, cap_y, *l);
    item_area_ += l->area();
    if (placed.closed_rect_id) {
        // Density guarantee of the closed rectangle; a failure here would
        // falsify the 1/8 bound the bin count rests on.
        const auto& info = dense_.info(*placed.closed_rect_id);
        if (!(info.item_area * Rational(8) > info.cap_x * info.cap_y))
            throw std::logic_error("smalll: closed rectangle below density 1/8");
        ++closures_;
    }
    if (placed.opened_new)
        rect_spot_[placed.rect_id] = rects_.place(cap_x, cap_y);
    const auto& spot = rect_spot_.at(placed.rect_id);
    return Placement{spot.bin, spot.x + placed.dx, spot.y + placed.dy};
}

}  // namespace orthopack
