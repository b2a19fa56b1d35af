#include "orthopack/packer_misc.hpp"

#include <algorithm>
#include <stdexcept>

namespace orthopack {

namespace {
const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);

int remap(std::vector<int>& pool, long idx, long& next_bin) {
    if (idx >= static_cast<long>(pool.size())) pool.resize(idx + 1, -1);
    if (pool[idx] < 0) pool[idx] = static_cast<int>(next_bin++);
    return pool[idx];
}
}  // namespace

Placement FirstFitGravityPacker::place(const Shape& item) {
    const auto* l = std::get_if<LShape>(&item);
    if (!l) throw PackerFailure("first-fit-gravity handles L-shapes only");
    for (std::size_t b = 0; b < bins_.size(); ++b)
        if (auto pos = bins_[b].try_add(*l))
            return Placement{static_cast<int>(b), pos->first, pos->second};
    bins_.emplace_back();
    auto pos = bins_.back().try_add(*l);
    if (!pos) throw PackerFailure("first-fit-gravity: item does not fit an empty bin");
    return Placement{static_cast<int>(bins_.size()) - 1, pos->first, pos->second};
}

Placement SymmetricPacker::place(const Shape& item) {
    const auto* l = std::get_if<LShape>(&item);
    if (!l || !l->is_symmetric()) throw PackerFailure("symmetric packer: symmetric L-shapes only");
    if (l->lx <= kHalf) {
        Placement p = small_.place(item);
        return Placement{remap(small_map_, p.bin, next_bin_), p.x, p.y};
    }
    Placement p = large_.place(item);
    return Placement{remap(large_map_, p.bin, next_bin_), p.x, p.y};
}

Rational LSkelPacker::diagonal_value(const Rational& want) {
    if (!occupied_.count(want)) {
        occupied_.insert(want);
        return want;
    }
    auto it = occupied_.lower_bound(want);
    Rational below = it == occupied_.begin() ? kZero : *std::prev(it);
    Rational mid = (below + want) / Rational(2);
    occupied_.insert(mid);
    return mid;
}

Rational LSkelPacker::nextfit_offset(NextFitState& st, const Rational& size) {
    bool collision = st.used.count(st.fill) > 0;  // only possible after zero-size items
    if (st.active_bin < 0 || st.fill + size > kOne || collision) {
        if (st.active_bin >= 0) {
            if (!collision) {
                // NextFit guarantee: two consecutive capacity-closed bins exceed 1.
                if (st.last_closed_sum >= kZero && st.last_closed_sum + st.fill <= kOne)
                    throw std::logic_error("lskel: consecutive NextFit bins within capacity");
                st.last_closed_sum = st.fill;
            } else {
                st.last_closed_sum = Rational(-1);  // zero-size closure breaks the chain
            }
        }
        st.active_bin = static_cast<int>(next_bin_++);
        ++st.bins;
        st.fill = kZero;
        st.used.clear();
    }
    Rational off = st.fill;
    st.used.insert(off);
    st.fill += size;
    return off;
}

Placement LSkelPacker::place(const Shape& item) {
    const auto* s = std::get_if<LSkeleton>(&item);
    if (!s) throw PackerFailure("lskel packer accepts L-skeletons only");
    if (s->lx < kOne && s->ly < kOne) {
        if (s1_bin_ < 0) s1_bin_ = static_cast<int>(next_bin_++);
        Rational d = diagonal_value(kOne - max(s->lx, s->ly));
        return Placement{s1_bin_, d, d};
    }
    if (s->lx == kOne) {
        Rational y = nextfit_offset(s2_, s->ly);
        return Placement{s2_.active_bin, kZero, y};
    }
    Rational x = nextfit_offset(s3_, s->lx);
    return Placement{s3_.active_bin, x, kZero};
}

CriticalDensityPacker::CriticalDensityPacker(Rational t)
    : t_(std::move(t)), ss_packer_() {
    if (!(kZero < t_ && t_ < kOne))
        throw std::invalid_argument("CriticalDensityPacker: need 0 < t < 1");
    a_ = (kOne - t_) / Rational(10);
    h_ = a_ * Rational(2);
    budget_ = (kOne - t_) * (kOne - t_) * (kOne - t_) / Rational(125);
    ll_stack_ = GravityStack(t_ + h_, t_ + h_);
}

Rect CriticalDensityPacker::region_ll() const { return {kZero, kZero, t_ + h_, t_ + h_}; }
Rect CriticalDensityPacker::region_ls() const {
    return {kZero, t_ + h_, t_ + h_, t_ + h_ + h_ * Rational(4)};
}
Rect CriticalDensityPacker::region_sl() const {
    return {t_ + h_, kZero, t_ + h_ + h_ * Rational(4), t_ + h_};
}
Rect CriticalDensityPacker::region_ss() const {
    Rational side = a_ * Rational(8);
    return {t_ + h_, t_ + h_, t_ + h_ + side, t_ + h_ + side};
}

Placement CriticalDensityPacker::place(const Shape& item) {
    const auto* l = std::get_if<LShape>(&item);
    if (!l) throw PackerFailure("critical-density packer accepts L-shapes only");
    if (l->lx > t_ || l->ly > t_)
        throw PackerFailure("critical-density: arm length above the configured bound");
    if (area_used_ + l->area() > budget_) throw OverBudget();
    Placement p = place_impl(*l);
    area_used_ += l->area();
    used_ = true;
    return p;
}

Placement CriticalDensityPacker::place_impl(const LShape& item) {
    if (item.area() == kZero) return Placement{0, kZero, kZero};  // empty interior

    bool x_small = item.lx <= a_;
    bool y_small = item.ly <= a_;
    if (!x_small && !y_small) {
        auto pos = ll_stack_.try_add(item);
        if (!pos) throw std::logic_error("critical-density: C_ll container overflow");
        return Placement{0, pos->first, pos->second};
    }
    if (x_small && y_small) {
        Rational side = a_ * Rational(2);
        LShape scaled(item.lx / side, item.wx / side, item.ly / side, item.wy / side);
        Placement inner = ss_packer_.place(Shape(scaled));
        if (inner.bin >= 16) throw std::logic_error("critical-density: C_ss needs too many squares");
        Rect ss = region_ss();
        Rational ox = ss.x0 + side * Rational(inner.bin % 4);
        Rational oy = ss.y0 + side * Rational(inner.bin / 4);
        return Placement{0, ox + inner.x * side, oy + inner.y * side};
    }
    // One short arm: height (resp. width) classes of size h/2^i holding arms
    // in (h/2^{i+2}, h/2^{i+1}], packed into strips of the tall container.
    auto class_of = [&](const Rational& len) {
        long i = 0;
        while (len <= h_ * Rational::pow2(-i - 2)) ++i;
        return i;
    };
    if (!x_small) {  // lx in (a, t], ly <= a: rows of the region above C_ll
        long i = class_of(item.ly);
        Rational cap_y = h_ * Rational::pow2(-i);
        auto placed = ls_dense_.place(CategoryAB{i, -1}, t_ + h_, cap_y, item);
        if (placed.opened_new) {
            Rect region = region_ls();
            if (ls_fill_ + cap_y > region.height())
                throw std::logic_error("critical-density: C_ls container overflow");
            ls_rect_y_[placed.rect_id] = region.y0 + ls_fill_;
            ls_fill_ += cap_y;
        }
        return Placement{0, placed.dx, ls_rect_y_.at(placed.rect_id) + placed.dy};
    }
    long i = class_of(item.lx);  // columns right of C_ll, mirrored
    Rational cap_x = h_ * Rational::pow2(-i);
    auto placed = sl_dense_.place(CategoryAB{-1, i}, cap_x, t_ + h_, item);
    if (placed.opened_new) {
        Rect region = region_sl();
        if (sl_fill_ + cap_x > region.width())
            throw std::logic_error("critical-density: C_sl container overflow");
        sl_rect_x_[placed.rect_id] = region.x0 + sl_fill_;
        sl_fill_ += cap_x;
    }
    return Placement{0, sl_rect_x_.at(placed.rect_id) + placed.dx, placed.dy};
}

PerimeterPacker::PlanePlacement PerimeterPacker::rect_origin(const CategoryAB& key,
                                                             const Rational& w,
                                                             const Rational& h) {
    if (!tiled_.count(key)) {
        tiled_.insert(key);
        Rect spot = rtiling_spot(key.a, key.b);
        return {spot.x0, spot.y0};
    }
    // Brick shelves below the axis; shelf width grows with the square root of
    // the rectangle area routed here, keeping the box roughly square.
    brick_area_ += w * h;
    widest_rect_ = max(widest_rect_, w);
    for (auto& s : shelves_)
        if (s.height == h && s.fill + w <= s.cap) {
            PlanePlacement p{s.fill, s.y_top - h};
            s.fill += w;
            return p;
        }
    long e = 0;
    while (Rational::pow2(2 * e) < brick_area_) ++e;
    Rational cap = max(Rational::pow2(e), widest_rect_);
    shelves_.push_back({shelf_bottom_, h, w, cap});
    shelf_bottom_ -= h;
    return {kZero, shelf_bottom_};
}

PerimeterPacker::PlanePlacement PerimeterPacker::place(const LShape& item) {
    if (item.lx <= kZero || item.ly <= kZero)
        throw std::invalid_argument("perimeter packer: arms must be positive");
    CategoryAB key = category_ab(item);
    Rational w = Rational::pow2(-key.a), h = Rational::pow2(-key.b);
    auto placed = dense_.place(key, w, h, item);
    if (placed.opened_new) origins_[placed.rect_id] = rect_origin(key, w, h);
    const auto& o = origins_.at(placed.rect_id);
    PlanePlacement p{o.x + placed.dx, o.y + placed.dy};

    Rect ext{p.x, p.y, p.x + item.lx, p.y + item.ly};
    if (items_.empty()) {
        bbox_ = ext;
    } else {
        bbox_ = {min(bbox_.x0, ext.x0), min(bbox_.y0, ext.y0), max(bbox_.x1, ext.x1),
                 max(bbox_.y1, ext.y1)};
    }
    items_.emplace_back(item, p);
    item_area_ += item.area();
    max_w_ = max(max_w_, item.lx);
    max_h_ = max(max_h_, item.ly);
    return p;
}

Rational PerimeterPacker::bbox_perimeter() const {
    if (items_.empty()) return kZero;
    return (bbox_.width() + bbox_.height()) * Rational(2);
}

bool PerimeterPacker::perimeter_bound_ok() const {
    if (items_.empty()) return true;
    Rational p = bbox_perimeter();
    if (p <= Rational(32) * (max_w_ + max_h_)) return true;
    return p * p <= Rational(4096) * item_area_;  // p <= 64 sqrt(area)
}

bool PerimeterPacker::placements_ok() const {
    for (std::size_t i = 0; i < items_.size(); ++i)
        for (std::size_t j = i + 1; j < items_.size(); ++j) {
            Placement pi{0, items_[i].second.x, items_[i].second.y};
            Placement pj{0, items_[j].second.x, items_[j].second.y};
            if (!interior_disjoint(Shape(items_[i].first), pi, Shape(items_[j].first), pj))
                return false;
        }
    return true;
}

}  // namespace orthopack
