#include "orthopack/match.hpp"

#include "orthopack/geometry.hpp"
#include "orthopack/packer_misc.hpp"
#include "orthopack/packer_small.hpp"
#include "orthopack/packer_symmetric.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

namespace orthopack {

namespace {

const Rational kZero(0);
const Rational kOne(1);

long floor_log2(long v) {
    long e = 0;
    while ((2L << e) <= v) ++e;
    return e;
}

long ceil_div(long a, long b) { return (a + b - 1) / b; }

// Presenter guarantee: ceil(n / floor(log2(k+1))) arrays.
long presenter_bound(long n, long k) { return ceil_div(n, floor_log2(k + 1)); }

long area_lower_bound(const std::vector<Shape>& shapes) {
    Rational area;
    for (const auto& s : shapes) area += shape_area(s);
    if (shapes.empty()) return 0;
    long lb = static_cast<long>((-(-area).floor()));  // ceil
    return std::max(1L, lb);
}

}  // namespace

std::string MatchResult::to_json() const {
    nlohmann::json j;
    j["algorithm"] = algorithm;
    j["family"] = family;
    j["objective"] = objective;
    j["items"] = items;
    j["bins"] = bins;
    if (metric) j["metric"] = metric->str();
    if (opt) {
        j["opt"] = *opt;
        j["opt_provenance"] = opt_provenance;
    }
    if (bound) {
        j["bound"] = *bound;
        j["bound_holds"] = bound_holds.value_or(false);
    }
    j["packing_valid"] = packing_valid;
    if (ratio_absolute) j["ratio_absolute"] = ratio_absolute->str();
    if (ratio_asymptotic) j["ratio_asymptotic"] = ratio_asymptotic->str();
    if (!notes.empty()) j["notes"] = notes;
    j["ok"] = ok();
    return j.dump(2);
}

SortPolicy make_sort_policy(const std::string& name, std::uint64_t seed) {
    if (name == "middle-slot")
        return [](const SortGame& g, const BigInt& v) { return middle_slot_move(g, v); };
    if (name == "first-fit")
        return [](const SortGame& g, const BigInt& v) { return first_fit_move(g, v); };
    if (name == "random") {
        auto rng = std::make_shared<Rng>(seed);
        return [rng](const SortGame& g, const BigInt& v) {
            std::vector<SortMove> options;
            for (int a = 0; a < g.arrays_used(); ++a)
                if (auto sec = g.valid_section(a, v)) {
                    int slot = static_cast<int>(
                        rng->uniform(sec->first, sec->second));
                    options.push_back({a, slot});
                }
            options.push_back({static_cast<int>(g.arrays_used()),
                               static_cast<int>(rng->uniform(0, g.k() - 1))});
            return options[static_cast<std::size_t>(rng->uniform(0, options.size() - 1))];
        };
    }
    throw std::invalid_argument("unknown sorting policy '" + name + "'");
}

long presenter_vs_sort_policy(long n, long k, const SortPolicy& policy,
                              std::vector<SortGame::Move>* trace, bool check_invariants) {
    SortGame game(k);
    Presenter pres(n);
    BigInt v = pres.current();
    for (;;) {
        if (check_invariants && !(pres.active_lo() < v && v < pres.active_hi()))
            throw std::logic_error("presenter: number escaped the active interval");
        SortMove mv = policy(game, v);
        game.place(v, mv.array, mv.slot);
        auto next = pres.observe(game);
        if (!next) break;
        if (check_invariants) {
            // The shrunken active set must stay mutually similar; its two
            // extremes represent the whole open interval.
            BigInt lo = pres.active_lo(), hi = pres.active_hi();
            if (hi - lo >= 4 && !game.similar_everywhere(lo + 1, hi - 1))
                throw std::logic_error("presenter: active set lost similarity");
        }
        v = *next;
    }
    if (trace) *trace = game.trace();
    return game.arrays_used();
}

LkMatch presenter_vs_lk_packer(long n, OnlinePacker& packer) {
    LkMatch match;
    SortingFromPacking adapter(packer, n);
    Presenter pres(n);
    BigInt v = pres.current();
    for (;;) {
        long number = static_cast<long>(v);
        match.presented.push_back(number);
        adapter.present(number);
        auto next = pres.observe(adapter.game());
        if (!next) break;
        v = *next;
    }
    match.bins = adapter.arrays_used();
    match.packing = adapter.packing();
    match.moves = adapter.game().trace();
    return match;
}

ZPolicy make_z_policy(const std::string& name, std::uint64_t seed) {
    if (name == "left") return [](const ZSkeleton&) { return kZero; };
    if (name == "right") return [](const ZSkeleton& z) { return kOne - z.w; };
    if (name == "random") {
        auto rng = std::make_shared<Rng>(seed);
        return [rng](const ZSkeleton& z) {
            // Dyadic point in [0, 1-w].
            return (kOne - z.w) * Rational(rng->uniform(0, 64), 64);
        };
    }
    throw std::invalid_argument("unknown z policy '" + name + "'");
}

ZMatch z_adversary_match(long n, const ZPolicy& policy) {
    ZMatch match;
    ZAdversary adv(n);
    while (!adv.done()) {
        ZSkeleton z = adv.next();
        Rational x = policy(z);
        for (const auto& prev : adv.trace()) {
            if (prev.i == adv.iteration()) continue;
            bool conflict = zskel_conflict(prev.z, prev.x_response, z, x);
            bool geo_disjoint = skeleton_disjoint(Shape(prev.z), {0, prev.x_response, kOne},
                                                  Shape(z), {0, x, kOne});
            if (!conflict) match.conflicts_total = false;
            if (conflict != !geo_disjoint) match.predicates_agree = false;
        }
        adv.observe(x);
    }
    match.trace = adv.trace();
    return match;
}

ZMatch zshape_adversary_match(long n, const ZPolicy& policy, std::uint64_t seed) {
    ZMatch match;
    Rng rng(seed);
    Rational t = zgon_thickness(n);
    ZAdversary adv(n);
    std::vector<std::pair<ZShape, Placement>> placed;
    while (!adv.done()) {
        ZSkeleton z = adv.next();
        Rational x = policy(z);
        ZShape solid = thicken(z, t);
        // Any y in [height, 1] is a valid vertical position for the solid.
        Rational slack = kOne - solid.height();
        Rational y = kOne - slack * Rational(rng.uniform(0, 8), 8);
        Placement here{0, x, y};
        for (const auto& [other, q] : placed)
            if (interior_disjoint(Shape(other), q, Shape(solid), here))
                match.conflicts_total = false;
        placed.emplace_back(solid, here);
        adv.observe(x);
    }
    match.trace = adv.trace();
    return match;
}

namespace {

// Adapter speaking the line protocol: one `item ...` line out, `bin x y` in.
class CustomStdioPacker : public OnlinePacker {
public:
    CustomStdioPacker(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    std::string name() const override { return "custom-stdio"; }
    long bins_used() const override { return bins_; }

    Placement place(const Shape& item) override {
        InstanceFile f;
        f.kind = shape_kind(item);
        f.items.push_back({item, std::nullopt, std::nullopt});
        std::string line = format_instance(f);
        line = line.substr(line.find("item"));
        out_ << line << std::flush;
        std::string reply;
        if (!std::getline(in_, reply)) throw PackerFailure("custom algorithm closed the stream");
        std::istringstream ss(reply);
        std::string bin_s, x_s, y_s;
        if (!(ss >> bin_s >> x_s >> y_s))
            throw PackerFailure("custom algorithm: expected 'bin x y'");
        Placement p{static_cast<int>(std::stol(bin_s)), Rational::parse(x_s),
                    Rational::parse(y_s)};
        bins_ = std::max(bins_, static_cast<long>(p.bin) + 1);
        return p;
    }

private:
    std::istream& in_;
    std::ostream& out_;
    long bins_ = 0;
};

class TraceReplayPacker : public OnlinePacker {
public:
    explicit TraceReplayPacker(const InstanceFile& replay) : replay_(replay) {}

    std::string name() const override { return "custom-via-trace"; }
    long bins_used() const override { return bins_; }

    Placement place(const Shape& item) override {
        if (next_ >= replay_.items.size())
            throw PackerFailure("replay trace shorter than the instance");
        const auto& rec = replay_.items[next_++];
        if (!(rec.shape == item)) throw PackerFailure("replay trace disagrees with the instance");
        if (!rec.place) throw PackerFailure("replay trace item lacks a placement");
        bins_ = std::max(bins_, static_cast<long>(rec.place->bin) + 1);
        return *rec.place;
    }

private:
    const InstanceFile& replay_;
    std::size_t next_ = 0;
    long bins_ = 0;
};

}  // namespace

std::unique_ptr<OnlinePacker> make_packer(const std::string& name,
                                          const std::optional<Rational>& t,
                                          const InstanceFile* replay, std::istream* custom_in,
                                          std::ostream* custom_out) {
    if (name == "trivial") return std::make_unique<TrivialPacker>();
    if (name == "first-fit-gravity") return std::make_unique<FirstFitGravityPacker>();
    if (name == "lasyl") return std::make_unique<LasylPacker>();
    if (name == "smalll") return std::make_unique<SmallLPacker>();
    if (name == "symmetric") return std::make_unique<SymmetricPacker>();
    if (name == "lskel") return std::make_unique<LSkelPacker>();
    if (name == "critical-density") {
        if (!t) throw std::invalid_argument("critical-density needs the arm bound t");
        return std::make_unique<CriticalDensityPacker>(*t);
    }
    if (name == "custom-stdio") {
        if (!custom_in || !custom_out)
            throw std::invalid_argument("custom-stdio needs streams to talk over");
        return std::make_unique<CustomStdioPacker>(*custom_in, *custom_out);
    }
    if (name == "custom-via-trace") {
        if (!replay) throw std::invalid_argument("custom-via-trace needs a replay packing");
        return std::make_unique<TraceReplayPacker>(*replay);
    }
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

namespace {

MatchResult run_sort_match(const InstanceFile& inst, bool bound_audit) {
    MatchResult res;
    res.algorithm = "middle-slot-sort";
    res.objective = "arrays";
    res.family = "binsorting";
    long k = inst.meta.count("k") ? std::stol(inst.meta.at("k"))
                                  : static_cast<long>(inst.numbers.size());
    if (k < 1) throw std::invalid_argument("binsorting match: need k >= 1");
    SortGame game(k);
    for (const auto& v : inst.numbers) {
        SortMove mv = middle_slot_move(game, v);
        game.place(v, mv.array, mv.slot);
    }
    long n = static_cast<long>(inst.numbers.size());
    res.items = n;
    res.bins = game.arrays_used();
    res.opt = sort_opt(n, k);
    res.opt_provenance = "sorted-insertion (ceil(n/k))";
    if (bound_audit && n > 0) {
        res.bound = "arrays <= ceil(n / floor(log2(k+1)))";
        res.bound_holds = res.bins <= presenter_bound(n, k);
    }
    if (res.opt && *res.opt > 0) {
        auto ratio = competitive_report(res.bins, *res.opt, 0);
        res.ratio_absolute = ratio.absolute;
    }
    return res;
}

MatchResult run_perimeter_match(const InstanceFile& inst, bool bound_audit) {
    MatchResult res;
    res.algorithm = "perimeter";
    res.objective = "perimeter";
    res.family = inst.kind;
    PerimeterPacker packer;
    for (const auto& s : inst.shapes()) {
        const auto* l = std::get_if<LShape>(&s);
        if (!l) throw PackerFailure("perimeter packer accepts L-shapes only");
        packer.place(*l);
    }
    res.items = static_cast<long>(inst.items.size());
    res.metric = packer.bbox_perimeter();
    res.packing_valid = packer.placements_ok();
    if (bound_audit) {
        res.bound = "perimeter <= 16 * max(2(W*+H*), 4*sqrt(area))";
        res.bound_holds = packer.perimeter_bound_ok();
    }
    res.notes = "plane packing; no bins";
    return res;
}

void lskel_audit(const std::vector<Shape>& shapes, MatchResult& res) {
    std::vector<Rational> s2, s3;
    bool s1 = false;
    for (const auto& s : shapes) {
        const auto& l = std::get<LSkeleton>(s);
        if (l.lx == kOne)
            s2.push_back(l.ly);
        else if (l.ly == kOne)
            s3.push_back(l.lx);
        else
            s1 = true;
    }
    if (s2.size() > 15 || s3.size() > 15) {
        res.notes += "; 1d oracle skipped (too many items)";
        return;
    }
    long opt2 = opt_bins_1d(s2, kOne);
    long opt3 = opt_bins_1d(s3, kOne);
    res.opt = std::max<long>(s1 ? 1 : 0, opt2 + opt3);
    res.opt_provenance = "1d-subset-dp over full-arm pools";
    res.bound = "bins <= max(1, 2*(OPT1D(S2)+OPT1D(S3)))";
    res.bound_holds = res.bins <= std::max(1L, 2 * (opt2 + opt3));
}

}  // namespace

MatchResult run_match(const InstanceFile& inst, const std::string& algorithm, bool bound_audit,
                      InstanceFile* packing_out, const InstanceFile* replay,
                      std::istream* custom_in, std::ostream* custom_out) {
    if (inst.kind == "binsorting" || algorithm == "middle-slot-sort") {
        if (inst.kind != "binsorting" || algorithm != "middle-slot-sort")
            throw std::invalid_argument("binsorting instances pair with middle-slot-sort");
        return run_sort_match(inst, bound_audit);
    }
    if (algorithm == "perimeter") return run_perimeter_match(inst, bound_audit);

    MatchResult res;
    res.algorithm = algorithm;
    res.family = inst.kind;
    std::optional<Rational> t;
    if (inst.meta.count("t")) t = Rational::parse(inst.meta.at("t"));
    auto packer = make_packer(algorithm, t, replay, custom_in, custom_out);

    Packing packing;
    long rejected = 0;
    auto shapes = inst.shapes();
    for (const auto& s : shapes) {
        try {
            packing.add(s, packer->place(s));
        } catch (const CriticalDensityPacker::OverBudget&) {
            ++rejected;
        }
    }
    res.items = static_cast<long>(shapes.size());
    res.bins = packing.bin_count();
    res.packing_valid = packing.size() == 0 || packing_ok(packing);
    if (rejected > 0)
        res.notes = std::to_string(rejected) + " item(s) rejected over the area budget";

    // Oracle selection and per-algorithm bound audit.
    std::vector<Shape> placed_shapes;
    for (const auto& [s, p] : packing.items) placed_shapes.push_back(s);
    res.opt = area_lower_bound(placed_shapes);
    res.opt_provenance = "area-lower-bound";

    if (algorithm == "lasyl" || algorithm == "symmetric") {
        std::vector<LShape> large;
        bool all_ls = true;
        for (const auto& s : placed_shapes) {
            const auto* l = std::get_if<LShape>(&s);
            if (!l) {
                all_ls = false;
                break;
            }
            if (l->is_large() && !(l->lx <= Rational(1, 2))) large.push_back(*l);
        }
        if (all_ls && algorithm == "lasyl" && placed_shapes.size() <= 15 && !placed_shapes.empty()) {
            std::vector<LShape> items;
            for (const auto& s : placed_shapes) items.push_back(std::get<LShape>(s));
            res.opt = opt_bins_large_symmetric(items);
            res.opt_provenance = "edd-subset-dp";
            if (bound_audit) {
                res.bound = "bins <= 33*OPT + 2";
                res.bound_holds = res.bins <= 33 * *res.opt + 2;
            }
        } else if (algorithm == "symmetric" && bound_audit) {
            long lb = *res.opt;
            if (large.size() <= 15 && !large.empty()) {
                lb = std::max(lb, static_cast<long>(opt_bins_large_symmetric(large)));
                res.opt = lb;
                res.opt_provenance = "max(area-lower-bound, edd-subset-dp on large pool)";
            }
            res.bound = "bins <= 41*LB + 9";
            res.bound_holds = res.bins <= 41 * lb + 9;
        }
    } else if (algorithm == "smalll" && bound_audit) {
        Rational area;
        for (const auto& s : placed_shapes) area += shape_area(s);
        res.bound = "bins <= 8*area + 7";
        res.bound_holds = Rational(res.bins) <= Rational(8) * area + Rational(7);
    } else if (algorithm == "lskel" && bound_audit) {
        lskel_audit(placed_shapes, res);
    } else if (algorithm == "critical-density" && bound_audit) {
        res.bound = "bins <= 1 under the area budget";
        res.bound_holds = res.bins <= 1;
    }

    if (res.opt && *res.opt > 0) {
        auto ratio = competitive_report(res.bins, *res.opt, 0);
        res.ratio_absolute = ratio.absolute;
    } else if (res.bins > 0) {
        res.packing_valid = res.packing_valid && false;  // opt 0 with bins used
    }

    if (packing_out) *packing_out = make_packing_file(inst.kind, packing);
    return res;
}

MatchResult run_adversary(const std::string& family, long n, const std::string& algorithm,
                          std::uint64_t seed, AdversaryOutputs* outs,
                          const std::optional<Rational>& t, const std::optional<Rational>& w,
                          std::istream* custom_in, std::ostream* custom_out) {
    MatchResult res;
    res.family = family;
    res.algorithm = algorithm;

    // Exact dyadics grow with n: certificate gaps scale like 2^-(n+3)/n and
    // the L^n family's heights have denominators 2^(2^n). Keep n where the
    // arithmetic stays comfortable.
    long cap = family == "lk" ? 20 : (family == "binsorting" ? 64 : 24);
    if (n > cap)
        throw std::invalid_argument("adversary " + family + ": n capped at " +
                                    std::to_string(cap));

    if (family == "binsorting") {
        res.objective = "arrays";
        std::vector<SortGame::Move> trace;
        res.bins = presenter_vs_sort_policy(n, n, make_sort_policy(algorithm, seed), &trace, true);
        res.items = n;
        res.opt = sort_opt(n, n);
        res.opt_provenance = "sorted-insertion (ceil(n/k))";
        res.bound = "arrays >= ceil(n / floor(log2(n+1)))";
        res.bound_holds = res.bins >= presenter_bound(n, n);
        if (outs) outs->trace_text = format_sort_trace(trace);
    } else if (family == "lk") {
        auto packer = make_packer(algorithm, std::nullopt, nullptr, custom_in, custom_out);
        LkMatch match = presenter_vs_lk_packer(n, *packer);
        res.items = n;
        res.bins = match.bins;
        Packing cert = pack_lk_descending(match.presented, n);
        bool cert_ok = packing_ok(cert) && cert.bin_count() == 1;
        res.opt = 1;
        res.opt_provenance = "descending-order certificate";
        res.bound = "bins >= ceil(n / floor(log2(n+1))) while OPT = 1";
        res.bound_holds = cert_ok && res.bins >= presenter_bound(n, n);
        res.packing_valid = packing_ok(match.packing);
        if (outs) {
            outs->trace_text = format_sort_trace(match.moves);
            outs->certificate = make_packing_file("lshape", cert);
        }
    } else if (family == "zskel" || family == "zshape") {
        ZPolicy policy;
        if (algorithm == "custom-stdio") {
            if (!custom_in || !custom_out)
                throw std::invalid_argument("custom-stdio needs streams to talk over");
            policy = [custom_in, custom_out](const ZSkeleton& z) {
                *custom_out << "item zskeleton w " << z.w.str() << " a " << z.a.str() << " b "
                            << z.b.str() << "\n"
                            << std::flush;
                std::string reply;
                if (!std::getline(*custom_in, reply))
                    throw PackerFailure("custom algorithm closed the stream");
                std::istringstream ss(reply);
                std::string bin_s, x_s, y_s;
                if (!(ss >> bin_s >> x_s >> y_s))
                    throw PackerFailure("custom algorithm: expected 'bin x y'");
                return Rational::parse(x_s);
            };
        } else {
            policy = make_z_policy(algorithm, seed);
        }
        ZMatch match = family == "zskel" ? z_adversary_match(n, policy)
                                         : zshape_adversary_match(n, policy, seed);
        res.items = n;
        res.bins = match.conflicts_total ? n : -1;
        Packing cert = zskel_certificate(match.trace);
        Rational required_gap = zgon_thickness(n);
        bool cert_ok = packing_ok(cert);
        auto gap = min_horizontal_gap(cert);
        auto sep = min_base_separation(cert);
        bool gap_ok = !gap || *gap >= required_gap;
        bool sep_ok = !sep || *sep >= Rational::pow2(-n);
        if (family == "zshape") {
            Packing thick = thicken_packing(cert, required_gap);
            cert_ok = cert_ok && packing_ok(thick);
            if (outs) outs->certificate = make_packing_file("zshape", thick);
        } else if (outs) {
            outs->certificate = make_packing_file("zskeleton", cert);
        }
        res.opt = 1;
        res.opt_provenance = "adversary certificate (one bin)";
        res.bound = "bins = n while OPT = 1; certificate gaps >= (1/n)*2^-(n+3)";
        res.bound_holds =
            match.conflicts_total && match.predicates_agree && cert_ok && gap_ok && sep_ok;
        res.packing_valid = cert_ok;
        if (outs) outs->trace_text = format_zskel_trace(match.trace);
    } else if (family == "density-ub") {
        Rational tb = t.value_or(Rational(3, 4));
        Rational wb = w.value_or(Rational(1, 100));
        long cap = density_ub_per_bin_capacity(tb, wb);
        long count = n > 0 ? n : cap + 1;
        auto items = density_ub_instance(tb, wb, static_cast<int>(count));
        FirstFitGravityPacker packer;
        Packing packing;
        for (const auto& it : items) packing.add(Shape(it), packer.place(Shape(it)));
        res.items = count;
        res.bins = packer.bins_used();
        res.packing_valid = packing_ok(packing);
        res.opt = ceil_div(count, cap);
        res.opt_provenance = "stack capacity floor((1-t)/w)+1";
        // Every full bin must hold exactly the capacity, total area per bin
        // below the density limit (2t-w)(1-t+w).
        std::vector<long> per_bin(res.bins, 0);
        for (const auto& [s, p] : packing.items) per_bin[p.bin]++;
        bool cap_ok = true;
        for (long b = 0; b + 1 < res.bins; ++b) cap_ok = cap_ok && per_bin[b] == cap;
        Rational bin_area_limit = (Rational(2) * tb - wb) * (kOne - tb + wb);
        Rational one_bin_area = Rational(cap) * items.front().area();
        res.bound = "per-bin capacity = floor((1-t)/w)+1, bin area <= (2t-w)(1-t+w)";
        res.bound_holds = cap_ok && one_bin_area <= bin_area_limit;
        res.metric = one_bin_area;
    } else {
        throw std::invalid_argument("unknown adversary family '" + family + "'");
    }

    if (res.opt && *res.opt > 0 && res.bins >= 0) {
        auto ratio = competitive_report(res.bins, *res.opt, 0);
        res.ratio_absolute = ratio.absolute;
    }
    return res;
}

}  // namespace orthopack
