#include "orthopack/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace orthopack {

namespace {

constexpr int kMaxOracleItems = 20;

void check_large_symmetric(const std::vector<LShape>& items) {
    for (const auto& s : items)
        if (!(s.is_large() && s.is_symmetric()))
            throw std::invalid_argument("oracle: items must be large and symmetric");
}

// Scales a list of rationals to a common integer grid when that grid is small
// enough for fast 64-bit subset sweeps; returns nullopt otherwise.
std::optional<std::vector<std::int64_t>> scale_to_int(const std::vector<Rational>& vals) {
    BigInt l(1);
    for (const auto& v : vals) l = boost::multiprecision::lcm(l, v.den());
    if (l > std::numeric_limits<std::int32_t>::max()) return std::nullopt;
    std::vector<std::int64_t> out;
    for (const auto& v : vals) {
        BigInt scaled = v.num() * (l / v.den());
        if (scaled.sign() < 0 || scaled > std::numeric_limits<std::int32_t>::max())
            return std::nullopt;
        out.push_back(static_cast<std::int64_t>(scaled));
    }
    return out;
}

// feasible[mask] for "stack the masked items in deadline order, every prefix
// of widths must stay within the matching deadline".
std::vector<char> deadline_feasible(const std::vector<Rational>& w, const std::vector<Rational>& d) {
    const int n = static_cast<int>(w.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

    std::vector<char> feasible(std::size_t(1) << n, 1);
    std::vector<Rational> all;
    all.insert(all.end(), w.begin(), w.end());
    all.insert(all.end(), d.begin(), d.end());
    if (auto ints = scale_to_int(all)) {
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::int64_t sum = 0;
            for (int idx : order) {
                if (!(mask >> idx & 1)) continue;
                sum += (*ints)[idx];
                if (sum > (*ints)[n + idx]) {
                    feasible[mask] = 0;
                    break;
                }
            }
        }
    } else {
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Rational sum(0);
            for (int idx : order) {
                if (!(mask >> idx & 1)) continue;
                sum += w[idx];
                if (sum > d[idx]) {
                    feasible[mask] = 0;
                    break;
                }
            }
        }
    }
    return feasible;
}

int min_feasible_parts(const std::vector<char>& feasible, int n) {
    if (n == 0) return 0;
    const std::uint32_t full = (1u << n) - 1;
    std::vector<int> opt(full + 1, std::numeric_limits<int>::max() / 2);
    opt[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t low = mask & (~mask + 1);
        for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low) || !feasible[sub]) continue;
            opt[mask] = std::min(opt[mask], opt[mask ^ sub] + 1);
        }
    }
    return opt[full];
}

}  // namespace

bool edd_feasible(const std::vector<LShape>& items) {
    check_large_symmetric(items);
    std::vector<std::pair<Rational, Rational>> jobs;  // (deadline, width)
    for (const auto& s : items) jobs.emplace_back(Rational(1) - s.lx + s.wx, s.wx);
    std::sort(jobs.begin(), jobs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Rational sum(0);
    for (const auto& [d, w] : jobs) {
        sum += w;
        if (sum > d) return false;
    }
    return true;
}

int opt_bins_large_symmetric(const std::vector<LShape>& items) {
    check_large_symmetric(items);
    const int n = static_cast<int>(items.size());
    if (n == 0) return 0;
    if (n > kMaxOracleItems) throw std::invalid_argument("opt_bins_large_symmetric: too many items");
    std::vector<Rational> w, d;
    for (const auto& s : items) {
        w.push_back(s.wx);
        d.push_back(Rational(1) - s.lx + s.wx);
    }
    return min_feasible_parts(deadline_feasible(w, d), n);
}

int opt_bins_1d(const std::vector<Rational>& sizes, const Rational& capacity) {
    const int n = static_cast<int>(sizes.size());
    if (n == 0) return 0;
    if (n > kMaxOracleItems) throw std::invalid_argument("opt_bins_1d: too many items");
    for (const auto& s : sizes)
        if (s > capacity) throw std::invalid_argument("opt_bins_1d: item exceeds capacity");
    // Same machinery: every item gets the capacity as its deadline.
    std::vector<Rational> d(sizes.size(), capacity);
    return min_feasible_parts(deadline_feasible(sizes, d), n);
}

RatioRecord competitive_report(long algorithm_bins, long opt, long beta) {
    RatioRecord r;
    r.beta = beta;
    if (opt == 0) {
        r.valid = algorithm_bins == 0;
        return r;
    }
    r.absolute = Rational(algorithm_bins) / Rational(opt);
    r.asymptotic = Rational(algorithm_bins - beta) / Rational(opt);
    return r;
}

}  // namespace orthopack
