#include "orthopack/binsorting.hpp"

#include <stdexcept>

namespace orthopack {

long sort_opt(long n, long k) {
    if (n < 0 || k < 1) throw std::invalid_argument("sort_opt: need n >= 0, k >= 1");
    return (n + k - 1) / k;
}

SortGame::SortGame(long k) : k_(k) {
    if (k < 1) throw std::invalid_argument("SortGame: need k >= 1");
}

std::optional<std::pair<int, int>> SortGame::valid_section(int array, const BigInt& v) const {
    const auto& slots = arrays_[array];
    int lo = 0;
    int hi = static_cast<int>(k_) - 1;
    for (int s = 0; s < k_; ++s) {
        if (!slots[s]) continue;
        if (*slots[s] < v) lo = s + 1;
        if (*slots[s] == v) return std::nullopt;
        if (*slots[s] > v) {
            hi = s - 1;
            break;
        }
    }
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

bool SortGame::is_legal(int array, int slot, const BigInt& v) const {
    if (array < 0 || array > arrays_used() || slot < 0 || slot >= k_) return false;
    if (array == arrays_used()) return true;  // fresh array, all slots valid
    auto sec = valid_section(array, v);
    return sec && sec->first <= slot && slot <= sec->second;
}

void SortGame::place(const BigInt& v, int array, int slot) {
    for (const auto& row : arrays_)
        for (const auto& cell : row)
            if (cell && *cell == v) throw std::invalid_argument("SortGame: duplicate number");
    if (!is_legal(array, slot, v)) throw std::invalid_argument("SortGame: illegal move");
    if (array == arrays_used()) arrays_.emplace_back(k_);
    arrays_[array][slot] = v;
    trace_.push_back({v, array, slot});
}

std::pair<long, long> SortGame::sections_around(int array, int slot) const {
    const auto& slots = arrays_[array];
    long left = 0, right = 0;
    for (int s = slot - 1; s >= 0 && !slots[s]; --s) ++left;
    for (int s = slot + 1; s < k_ && !slots[s]; ++s) ++right;
    return {left, right};
}

bool SortGame::similar_everywhere(const BigInt& u, const BigInt& v) const {
    for (const auto& row : arrays_)
        for (const auto& cell : row)
            if (cell && ((u < *cell) != (v < *cell) || *cell == u || *cell == v)) return false;
    return true;
}

namespace {
SortMove pick(const SortGame& game, const BigInt& v, bool middle) {
    for (int a = 0; a < game.arrays_used(); ++a) {
        auto sec = game.valid_section(a, v);
        if (sec) {
            int slot = middle ? (sec->first + sec->second) / 2 : sec->first;
            return {a, slot};
        }
    }
    int fresh = static_cast<int>(game.arrays_used());
    return {fresh, middle ? static_cast<int>((game.k() - 1) / 2) : 0};
}
}  // namespace

SortMove middle_slot_move(const SortGame& game, const BigInt& v) { return pick(game, v, true); }

SortMove first_fit_move(const SortGame& game, const BigInt& v) { return pick(game, v, false); }

Presenter::Presenter(long n) : n_(n), i_(1), lo_(0) {
    if (n < 1) throw std::invalid_argument("Presenter: need n >= 1");
    hi_ = BigInt(1) << static_cast<unsigned>(n);
    a_ = BigInt(1) << static_cast<unsigned>(n - 1);
}

std::optional<BigInt> Presenter::next(bool smaller_section_left) {
    if (i_ >= n_) {
        ++i_;
        return std::nullopt;
    }
    if (smaller_section_left)
        hi_ = a_;
    else
        lo_ = a_;
    BigInt step = BigInt(1) << static_cast<unsigned>(n_ - (i_ + 1));
    a_ = smaller_section_left ? BigInt(a_ - step) : BigInt(a_ + step);
    ++i_;
    return a_;
}

std::optional<BigInt> Presenter::observe(const SortGame& game) {
    if (game.trace().empty()) throw std::invalid_argument("Presenter: no move to observe");
    const auto& mv = game.trace().back();
    if (mv.value != a_) throw std::invalid_argument("Presenter: game is out of sync");
    auto [left, right] = game.sections_around(mv.array, mv.slot);
    return next(left <= right);
}

}  // namespace orthopack
