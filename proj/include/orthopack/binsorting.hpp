#pragma once

#include "orthopack/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace orthopack {

// Offline optimum of the k-slot sorting game: ceil(n/k) arrays.
long sort_opt(long n, long k);

struct SortMove {
    int array;
    int slot;
};

// State of one sorting game: arrays of k slots each, filled entries strictly
// increasing left to right within every array. Records the full move history.
class SortGame {
public:
    explicit SortGame(long k);

    long k() const { return k_; }
    long arrays_used() const { return static_cast<long>(arrays_.size()); }
    long n_presented() const { return static_cast<long>(trace_.size()); }

    // The unique free section into which `v` may go in an existing array,
    // as an inclusive slot range; nullopt when the array cannot take `v`.
    std::optional<std::pair<int, int>> valid_section(int array, const BigInt& v) const;

    bool is_legal(int array, int slot, const BigInt& v) const;

    // `array` may equal arrays_used() to open a fresh array. Throws on an
    // illegal move (duplicate value, occupied slot, order violation).
    void place(const BigInt& v, int array, int slot);

    // Sizes of the two free runs adjacent to an occupied slot (the subsections
    // created by placing there).
    std::pair<long, long> sections_around(int array, int slot) const;

    struct Move {
        BigInt value;
        int array;
        int slot;
    };
    const std::vector<Move>& trace() const { return trace_; }

    const std::optional<BigInt>& at(int array, int slot) const { return arrays_[array][slot]; }

    // True iff u and v would be inserted into the same free section of every
    // array (the "similar" relation of the presenter argument).
    bool similar_everywhere(const BigInt& u, const BigInt& v) const;

private:
    long k_;
    std::vector<std::vector<std::optional<BigInt>>> arrays_;
    std::vector<Move> trace_;
};

// Places into the first array with a valid section, at the middle slot
// floor((lo+hi)/2) of that section; opens a new array when none is valid.
SortMove middle_slot_move(const SortGame& game, const BigInt& v);

// First array with a valid section, leftmost slot of it.
SortMove first_fit_move(const SortGame& game, const BigInt& v);

// The halving presenter: keeps an active open interval (lo, hi) of numbers
// that are similar with respect to every array and always presents its
// midpoint. After the algorithm's move, the interval shrinks toward the
// smaller free subsection (ties count as left).
class Presenter {
public:
    explicit Presenter(long n);

    long n() const { return n_; }
    long iteration() const { return i_; }
    const BigInt& current() const { return a_; }
    const BigInt& active_lo() const { return lo_; }
    const BigInt& active_hi() const { return hi_; }

    // Advances after observing where the current number landed; returns the
    // next number, or nullopt once n numbers have been presented.
    std::optional<BigInt> next(bool smaller_section_left);

    // Convenience: derives the section comparison from the game's last move.
    std::optional<BigInt> observe(const SortGame& game);

private:
    long n_;
    long i_;
    BigInt lo_, hi_;
    BigInt a_;
};

}  // namespace orthopack
