#pragma once

#include "orthopack/shapes.hpp"

#include <optional>
#include <vector>

namespace orthopack {

// Single-bin feasibility for large symmetric L-shapes. An item of arm length
// l and width w behaves like a job with processing time w and deadline
// 1 - l + w; a set fits into one bin iff stacking in earliest-deadline order
// respects every deadline.
bool edd_feasible(const std::vector<LShape>& items);

// Exact minimum number of bins for large symmetric L-shapes via dynamic
// programming over feasible subsets. Intended for n <= 15 (throws above 20).
int opt_bins_large_symmetric(const std::vector<LShape>& items);

// Exact 1D bin packing optimum over subsets; same size limits.
int opt_bins_1d(const std::vector<Rational>& sizes, const Rational& capacity);

struct RatioRecord {
    Rational absolute;           // bins / opt
    Rational asymptotic;         // (bins - beta) / opt
    long beta = 0;
    bool valid = true;           // false when opt == 0 with bins > 0
};

RatioRecord competitive_report(long algorithm_bins, long opt, long beta);

}  // namespace orthopack
