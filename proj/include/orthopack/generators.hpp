#pragma once

#include "orthopack/instance_io.hpp"
#include "orthopack/rational.hpp"

#include <cstdint>
#include <string>

namespace orthopack {

// Deterministic splitmix64 stream; identical across platforms so that a
// fixed seed reproduces instance files byte for byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    // Uniform integer in [lo, hi], inclusive.
    long uniform(long lo, long hi);
    // Uniform dyadic m / 2^bits with m in [lo_num, hi_num].
    Rational dyadic(long lo_num, long hi_num, int bits);
    bool coin() { return next() & 1; }

private:
    std::uint64_t state_;
};

// Families: uniform-small, large-symmetric, lk, skeleton-mixed,
// density-budget (needs t; keeps the total area within (1-t)^3/125).
InstanceFile gen_instance(const std::string& family, long n, long k, const Rational& t,
                          std::uint64_t seed);

}  // namespace orthopack
