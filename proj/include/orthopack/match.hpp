#pragma once

#include "orthopack/adversaries.hpp"
#include "orthopack/generators.hpp"
#include "orthopack/instance_io.hpp"
#include "orthopack/oracles.hpp"

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

namespace orthopack {

struct MatchResult {
    std::string algorithm;
    std::string family;
    std::string objective = "bins";  // bins | arrays | perimeter
    long items = 0;
    long bins = 0;  // arrays for sorting matches
    std::optional<Rational> metric;  // perimeter / strip width
    std::optional<long> opt;         // exact optimum or a proven lower bound on it
    std::string opt_provenance;
    std::optional<std::string> bound;  // audited inequality, human readable
    std::optional<bool> bound_holds;
    bool packing_valid = true;
    std::optional<Rational> ratio_absolute;
    std::optional<Rational> ratio_asymptotic;
    std::string notes;

    bool ok() const { return packing_valid && bound_holds.value_or(true); }
    std::string to_json() const;
};

// ---- building blocks shared by the CLI and the acceptance suite ----------

using SortPolicy = std::function<SortMove(const SortGame&, const BigInt&)>;
// middle-slot | first-fit | random (seeded)
SortPolicy make_sort_policy(const std::string& name, std::uint64_t seed);

// Plays the halving presenter against a policy; returns arrays used. With
// check_invariants the active-set similarity is verified after every move.
long presenter_vs_sort_policy(long n, long k, const SortPolicy& policy,
                              std::vector<SortGame::Move>* trace = nullptr,
                              bool check_invariants = false);

struct LkMatch {
    long bins = 0;
    std::vector<long> presented;
    Packing packing;
    std::vector<SortGame::Move> moves;
};
// The composed L-shape adversary: presenter numbers mapped into L^n.
LkMatch presenter_vs_lk_packer(long n, OnlinePacker& packer);

using ZPolicy = std::function<Rational(const ZSkeleton&)>;  // response x
// left | right | random (seeded)
ZPolicy make_z_policy(const std::string& name, std::uint64_t seed);

struct ZMatch {
    std::vector<ZTraceRow> trace;
    bool conflicts_total = true;   // every new item conflicts with all placed
    bool predicates_agree = true;  // closed-form test matches the geometric one
};
ZMatch z_adversary_match(long n, const ZPolicy& policy);
// Same strategy on thickened solids; y coordinates sampled over the valid
// range with the given seed.
ZMatch zshape_adversary_match(long n, const ZPolicy& policy, std::uint64_t seed);

// trivial | first-fit-gravity | lasyl | smalll | symmetric | lskel |
// critical-density (uses t) | custom-stdio | custom-via-trace (uses replay)
std::unique_ptr<OnlinePacker> make_packer(const std::string& name,
                                          const std::optional<Rational>& t,
                                          const InstanceFile* replay,
                                          std::istream* custom_in, std::ostream* custom_out);

// ---- harness entry points --------------------------------------------------

MatchResult run_match(const InstanceFile& inst, const std::string& algorithm, bool bound_audit,
                      InstanceFile* packing_out, const InstanceFile* replay = nullptr,
                      std::istream* custom_in = nullptr, std::ostream* custom_out = nullptr);

struct AdversaryOutputs {
    std::string trace_text;
    std::optional<InstanceFile> certificate;
};

MatchResult run_adversary(const std::string& family, long n, const std::string& algorithm,
                          std::uint64_t seed, AdversaryOutputs* outs,
                          const std::optional<Rational>& t = std::nullopt,
                          const std::optional<Rational>& w = std::nullopt,
                          std::istream* custom_in = nullptr, std::ostream* custom_out = nullptr);

}  // namespace orthopack
