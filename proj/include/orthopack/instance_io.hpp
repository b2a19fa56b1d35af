#pragma once

#include "orthopack/adversaries.hpp"
#include "orthopack/shapes.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orthopack {

// Line-oriented text format shared by all tools. A file starts with
// `kind <kind>`, followed by optional `<key> <value>` metadata lines and one
// `item ...` line per item with field names matching the shape parameters,
// e.g. `item lx 9/16 wx 1/16 ly 3/4 wy 1/4`. Rationals use the canonical
// "p/q" form with the denominator omitted when it is 1. Placement fields
// (bin, x, y, rot) make an instance a packing.
struct PackedItem {
    Shape shape;
    std::optional<Placement> place;
    std::optional<Rotation> rot;
};

struct InstanceFile {
    std::string kind;  // lshape | zshape | lskeleton | zskeleton | rect | binsorting
    std::map<std::string, std::string> meta;
    std::vector<PackedItem> items;
    std::vector<BigInt> numbers;  // binsorting only

    std::vector<Shape> shapes() const;
    bool has_placements() const;
    Packing to_packing() const;  // requires placements on every item
};

InstanceFile parse_instance(std::istream& in);
InstanceFile parse_instance_string(const std::string& text);
InstanceFile load_instance(const std::string& path);

std::string format_instance(const InstanceFile& f);
void save_instance(const InstanceFile& f, const std::string& path);

InstanceFile make_packing_file(const std::string& kind, const Packing& p);

// Sorting-game trace: one line per turn, `i, a_i, array, slot`.
std::string format_sort_trace(const std::vector<SortGame::Move>& trace);

// Z-skeleton adversary trace: one record per turn, `i, w, a, b, x_response`.
std::string format_zskel_trace(const std::vector<ZTraceRow>& trace);
std::vector<ZTraceRow> parse_zskel_trace(std::istream& in);

}  // namespace orthopack
