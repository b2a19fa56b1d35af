#pragma once

#include "orthopack/instance_io.hpp"

#include <string>

namespace orthopack {

// Deterministic SVG for a packing file: one group per bin, solids as filled
// paths, skeletons as polylines. Items involved in violations are drawn red.
// The only floating point in the project lives here.
std::string render_packing_svg(const InstanceFile& packing);

}  // namespace orthopack
