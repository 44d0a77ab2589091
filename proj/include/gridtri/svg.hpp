#pragma once

#include <optional>
#include <string>

#include "gridtri/core.hpp"
#include "gridtri/regularity.hpp"

namespace gridtri::svg {

// Deterministic SVG 1.1: lattice points, triangle edges, and optionally a
// shaded configuration. Byte-stable for fixed input (integer pixel
// coordinates only).
std::string render_svg(const Triangulation& t,
                       const std::optional<regularity::Configuration>& highlight = std::nullopt);

}  // namespace gridtri::svg
