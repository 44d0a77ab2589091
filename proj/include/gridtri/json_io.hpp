#pragma once

#include <string>

#include "gridtri/core.hpp"

namespace gridtri {

// Wire format, bit-exact:
//   {"m":M,"n":N,"triangles":[[[x,y],[x,y],[x,y]],...]}
// with triangles and vertices in canonical sorted order and a trailing
// newline. parse accepts any field order / whitespace.
std::string to_json(const Triangulation& t);
Triangulation triangulation_from_json(const std::string& text);
Triangulation read_triangulation_file(const std::string& path);
void write_triangulation_file(const Triangulation& t, const std::string& path);

}  // namespace gridtri
