#pragma once

// Shared fixtures. Both triangle sets were produced by exhaustive search
// with this library (enumerate 3x3 / compose rotated 2x2 blocks, filter by
// the exact regularity test) and then frozen; tests re-verify every claimed
// property. The same sets ship as data/whirlpool.json and
// data/patchwork_4x4.json for the command-line examples.

#include <string>

#include "gridtri/core.hpp"
#include "gridtri/json_io.hpp"

namespace gridtri::fixtures {

// the pinwheel triangulation of the 3x3 grid: four spiral slivers
// (q_i, p_i, p_{i+1}) around the inner square, fans on the sides
inline const char* kWhirlpoolJson =
    "{\"m\":3,\"n\":3,\"triangles\":[[[0,0],[1,0],[2,1]],[[0,0],[0,1],[1,1]],"
    "[[0,0],[1,1],[2,1]],[[1,0],[2,0],[2,1]],[[2,0],[3,0],[2,1]],[[3,0],[2,1],[2,2]],"
    "[[3,0],[3,1],[2,2]],[[0,1],[1,1],[0,2]],[[1,1],[2,1],[2,2]],[[1,1],[0,2],[0,3]],"
    "[[1,1],[1,2],[2,2]],[[1,1],[1,2],[0,3]],[[3,1],[2,2],[3,2]],[[1,2],[2,2],[3,3]],"
    "[[1,2],[0,3],[1,3]],[[1,2],[1,3],[2,3]],[[1,2],[2,3],[3,3]],[[2,2],[3,2],[3,3]]]}";

// irregular 4x4 composed of four rotated copies of one (regular) 2x2 block
inline const char* kPatchwork4x4Json =
    "{\"m\":4,\"n\":4,\"triangles\":[[[0,0],[1,0],[1,1]],[[0,0],[0,1],[1,2]],"
    "[[0,0],[1,1],[1,2]],[[1,0],[2,0],[1,1]],[[2,0],[3,0],[2,1]],[[2,0],[1,1],[2,1]],"
    "[[3,0],[4,0],[2,1]],[[4,0],[2,1],[3,1]],[[4,0],[3,1],[4,1]],[[0,1],[0,2],[1,2]],"
    "[[1,1],[2,1],[2,2]],[[1,1],[1,2],[2,2]],[[2,1],[3,1],[2,2]],[[3,1],[4,1],[4,2]],"
    "[[3,1],[2,2],[3,2]],[[3,1],[3,2],[4,2]],[[0,2],[1,2],[1,3]],[[0,2],[0,3],[1,3]],"
    "[[1,2],[2,2],[1,3]],[[2,2],[3,2],[3,3]],[[2,2],[1,3],[2,3]],[[2,2],[2,3],[3,3]],"
    "[[3,2],[4,2],[4,3]],[[3,2],[3,3],[4,4]],[[3,2],[4,3],[4,4]],[[0,3],[1,3],[0,4]],"
    "[[1,3],[2,3],[0,4]],[[2,3],[3,3],[2,4]],[[2,3],[0,4],[1,4]],[[2,3],[1,4],[2,4]],"
    "[[3,3],[2,4],[3,4]],[[3,3],[3,4],[4,4]]]}";

inline Triangulation whirlpool() { return triangulation_from_json(kWhirlpoolJson); }
inline Triangulation patchwork_4x4() { return triangulation_from_json(kPatchwork4x4Json); }

// labels of the whirlpool cycle: p = inner square CCW from (1,1),
// q = outer corners CCW from (0,0)
inline LatticePoint wp_p(int i) {
    static const LatticePoint p[4] = {{1, 1}, {2, 1}, {2, 2}, {1, 2}};
    return p[((i % 4) + 4) % 4];
}
inline LatticePoint wp_q(int i) {
    static const LatticePoint q[4] = {{0, 0}, {3, 0}, {3, 3}, {0, 3}};
    return q[((i % 4) + 4) % 4];
}

// the four spiral slivers (q_i, p_i, p_{i+1}); they form a minimal
// irregular configuration
inline std::vector<Triangle> wp_slivers() {
    std::vector<Triangle> out;
    for (int i = 0; i < 4; ++i) out.emplace_back(wp_q(i), wp_p(i), wp_p(i + 1));
    return out;
}

}  // namespace gridtri::fixtures
