#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "gridtri/bigint.hpp"
#include "gridtri/core.hpp"
#include "gridtri/rng.hpp"

namespace gridtri::shapes {

// Upper-boundary chain of a partially dismantled triangulation. Segments are
// primitive with positive x-extent; consecutive segments may be joined by a
// vertical jump of height at most 1 (removing a maximal triangle never
// creates a taller wall; enforced on every construction). The region is { (x,y) : 0 <= y <= U(x) } below the chain.
struct ChainSeg {
    LatticePoint l, r;  // l.x < r.x
    int dx() const { return r.x - l.x; }
    int dy() const { return r.y - l.y; }
    friend bool operator==(const ChainSeg&, const ChainSeg&) = default;
};

struct AdmissibleShape {
    GridSpec grid;
    std::vector<ChainSeg> segs;

    static AdmissibleShape full(GridSpec g);
    static AdmissibleShape from_segments(GridSpec g, std::vector<ChainSeg> segs);

    int start_height() const { return segs.front().l.y; }
    long long doubled_area() const;
    std::string key() const;

    friend bool operator==(const AdmissibleShape&, const AdmissibleShape&) = default;
};

AdmissibleShape shape_from_key(GridSpec g, const std::string& key);

// d1 "lies below" d2: some vertical line meets d1\d2 below d2\d1. Throws if
// the triangles do not intersect in a common face.
bool precedes(const Triangle& d1, const Triangle& d2);

struct MaxTriangleSet {
    AdmissibleShape shape;
    std::vector<Triangle> triangles;  // sorted
};

// All unimodular triangles that are maximal in some triangulation of the
// shape. Empty for degenerate (zero-area) shapes.
MaxTriangleSet maximal_triangles(const AdmissibleShape& s);

// Shape left after removing an interior-disjoint subset of
// maximal_triangles(s); identity on the empty set. Throws on overlapping or
// non-maximal input.
AdmissibleShape remove_triangles(const AdmissibleShape& s, const std::vector<Triangle>& a);

struct SubshapeDelta {
    std::string parent;
    std::string child;
    int removed_count = 0;
};

// All proper subshapes obtained by removing a nonempty interior-disjoint
// subset of maximal triangles, each with its removal size.
std::vector<SubshapeDelta> admissible_subshapes(const AdmissibleShape& s);

struct DpOptions {
    bool prune = false;            // restrict sums to triangles right of the last up-jump
    bool validate_shapes = false;  // re-validate every chain against all invariants
    uint64_t budget_bytes = 2ULL << 30;
};

struct DpStats {
    BigCount shape_count = 0;
    uint64_t peak_resident = 0;
    uint64_t shapes_validated = 0;
};

// Retained count tables (one entry per admissible shape), needed by the
// random sampler and by tests that inspect individual shapes.
struct DpTables {
    GridSpec grid{1, 1};
    std::unordered_map<std::string, BigCount> counts;

    const BigCount& count_of(const std::string& key) const;  // throws if missing
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inclusion-exclusion DP over admissible shapes, processed in lexicographic
// (start height, area, key) order with reference-counted eviction. If
// `retain` is given, eviction is disabled and all counts are kept there.
BigCount count_by_dp(GridSpec g, const DpOptions& opt = {}, DpStats* stats = nullptr,
                     DpTables* retain = nullptr);

// Same DP rooted at an arbitrary shape.
BigCount count_of_shape(const AdmissibleShape& root, const DpOptions& opt = {},
                        DpTables* retain = nullptr);

// (number of admissible shapes, peak simultaneously-resident counts)
std::pair<BigCount, uint64_t> shape_census(GridSpec g, const DpOptions& opt = {});

// The paper's one-triangle-at-a-time sampler: removes a maximal triangle
// with probability proportional to the count of the remaining shape. The
// output distribution is whatever this procedure induces; uniformity is an
// empirical claim checked (and reported) by the acceptance suite.
Triangulation dp_sample(const DpTables& tables, Rng& rng);

}  // namespace gridtri::shapes
