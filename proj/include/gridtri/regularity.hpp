#pragma once

#include <vector>

#include "gridtri/bigint.hpp"
#include "gridtri/core.hpp"

namespace gridtri::regularity {

// Homogeneous strict system: one row per constraint, sum_i c_i h(p_i) > 0.
// Coefficients are integers (affine coordinates w.r.t. unimodular triangles).
struct LinearSystem {
    std::vector<LatticePoint> points;  // variable index -> grid point
    struct Row {
        std::vector<std::pair<int, long long>> terms;  // (var index, coefficient)
    };
    std::vector<Row> rows;

    int var_of(const LatticePoint& p);  // registers on first use

    friend bool operator==(const LinearSystem&, const LinearSystem&) = default;
};

struct RegularityResult {
    bool regular = false;
    // present iff regular: exact heights satisfying every row with slack >= 1
    std::vector<Rat> lifting;
    // present iff irregular: y >= 0, not all zero, with sum_r y_r * row_r = 0
    std::vector<Rat> certificate;
};

// A set of unimodular triangles, pairwise intersecting in common faces.
struct Configuration {
    std::vector<Triangle> triangles;  // sorted

    static Configuration from_triangles(std::vector<Triangle> tris);  // validates
    std::vector<LatticePoint> covered_points() const;                 // sorted row-major
};

// One strict constraint per interior edge: the opposite vertex lifts
// strictly above the plane of the first triangle.
LinearSystem fold_constraints(const Triangulation& t);

// For each triangle and each covered point outside it: that point lifts
// strictly above the triangle's plane.
LinearSystem configuration_constraints(const Configuration& c);

// Exact decision. Homogeneity turns strict feasibility into A h >= 1; the
// simplex runs in exact rationals with Bland's rule. A float presolve only
// proposes witnesses; every returned artifact is verified by exact
// substitution before it leaves this function.
RegularityResult solve_strict(const LinearSystem& sys);

RegularityResult is_regular(const Triangulation& t);

// exact substitution checks, used by solve_strict and by tests
bool verify_lifting(const LinearSystem& sys, const std::vector<Rat>& h);
bool verify_certificate(const LinearSystem& sys, const std::vector<Rat>& y);

// Greedily thins an irregular triangulation to a configuration that is
// irregular while every proper subset is regular (deletion in canonical
// triangle order; minimality is re-verified before returning).
Configuration minimal_irregular(const Triangulation& t);

// Whether target (a dense coefficient vector over sys.points) is a
// nonnegative rational combination of the system's rows, i.e. an inequality
// every lifting would have to satisfy.
bool implied_inequality(const LinearSystem& sys, const std::vector<long long>& target);

}  // namespace gridtri::regularity
