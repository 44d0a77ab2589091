#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gridtri {

// Sides beyond this are rejected; coordinates then fit comfortably in int
// and every determinant in the library fits in int64.
constexpr int kMaxSide = 1 << 20;

struct GridSpec {
    int m = 1;  // width, x spans 0..m
    int n = 1;  // height, y spans 0..n

    GridSpec(int m_, int n_);

    long long vertex_count() const { return static_cast<long long>(m + 1) * (n + 1); }
    long long triangle_count() const { return 2LL * m * n; }
    long long edge_count() const { return 3LL * m * n + m + n; }
    long long interior_edge_count() const { return 3LL * m * n - m - n; }
    long long boundary_edge_count() const { return 2LL * (m + n); }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct LatticePoint {
    int x = 0;
    int y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Row-major point order: by y, then x. This is the one total order used for
// every "lexicographic" tie-break in the library.
inline bool point_less(const LatticePoint& a, const LatticePoint& b) {
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
}

// (a-o) x (b-o)
inline long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return static_cast<long long>(a.x - o.x) * (b.y - o.y) -
           static_cast<long long>(a.y - o.y) * (b.x - o.x);
}

long long gcd_ll(long long a, long long b);

struct Edge {
    LatticePoint a, b;  // point_less(a, b)

    Edge() = default;
    Edge(LatticePoint p, LatticePoint q);

    bool is_primitive() const;
    double length() const;

    friend bool operator==(const Edge&, const Edge&) = default;
};

bool edge_less(const Edge& e, const Edge& f);

struct Triangle {
    LatticePoint v[3];  // sorted row-major

    Triangle() = default;
    Triangle(LatticePoint a, LatticePoint b, LatticePoint c);

    // twice the signed area of the sorted vertex triple
    long long doubled_area() const;
    bool unimodular() const { long long d = doubled_area(); return d == 1 || d == -1; }
    bool has_vertex(const LatticePoint& p) const;
    // closed containment
    bool contains(const LatticePoint& p) const;
    std::vector<Edge> edges() const;

    friend bool operator==(const Triangle&, const Triangle&) = default;
};

bool triangle_less(const Triangle& s, const Triangle& t);

// How two triangles with disjoint interiors may meet.
enum class MeetKind { disjoint, vertex, edge, improper };
MeetKind triangle_meet(const Triangle& s, const Triangle& t);

struct Triangulation {
    GridSpec grid;
    std::vector<Triangle> triangles;  // sorted by triangle_less

    static Triangulation from_triangles(GridSpec g, std::vector<Triangle> tris);

    std::vector<Edge> edges() const;  // derived, sorted, unique

    friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

struct ValidationReport {
    struct Violation {
        std::string kind;
        std::string detail;
    };
    bool valid = true;
    std::vector<Violation> violations;
};

ValidationReport validate(const Triangulation& t);

// Each unit cell split by its lexicographically smaller diagonal (row-major
// point order). Unit squares are cocircular, so this is the fixed Delaunay
// tie-break; the result is the SW-NE diagonal in every cell.
Triangulation initial_triangulation(GridSpec g);

// Interior edges whose two incident triangles form a strictly convex
// quadrilateral. Throws on an invalid triangulation.
std::vector<Edge> flippable_edges(const Triangulation& t);

// Replace the two triangles at e by the two on the other diagonal.
// Throws if e is absent or not flippable.
Triangulation flip(const Triangulation& t, const Edge& e);

// Injective over valid triangulations of a fixed grid; equal keys iff equal
// triangle sets; stable across runs.
std::string canonical_key(const Triangulation& t);

struct EdgeLengthStats {
    double max = 0.0;
    double mean = 0.0;
};
EdgeLengthStats edge_length_stats(const Triangulation& t);

}  // namespace gridtri

namespace std {
template <>
struct hash<gridtri::LatticePoint> {
    size_t operator()(const gridtri::LatticePoint& p) const {
        return std::hash<long long>()((static_cast<long long>(p.x) << 21) ^ p.y);
    }
};
template <>
struct hash<gridtri::Edge> {
    size_t operator()(const gridtri::Edge& e) const {
        size_t h = std::hash<gridtri::LatticePoint>()(e.a);
        return h * 0x9e3779b97f4a7c15ULL + std::hash<gridtri::LatticePoint>()(e.b);
    }
};
}  // namespace std
