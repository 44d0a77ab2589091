#include "gridtri/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace gridtri {

GridSpec::GridSpec(int m_, int n_) : m(m_), n(n_) {
    if (m < 1 || n < 1 || m > kMaxSide || n > kMaxSide)
        throw std::invalid_argument("GridSpec: sides must be in [1, 2^20]");
}

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Edge::Edge(LatticePoint p, LatticePoint q) {
    if (p == q) throw std::invalid_argument("Edge: endpoints must be distinct");
    if (point_less(p, q)) {
        a = p;
        b = q;
    } else {
        a = q;
        b = p;
    }
}

bool Edge::is_primitive() const {
    return gcd_ll(b.x - a.x, b.y - a.y) == 1;
}

double Edge::length() const {
    double dx = b.x - a.x, dy = b.y - a.y;
    return std::sqrt(dx * dx + dy * dy);
}

bool edge_less(const Edge& e, const Edge& f) {
    if (!(e.a == f.a)) return point_less(e.a, f.a);
    return point_less(e.b, f.b);
}

Triangle::Triangle(LatticePoint a, LatticePoint b, LatticePoint c) {
    v[0] = a;
    v[1] = b;
    v[2] = c;
    std::sort(v, v + 3, point_less);
    if (v[0] == v[1] || v[1] == v[2])
        throw std::invalid_argument("Triangle: vertices must be distinct");
}

long long Triangle::doubled_area() const {
    return cross(v[0], v[1], v[2]);
}

bool Triangle::has_vertex(const LatticePoint& p) const {
    return v[0] == p || v[1] == p || v[2] == p;
}

bool Triangle::contains(const LatticePoint& p) const {
    long long s = doubled_area() >= 0 ? 1 : -1;
    return s * cross(v[0], v[1], p) >= 0 && s * cross(v[1], v[2], p) >= 0 &&
           s * cross(v[2], v[0], p) >= 0;
}

std::vector<Edge> Triangle::edges() const {
    return {Edge(v[0], v[1]), Edge(v[0], v[2]), Edge(v[1], v[2])};
}

bool triangle_less(const Triangle& s, const Triangle& t) {
    for (int i = 0; i < 3; ++i) {
        if (!(s.v[i] == t.v[i])) return point_less(s.v[i], t.v[i]);
    }
    return false;
}

namespace {

bool strictly_inside(const Triangle& t, const LatticePoint& p) {
    long long s = t.doubled_area() >= 0 ? 1 : -1;
    return s * cross(t.v[0], t.v[1], p) > 0 && s * cross(t.v[1], t.v[2], p) > 0 &&
           s * cross(t.v[2], t.v[0], p) > 0;
}

bool proper_cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                  const LatticePoint& d) {
    long long o1 = cross(a, b, c), o2 = cross(a, b, d);
    long long o3 = cross(c, d, a), o4 = cross(c, d, b);
    return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
           ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

}  // namespace

// Classification is only exact for unimodular triangles: their edges are
// primitive, so a vertex of one can never sit in the relative interior of
// an edge of the other.
MeetKind triangle_meet(const Triangle& s, const Triangle& t) {
    for (int i = 0; i < 3; ++i) {
        if (strictly_inside(t, s.v[i]) || strictly_inside(s, t.v[i])) return MeetKind::improper;
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (proper_cross(s.v[i], s.v[(i + 1) % 3], t.v[j], t.v[(j + 1) % 3]))
                return MeetKind::improper;
        }
    }
    int shared = 0;
    for (int i = 0; i < 3; ++i) shared += t.has_vertex(s.v[i]) ? 1 : 0;
    if (shared == 0) return MeetKind::disjoint;
    if (shared == 1) return MeetKind::vertex;
    if (shared == 2) return MeetKind::edge;
    return MeetKind::improper;  // identical triangles: caller reports duplicates
}

Triangulation Triangulation::from_triangles(GridSpec g, std::vector<Triangle> tris) {
    std::sort(tris.begin(), tris.end(), triangle_less);
    return Triangulation{g, std::move(tris)};
}

std::vector<Edge> Triangulation::edges() const {
    std::set<Edge, bool (*)(const Edge&, const Edge&)> es(edge_less);
    for (const auto& t : triangles) {
        for (const auto& e : t.edges()) es.insert(e);
    }
    return {es.begin(), es.end()};
}

namespace {

std::string pt_str(const LatticePoint& p) {
    std::ostringstream os;
    os << "(" << p.x << "," << p.y << ")";
    return os.str();
}

std::string tri_str(const Triangle& t) {
    return pt_str(t.v[0]) + pt_str(t.v[1]) + pt_str(t.v[2]);
}

}  // namespace

ValidationReport validate(const Triangulation& t) {
    ValidationReport rep;
    auto add = [&rep](const std::string& kind, const std::string& detail) {
        rep.valid = false;
        rep.violations.push_back({kind, detail});
    };

    const GridSpec& g = t.grid;
    if (static_cast<long long>(t.triangles.size()) != g.triangle_count())
        add("triangle_count", "expected " + std::to_string(g.triangle_count()) + ", got " +
                                  std::to_string(t.triangles.size()));

    bool geometry_ok = true;
    for (const auto& tr : t.triangles) {
        bool in_bounds = true;
        for (const auto& p : tr.v) {
            if (p.x < 0 || p.x > g.m || p.y < 0 || p.y > g.n) in_bounds = false;
        }
        if (!in_bounds) {
            add("out_of_bounds", tri_str(tr));
            geometry_ok = false;
        }
        if (!tr.unimodular()) {
            add("not_unimodular", tri_str(tr));
            geometry_ok = false;
        }
    }
    for (size_t i = 0; i + 1 < t.triangles.size(); ++i) {
        if (t.triangles[i] == t.triangles[i + 1]) {
            add("duplicate_triangle", tri_str(t.triangles[i]));
            geometry_ok = false;
        }
    }

    if (geometry_ok) {
        for (size_t i = 0; i < t.triangles.size(); ++i) {
            for (size_t j = i + 1; j < t.triangles.size(); ++j) {
                if (triangle_meet(t.triangles[i], t.triangles[j]) == MeetKind::improper)
                    add("improper_intersection",
                        tri_str(t.triangles[i]) + " vs " + tri_str(t.triangles[j]));
            }
        }
    }

    // With unimodular, pairwise-proper, in-bounds triangles, total area mn
    // is equivalent to full coverage.
    long long covered2 = 0;
    for (const auto& tr : t.triangles) covered2 += std::llabs(tr.doubled_area()) == 1 ? 1 : 0;
    if (covered2 < 2LL * g.m * g.n) add("coverage_gap", "doubled area " + std::to_string(covered2));

    auto es = t.edges();
    if (static_cast<long long>(es.size()) != g.edge_count())
        add("edge_count", "expected " + std::to_string(g.edge_count()) + ", got " +
                              std::to_string(es.size()));

    std::set<std::pair<int, int>> used;
    for (const auto& tr : t.triangles) {
        for (const auto& p : tr.v) used.insert({p.y, p.x});
    }
    if (static_cast<long long>(used.size()) != g.vertex_count()) {
        for (int y = 0; y <= g.n; ++y) {
            for (int x = 0; x <= g.m; ++x) {
                if (!used.count({y, x})) add("missing_vertex", pt_str({x, y}));
            }
        }
    }
    return rep;
}

Triangulation initial_triangulation(GridSpec g) {
    std::vector<Triangle> tris;
    tris.reserve(2 * g.m * g.n);
    for (int j = 0; j < g.n; ++j) {
        for (int i = 0; i < g.m; ++i) {
            LatticePoint sw{i, j}, se{i + 1, j}, ne{i + 1, j + 1}, nw{i, j + 1};
            tris.emplace_back(sw, se, ne);
            tris.emplace_back(sw, ne, nw);
        }
    }
    return Triangulation::from_triangles(g, std::move(tris));
}

namespace {

// Opposite vertices of each edge; a triangulation has 1 (boundary) or 2.
std::unordered_map<Edge, std::vector<LatticePoint>> edge_opposites(const Triangulation& t) {
    std::unordered_map<Edge, std::vector<LatticePoint>> m;
    m.reserve(t.triangles.size() * 2);
    for (const auto& tr : t.triangles) {
        m[Edge(tr.v[0], tr.v[1])].push_back(tr.v[2]);
        m[Edge(tr.v[0], tr.v[2])].push_back(tr.v[1]);
        m[Edge(tr.v[1], tr.v[2])].push_back(tr.v[0]);
    }
    return m;
}

bool quad_strictly_convex(const Edge& e, const LatticePoint& c, const LatticePoint& d) {
    // the union of the two triangles at e is strictly convex iff the other
    // diagonal (c,d) properly crosses e
    return proper_cross(e.a, e.b, c, d);
}

}  // namespace

std::vector<Edge> flippable_edges(const Triangulation& t) {
    auto rep = validate(t);
    if (!rep.valid)
        throw std::invalid_argument("flippable_edges: invalid triangulation (" +
                                    rep.violations.front().kind + ")");
    std::vector<Edge> out;
    for (const auto& [e, opp] : edge_opposites(t)) {
        if (opp.size() == 2 && quad_strictly_convex(e, opp[0], opp[1])) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), edge_less);
    return out;
}

Triangulation flip(const Triangulation& t, const Edge& e) {
    auto opp = edge_opposites(t);
    auto it = opp.find(e);
    if (it == opp.end()) throw std::invalid_argument("flip: edge not in triangulation");
    if (it->second.size() != 2 || !quad_strictly_convex(e, it->second[0], it->second[1]))
        throw std::invalid_argument("flip: edge not flippable");
    LatticePoint c = it->second[0], d = it->second[1];
    std::vector<Triangle> tris;
    tris.reserve(t.triangles.size());
    Triangle t1(e.a, e.b, c), t2(e.a, e.b, d);
    for (const auto& tr : t.triangles) {
        if (tr == t1 || tr == t2) continue;
        tris.push_back(tr);
    }
    tris.emplace_back(c, d, e.a);
    tris.emplace_back(c, d, e.b);
    return Triangulation::from_triangles(t.grid, std::move(tris));
}

std::string canonical_key(const Triangulation& t) {
    std::string key;
    key.reserve(t.triangles.size() * 24);
    auto put32 = [&key](uint32_t v) {
        for (int i = 0; i < 4; ++i) key.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    };
    for (const auto& tr : t.triangles) {
        for (const auto& p : tr.v) {
            put32(static_cast<uint32_t>(p.x));
            put32(static_cast<uint32_t>(p.y));
        }
    }
    return key;
}

EdgeLengthStats edge_length_stats(const Triangulation& t) {
    EdgeLengthStats s;
    auto es = t.edges();
    if (es.empty()) return s;
    double sum = 0;
    for (const auto& e : es) {
        double len = e.length();
        sum += len;
        s.max = std::max(s.max, len);
    }
    s.mean = sum / static_cast<double>(es.size());
    return s;
}

}  // namespace gridtri
