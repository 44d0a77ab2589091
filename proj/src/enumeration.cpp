#include "gridtri/enumeration.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "gridtri/regularity.hpp"
#include "gridtri/strips.hpp"

namespace gridtri::enumeration {

namespace {

struct Codec {
    GridSpec g;
    int id_bytes;

    explicit Codec(GridSpec g_) : g(g_), id_bytes(g_.vertex_count() <= 256 ? 1 : 2) {
        if (g.vertex_count() > 65536)
            throw std::invalid_argument("enumerate: grid too large to encode");
    }

    int id_of(const LatticePoint& p) const { return p.y * (g.m + 1) + p.x; }
    LatticePoint point_of(int id) const { return {id % (g.m + 1), id / (g.m + 1)}; }

    std::string encode(const std::vector<Triangle>& tris) const {
        std::string key;
        key.reserve(tris.size() * 3 * id_bytes);
        for (const auto& t : tris) {
            for (const auto& v : t.v) {
                int id = id_of(v);
                key.push_back(static_cast<char>(id & 0xff));
                if (id_bytes == 2) key.push_back(static_cast<char>((id >> 8) & 0xff));
            }
        }
        return key;
    }

    std::vector<Triangle> decode(const std::string& key) const {
        std::vector<Triangle> tris;
        size_t stride = 3 * static_cast<size_t>(id_bytes);
        tris.reserve(key.size() / stride);
        for (size_t i = 0; i < key.size(); i += stride) {
            LatticePoint p[3];
            for (int k = 0; k < 3; ++k) {
                int id = static_cast<unsigned char>(key[i + k * id_bytes]);
                if (id_bytes == 2)
                    id |= static_cast<unsigned char>(key[i + k * id_bytes + 1]) << 8;
                p[k] = point_of(id);
            }
            tris.emplace_back(p[0], p[1], p[2]);
        }
        return tris;
    }
};

BigCount count_estimate(GridSpec g) {
    if (std::min(g.m, g.n) <= 3) {
        int w = std::min(g.m, g.n), n = std::max(g.m, g.n);
        if (w == 1) return strips::count_width1(n);
        if (w == 2) return strips::count_width2(n);
        return strips::count_width3(n);
    }
    BigCount bound = 1;
    bound <<= static_cast<unsigned long>(g.interior_edge_count());
    return bound;
}

// flip neighbours of a decoded triangle list, as canonical keys
void expand(const Codec& codec, const std::vector<Triangle>& tris,
            const std::function<void(std::string)>& sink) {
    std::unordered_map<Edge, std::vector<const Triangle*>> at_edge;
    at_edge.reserve(tris.size() * 2);
    for (const auto& t : tris) {
        at_edge[Edge(t.v[0], t.v[1])].push_back(&t);
        at_edge[Edge(t.v[0], t.v[2])].push_back(&t);
        at_edge[Edge(t.v[1], t.v[2])].push_back(&t);
    }
    for (const auto& [e, owners] : at_edge) {
        if (owners.size() != 2) continue;
        LatticePoint c{}, d{};
        for (const auto& v : owners[0]->v) {
            if (!(v == e.a) && !(v == e.b)) c = v;
        }
        for (const auto& v : owners[1]->v) {
            if (!(v == e.a) && !(v == e.b)) d = v;
        }
        long long o1 = cross(e.a, e.b, c), o2 = cross(e.a, e.b, d);
        long long o3 = cross(c, d, e.a), o4 = cross(c, d, e.b);
        bool convex = ((o1 > 0) != (o2 > 0)) && o1 != 0 && o2 != 0 &&
                      ((o3 > 0) != (o4 > 0)) && o3 != 0 && o4 != 0;
        if (!convex) continue;
        std::vector<Triangle> next;
        next.reserve(tris.size());
        for (const auto& t : tris) {
            if (&t == owners[0] || &t == owners[1]) continue;
            next.push_back(t);
        }
        next.emplace_back(c, d, e.a);
        next.emplace_back(c, d, e.b);
        std::sort(next.begin(), next.end(), triangle_less);
        sink(codec.encode(next));
    }
}

struct EarlyStop {};

}  // namespace

BigCount enumerate_all(GridSpec g,
                       const std::function<void(const Triangulation&, uint64_t)>& visitor,
                       const EnumerateOptions& opt) {
    Codec codec(g);
    const uint64_t item_bytes = 2 * g.triangle_count() * codec.id_bytes * 3 + 96;
    {
        BigCount est = count_estimate(g) * static_cast<unsigned long>(item_bytes);
        BigCount edge_bound = 1;
        edge_bound <<= static_cast<unsigned long>(g.interior_edge_count());
        if (est > BigCount(static_cast<unsigned long>(opt.budget_bytes)))
            throw BudgetError("enumerate_all: estimated memory " + to_decimal(est) +
                              " bytes exceeds budget " + std::to_string(opt.budget_bytes) +
                              " (count bound 2^" + std::to_string(g.interior_edge_count()) +
                              " = " + to_decimal(edge_bound) + ")");
    }

    std::unordered_set<std::string> visited;
    auto start = initial_triangulation(g);
    std::vector<std::string> layer{codec.encode(start.triangles)};
    visited.insert(layer[0]);
    uint64_t index = 0;
    BigCount count = 0;
    while (!layer.empty()) {
        std::vector<std::string> next;
        for (const auto& key : layer) {
            auto tris = codec.decode(key);
            visitor(Triangulation::from_triangles(g, tris), index++);
            ++count;
            expand(codec, tris, [&](std::string nk) {
                if (visited.insert(nk).second) {
                    if (visited.size() * item_bytes > opt.budget_bytes)
                        throw BudgetError("enumerate_all: live memory exceeds budget after " +
                                          std::to_string(visited.size()) + " triangulations");
                    next.push_back(std::move(nk));
                }
            });
        }
        std::sort(next.begin(), next.end());
        layer = std::move(next);
    }
    return count;
}

Triangulation kth(GridSpec g, const BigCount& k, const EnumerateOptions& opt) {
    if (k < 1) throw std::invalid_argument("kth: k must be >= 1");
    Triangulation found = initial_triangulation(g);
    bool ok = false;
    BigCount target = k - 1;
    try {
        enumerate_all(
            g,
            [&](const Triangulation& t, uint64_t idx) {
                if (BigCount(static_cast<unsigned long>(idx)) == target) {
                    found = t;
                    ok = true;
                    throw EarlyStop{};
                }
            },
            opt);
    } catch (const EarlyStop&) {
    }
    if (!ok) throw std::invalid_argument("kth: k exceeds the number of triangulations");
    return found;
}

Tally tally_regularity(GridSpec g, const EnumerateOptions& opt) {
    Tally tally;
    int threads = opt.threads > 0 ? opt.threads
                                  : std::max(1u, std::thread::hardware_concurrency());
    std::vector<Triangulation> buffer;
    buffer.reserve(4096);
    auto flush = [&]() {
        if (buffer.empty()) return;
        std::vector<uint64_t> irregular(threads, 0);
        std::vector<std::thread> pool;
        size_t chunk = (buffer.size() + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            size_t lo = w * chunk, hi = std::min(buffer.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi, w]() {
                for (size_t i = lo; i < hi; ++i) {
                    if (!regularity::is_regular(buffer[i]).regular) irregular[w]++;
                }
            });
        }
        for (auto& th : pool) th.join();
        for (int w = 0; w < threads; ++w)
            tally.irregular += static_cast<unsigned long>(irregular[w]);
        tally.total += static_cast<unsigned long>(buffer.size());
        buffer.clear();
    };
    enumerate_all(
        g,
        [&](const Triangulation& t, uint64_t) {
            buffer.push_back(t);
            if (buffer.size() >= 4096) flush();
        },
        opt);
    flush();
    tally.regular = tally.total - tally.irregular;
    return tally;
}

}  // namespace gridtri::enumeration
