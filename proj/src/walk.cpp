#include "gridtri/walk.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace gridtri::walk {

FlipWalker::FlipWalker(const Triangulation& start) : grid_(start.grid) {
    auto rep = validate(start);
    if (!rep.valid) throw std::invalid_argument("FlipWalker: invalid start triangulation");
    npts_ = static_cast<int>(grid_.vertex_count());
    if (npts_ > 4096)
        throw std::invalid_argument("FlipWalker: grids beyond 4096 points not supported");
    opp_.assign(static_cast<size_t>(npts_) * npts_, {-1, -1});
    pos_.assign(static_cast<size_t>(npts_) * npts_, -1);
    for (const auto& t : start.triangles) {
        int id[3] = {pack(t.v[0]), pack(t.v[1]), pack(t.v[2])};
        for (int i = 0; i < 3; ++i) {
            int a = id[i], b = id[(i + 1) % 3], c = id[(i + 2) % 3];
            auto& slot = opp_[edge_id(a, b)];
            if (slot[0] < 0)
                slot[0] = c;
            else
                slot[1] = c;
        }
    }
    for (int64_t e = 0; e < static_cast<int64_t>(opp_.size()); ++e) {
        if (opp_[e][1] >= 0) {
            pos_[e] = static_cast<int32_t>(interior_.size());
            interior_.push_back(e);
        }
    }
    if (static_cast<long long>(interior_.size()) != grid_.interior_edge_count())
        throw std::logic_error("FlipWalker: interior edge count mismatch");
}

void FlipWalker::step(Rng& rng) {
    int64_t e = interior_[rng.below(interior_.size())];
    int a = static_cast<int>(e / npts_), b = static_cast<int>(e % npts_);
    int c = opp_[e][0], d = opp_[e][1];
    LatticePoint pa = unpack(a), pb = unpack(b), pc = unpack(c), pd = unpack(d);
    long long o1 = cross(pa, pb, pc), o2 = cross(pa, pb, pd);
    long long o3 = cross(pc, pd, pa), o4 = cross(pc, pd, pb);
    bool flippable = o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 && ((o1 > 0) != (o2 > 0)) &&
                     ((o3 > 0) != (o4 > 0));
    if (!flippable) return;
    if (!rng.coin()) return;

    auto replace_opp = [&](int u, int v, int old_w, int new_w) {
        auto& slot = opp_[edge_id(u, v)];
        if (slot[0] == old_w)
            slot[0] = new_w;
        else
            slot[1] = new_w;
    };
    // triangles (a,b,c),(a,b,d) -> (c,d,a),(c,d,b)
    replace_opp(a, c, b, d);
    replace_opp(b, c, a, d);
    replace_opp(a, d, b, c);
    replace_opp(b, d, a, c);
    int64_t f = edge_id(c, d);
    opp_[f] = {std::min(a, b), std::max(a, b)};
    opp_[e] = {-1, -1};
    int32_t idx = pos_[e];
    interior_[idx] = f;
    pos_[f] = idx;
    pos_[e] = -1;
    ++flips_;
}

Triangulation FlipWalker::current() const {
    std::vector<Triangle> tris;
    tris.reserve(grid_.triangle_count());
    for (int64_t e = 0; e < static_cast<int64_t>(opp_.size()); ++e) {
        int a = static_cast<int>(e / npts_), b = static_cast<int>(e % npts_);
        for (int k = 0; k < 2; ++k) {
            int c = opp_[e][k];
            if (c < 0) continue;
            // emit each triangle once, from its lexicographically least edge
            int64_t e2 = edge_id(a, c), e3 = edge_id(b, c);
            if (e < e2 && e < e3) tris.emplace_back(unpack(a), unpack(b), unpack(c));
        }
    }
    return Triangulation::from_triangles(grid_, std::move(tris));
}

Triangulation walk_step(const Triangulation& t, Rng& rng) {
    FlipWalker w(t);
    w.step(rng);
    return w.current();
}

void run_walk(const WalkConfig& cfg,
              const std::function<void(const Triangulation&, uint64_t)>& sink) {
    if (cfg.steps > 0 && (cfg.record_every == 0 || cfg.record_every > cfg.steps))
        throw std::invalid_argument("run_walk: need 1 <= record_every <= steps");
    FlipWalker walker(initial_triangulation(cfg.grid));
    Rng rng(cfg.seed);
    uint64_t emitted = 0;
    for (uint64_t s = 1; s <= cfg.steps; ++s) {
        walker.step(rng);
        if (s % cfg.record_every == 0) sink(walker.current(), emitted++);
    }
}

// The average is over the 3mn-m-n interior edges: the 2(m+n) boundary edges
// are forced unit segments present in every triangulation, and the reported
// reference statistics exclude them.
double interior_mean_edge(const Triangulation& t) {
    double sum = 0;
    long long count = 0;
    for (const auto& e : t.edges()) {
        bool boundary = (e.a.x == e.b.x && (e.a.x == 0 || e.a.x == t.grid.m)) ||
                        (e.a.y == e.b.y && (e.a.y == 0 || e.a.y == t.grid.n));
        if (boundary) continue;
        sum += e.length();
        ++count;
    }
    return count ? sum / static_cast<double>(count) : 0.0;
}

WalkStats summarize(const std::vector<Triangulation>& samples,
                    const std::function<bool(const Triangulation&)>& is_regular_checker) {
    WalkStats stats;
    stats.samples = samples.size();
    if (samples.empty()) return stats;
    uint64_t irregular = 0;
    double max_sum = 0, avg_sum = 0;
    for (const auto& t : samples) {
        if (!is_regular_checker(t)) ++irregular;
        max_sum += edge_length_stats(t).max;
        avg_sum += interior_mean_edge(t);
    }
    stats.irregular_fraction = static_cast<double>(irregular) / samples.size();
    stats.mean_max_edge = max_sum / samples.size();
    stats.mean_avg_edge = avg_sum / samples.size();
    return stats;
}

}  // namespace gridtri::walk
