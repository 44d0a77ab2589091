#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gridtri::oracle {

namespace {

long long shoelace2(const std::vector<LatticePoint>& cycle) {
    long long a = 0;
    for (size_t i = 0; i < cycle.size(); ++i) {
        const auto& p = cycle[i];
        const auto& q = cycle[(i + 1) % cycle.size()];
        a += static_cast<long long>(p.x) * q.y - static_cast<long long>(q.x) * p.y;
    }
    return a;
}

bool on_segment(const LatticePoint& a, const LatticePoint& b, long long px2, long long py2) {
    // doubled coordinates for the probe point
    long long crossv = (2LL * b.x - 2LL * a.x) * (py2 - 2LL * a.y) -
                       (2LL * b.y - 2LL * a.y) * (px2 - 2LL * a.x);
    if (crossv != 0) return false;
    long long lox = 2LL * std::min(a.x, b.x), hix = 2LL * std::max(a.x, b.x);
    long long loy = 2LL * std::min(a.y, b.y), hiy = 2LL * std::max(a.y, b.y);
    return px2 >= lox && px2 <= hix && py2 >= loy && py2 <= hiy;
}

// strict interior test, doubled coordinates; returns false on the boundary
bool inside_polygon(const std::vector<LatticePoint>& cycle, long long px2, long long py2) {
    for (size_t i = 0; i < cycle.size(); ++i) {
        if (on_segment(cycle[i], cycle[(i + 1) % cycle.size()], px2, py2)) return false;
    }
    bool in = false;
    for (size_t i = 0; i < cycle.size(); ++i) {
        long long ay = 2LL * cycle[i].y, by = 2LL * cycle[(i + 1) % cycle.size()].y;
        long long ax = 2LL * cycle[i].x, bx = 2LL * cycle[(i + 1) % cycle.size()].x;
        if ((ay > py2) != (by > py2)) {
            // x coordinate of the edge at height py2, compared exactly
            // px2 < ax + (py2-ay)*(bx-ax)/(by-ay)
            long long lhs = (px2 - ax) * (by - ay), rhs = (py2 - ay) * (bx - ax);
            if (by > ay ? lhs < rhs : lhs > rhs) in = !in;
        }
    }
    return in;
}

bool proper_cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                  const LatticePoint& d) {
    long long o1 = cross(a, b, c), o2 = cross(a, b, d);
    long long o3 = cross(c, d, a), o4 = cross(c, d, b);
    return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
           ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

std::vector<LatticePoint> interior_points(const std::vector<LatticePoint>& cycle) {
    int lox = cycle[0].x, hix = cycle[0].x, loy = cycle[0].y, hiy = cycle[0].y;
    for (const auto& p : cycle) {
        lox = std::min(lox, p.x);
        hix = std::max(hix, p.x);
        loy = std::min(loy, p.y);
        hiy = std::max(hiy, p.y);
    }
    std::vector<LatticePoint> out;
    for (int y = loy; y <= hiy; ++y) {
        for (int x = lox; x <= hix; ++x) {
            if (inside_polygon(cycle, 2LL * x, 2LL * y)) out.push_back({x, y});
        }
    }
    return out;
}

std::vector<LatticePoint> canonical_rotation(std::vector<LatticePoint> cycle) {
    size_t best = 0;
    for (size_t i = 1; i < cycle.size(); ++i) {
        if (point_less(cycle[i], cycle[best])) best = i;
    }
    std::rotate(cycle.begin(), cycle.begin() + static_cast<long>(best), cycle.end());
    return cycle;
}

std::string cycle_key(const std::vector<LatticePoint>& cycle) {
    std::string k;
    k.reserve(cycle.size() * 4);
    for (const auto& p : cycle) {
        k.push_back(static_cast<char>(p.x & 0xff));
        k.push_back(static_cast<char>((p.x >> 8) & 0xff));
        k.push_back(static_cast<char>(p.y & 0xff));
        k.push_back(static_cast<char>((p.y >> 8) & 0xff));
    }
    return k;
}

// the triangle (v0,v1,w) on the first boundary edge stays inside the polygon
bool triangle_clear(const std::vector<LatticePoint>& cycle, const LatticePoint& v0,
                    const LatticePoint& v1, const LatticePoint& w, size_t w_pos_or_npos) {
    const size_t k = cycle.size();
    auto segment_clear = [&](const LatticePoint& a, const LatticePoint& b, size_t bi) {
        // bi = cycle position of b, or npos for an interior point
        if (bi != static_cast<size_t>(-1)) {
            size_t ai = 0;
            for (size_t i = 0; i < k; ++i) {
                if (cycle[i] == a) ai = i;
            }
            if ((ai + 1) % k == bi || (bi + 1) % k == ai) return true;  // boundary edge
        }
        for (size_t i = 0; i < k; ++i) {
            if (proper_cross(a, b, cycle[i], cycle[(i + 1) % k])) return false;
        }
        return inside_polygon(cycle, static_cast<long long>(a.x) + b.x,
                              static_cast<long long>(a.y) + b.y);
    };
    return segment_clear(v0, w, w_pos_or_npos) && segment_clear(v1, w, w_pos_or_npos);
}

struct Ctx {
    std::map<std::string, BigCount> memo;
};

BigCount count_rec(Ctx& ctx, std::vector<LatticePoint> cycle);

BigCount branch_total(Ctx& ctx, const std::vector<LatticePoint>& cycle,
                      const std::function<void(const std::vector<Triangle>&)>* enumerate_fn,
                      std::vector<Triangle>* partial);

// splits minus the triangle (cycle[0], cycle[1], w) and recurses; used for
// both counting (fn == nullptr) and enumeration
template <typename Recurse>
void split_and_go(const std::vector<LatticePoint>& cycle, const LatticePoint& w,
                  size_t w_pos, Recurse&& go) {
    const size_t k = cycle.size();
    if (w_pos == static_cast<size_t>(-1)) {
        std::vector<LatticePoint> next;
        next.reserve(k + 1);
        next.push_back(cycle[0]);
        next.push_back(w);
        for (size_t i = 1; i < k; ++i) next.push_back(cycle[i]);
        go(std::vector<std::vector<LatticePoint>>{std::move(next)});
        return;
    }
    std::vector<LatticePoint> p1, p2;
    for (size_t i = 1; i <= w_pos; ++i) p1.push_back(cycle[i]);
    p2.push_back(cycle[w_pos]);
    for (size_t i = w_pos + 1; i < k; ++i) p2.push_back(cycle[i]);
    p2.push_back(cycle[0]);
    std::vector<std::vector<LatticePoint>> pieces;
    if (p1.size() >= 3) pieces.push_back(std::move(p1));
    if (p2.size() >= 3) pieces.push_back(std::move(p2));
    go(std::move(pieces));
}

BigCount branch_total(Ctx& ctx, const std::vector<LatticePoint>& cycle) {
    const LatticePoint v0 = cycle[0], v1 = cycle[1];
    BigCount total = 0;
    auto try_w = [&](const LatticePoint& w, size_t pos) {
        if (w == v0 || w == v1) return;
        if (cross(v0, v1, w) != 1) return;
        if (!triangle_clear(cycle, v0, v1, w, pos)) return;
        split_and_go(cycle, w, pos, [&](std::vector<std::vector<LatticePoint>> pieces) {
            BigCount prod = 1;
            for (auto& piece : pieces) prod *= count_rec(ctx, std::move(piece));
            total += prod;
        });
    };
    for (size_t i = 2; i < cycle.size(); ++i) try_w(cycle[i], i);
    for (const auto& p : interior_points(cycle)) try_w(p, static_cast<size_t>(-1));
    return total;
}

BigCount count_rec(Ctx& ctx, std::vector<LatticePoint> cycle) {
    if (cycle.size() < 3) return 1;
    long long a2 = shoelace2(cycle);
    if (a2 == 0) return 1;
    if (a2 < 0) throw std::invalid_argument("oracle: cycle must be CCW");
    cycle = canonical_rotation(std::move(cycle));
    std::string key = cycle_key(cycle);
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return it->second;
    BigCount total = branch_total(ctx, cycle);
    ctx.memo.emplace(std::move(key), total);
    return total;
}

void enumerate_rec(const std::vector<std::vector<LatticePoint>>& stack_pieces,
                   std::vector<Triangle>& partial,
                   const std::function<void(const std::vector<Triangle>&)>& fn) {
    if (stack_pieces.empty()) {
        fn(partial);
        return;
    }
    std::vector<LatticePoint> cycle = stack_pieces.back();
    std::vector<std::vector<LatticePoint>> rest(stack_pieces.begin(), stack_pieces.end() - 1);
    if (cycle.size() < 3 || shoelace2(cycle) == 0) {
        enumerate_rec(rest, partial, fn);
        return;
    }
    cycle = canonical_rotation(std::move(cycle));
    const LatticePoint v0 = cycle[0], v1 = cycle[1];
    auto try_w = [&](const LatticePoint& w, size_t pos) {
        if (w == v0 || w == v1) return;
        if (cross(v0, v1, w) != 1) return;
        if (!triangle_clear(cycle, v0, v1, w, pos)) return;
        split_and_go(cycle, w, pos, [&](std::vector<std::vector<LatticePoint>> pieces) {
            auto next = rest;
            for (auto& piece : pieces) next.push_back(std::move(piece));
            partial.emplace_back(v0, v1, w);
            enumerate_rec(next, partial, fn);
            partial.pop_back();
        });
    };
    for (size_t i = 2; i < cycle.size(); ++i) try_w(cycle[i], i);
    for (const auto& p : interior_points(cycle)) try_w(p, static_cast<size_t>(-1));
}

}  // namespace

BigCount count_polygon(const std::vector<LatticePoint>& ccw_cycle) {
    Ctx ctx;
    return count_rec(ctx, ccw_cycle);
}

void enumerate_polygon(const std::vector<LatticePoint>& ccw_cycle,
                       const std::function<void(const std::vector<Triangle>&)>& fn) {
    std::vector<Triangle> partial;
    enumerate_rec({ccw_cycle}, partial, fn);
}

std::vector<LatticePoint> trapezoid_cycle(int A, int B) {
    if ((A + B) % 2 != 1 || A < 0 || B < 0)
        throw std::invalid_argument("trapezoid_cycle: need A+B odd, nonnegative");
    std::vector<LatticePoint> cycle;
    for (int x = 0; x <= 2; ++x) cycle.push_back({x, 0});
    for (int y = 1; y <= B; ++y) cycle.push_back({2, y});
    cycle.push_back({0, A});  // via the top diagonal
    for (int y = A - 1; y >= 1; --y) cycle.push_back({0, y});
    if (A == 0) cycle.pop_back();  // (0,A) duplicates the start
    return cycle;
}

std::vector<LatticePoint> hook_cycle(int A, int B, int C, int D) {
    if ((A + B) % 2 != 1 || B > C || B < 1 || C < 1)
        throw std::invalid_argument("hook_cycle: need A+B odd, 1 <= B <= C");
    std::vector<LatticePoint> cycle;
    for (int x = 0; x <= 3; ++x) cycle.push_back({x, 0});
    for (int y = 1; y <= D; ++y) cycle.push_back({3, y});
    cycle.push_back({2, C});  // strip top edge
    for (int y = C - 1; y >= B; --y) cycle.push_back({2, y});
    cycle.push_back({0, A});  // trapezoid diagonal
    for (int y = A - 1; y >= 1; --y) cycle.push_back({0, y});
    if (A == 0) cycle.pop_back();
    return cycle;
}

std::vector<std::vector<LatticePoint>> shape_cycles(const shapes::AdmissibleShape& s) {
    // heights just left/right of every integer x, walls included
    const auto& segs = s.segs;
    std::vector<std::vector<LatticePoint>> out;
    size_t j = 0;
    while (j < segs.size()) {
        // skip zero-area leading parts
        if (segs[j].l.y == 0 && segs[j].r.y == 0) {
            ++j;
            continue;
        }
        // component [j, jend): break where the chain touches height 0
        size_t jend = j + 1;
        while (jend < segs.size()) {
            int left_h = segs[jend - 1].r.y, right_h = segs[jend].l.y;
            if (std::min(left_h, right_h) == 0) break;
            if (segs[jend].l.y == 0 && segs[jend].r.y == 0) break;
            ++jend;
        }
        int xa = segs[j].l.x, xb = segs[jend - 1].r.x;
        std::vector<LatticePoint> cycle;
        for (int x = xa; x <= xb; ++x) cycle.push_back({x, 0});
        for (int y = 1; y < segs[jend - 1].r.y; ++y) cycle.push_back({xb, y});
        // chain right-to-left; jumps produce unit vertical steps
        for (size_t t = jend; t-- > j;) {
            cycle.push_back(segs[t].r);
            if (t > j && segs[t].l.y != segs[t - 1].r.y) cycle.push_back(segs[t].l);
        }
        if (segs[j].l.y > 0) cycle.push_back(segs[j].l);
        for (int y = segs[j].l.y - 1; y >= 1; --y) cycle.push_back({xa, y});
        // drop duplicates created by zero heights at the two ends
        std::vector<LatticePoint> clean;
        for (const auto& p : cycle) {
            if (clean.empty() || !(clean.back() == p)) clean.push_back(p);
        }
        while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
        out.push_back(std::move(clean));
        j = jend;
    }
    return out;
}

BigCount count_shape(const shapes::AdmissibleShape& s) {
    BigCount prod = 1;
    for (const auto& cycle : shape_cycles(s)) prod *= count_polygon(cycle);
    return prod;
}

void enumerate_shape(const shapes::AdmissibleShape& s,
                     const std::function<void(const std::vector<Triangle>&)>& fn) {
    auto cycles = shape_cycles(s);
    std::vector<Triangle> partial;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == cycles.size()) {
            fn(partial);
            return;
        }
        enumerate_polygon(cycles[i], [&](const std::vector<Triangle>& tris) {
            size_t before = partial.size();
            partial.insert(partial.end(), tris.begin(), tris.end());
            rec(i + 1);
            partial.resize(before);
        });
    };
    rec(0);
}

}  // namespace gridtri::oracle
