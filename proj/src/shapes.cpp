#include "gridtri/shapes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace gridtri::shapes {

namespace {

constexpr int kMaxDpSide = 120;  // chain keys use biased single bytes

void require_small(const GridSpec& g, const char* who) {
    if (g.m > kMaxDpSide || g.n > kMaxDpSide)
        throw std::invalid_argument(std::string(who) + ": grid sides beyond " +
                                    std::to_string(kMaxDpSide) + " are not supported");
}

}  // namespace

AdmissibleShape AdmissibleShape::full(GridSpec g) {
    std::vector<ChainSeg> segs;
    segs.reserve(g.m);
    for (int i = 0; i < g.m; ++i)
        segs.push_back({LatticePoint{i, g.n}, LatticePoint{i + 1, g.n}});
    return AdmissibleShape{g, std::move(segs)};
}

AdmissibleShape AdmissibleShape::from_segments(GridSpec g, std::vector<ChainSeg> segs) {
    if (segs.empty()) throw std::invalid_argument("shape: empty chain");
    if (segs.front().l.x != 0 || segs.back().r.x != g.m)
        throw std::invalid_argument("shape: chain must run from x=0 to x=m");
    for (size_t j = 0; j < segs.size(); ++j) {
        const ChainSeg& s = segs[j];
        if (s.dx() < 1) throw std::invalid_argument("shape: segment needs positive x-extent");
        if (gcd_ll(s.dx(), s.dy()) != 1) throw std::invalid_argument("shape: segment not primitive");
        if (s.l.y < 0 || s.l.y > g.n || s.r.y < 0 || s.r.y > g.n)
            throw std::invalid_argument("shape: height out of [0,n]");
        if (j > 0) {
            if (segs[j - 1].r.x != s.l.x)
                throw std::invalid_argument("shape: chain not contiguous in x");
            int jump = s.l.y - segs[j - 1].r.y;
            if (jump < -1 || jump > 1)
                throw std::invalid_argument("shape: vertical jump exceeds 1");
        }
    }
    return AdmissibleShape{g, std::move(segs)};
}

long long AdmissibleShape::doubled_area() const {
    long long a = 0;
    for (const auto& s : segs) a += static_cast<long long>(s.l.y + s.r.y) * s.dx();
    return a;
}

std::string AdmissibleShape::key() const {
    require_small(grid, "shape key");
    std::string k;
    k.reserve(1 + 3 * segs.size());
    k.push_back(static_cast<char>(segs.front().l.y));
    for (size_t j = 0; j < segs.size(); ++j) {
        int jump = j == 0 ? 0 : segs[j].l.y - segs[j - 1].r.y;
        k.push_back(static_cast<char>(jump + 1));
        k.push_back(static_cast<char>(segs[j].dx()));
        k.push_back(static_cast<char>(segs[j].dy() + 125));
    }
    return k;
}

AdmissibleShape shape_from_key(GridSpec g, const std::string& key) {
    if (key.size() < 4 || (key.size() - 1) % 3 != 0)
        throw std::invalid_argument("shape key: bad length");
    std::vector<ChainSeg> segs;
    LatticePoint cur{0, static_cast<int>(static_cast<unsigned char>(key[0]))};
    for (size_t i = 1; i < key.size(); i += 3) {
        int jump = static_cast<unsigned char>(key[i]) - 1;
        int dx = static_cast<unsigned char>(key[i + 1]);
        int dy = static_cast<unsigned char>(key[i + 2]) - 125;
        cur.y += (i == 1 ? 0 : jump);
        LatticePoint r{cur.x + dx, cur.y + dy};
        segs.push_back({cur, r});
        cur = r;
    }
    return AdmissibleShape::from_segments(g, std::move(segs));
}

// ---------------------------------------------------------------------------
// the "lies above" relation

namespace {

void slice_bounds(const Triangle& t, const Rat& x, Rat& lo, Rat& hi) {
    bool any = false;
    auto consider = [&](const Rat& y) {
        if (!any || y < lo) lo = y;
        if (!any || y > hi) hi = y;
        any = true;
    };
    for (int i = 0; i < 3; ++i) {
        LatticePoint p = t.v[i], q = t.v[(i + 1) % 3];
        if (p.x == q.x) {
            if (x == p.x) {
                consider(Rat(p.y));
                consider(Rat(q.y));
            }
            continue;
        }
        if (p.x > q.x) std::swap(p, q);
        if (x < p.x || x > q.x) continue;
        Rat y = Rat(p.y) + (x - p.x) * Rat(q.y - p.y, q.x - p.x);
        y.canonicalize();
        consider(y);
    }
    if (!any) throw std::logic_error("slice_bounds: x outside triangle");
}

// closure of { x in [x1,x2] : linear(x) > 0 } for the linear function with
// values f1 at x1 and f2 at x2; empty marked by lo > hi
struct RatInterval {
    Rat lo, hi;
    bool empty;
};

RatInterval positive_region(const Rat& x1, const Rat& x2, const Rat& f1, const Rat& f2) {
    if (f1 <= 0 && f2 <= 0) return {Rat(0), Rat(0), true};
    if (f1 > 0 && f2 > 0) return {x1, x2, false};
    Rat root = x1 + (x2 - x1) * f1 / (f1 - f2);
    root.canonicalize();
    if (f1 > 0) return {x1, root, false};
    return {root, x2, false};
}

}  // namespace

bool precedes(const Triangle& d1, const Triangle& d2) {
    if (triangle_meet(d1, d2) == MeetKind::improper)
        throw std::invalid_argument("precedes: triangles do not meet in a common face");
    int lo1 = std::min({d1.v[0].x, d1.v[1].x, d1.v[2].x});
    int hi1 = std::max({d1.v[0].x, d1.v[1].x, d1.v[2].x});
    int lo2 = std::min({d2.v[0].x, d2.v[1].x, d2.v[2].x});
    int hi2 = std::max({d2.v[0].x, d2.v[1].x, d2.v[2].x});
    int xlo = std::max(lo1, lo2), xhi = std::min(hi1, hi2);
    if (xlo > xhi) return false;

    std::vector<int> xs;
    for (int i = 0; i < 3; ++i) {
        if (d1.v[i].x >= xlo && d1.v[i].x <= xhi) xs.push_back(d1.v[i].x);
        if (d2.v[i].x >= xlo && d2.v[i].x <= xhi) xs.push_back(d2.v[i].x);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    auto below_at = [&](const Rat& x) {
        Rat a1, b1, a2, b2;
        slice_bounds(d1, x, a1, b1);
        slice_bounds(d2, x, a2, b2);
        return a1 < a2 && b1 < b2;
    };

    for (size_t i = 0; i < xs.size(); ++i) {
        if (below_at(Rat(xs[i]))) return true;
        if (i + 1 == xs.size()) continue;
        Rat x1(xs[i]), x2(xs[i + 1]);
        Rat a1, b1, a2, b2;
        slice_bounds(d1, x1, a1, b1);
        slice_bounds(d2, x1, a2, b2);
        Rat f1 = a2 - a1, g1 = b2 - b1;
        slice_bounds(d1, x2, a1, b1);
        slice_bounds(d2, x2, a2, b2);
        Rat f2 = a2 - a1, g2 = b2 - b1;
        RatInterval rf = positive_region(x1, x2, f1, f2);
        RatInterval rg = positive_region(x1, x2, g1, g2);
        if (rf.empty || rg.empty) continue;
        Rat lo = std::max(rf.lo, rg.lo), hi = std::min(rf.hi, rg.hi);
        if (lo > hi) continue;
        Rat mid = (lo + hi) / 2;
        mid.canonicalize();
        if (below_at(mid)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// maximal triangles and subshapes

namespace {

struct Cand {
    Triangle tri;
    int lo = 0, hi = 0;            // occupied segment range
    std::vector<ChainSeg> bottom;  // replacement pieces, dx > 0 each
    int min_x = 0;
};

// Candidate maximal triangles: the triangle spanned by two adjacent chain
// segments, plus at most two triangles hanging below each segment (their
// apex must sit on the parallel lattice line just below it). Each candidate
// is then filtered so it really is maximal in some triangulation. A triangle whose endpoint sits under a
// length-1 wall (a +-1 jump towards it) is maximal only if the wall corner
// can be closed by a single unimodular triangle, which requires the segment
// beyond the wall to have x-extent 1 and rules out a vertical edge of the
// candidate against the wall.
std::vector<Cand> make_candidates(const AdmissibleShape& s) {
    const auto& segs = s.segs;
    int t = static_cast<int>(segs.size());
    auto left_ok = [&](int j, bool vertical_left) {
        if (j == 0) return true;
        int jump = segs[j].l.y - segs[j - 1].r.y;
        if (jump != -1) return true;
        if (vertical_left) return false;
        return segs[j - 1].dx() == 1;
    };
    auto right_ok = [&](int k, bool vertical_right) {
        if (k == t - 1) return true;
        int jump = segs[k + 1].l.y - segs[k].r.y;
        if (jump != 1) return true;
        if (vertical_right) return false;
        return segs[k + 1].dx() == 1;
    };

    std::vector<Cand> out;
    for (int j = 0; j < t; ++j) {
        const LatticePoint p = segs[j].l, q = segs[j].r;
        const int dx = segs[j].dx(), dy = segs[j].dy();
        std::vector<LatticePoint> apexes;
        if (dx == 1) {
            apexes.push_back({p.x, p.y - 1});
            apexes.push_back({q.x, q.y - 1});
        } else {
            for (int step = 1; step < dx; ++step) {
                long long num = static_cast<long long>(dy) * step - 1;
                if (num % dx != 0) continue;
                apexes.push_back({p.x + step, p.y + static_cast<int>(num / dx)});
            }
        }
        for (const auto& v : apexes) {
            if (v.y < 0) continue;
            bool vleft = v.x == p.x, vright = v.x == q.x;
            if (!left_ok(j, vleft) || !right_ok(j, vright)) continue;
            Cand c;
            c.tri = Triangle(p, q, v);
            c.lo = c.hi = j;
            c.min_x = p.x;
            if (v.x > p.x) c.bottom.push_back({p, v});
            if (v.x < q.x) c.bottom.push_back({v, q});
            out.push_back(std::move(c));
        }
    }
    for (int j = 0; j + 1 < t; ++j) {
        if (!(segs[j].r == segs[j + 1].l)) continue;
        LatticePoint p = segs[j].l, mid = segs[j].r, q = segs[j + 1].r;
        if (cross(p, mid, q) != -1) continue;  // unimodular right turn below the chain
        if (!left_ok(j, false) || !right_ok(j + 1, false)) continue;
        Cand c;
        c.tri = Triangle(p, mid, q);
        c.lo = j;
        c.hi = j + 1;
        c.min_x = p.x;
        c.bottom.push_back({p, q});
        out.push_back(std::move(c));
    }
    return out;
}

AdmissibleShape splice(const AdmissibleShape& s, const std::vector<const Cand*>& removed) {
    std::vector<ChainSeg> segs;
    segs.reserve(s.segs.size());
    size_t r = 0;
    for (int j = 0; j < static_cast<int>(s.segs.size());) {
        if (r < removed.size() && removed[r]->lo == j) {
            for (const auto& piece : removed[r]->bottom) segs.push_back(piece);
            j = removed[r]->hi + 1;
            ++r;
        } else {
            segs.push_back(s.segs[j]);
            ++j;
        }
    }
    return AdmissibleShape::from_segments(s.grid, std::move(segs));
}

// Every nonempty subset of pairwise interior-disjoint candidates; candidates
// conflict exactly when their segment ranges overlap.
template <typename Fn>
void for_each_subset(const AdmissibleShape& s, const std::vector<Cand>& cands, int prune_cutoff,
                     Fn&& fn) {
    int t = static_cast<int>(s.segs.size());
    std::vector<std::vector<const Cand*>> unit(t);
    std::vector<const Cand*> corner(t, nullptr);
    for (const auto& c : cands) {
        if (c.min_x < prune_cutoff) continue;
        if (c.hi == c.lo)
            unit[c.lo].push_back(&c);
        else
            corner[c.lo] = &c;
    }
    std::vector<const Cand*> chosen;
    auto rec = [&](auto&& self, int j) -> void {
        if (j >= t) {
            if (!chosen.empty()) fn(chosen);
            return;
        }
        self(self, j + 1);
        for (const Cand* c : unit[j]) {
            chosen.push_back(c);
            self(self, j + 1);
            chosen.pop_back();
        }
        if (corner[j]) {
            chosen.push_back(corner[j]);
            self(self, j + 2);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

int prune_cutoff_of(const AdmissibleShape& s, bool prune) {
    if (!prune) return 0;
    int c = 0;
    for (size_t j = 1; j < s.segs.size(); ++j) {
        if (s.segs[j].l.y - s.segs[j - 1].r.y == 1) c = s.segs[j].l.x;
    }
    return c;
}

}  // namespace

MaxTriangleSet maximal_triangles(const AdmissibleShape& s) {
    MaxTriangleSet out{s, {}};
    for (auto& c : make_candidates(s)) out.triangles.push_back(c.tri);
    std::sort(out.triangles.begin(), out.triangles.end(), triangle_less);
    return out;
}

AdmissibleShape remove_triangles(const AdmissibleShape& s, const std::vector<Triangle>& a) {
    if (a.empty()) return s;
    auto cands = make_candidates(s);
    std::vector<const Cand*> picked;
    for (const auto& tri : a) {
        const Cand* found = nullptr;
        for (const auto& c : cands) {
            if (c.tri == tri) {
                found = &c;
                break;
            }
        }
        if (!found) throw std::invalid_argument("remove_triangles: triangle is not maximal");
        picked.push_back(found);
    }
    std::sort(picked.begin(), picked.end(),
              [](const Cand* x, const Cand* y) { return x->lo < y->lo; });
    for (size_t i = 0; i + 1 < picked.size(); ++i) {
        if (picked[i] == picked[i + 1] || picked[i + 1]->lo <= picked[i]->hi)
            throw std::invalid_argument("remove_triangles: triangles overlap");
    }
    return splice(s, picked);
}

std::vector<SubshapeDelta> admissible_subshapes(const AdmissibleShape& s) {
    std::vector<SubshapeDelta> out;
    std::string parent = s.key();
    auto cands = make_candidates(s);
    for_each_subset(s, cands, 0, [&](const std::vector<const Cand*>& chosen) {
        out.push_back(
            {parent, splice(s, chosen).key(), static_cast<int>(chosen.size())});
    });
    return out;
}

// ---------------------------------------------------------------------------
// the dynamic program

const BigCount& DpTables::count_of(const std::string& key) const {
    auto it = counts.find(key);
    if (it == counts.end())
        throw std::runtime_error("dp tables: missing shape count (tables not retained?)");
    return it->second;
}

namespace {

struct OrderEntry {
    int start_h;
    long long area2;
    std::string key;
};

BigCount dp_run(const AdmissibleShape& root, const DpOptions& opt, DpStats* stats,
                DpTables* retain) {
    require_small(root.grid, "count_by_dp");
    const GridSpec g = root.grid;

    // phase 1: reachable shapes and their parent-edge counts
    std::unordered_map<std::string, long long> ref;
    std::vector<OrderEntry> order;
    std::deque<std::string> todo;
    uint64_t bytes = 0;
    auto note_shape = [&](const std::string& key, const AdmissibleShape& sh) {
        bytes += key.size() * 2 + 120;
        if (bytes > opt.budget_bytes)
            throw BudgetError("count_by_dp: budget of " + std::to_string(opt.budget_bytes) +
                              " bytes exceeded after " + std::to_string(order.size()) +
                              " admissible shapes");
        order.push_back({sh.start_height(), sh.doubled_area(), key});
        todo.push_back(key);
    };
    {
        std::string rk = root.key();
        ref.emplace(rk, 0);
        note_shape(rk, root);
    }
    while (!todo.empty()) {
        std::string key = std::move(todo.front());
        todo.pop_front();
        AdmissibleShape sh = shape_from_key(g, key);
        if (opt.validate_shapes && stats) stats->shapes_validated++;  // from_segments re-checked
        auto cands = make_candidates(sh);
        for_each_subset(sh, cands, prune_cutoff_of(sh, opt.prune),
                        [&](const std::vector<const Cand*>& chosen) {
                            AdmissibleShape child = splice(sh, chosen);
                            std::string ck = child.key();
                            auto [it, fresh] = ref.try_emplace(ck, 0);
                            it->second++;
                            if (fresh) note_shape(ck, child);
                        });
    }

    std::sort(order.begin(), order.end(), [](const OrderEntry& a, const OrderEntry& b) {
        if (a.start_h != b.start_h) return a.start_h < b.start_h;
        if (a.area2 != b.area2) return a.area2 < b.area2;
        return a.key < b.key;
    });

    // phase 2: inclusion-exclusion in an order that puts every shape after
    // its subshapes; counts are evicted once no unprocessed parent needs them
    std::unordered_map<std::string, BigCount> counts;
    uint64_t peak = 0;
    for (const auto& entry : order) {
        AdmissibleShape sh = shape_from_key(g, entry.key);
        BigCount f = 0;
        if (entry.area2 == 0) {
            f = 1;
        } else {
            auto cands = make_candidates(sh);
            int cutoff = prune_cutoff_of(sh, opt.prune);
            for_each_subset(sh, cands, cutoff, [&](const std::vector<const Cand*>& chosen) {
                const BigCount& sub = counts.at(splice(sh, chosen).key());
                if (chosen.size() % 2 == 1)
                    f += sub;
                else
                    f -= sub;
            });
            if (!retain) {
                for_each_subset(sh, cands, cutoff, [&](const std::vector<const Cand*>& chosen) {
                    std::string ck = splice(sh, chosen).key();
                    if (--ref.at(ck) == 0 && ck != entry.key) counts.erase(ck);
                });
            }
        }
        counts.emplace(entry.key, std::move(f));
        peak = std::max<uint64_t>(peak, counts.size());
    }

    if (stats) {
        stats->shape_count = static_cast<unsigned long>(order.size());
        stats->peak_resident = peak;
    }
    BigCount result = counts.at(root.key());
    if (retain) {
        retain->grid = g;
        retain->counts = std::move(counts);
    }
    return result;
}

}  // namespace

BigCount count_by_dp(GridSpec g, const DpOptions& opt, DpStats* stats, DpTables* retain) {
    return dp_run(AdmissibleShape::full(g), opt, stats, retain);
}

BigCount count_of_shape(const AdmissibleShape& root, const DpOptions& opt, DpTables* retain) {
    return dp_run(root, opt, nullptr, retain);
}

std::pair<BigCount, uint64_t> shape_census(GridSpec g, const DpOptions& opt) {
    DpStats stats;
    count_by_dp(g, opt, &stats, nullptr);
    return {stats.shape_count, stats.peak_resident};
}

Triangulation dp_sample(const DpTables& tables, Rng& rng) {
    if (tables.counts.empty()) throw std::runtime_error("dp_sample: tables missing");
    AdmissibleShape shape = AdmissibleShape::full(tables.grid);
    tables.count_of(shape.key());  // tables must belong to this grid
    std::vector<Triangle> tris;
    while (shape.doubled_area() > 0) {
        auto cands = make_candidates(shape);
        std::vector<BigCount> weights;
        std::vector<AdmissibleShape> children;
        BigCount total = 0;
        for (const auto& c : cands) {
            AdmissibleShape child = splice(shape, {&c});
            const BigCount& w = tables.count_of(child.key());
            total += w;
            weights.push_back(w);
            children.push_back(std::move(child));
        }
        if (sgn(total) <= 0) throw std::logic_error("dp_sample: no removable triangle");

        // uniform draw below total
        size_t bits = mpz_sizeinbase(total.get_mpz_t(), 2);
        size_t words = (bits + 63) / 64;
        BigCount draw;
        do {
            draw = 0;
            for (size_t w = 0; w < words; ++w) {
                draw <<= 64;
                draw += BigCount(static_cast<unsigned long>(rng.next()));
            }
            draw >>= static_cast<unsigned long>(64 * words - bits);
        } while (draw >= total);

        size_t pick = 0;
        BigCount acc = 0;
        for (; pick < weights.size(); ++pick) {
            acc += weights[pick];
            if (draw < acc) break;
        }
        tris.push_back(cands[pick].tri);
        shape = children[pick];
    }
    return Triangulation::from_triangles(tables.grid, std::move(tris));
}

}  // namespace gridtri::shapes
