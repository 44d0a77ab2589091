#include "gridtri/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace gridtri::regularity {

int LinearSystem::var_of(const LatticePoint& p) {
    for (size_t i = 0; i < points.size(); ++i) {
        if (points[i] == p) return static_cast<int>(i);
    }
    points.push_back(p);
    return static_cast<int>(points.size() - 1);
}

Configuration Configuration::from_triangles(std::vector<Triangle> tris) {
    std::sort(tris.begin(), tris.end(), triangle_less);
    for (size_t i = 0; i < tris.size(); ++i) {
        if (!tris[i].unimodular())
            throw std::invalid_argument("configuration: triangle not unimodular");
        if (i > 0 && tris[i] == tris[i - 1])
            throw std::invalid_argument("configuration: duplicate triangle");
        for (size_t j = 0; j < i; ++j) {
            if (triangle_meet(tris[i], tris[j]) == MeetKind::improper)
                throw std::invalid_argument("configuration: triangles do not meet face-to-face");
        }
    }
    return Configuration{std::move(tris)};
}

std::vector<LatticePoint> Configuration::covered_points() const {
    std::vector<LatticePoint> pts;
    for (const auto& t : triangles) {
        for (const auto& v : t.v) pts.push_back(v);
    }
    std::sort(pts.begin(), pts.end(), point_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

namespace {

// integer affine coordinates of p w.r.t. the unimodular triangle (u0,u1,u2)
void affine_coords(const Triangle& t, const LatticePoint& p, long long out[3]) {
    const LatticePoint &a = t.v[0], &b = t.v[1], &c = t.v[2];
    long long det = cross(c, a, b);  // = +-1
    long long alpha = cross(c, p, b) / det;
    long long beta = cross(c, a, p) / det;
    out[0] = alpha;
    out[1] = beta;
    out[2] = 1 - alpha - beta;
}

void add_above_row(LinearSystem& sys, const Triangle& plane, const LatticePoint& p) {
    long long co[3];
    affine_coords(plane, p, co);
    LinearSystem::Row row;
    row.terms.push_back({sys.var_of(p), 1});
    for (int i = 0; i < 3; ++i) {
        if (co[i] != 0) row.terms.push_back({sys.var_of(plane.v[i]), -co[i]});
    }
    sys.rows.push_back(std::move(row));
}

}  // namespace

LinearSystem fold_constraints(const Triangulation& t) {
    auto rep = validate(t);
    if (!rep.valid)
        throw std::invalid_argument("fold_constraints: invalid triangulation (" +
                                    rep.violations.front().kind + ")");
    LinearSystem sys;
    for (int y = 0; y <= t.grid.n; ++y) {
        for (int x = 0; x <= t.grid.m; ++x) sys.var_of(LatticePoint{x, y});
    }
    std::unordered_map<Edge, std::vector<LatticePoint>> opp;
    for (const auto& tr : t.triangles) {
        opp[Edge(tr.v[0], tr.v[1])].push_back(tr.v[2]);
        opp[Edge(tr.v[0], tr.v[2])].push_back(tr.v[1]);
        opp[Edge(tr.v[1], tr.v[2])].push_back(tr.v[0]);
    }
    std::vector<Edge> interior;
    for (const auto& [e, os] : opp) {
        if (os.size() == 2) interior.push_back(e);
    }
    std::sort(interior.begin(), interior.end(), edge_less);
    for (const auto& e : interior) {
        auto os = opp.at(e);
        std::sort(os.begin(), os.end(), point_less);
        add_above_row(sys, Triangle(e.a, e.b, os[0]), os[1]);
    }
    return sys;
}

LinearSystem configuration_constraints(const Configuration& c) {
    LinearSystem sys;
    auto pts = c.covered_points();
    for (const auto& p : pts) sys.var_of(p);
    for (const auto& tr : c.triangles) {
        for (const auto& p : pts) {
            if (tr.has_vertex(p)) continue;
            add_above_row(sys, tr, p);
        }
    }
    return sys;
}

// ---------------------------------------------------------------------------
// exact and floating phase-1 simplex
//
// Standard form min 1*artificials s.t. Ax + I*artificials = b, x >= 0,
// b >= 0. Bland's rule in the exact version guarantees termination; the
// float version is only a witness heuristic.

namespace {

struct ExactLp {
    int status = 1;  // 0 = optimal
    Rat objective;
    std::vector<Rat> x;     // original variables
    std::vector<Rat> dual;  // per row, from artificial reduced costs
};

ExactLp exact_phase1(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b) {
    const int rows = static_cast<int>(a.size());
    const int nvars = rows ? static_cast<int>(a[0].size()) : 0;
    const int total = nvars + rows;
    std::vector<std::vector<Rat>> tab(rows, std::vector<Rat>(total + 1));
    std::vector<int> basis(rows);
    for (int r = 0; r < rows; ++r) {
        for (int j = 0; j < nvars; ++j) tab[r][j] = a[r][j];
        tab[r][nvars + r] = 1;
        tab[r][total] = b[r];
        basis[r] = nvars + r;
    }
    std::vector<Rat> cost(total + 1);
    for (int j = 0; j < total; ++j) {
        Rat s = 0;
        for (int r = 0; r < rows; ++r) s += tab[r][j];
        cost[j] = (j >= nvars ? Rat(1) : Rat(0)) - s;
    }
    Rat obj = 0;
    for (int r = 0; r < rows; ++r) obj += tab[r][total];

    while (true) {
        int enter = -1;
        for (int j = 0; j < total; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;  // Bland: smallest index
            }
        }
        if (enter < 0) break;
        int leave = -1;
        Rat best;
        for (int r = 0; r < rows; ++r) {
            if (tab[r][enter] <= 0) continue;
            Rat ratio = tab[r][total] / tab[r][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                best = ratio;
                leave = r;
            }
        }
        if (leave < 0) return {};  // unbounded: cannot happen in phase 1
        Rat piv = tab[leave][enter];
        for (int j = 0; j <= total; ++j) tab[leave][j] /= piv;
        for (int r = 0; r < rows; ++r) {
            if (r == leave || tab[r][enter] == 0) continue;
            Rat f = tab[r][enter];
            for (int j = 0; j <= total; ++j) tab[r][j] -= f * tab[leave][j];
        }
        Rat f = cost[enter];
        if (f != 0) {
            for (int j = 0; j <= total; ++j) cost[j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
        obj = 0;
        for (int r = 0; r < rows; ++r) {
            if (basis[r] >= nvars) obj += tab[r][total];
        }
    }

    ExactLp out;
    out.status = 0;
    out.objective = obj;
    out.x.assign(nvars, Rat(0));
    for (int r = 0; r < rows; ++r) {
        if (basis[r] < nvars) out.x[basis[r]] = tab[r][total];
    }
    out.dual.assign(rows, Rat(0));
    for (int r = 0; r < rows; ++r) out.dual[r] = Rat(1) - cost[nvars + r];
    return out;
}

struct FloatLp {
    bool ok = false;  // reached optimality within the iteration cap
    double objective = 0;
    std::vector<double> x;
    std::vector<double> dual;
};

FloatLp float_phase1(const std::vector<std::vector<double>>& a, const std::vector<double>& b) {
    const int rows = static_cast<int>(a.size());
    const int nvars = rows ? static_cast<int>(a[0].size()) : 0;
    const int total = nvars + rows;
    const double eps = 1e-9;
    std::vector<std::vector<double>> tab(rows, std::vector<double>(total + 1, 0.0));
    std::vector<int> basis(rows);
    for (int r = 0; r < rows; ++r) {
        for (int j = 0; j < nvars; ++j) tab[r][j] = a[r][j];
        tab[r][nvars + r] = 1.0;
        tab[r][total] = b[r];
        basis[r] = nvars + r;
    }
    std::vector<double> cost(total + 1, 0.0);
    for (int j = 0; j < total; ++j) {
        double s = 0;
        for (int r = 0; r < rows; ++r) s += tab[r][j];
        cost[j] = (j >= nvars ? 1.0 : 0.0) - s;
    }
    FloatLp out;
    long iters = 0, cap = 40L * (rows + total) + 2000;
    while (iters++ < cap) {
        int enter = -1;
        double most = -eps;
        for (int j = 0; j < total; ++j) {
            if (cost[j] < most) {
                most = cost[j];
                enter = j;
            }
        }
        if (enter < 0) {
            out.ok = true;
            break;
        }
        int leave = -1;
        double best = 0;
        for (int r = 0; r < rows; ++r) {
            if (tab[r][enter] <= eps) continue;
            double ratio = tab[r][total] / tab[r][enter];
            if (leave < 0 || ratio < best) {
                best = ratio;
                leave = r;
            }
        }
        if (leave < 0) break;
        double piv = tab[leave][enter];
        for (int j = 0; j <= total; ++j) tab[leave][j] /= piv;
        for (int r = 0; r < rows; ++r) {
            if (r == leave) continue;
            double f = tab[r][enter];
            if (f == 0) continue;
            for (int j = 0; j <= total; ++j) tab[r][j] -= f * tab[leave][j];
        }
        double f = cost[enter];
        for (int j = 0; j <= total; ++j) cost[j] -= f * tab[leave][j];
        basis[leave] = enter;
    }
    if (!out.ok) return out;
    out.x.assign(nvars, 0.0);
    double obj = 0;
    for (int r = 0; r < rows; ++r) {
        if (basis[r] < nvars) out.x[basis[r]] = tab[r][total];
        else obj += tab[r][total];
    }
    out.objective = obj;
    out.dual.assign(rows, 0.0);
    for (int r = 0; r < rows; ++r) out.dual[r] = 1.0 - cost[nvars + r];
    return out;
}

std::vector<std::vector<long long>> dense_rows(const LinearSystem& sys) {
    std::vector<std::vector<long long>> a(sys.rows.size(),
                                          std::vector<long long>(sys.points.size(), 0));
    for (size_t r = 0; r < sys.rows.size(); ++r) {
        for (const auto& [v, c] : sys.rows[r].terms) a[r][v] += c;
    }
    return a;
}

}  // namespace

bool verify_lifting(const LinearSystem& sys, const std::vector<Rat>& h) {
    if (h.size() != sys.points.size()) return false;
    for (const auto& row : sys.rows) {
        Rat s = 0;
        for (const auto& [v, c] : row.terms) s += Rat(static_cast<long>(c)) * h[v];
        if (s < 1) return false;
    }
    return true;
}

bool verify_certificate(const LinearSystem& sys, const std::vector<Rat>& y) {
    if (y.size() != sys.rows.size()) return false;
    bool positive = false;
    for (const auto& yi : y) {
        if (yi < 0) return false;
        if (yi > 0) positive = true;
    }
    if (!positive) return false;
    std::vector<Rat> comb(sys.points.size(), Rat(0));
    for (size_t r = 0; r < sys.rows.size(); ++r) {
        if (y[r] == 0) continue;
        for (const auto& [v, c] : sys.rows[r].terms) comb[v] += y[r] * Rat(static_cast<long>(c));
    }
    for (const auto& v : comb) {
        if (v != 0) return false;
    }
    return true;
}

namespace {

// exact certificate attempt restricted to a row subset; only variables
// actually touched by those rows enter the equality system
bool certificate_on_support(const LinearSystem& sys,
                            const std::vector<std::vector<long long>>& rows_dense,
                            const std::vector<int>& support, std::vector<Rat>* out) {
    const int nv = static_cast<int>(sys.points.size());
    const int k = static_cast<int>(support.size());
    if (k == 0) return false;
    std::vector<int> touched;
    for (int v = 0; v < nv; ++v) {
        for (int i = 0; i < k; ++i) {
            if (rows_dense[support[i]][v] != 0) {
                touched.push_back(v);
                break;
            }
        }
    }
    const int nt = static_cast<int>(touched.size());
    // rows: for each touched variable, sum_i y_i a_iv = 0; plus sum y_i = 1
    std::vector<std::vector<Rat>> a(nt + 1, std::vector<Rat>(k, Rat(0)));
    std::vector<Rat> b(nt + 1, Rat(0));
    for (int i = 0; i < k; ++i) {
        for (int tv = 0; tv < nt; ++tv)
            a[tv][i] = Rat(static_cast<long>(rows_dense[support[i]][touched[tv]]));
        a[nt][i] = 1;
    }
    b[nt] = 1;
    auto lp = exact_phase1(a, b);
    if (lp.status != 0 || lp.objective != 0) return false;
    out->assign(sys.rows.size(), Rat(0));
    for (int i = 0; i < k; ++i) (*out)[support[i]] = lp.x[i];
    return verify_certificate(sys, *out);
}

}  // namespace

RegularityResult solve_strict(const LinearSystem& sys) {
    RegularityResult res;
    const int nv = static_cast<int>(sys.points.size());
    const int nr = static_cast<int>(sys.rows.size());
    if (nr == 0) {
        res.regular = true;
        res.lifting.assign(nv, Rat(0));
        return res;
    }
    auto rows_dense = dense_rows(sys);

    // witness heuristic in doubles; every outcome is certified exactly below
    {
        std::vector<std::vector<double>> a(nr, std::vector<double>(2 * nv + nr, 0.0));
        std::vector<double> b(nr, 1.0);
        for (int r = 0; r < nr; ++r) {
            for (int v = 0; v < nv; ++v) {
                a[r][v] = static_cast<double>(rows_dense[r][v]);
                a[r][nv + v] = -a[r][v];
            }
            a[r][2 * nv + r] = -1.0;  // surplus
        }
        auto f = float_phase1(a, b);
        if (f.ok && f.objective < 1e-7) {
            std::vector<Rat> h(nv);
            for (int v = 0; v < nv; ++v) h[v] = Rat(f.x[v]) - Rat(f.x[nv + v]);
            // clear denominators, then integer residuals > 0 mean slack >= 1
            BigCount lcm = 1;
            for (auto& hv : h) {
                hv.canonicalize();
                lcm = lcm / gcd(lcm, hv.get_den()) * hv.get_den();
            }
            for (auto& hv : h) hv *= Rat(lcm);
            if (verify_lifting(sys, h)) {
                res.regular = true;
                res.lifting = std::move(h);
                return res;
            }
        } else if (f.ok) {
            std::vector<int> support;
            for (int r = 0; r < nr; ++r) {
                if (f.dual[r] > 1e-9) support.push_back(r);
            }
            std::vector<Rat> y;
            if (certificate_on_support(sys, rows_dense, support, &y)) {
                res.regular = false;
                res.certificate = std::move(y);
                return res;
            }
        }
    }

    // exact phase 1 on A(h+) - A(h-) - s = 1
    std::vector<std::vector<Rat>> a(nr, std::vector<Rat>(2 * nv + nr, Rat(0)));
    std::vector<Rat> b(nr, Rat(1));
    for (int r = 0; r < nr; ++r) {
        for (int v = 0; v < nv; ++v) {
            a[r][v] = Rat(static_cast<long>(rows_dense[r][v]));
            a[r][nv + v] = -a[r][v];
        }
        a[r][2 * nv + r] = -1;
    }
    auto lp = exact_phase1(a, b);
    if (lp.status != 0) throw std::logic_error("solve_strict: simplex failed");
    if (lp.objective == 0) {
        std::vector<Rat> h(nv);
        for (int v = 0; v < nv; ++v) {
            h[v] = lp.x[v] - lp.x[nv + v];
            h[v].canonicalize();
        }
        if (!verify_lifting(sys, h)) throw std::logic_error("solve_strict: lifting check failed");
        res.regular = true;
        res.lifting = std::move(h);
        return res;
    }
    std::vector<Rat> y = lp.dual;
    for (auto& yi : y) {
        yi.canonicalize();
        if (yi < 0) yi = 0;  // exact duals are >= 0 at optimality; guard anyway
    }
    if (!verify_certificate(sys, y)) throw std::logic_error("solve_strict: certificate check failed");
    res.regular = false;
    res.certificate = std::move(y);
    return res;
}

RegularityResult is_regular(const Triangulation& t) {
    return solve_strict(fold_constraints(t));
}

bool implied_inequality(const LinearSystem& sys, const std::vector<long long>& target) {
    if (target.size() != sys.points.size())
        throw std::invalid_argument("implied_inequality: target size mismatch");
    const int nv = static_cast<int>(sys.points.size());
    const int nr = static_cast<int>(sys.rows.size());
    auto rows_dense = dense_rows(sys);
    // y >= 0 with sum_i y_i row_i = target; rows with negative rhs flipped
    std::vector<std::vector<Rat>> a(nv, std::vector<Rat>(nr, Rat(0)));
    std::vector<Rat> b(nv, Rat(0));
    for (int v = 0; v < nv; ++v) {
        long long sign = target[v] < 0 ? -1 : 1;
        for (int r = 0; r < nr; ++r)
            a[v][r] = Rat(static_cast<long>(sign * rows_dense[r][v]));
        b[v] = Rat(static_cast<long>(sign * target[v]));
    }
    auto lp = exact_phase1(a, b);
    return lp.status == 0 && lp.objective == 0;
}

Configuration minimal_irregular(const Triangulation& t) {
    auto first = is_regular(t);
    if (first.regular) throw std::invalid_argument("minimal_irregular: triangulation is regular");
    std::vector<Triangle> tris = t.triangles;  // already canonical order
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (size_t i = 0; i < tris.size(); ++i) {
            std::vector<Triangle> sub = tris;
            sub.erase(sub.begin() + static_cast<long>(i));
            auto cfg = Configuration::from_triangles(sub);
            if (!solve_strict(configuration_constraints(cfg)).regular) {
                tris = std::move(sub);
                shrunk = true;
                break;
            }
        }
    }
    auto cfg = Configuration::from_triangles(tris);
    if (solve_strict(configuration_constraints(cfg)).regular)
        throw std::logic_error("minimal_irregular: result not irregular");
    for (size_t i = 0; i < tris.size(); ++i) {
        std::vector<Triangle> sub = tris;
        sub.erase(sub.begin() + static_cast<long>(i));
        auto c2 = Configuration::from_triangles(sub);
        if (!solve_strict(configuration_constraints(c2)).regular)
            throw std::logic_error("minimal_irregular: result not minimal");
    }
    return cfg;
}

}  // namespace gridtri::regularity
