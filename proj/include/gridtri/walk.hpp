#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "gridtri/core.hpp"
#include "gridtri/rng.hpp"

namespace gridtri::walk {

struct WalkConfig {
    GridSpec grid{1, 1};
    uint64_t steps = 0;         // tau
    uint64_t record_every = 1;  // <= steps unless steps == 0
    uint64_t seed = kDefaultSeed;
};

// One lazy step: draw one of the 3mn-m-n interior edges uniformly; if it is
// flippable, flip it with probability 1/2. Stream order per step: edge draw
// first, then (only if flippable) the coin.
Triangulation walk_step(const Triangulation& t, Rng& rng);

// Runs the chain from initial_triangulation and emits floor(steps /
// record_every) samples at that cadence. Fully reproducible from the seed.
void run_walk(const WalkConfig& cfg,
              const std::function<void(const Triangulation&, uint64_t)>& sink);

struct WalkStats {
    uint64_t samples = 0;
    double irregular_fraction = 0;
    double mean_max_edge = 0;   // max over all edges, averaged over samples
    double mean_avg_edge = 0;   // mean over interior edges, averaged over samples
};

// Irregular fraction plus edge statistics. The per-sample average excludes
// the 2(m+n) boundary edges, which are forced unit segments; the maximum is
// unaffected by that choice.
WalkStats summarize(const std::vector<Triangulation>& samples,
                    const std::function<bool(const Triangulation&)>& is_regular_checker);

double interior_mean_edge(const Triangulation& t);

// In-place chain state with O(1) steps: a dense interior-edge array plus an
// edge -> opposite-vertices table, both patched locally on each flip.
class FlipWalker {
public:
    explicit FlipWalker(const Triangulation& start);

    void step(Rng& rng);
    Triangulation current() const;
    uint64_t flips_done() const { return flips_; }

private:
    int pack(const LatticePoint& p) const { return p.y * (grid_.m + 1) + p.x; }
    LatticePoint unpack(int id) const { return {id % (grid_.m + 1), id / (grid_.m + 1)}; }
    int64_t edge_id(int a, int b) const {
        return static_cast<int64_t>(std::min(a, b)) * npts_ + std::max(a, b);
    }

    GridSpec grid_;
    int npts_;
    std::vector<std::array<int, 2>> opp_;  // per packed edge, -1 = none
    std::vector<int64_t> interior_;        // the uniform-draw array
    std::vector<int32_t> pos_;             // packed edge -> index in interior_
    uint64_t flips_ = 0;
};

}  // namespace gridtri::walk
