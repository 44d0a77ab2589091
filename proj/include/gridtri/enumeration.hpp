#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "gridtri/bigint.hpp"
#include "gridtri/core.hpp"

namespace gridtri::enumeration {

struct EnumerateOptions {
    uint64_t budget_bytes = 2ULL << 30;
    int threads = 0;  // 0 = hardware concurrency
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Breadth-first traversal of the flip graph from the Delaunay start, layers
// sorted by canonical key, so identical inputs yield identical visit
// sequences. Visits every unimodular triangulation exactly once and returns
// the count. The memory guard multiplies the count estimate (strip counts
// for width <= 3, otherwise the 2^(3mn-m-n) bound) by the per-item cost and
// refuses runs over budget, naming the bound.
BigCount enumerate_all(GridSpec g,
                       const std::function<void(const Triangulation&, uint64_t)>& visitor,
                       const EnumerateOptions& opt = {});

// k-th triangulation in the deterministic order, 1-based. Uniform k gives
// exactly uniform samples.
Triangulation kth(GridSpec g, const BigCount& k, const EnumerateOptions& opt = {});

struct Tally {
    BigCount total = 0;
    BigCount regular = 0;
    BigCount irregular = 0;
};

Tally tally_regularity(GridSpec g, const EnumerateOptions& opt = {});

}  // namespace gridtri::enumeration
