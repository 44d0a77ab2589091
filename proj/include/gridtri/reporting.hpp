#pragma once

#include <string>
#include <vector>

#include "gridtri/bigint.hpp"

namespace gridtri::reporting {

struct CapacityRow {
    int m = 0, n = 0;
    BigCount count = 0;
    double capacity = 0;
};

// log2(count) / (mn), exact to well under 1e-9
double capacity(const BigCount& count, int m, int n);

struct TallyRow {
    int m = 0, n = 0;
    BigCount total = 0, regular = 0, irregular = 0;
};

struct BoundCheck {
    std::string name;
    bool pass = false;
    std::string lhs, rhs;
};

struct BoundReport {
    std::vector<BoundCheck> checks;
    bool all_pass = true;
};

// For every applicable tuple of the inputs: the 2^(3mn-m-n) upper bound, the
// binom(2n,n)^m strip lower bound, supermultiplicativity over splits of n,
// irregular supermultiplicativity, and the regular one-strip patching bound.
BoundReport bound_checks(const std::vector<CapacityRow>& rows,
                         const std::vector<TallyRow>& tallies);

enum class TableFormat { csv, text };

// Rows n = 1..n_max with exact count and 6-decimal capacity; strip
// recursions for m <= 3, the shape DP otherwise.
std::string emit_table(int m, int n_max, TableFormat fmt);

}  // namespace gridtri::reporting
