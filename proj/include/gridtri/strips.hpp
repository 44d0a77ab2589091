#pragma once

#include "gridtri/bigint.hpp"

namespace gridtri::strips {

// Exact counting for widths 1-3. Geometry conventions (used by the oracle
// tests in tests/oracle.cpp):
//   g2(A,B): width-2 trapezoid, vertical sides of lengths A at x=0 and B at
//            x=2, horizontal base y=0, top edge the diagonal (0,A)-(2,B);
//            A+B must be odd so the diagonal has no interior lattice point.
//   hook(A,B,C,D): the trapezoid above glued to a width-1 strip on x in
//            [2,3] with sides C at x=2 and D at x=3 and top edge (2,C)-(3,D);
//            requires A+B odd and B <= C (the step up at x=2).
class StripTables {
public:
    explicit StripTables(int n_max);

    BigCount g1(long a, long b);
    BigCount g2(int A, int B);               // throws unless A+B odd
    BigCount hook(int A, int B, int C, int D);  // throws unless A+B odd, B<=C

    BigCount count_width1(int n);
    BigCount count_width2(int n);
    BigCount count_width3(int n);

private:
    const BigCount& binom(long n, long k) { return binomials_.at(n, k); }
    BigCount& g2_slot(int A, int B);  // symmetric, stored once under sorted key
    BigCount& hook_slot(int A, int B, int C, int D);

    int n_max_;
    BinomialTable binomials_;
    std::vector<BigCount> g2_memo_;    // (n+1)^2, -1 = unset
    std::vector<BigCount> hook_memo_;  // (n+1)^4, -1 = unset
};

// One-shot conveniences; each call builds its own tables, so concurrent
// calls for different n are independent.
BigCount count_width1(int n);
BigCount count_width2(int n);
BigCount count_width3(int n);
BigCount g1(long a, long b);

}  // namespace gridtri::strips
