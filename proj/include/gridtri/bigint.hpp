#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gridtri {

// Exact nonnegative counts. All counting results in this library are BigCount;
// no operation may overflow or round.
using BigCount = mpz_class;
using Rat = mpq_class;

std::string to_decimal(const BigCount& v);

// Pascal-triangle cache. Rows are grown on demand; binom(n,k) is 0 outside
// 0 <= k <= n.
class BinomialTable {
public:
    const BigCount& at(long n, long k);

private:
    std::vector<std::vector<BigCount>> rows_;
    BigCount zero_{0};
};

// log2 of a positive BigCount via bit length plus the top 64 bits.
// Absolute error is far below 1e-9.
double log2_big(const BigCount& v);

}  // namespace gridtri
