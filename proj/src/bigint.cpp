#include "gridtri/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace gridtri {

std::string to_decimal(const BigCount& v) {
    return v.get_str(10);
}

const BigCount& BinomialTable::at(long n, long k) {
    if (n < 0 || k < 0 || k > n) return zero_;
    while (static_cast<long>(rows_.size()) <= n) {
        long r = static_cast<long>(rows_.size());
        std::vector<BigCount> row(r + 1);
        row[0] = 1;
        row[r] = 1;
        for (long j = 1; j < r; ++j) row[j] = rows_[r - 1][j - 1] + rows_[r - 1][j];
        rows_.push_back(std::move(row));
    }
    return rows_[n][k];
}

double log2_big(const BigCount& v) {
    if (sgn(v) <= 0) throw std::invalid_argument("log2_big: argument must be positive");
    size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);  // == floor(log2 v) + 1
    if (bits <= 64) {
        unsigned long long x = mpz_get_ui(v.get_mpz_t());
        if (bits > 8 * sizeof(unsigned long)) {  // 32-bit ulong platforms
            BigCount hi = v >> 32;
            x = (static_cast<unsigned long long>(mpz_get_ui(hi.get_mpz_t())) << 32) |
                mpz_get_ui(BigCount(v & 0xffffffff).get_mpz_t());
        }
        return std::log2(static_cast<double>(x));
    }
    BigCount top = v >> static_cast<unsigned long>(bits - 64);
    unsigned long long x = 0;
    {
        BigCount hi = top >> 32;
        BigCount lo = top & 0xffffffff;
        x = (static_cast<unsigned long long>(mpz_get_ui(hi.get_mpz_t())) << 32) |
            mpz_get_ui(lo.get_mpz_t());
    }
    return static_cast<double>(bits - 64) + std::log2(static_cast<double>(x));
}

}  // namespace gridtri
