#include "gridtri/strips.hpp"

#include <stdexcept>

namespace gridtri::strips {

StripTables::StripTables(int n_max) : n_max_(n_max) {
    if (n_max < 1 || n_max > 400) throw std::invalid_argument("StripTables: n_max out of range");
    size_t d = static_cast<size_t>(n_max_) + 1;
    g2_memo_.assign(d * d, BigCount(-1));
    // the 4-parameter hook table is allocated on first use; see hook_slot
}

BigCount StripTables::g1(long a, long b) {
    if (a < 0 || b < 0) throw std::invalid_argument("g1: negative side");
    return binom(a + b, a);
}

BigCount& StripTables::g2_slot(int A, int B) {
    if (A > B) std::swap(A, B);
    return g2_memo_[static_cast<size_t>(A) * (n_max_ + 1) + B];
}

BigCount& StripTables::hook_slot(int A, int B, int C, int D) {
    size_t d = static_cast<size_t>(n_max_) + 1;
    if (hook_memo_.empty()) {
        // dense (n+1)^4 table; beyond n=50 it would not fit in memory
        if (n_max_ > 50)
            throw std::invalid_argument("hook: the width-3 recursion table is capped at n=50");
        hook_memo_.assign(d * d * d * d, BigCount(-1));
    }
    return hook_memo_[((static_cast<size_t>(A) * d + B) * d + C) * d + D];
}

BigCount StripTables::g2(int A, int B) {
    if (A < 0 || B < 0 || A > n_max_ || B > n_max_)
        throw std::invalid_argument("g2: argument out of range");
    if ((A + B) % 2 != 1)
        throw std::invalid_argument("g2: A+B must be odd (diagonal midpoint non-lattice)");
    BigCount& slot = g2_slot(A, B);
    if (slot >= 0) return slot;

    // recursion over the highest width-2 diagonal strictly below the top
    BigCount total = binom((3LL * A + B - 1) / 2, A) * binom((A + 3LL * B - 1) / 2, B);
    for (int a = 0; a <= A; ++a) {
        for (int b = 0; b <= B; ++b) {
            if ((a + b) % 2 != 1 || a + b >= A + B) continue;
            total += g2(a, b) * binom((3LL * A + B - 3 * a - b) / 2 - 1, A - a) *
                     binom((A + 3LL * B - a - 3 * b) / 2 - 1, B - b);
        }
    }
    slot = total;
    return slot;
}

BigCount StripTables::hook(int A, int B, int C, int D) {
    if (A < 0 || B < 0 || C < 0 || D < 0 || A > n_max_ || B > n_max_ || C > n_max_ || D > n_max_)
        throw std::invalid_argument("hook: argument out of range");
    if ((A + B) % 2 != 1) throw std::invalid_argument("hook: A+B must be odd");
    if (B > C) throw std::invalid_argument("hook: requires B <= C");
    BigCount& slot = hook_slot(A, B, C, D);
    if (slot >= 0) return slot;

    // no width>=2 edge below the top diagonal
    BigCount total = binom((3LL * A + B - 1) / 2, A) * binom((A + 3LL * B - 1) / 2, B) *
                     binom(static_cast<long>(C) + D, C);

    // next such edge spans x in [0,2]
    for (int a = 0; a <= A; ++a) {
        for (int b = 0; b <= B; ++b) {
            if ((a + b) % 2 != 1 || a + b >= A + B) continue;
            total += hook(a, b, C, D) * binom((3LL * A + B - 3 * a - b) / 2 - 1, A - a) *
                     binom((A + 3LL * B - a - 3 * b) / 2 - 1, B - b);
        }
    }

    // next such edge spans x in [1,3]; the remaining region is the mirrored
    // hook with strip sides (A+B-1)/2 and A
    int half = (A + B - 1) / 2;
    for (int a = 0; a <= D; ++a) {
        for (int b = 0; b <= half; ++b) {
            if ((a + b) % 2 != 1 || (a + b + 1) / 2 > B) continue;
            total += hook(a, b, half, A) *
                     binom(static_cast<long>(D) + C - (3LL * a + b + 1) / 2, D - a) *
                     binom((A + 3LL * B - a - 3 * b) / 2 - 1, B - (a + b + 1) / 2);
        }
    }

    // long diagonal of width 3; fires only when its second endpoint lies
    // within the hook
    long y3 = (3LL * B - A - 1) / 2;
    if (D >= y3 && y3 >= 0) {
        total += hook(static_cast<int>(y3), half, half, A) *
                 binom(static_cast<long>(C) + D - (5LL * B - A - 1) / 2, C - B);
    }

    slot = total;
    return slot;
}

BigCount StripTables::count_width1(int n) {
    if (n < 1) throw std::invalid_argument("count_width1: n must be positive");
    return binom(2L * n, n);
}

BigCount StripTables::count_width2(int n) {
    if (n < 1 || n > n_max_) throw std::invalid_argument("count_width2: n out of range");
    BigCount total = binom(2L * n, n) * binom(2L * n, n);
    BigCount side = 0;
    for (int A = 0; A < n; ++A) {
        for (int B = A + 1; B <= n; ++B) {
            if ((A + B) % 2 != 1) continue;
            side += g2(A, B) * binom(2L * n - (3LL * A + B + 1) / 2, n - A) *
                    binom(2L * n - (A + 3LL * B + 1) / 2, n - B);
        }
    }
    return total + 2 * side;
}

BigCount StripTables::count_width3(int n) {
    if (n < 1 || n > n_max_) throw std::invalid_argument("count_width3: n out of range");
    BigCount c = binom(2L * n, n);
    BigCount total = c * c * c;
    BigCount side = 0;
    for (int A = 0; A <= n; ++A) {
        for (int B = 0; B <= n; ++B) {
            if ((A + B) % 2 != 1) continue;
            side += hook(A, B, n, n) * binom(2L * n - (3LL * A + B + 1) / 2, n - A) *
                    binom(2L * n - (A + 3LL * B + 1) / 2, n - B);
        }
    }
    return total + 2 * side;
}

BigCount count_width1(int n) {
    return StripTables(std::max(1, n)).count_width1(n);
}

BigCount count_width2(int n) {
    return StripTables(std::max(1, n)).count_width2(n);
}

BigCount count_width3(int n) {
    return StripTables(std::max(1, n)).count_width3(n);
}

BigCount g1(long a, long b) {
    BinomialTable t;
    if (a < 0 || b < 0) throw std::invalid_argument("g1: negative side");
    return t.at(a + b, a);
}

}  // namespace gridtri::strips
