#include <doctest.h>

#include "gridtri/shapes.hpp"
#include "gridtri/strips.hpp"
#include "oracle.hpp"

using namespace gridtri;
using strips::StripTables;

TEST_CASE("g1 is the binomial count of width-1 strips") {
    CHECK(strips::g1(0, 5) == 1);
    CHECK(strips::g1(2, 2) == 6);
    StripTables t(8);
    for (long a = 0; a <= 30; ++a) {
        for (long b = 0; b <= 30; ++b) CHECK(t.g1(a, b) == t.g1(b, a));
    }
}

TEST_CASE("width-1 counts") {
    CHECK(strips::count_width1(1) == 2);
    CHECK(strips::count_width1(2) == 6);
    CHECK(strips::count_width1(10) == 184756);
    CHECK(strips::count_width1(10) == shapes::count_by_dp(GridSpec(1, 10)));
}

TEST_CASE("g2 matches the brute-force trapezoid oracle on all small shapes") {
    StripTables t(9);
    CHECK(t.g2(0, 1) == oracle::count_polygon(oracle::trapezoid_cycle(0, 1)));
    // every trapezoid with at most 12 lattice points
    for (int A = 0; A <= 5; ++A) {
        for (int B = 0; B <= 5; ++B) {
            if ((A + B) % 2 != 1) continue;
            int points = (A + 1) + (B + 1) + 1;  // left side, right side, (1,0)
            if (points > 12) continue;
            CAPTURE(A);
            CAPTURE(B);
            CHECK(t.g2(A, B) == oracle::count_polygon(oracle::trapezoid_cycle(A, B)));
        }
    }
}

TEST_CASE("g2 is symmetric") {
    StripTables t(9);
    for (int A = 0; A <= 9; ++A) {
        for (int B = 0; B <= 9; ++B) {
            if ((A + B) % 2 != 1) continue;
            CHECK(t.g2(A, B) == t.g2(B, A));
        }
    }
    CHECK_THROWS(t.g2(1, 1));  // even sum is undefined in the decomposition
}

TEST_CASE("width-2 counts: known values and oracle agreement") {
    CHECK(strips::count_width2(2) == 64);
    CHECK(strips::count_width2(3) == 852);
    CHECK(strips::count_width2(4) == shapes::count_by_dp(GridSpec(2, 4)));
}

TEST_CASE("hook matches the brute-force oracle on all small hooks") {
    StripTables t(6);
    for (int A = 0; A <= 3; ++A) {
        for (int B = 1; B <= 3; ++B) {
            if ((A + B) % 2 != 1) continue;
            for (int C = B; C <= 3; ++C) {
                for (int D = 0; D <= 3; ++D) {
                    // lattice points per column of the hook region
                    int points = (A + 1) + ((A + B - 1) / 2 + 1) + (C + 1) + (D + 1);
                    if (points > 14) continue;
                    auto cycle = oracle::hook_cycle(A, B, C, D);
                    CAPTURE(A);
                    CAPTURE(B);
                    CAPTURE(C);
                    CAPTURE(D);
                    CHECK(t.hook(A, B, C, D) == oracle::count_polygon(cycle));
                }
            }
        }
    }
}

TEST_CASE("hook degenerations agree with g2") {
    StripTables t(9);
    // zero-area strip: the hook is exactly the trapezoid
    for (int A = 1; A <= 7; A += 2) CHECK(t.hook(A, 0, 0, 0) == t.g2(A, 0));
    // pinched at (2,0): the two parts triangulate independently
    for (int A = 1; A <= 5; A += 2) {
        for (int C = 1; C <= 4; ++C) {
            for (int D = 0; D <= 4; ++D) {
                CHECK(t.hook(A, 0, C, D) == t.g2(A, 0) * t.g1(C, D));
            }
        }
    }
    CHECK_THROWS(t.hook(1, 2, 1, 1));  // B > C
    CHECK_THROWS(t.hook(1, 1, 2, 2));  // even A+B
}

TEST_CASE("width-3 counts reproduce the reported values") {
    StripTables t(5);
    CHECK(t.count_width3(3) == 46456);
    CHECK(t.count_width3(4) == 2822648);
    CHECK(t.count_width3(5) == BigCount("182881520"));
}

TEST_CASE("strip counts against the shape dp (small range)") {
    StripTables t(8);
    for (int n = 1; n <= 6; ++n) {
        CHECK(t.count_width1(n) == shapes::count_by_dp(GridSpec(1, n)));
        CHECK(t.count_width2(n) == shapes::count_by_dp(GridSpec(2, n)));
    }
    for (int n = 1; n <= 4; ++n)
        CHECK(StripTables(4).count_width3(n) == shapes::count_by_dp(GridSpec(3, n)));
}

TEST_CASE("strip bounds: vertical-strip lower bound and the 2^e upper bound") {
    StripTables t(12);
    for (int n = 1; n <= 12; ++n) {
        BigCount c1 = t.count_width1(n), c2 = t.count_width2(n);
        CHECK(c2 >= c1 * c1);
        BigCount upper2 = BigCount(1) << static_cast<unsigned long>(3 * 2 * n - 2 - n);
        CHECK(c2 < upper2);
        if (n <= 9) {
            BigCount c3 = t.count_width3(n);
            CHECK(c3 >= c1 * c1 * c1);
            BigCount upper3 = BigCount(1) << static_cast<unsigned long>(3 * 3 * n - 3 - n);
            CHECK(c3 < upper3);
        }
    }
}

TEST_CASE("supermultiplicativity of width-2 counts") {
    StripTables t(12);
    for (int n1 = 1; n1 <= 6; ++n1) {
        for (int n2 = 1; n2 <= 6; ++n2) {
            if (n1 + n2 > 12) continue;
            CHECK(t.count_width2(n1 + n2) >= t.count_width2(n1) * t.count_width2(n2));
        }
    }
}
