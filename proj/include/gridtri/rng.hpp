#pragma once

#include <cstdint>
#include <random>

namespace gridtri {

// Deterministic RNG used everywhere randomness is needed. Algorithm:
// std::mt19937_64 seeded directly; bounded draws use Lemire's unbiased
// multiply-shift rejection, so streams are identical across platforms
// (std::uniform_int_distribution is implementation-defined and avoided).
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // uniform in [0, n), n >= 1, unbiased
    uint64_t below(uint64_t n) {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
        uint64_t lo = static_cast<uint64_t>(m);
        if (lo < n) {
            uint64_t threshold = (0 - n) % n;  // 2^64 mod n
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next()) * n;
                lo = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    bool coin() { return (next() & 1) != 0; }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // independent child stream
    Rng split() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

private:
    std::mt19937_64 eng_;
};

constexpr uint64_t kDefaultSeed = 1;

}  // namespace gridtri
