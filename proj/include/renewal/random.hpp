#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace renewal {

namespace detail {

// Philox-4x64, 10 rounds (Salmon, Moraes, Dror, Shaw: "Parallel random
// numbers: as easy as 1, 2, 3", SC'11; same constants as numpy's Philox
// bit generator). One block is a pure function of (key, counter), which is
// what makes streams splittable and replayable.
inline std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> ctr,
                                               std::array<std::uint64_t, 2> key) noexcept {
    constexpr std::uint64_t m0 = 0xD2E7470EE14C6C93ull;
    constexpr std::uint64_t m1 = 0xCA5A826395121157ull;
    constexpr std::uint64_t w0 = 0x9E3779B97F4A7C15ull;
    constexpr std::uint64_t w1 = 0xBB67AE8584CAA73Bull;

    // scalar locals keep the whole state in registers
    std::uint64_t x0 = ctr[0], x1 = ctr[1], x2 = ctr[2], x3 = ctr[3];
    std::uint64_t k0 = key[0], k1 = key[1];
#pragma GCC unroll 10
    for (int round = 0; round < 10; ++round) {
        const unsigned __int128 p0 = static_cast<unsigned __int128>(m0) * x0;
        const unsigned __int128 p1 = static_cast<unsigned __int128>(m1) * x2;
        const std::uint64_t t0 = static_cast<std::uint64_t>(p1 >> 64) ^ x1 ^ k0;
        const std::uint64_t t1 = static_cast<std::uint64_t>(p1);
        const std::uint64_t t2 = static_cast<std::uint64_t>(p0 >> 64) ^ x3 ^ k1;
        const std::uint64_t t3 = static_cast<std::uint64_t>(p0);
        x0 = t0;
        x1 = t1;
        x2 = t2;
        x3 = t3;
        k0 += w0;
        k1 += w1;
    }
    return {x0, x1, x2, x3};
}

// Ziggurat layer tables for a decreasing density on [0, inf), built once at
// startup (see random.cpp). x is decreasing with x[0] the base pseudo-width
// and x[kLayers] = 0; f[j] = density(x[j]) increases to 1.
inline constexpr int kZigLayers = 256;

struct ZigguratTable {
    double x[kZigLayers + 1];
    double f[kZigLayers + 1];
    double r;  // base layer boundary
};

extern const ZigguratTable kZigExponential;
extern const ZigguratTable kZigNormal;

}  // namespace detail

// Counter-based stream: the key is (seed, stream index) and the counter
// advances block by block. substream(seed, i) and substream(seed, j) are
// statistically independent for i != j, and a stream replays identically
// no matter which thread runs it.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : key_{seed, stream} {}

    static RandomStream substream(std::uint64_t seed, std::uint64_t index) noexcept {
        return RandomStream(seed, index);
    }

    std::uint64_t next_u64() noexcept {
        if (pos_ == 4) {
            block_ = detail::philox4x64({counter_++, 0, 0, 0}, key_);
            pos_ = 0;
        }
        return block_[pos_++];
    }

    // uniform on [0, 1), 53-bit resolution
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform on (0, 1]
    double next_open_closed() noexcept {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // standard exponential by ziggurat; the tail restarts beyond r
    // (memorylessness), the slow lane re-tests under the true density
    double next_exponential() noexcept {
        const auto& z = detail::kZigExponential;
        for (;;) {
            const std::uint64_t bits = next_u64();
            const int j = static_cast<int>(bits & (detail::kZigLayers - 1));
            const double x = static_cast<double>(bits >> 12) * 0x1.0p-52 * z.x[j];
            if (x < z.x[j + 1]) return x;
            if (j == 0) return z.r + next_exponential();
            if (z.f[j] + next_double() * (z.f[j + 1] - z.f[j]) < std::exp(-x)) return x;
        }
    }

    // standard normal by ziggurat with Marsaglia's tail algorithm
    double next_gaussian() noexcept {
        const auto& z = detail::kZigNormal;
        for (;;) {
            const std::uint64_t bits = next_u64();
            const int j = static_cast<int>(bits & (detail::kZigLayers - 1));
            const bool neg = bits & 0x100;
            const double x = static_cast<double>(bits >> 12) * 0x1.0p-52 * z.x[j];
            if (x < z.x[j + 1]) return neg ? -x : x;
            if (j == 0) {
                double xx, yy;
                do {
                    xx = next_exponential() / z.r;
                    yy = next_exponential();
                } while (yy + yy < xx * xx);
                return neg ? -(z.r + xx) : z.r + xx;
            }
            if (z.f[j] + next_double() * (z.f[j + 1] - z.f[j]) < std::exp(-0.5 * x * x)) {
                return neg ? -x : x;
            }
        }
    }

private:
    std::array<std::uint64_t, 2> key_;
    std::uint64_t counter_ = 0;
    std::array<std::uint64_t, 4> block_{};
    int pos_ = 4;
};

}  // namespace renewal
