#pragma once

// Seedable, portable random generator used everywhere determinism matters.
// PCG32 (Melissa O'Neill's pcg32_random_r recurrence) with explicit stream
// selection, so the same (seed, stream) pair yields the same byte-identical
// draws on every platform and compiler. std:: distributions are deliberately
// avoided: their outputs are implementation-defined.
//
// Stream convention for dataset augmentation:
//   engine = Pcg32(derive_seed(master_seed), stream_id(condition_code, image_index))

#include <cstdint>

namespace pavc {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master) {
    std::uint64_t s = master;
    return splitmix64(s);
}

inline std::uint64_t stream_id(std::uint32_t group, std::uint32_t index) {
    return (static_cast<std::uint64_t>(group) << 32) | index;
}

class Pcg32 {
public:
    explicit Pcg32(std::uint64_t seed = 0x853C49E6748FEA9BULL, std::uint64_t stream = 0) {
        state_ = 0;
        inc_ = (stream << 1u) | 1u;
        next_u32();
        state_ += seed;
        next_u32();
    }

    std::uint32_t next_u32() {
        std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    // Unbiased bounded draw (Lemire's multiply-shift with rejection).
    std::uint32_t next_below(std::uint32_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t m = static_cast<std::uint64_t>(next_u32()) * bound;
        auto low = static_cast<std::uint32_t>(m);
        if (low < bound) {
            std::uint32_t threshold = (0u - bound) % bound;
            while (low < threshold) {
                m = static_cast<std::uint64_t>(next_u32()) * bound;
                low = static_cast<std::uint32_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 32);
    }

    // Inclusive integer range.
    int next_int(int lo, int hi) {
        return lo + static_cast<int>(next_below(static_cast<std::uint32_t>(hi - lo + 1)));
    }

    // Uniform in [0, 1) with 32 bits of resolution.
    double next_double() { return next_u32() * (1.0 / 4294967296.0); }

    double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

} // namespace pavc
