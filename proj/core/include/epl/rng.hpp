#pragma once

#include <cstdint>

namespace epl {

/// PCG32 generator (O'Neill's pcg32_srandom scheme). Chosen for the
/// ensemble because (seed, stream) pairs give cheap independent substreams
/// with identical output on every platform, which keeps parallel runs
/// bit-reproducible.
class Pcg32 {
public:
    Pcg32(std::uint64_t seed, std::uint64_t stream) {
        state_ = 0u;
        inc_ = (stream << 1u) | 1u;
        next();
        state_ += seed;
        next();
    }

    std::uint32_t next() {
        std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        std::uint32_t xorshifted =
            static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    /// Uniform draw on the open interval (0,1); never returns 0 or 1.
    double uniform() {
        return (static_cast<double>(next()) + 0.5) * 0x1p-32;
    }

private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

}  // namespace epl
