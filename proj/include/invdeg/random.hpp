#pragma once

#include <cstdint>
#include <random>

namespace invdeg {

/// Seeded 64-bit Mersenne twister with a portable integer mapping, so the
/// same seed yields the same draws on every standard library.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish integer in [lo, hi] (modulo mapping; bias is irrelevant here).
    long uniform(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(engine_() % span);
    }

    long nonzero(long lo, long hi)
    {
        for (;;) {
            const long v = uniform(lo, hi);
            if (v != 0)
                return v;
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace invdeg
