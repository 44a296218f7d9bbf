#pragma once

#include <cstdint>
#include <random>

namespace expander {

// Seeded pseudo-random source. All randomized operations in this library take
// an explicit Rng so that a fixed seed reproduces a run bit for bit. Bounded
// draws use rejection sampling instead of std::uniform_int_distribution, whose
// output is implementation-defined and would break reproducibility across
// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(split_mix(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    static std::uint64_t split_mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

// Independent stream for a given (master seed, stream index) pair, used to run
// chains concurrently without sharing generator state.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return master ^ ((stream + 1) * 0x9e3779b97f4a7c15ULL);
}

}  // namespace expander
