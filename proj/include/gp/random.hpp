#pragma once

#include <cstdint>

#include "gp/graph.hpp"

namespace gp {

// SplitMix64: the fixed 64-bit mixing generator behind every seeded sampler,
// chosen so corpora reproduce bit-for-bit across languages and platforms.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) from the top 53 bits.
    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }

    // Uniform-ish in [0, bound) by modulo reduction (documented, bias is
    // negligible at the bounds used here).
    uint32_t next_below(uint32_t bound) { return uint32_t(next() % bound); }

private:
    uint64_t state_;
};

// G(n, p) conditioned on connectivity by rejection resampling; deterministic
// for fixed (n, p, seed). Fails with a cap error when 1000 attempts all come
// out disconnected.
Graph random_connected_graph(int n, double p, uint64_t seed);

// Uniform random labeled tree by decoding a random sequence of n-2 labels
// into edges (Pruefer decoding).
Graph random_tree(int n, uint64_t seed);

} // namespace gp
