#pragma once

#include "estrada/graph.hpp"

#include <cstdint>

namespace estrada {

/// SplitMix64. The algorithm is fixed so that seeded runs reproduce exactly
/// on every platform (the std distributions are implementation-defined).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound > 0, by rejection.
    std::uint64_t below(std::uint64_t bound) noexcept
    {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform in [lo, hi].
    int between(int lo, int hi) noexcept
    {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

/// Uniform labelled tree on n >= 1 vertices via a random Pruefer sequence.
Graph random_tree(SplitMix64& rng, int n);

/// Erdos-Renyi style graph: each pair present with probability
/// per_mille / 1000.
Graph random_graph(SplitMix64& rng, int n, int per_mille);

/// Random tree on n vertices plus `extra` random edges between its two
/// colour classes; always bipartite and connected.
Graph random_bipartite_graph(SplitMix64& rng, int n, int extra);

} // namespace estrada
