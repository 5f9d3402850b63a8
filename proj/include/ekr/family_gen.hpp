#pragma once

// Seeded family generators for randomized property checks. A hand-rolled
// splitmix64 keeps draws identical across platforms and standard libraries,
// so frozen expected values in tests stay valid.

#include "ekr/families.hpp"

#include <cstdint>

namespace ekr {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);

  private:
    std::uint64_t state_;
};

/// A uniform k-family of roughly target_size distinct members (duplicates
/// redrawn; never exceeds C(n,k)).
SetFamily random_uniform_family(int n, int k, std::size_t target_size, SplitMix64& rng);

/// Star perturbation: a random sub-star plus random compatible non-star sets,
/// yielding an intersecting k-uniform family.
SetFamily random_intersecting_family(int n, int k, SplitMix64& rng);

}  // namespace ekr
