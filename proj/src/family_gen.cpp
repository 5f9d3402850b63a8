#include "ekr/family_gen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ekr {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SplitMix64::below: bound must be positive");
    std::uint64_t limit = ~0ull - (~0ull % bound);
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

namespace {

Subset random_k_subset(int n, int k, SplitMix64& rng) {
    std::uint64_t bits = 0;
    int picked = 0;
    while (picked < k) {
        std::uint64_t b = 1ull << rng.below(static_cast<std::uint64_t>(n));
        if (!(bits & b)) {
            bits |= b;
            ++picked;
        }
    }
    return Subset(bits, n);
}

}  // namespace

SetFamily random_uniform_family(int n, int k, std::size_t target_size, SplitMix64& rng) {
    std::uint64_t total = binom_u64(n, k);
    std::size_t want = std::min<std::size_t>(target_size, total);
    std::set<Subset> chosen;
    while (chosen.size() < want) chosen.insert(random_k_subset(n, k, rng));
    return SetFamily(n, std::vector<Subset>(chosen.begin(), chosen.end()));
}

SetFamily random_intersecting_family(int n, int k, SplitMix64& rng) {
    if (k < 1 || k > n) throw std::invalid_argument("random_intersecting_family: need 1 <= k <= n");
    int center = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    SetFamily base = star(n, k, Subset::of(n, {center}));

    // keep ~3/4 of the star
    std::set<Subset> chosen;
    for (const Subset& s : base.members())
        if (rng.below(4) != 0) chosen.insert(s);
    if (chosen.empty()) chosen.insert(base.members()[rng.below(base.size())]);

    // try a few random sets avoiding the center; keep those meeting everything
    std::uint64_t attempts = 2 * static_cast<std::uint64_t>(base.size()) + 8;
    for (std::uint64_t t = 0; t < attempts; ++t) {
        Subset cand = random_k_subset(n, k, rng);
        if (cand.contains(center) || chosen.count(cand)) continue;
        bool ok = std::all_of(chosen.begin(), chosen.end(),
                              [&cand](const Subset& s) { return s.intersects(cand); });
        if (ok) chosen.insert(cand);
    }
    return SetFamily(n, std::vector<Subset>(chosen.begin(), chosen.end()));
}

}  // namespace ekr
