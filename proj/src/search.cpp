#include "ekr/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace ekr {

std::string search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Witness: return "witness";
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::Capped: return "capped";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kMaxTableSize = 5'000'000;

// Colex rank of a d-subset given as a mask, via the u64 Pascal table.
std::uint64_t rank_mask(std::uint64_t bits) {
    std::uint64_t r = 0;
    int pos = 1;
    for (std::uint64_t b = bits; b; b &= b - 1, ++pos) r += binom_u64(std::countr_zero(b), pos);
    return r;
}

// Smallest k-bit mask that contains `base` and has exactly `inside` bits
// within `zone` (zone = the first member's mask at depth 2, the full ground
// set at depth 1). Preconditions checked by the caller via feasibility of the
// branch candidate itself.
std::uint64_t minimal_mask_with_signature(std::uint64_t base, std::uint64_t zone, int inside,
                                          int k, int n) {
    std::uint64_t ground = (n == 64) ? ~0ull : ((1ull << n) - 1);
    std::uint64_t mask = base;
    int need_in = inside - std::popcount(base & zone);
    int need_out = (k - inside) - std::popcount(base & ~zone);
    if (need_in < 0 || need_out < 0) return 0;  // signature infeasible
    std::uint64_t free_in = zone & ground & ~base;
    while (need_in-- > 0) {
        std::uint64_t b = free_in & ~(free_in - 1);
        if (b == 0) return 0;
        mask |= b;
        free_in &= free_in - 1;
    }
    std::uint64_t free_out = ~zone & ground & ~base;
    while (need_out-- > 0) {
        std::uint64_t b = free_out & ~(free_out - 1);
        if (b == 0) return 0;
        mask |= b;
        free_out &= free_out - 1;
    }
    return mask;
}

struct Searcher {
    int n, k, d;
    std::int64_t target;
    bool symmetry;
    std::optional<std::uint64_t> node_limit;
    bool has_deadline = false;
    Clock::time_point deadline;

    std::vector<std::uint64_t> cand_mask;             // candidate k-sets in colex order
    std::vector<std::vector<std::uint32_t>> cand_dsubs;  // d-subset ranks per candidate
    std::uint64_t num_dsets = 0;
    std::int64_t floor_size = 0;
    std::int64_t ekr_cap = -1;  // -1: no cap (n < 2k)

    std::vector<std::int64_t> deg, cnt;
    std::int64_t dead_dsets = 0;  // d-sets with deg + cnt < target; monotone along a path
    std::vector<std::uint32_t> chosen;
    std::optional<std::vector<std::uint32_t>> found;
    bool capped = false;
    std::uint64_t nodes = 0;
    std::map<std::string, std::uint64_t> cuts;

    // All feasibility margins deg[r] + cnt[r] - target only ever decrease
    // down a branch, so crossings are tracked exactly.
    void dec_cnt(std::uint32_t r) {
        if (deg[r] + cnt[r] == target) ++dead_dsets;
        --cnt[r];
    }
    void inc_cnt(std::uint32_t r) {
        ++cnt[r];
        if (deg[r] + cnt[r] == target) --dead_dsets;
    }
    void inc_deg(std::uint32_t r) {
        ++deg[r];
        if (deg[r] + cnt[r] == target) --dead_dsets;
    }
    void dec_deg(std::uint32_t r) {
        if (deg[r] + cnt[r] == target) ++dead_dsets;
        --deg[r];
    }

    bool dfs(const std::vector<std::uint32_t>& pool);
    bool leader_ok(std::uint64_t cand, std::uint64_t dset_mask) const;
};

bool Searcher::leader_ok(std::uint64_t cand, std::uint64_t dset_mask) const {
    // The first included member may be assumed minimal in its orbit under all
    // relabelings; the second under the stabilizer of the first. Both orbits
    // are "every k-set with the same intersection size with the fixed zone",
    // and each must still contain the branch d-set, so the candidate is a
    // leader iff it equals the smallest mask with its signature.
    std::uint64_t ground = (1ull << n) - 1;
    std::uint64_t zone = chosen.empty() ? ground : cand_mask[chosen[0]];
    int inside = std::popcount(cand & zone);
    std::uint64_t minimal = minimal_mask_with_signature(dset_mask, zone, inside, k, n);
    return minimal == 0 || minimal == cand;
}

bool Searcher::dfs(const std::vector<std::uint32_t>& pool) {
    ++nodes;
    if (node_limit && nodes > *node_limit) {
        capped = true;
        return true;
    }
    if (has_deadline && (nodes & 1023) == 0 && Clock::now() > deadline) {
        capped = true;
        return true;
    }

    // colex-least unsaturated d-set
    std::int64_t branch = -1;
    for (std::uint64_t r = 0; r < num_dsets; ++r)
        if (deg[r] < target) {
            branch = static_cast<std::int64_t>(r);
            break;
        }
    if (branch < 0) {
        found = chosen;
        return true;
    }

    if (static_cast<std::int64_t>(chosen.size() + pool.size()) < floor_size) {
        ++cuts["floor"];
        return false;
    }
    if (ekr_cap >= 0 && static_cast<std::int64_t>(chosen.size()) >= ekr_cap) {
        ++cuts["ekr"];
        return false;
    }
    if (dead_dsets > 0) {  // some d-set can no longer reach the target
        ++cuts["degree"];
        return false;
    }

    // colex-least pool candidate containing the branch d-set
    std::uint64_t dmask = unrank(n, d, static_cast<std::uint64_t>(branch)).bits();
    std::size_t pick = pool.size();
    for (std::size_t idx = 0; idx < pool.size(); ++idx) {
        if ((dmask & ~cand_mask[pool[idx]]) == 0) {
            pick = idx;
            break;
        }
    }
    if (pick == pool.size()) {
        ++cuts["degree"];
        return false;
    }
    std::uint32_t cand = pool[pick];

    // include branch
    bool blocked = false;
    if (symmetry && chosen.size() < 2) {
        blocked = !leader_ok(cand_mask[cand], dmask);
        if (blocked) ++cuts["symmetry"];
    }
    if (!blocked) {
        std::vector<std::uint32_t> next;
        next.reserve(pool.size());
        std::vector<std::uint32_t> removed;
        for (std::uint32_t u : pool) {
            if (u == cand || (cand_mask[u] & cand_mask[cand]) == 0)
                removed.push_back(u);
            else
                next.push_back(u);
        }
        for (std::uint32_t u : removed)
            for (std::uint32_t dr : cand_dsubs[u]) dec_cnt(dr);
        for (std::uint32_t dr : cand_dsubs[cand]) inc_deg(dr);
        chosen.push_back(cand);
        bool stop = dfs(next);
        chosen.pop_back();
        for (std::uint32_t dr : cand_dsubs[cand]) dec_deg(dr);
        for (std::uint32_t u : removed)
            for (std::uint32_t dr : cand_dsubs[u]) inc_cnt(dr);
        if (stop) return true;
    }

    // exclude branch
    std::vector<std::uint32_t> next;
    next.reserve(pool.size() - 1);
    for (std::uint32_t u : pool)
        if (u != cand) next.push_back(u);
    for (std::uint32_t dr : cand_dsubs[cand]) dec_cnt(dr);
    bool stop = dfs(next);
    for (std::uint32_t dr : cand_dsubs[cand]) inc_cnt(dr);
    return stop;
}

}  // namespace

SearchOutcome search_min_degree(const SearchProblem& p) {
    if (p.n < 1 || p.n > kMaxGroundSet) throw std::invalid_argument("search: n out of [1, 63]");
    if (!(0 <= p.d && p.d < p.k && p.k <= p.n))
        throw std::invalid_argument("search: need 0 <= d < k <= n");
    if (p.target < 1) throw std::invalid_argument("search: target must be >= 1");
    if (binom_u64(p.n, p.k) > kMaxTableSize || binom_u64(p.n, p.d) > kMaxTableSize)
        throw std::invalid_argument("search: instance too large (C(n,k) or C(n,d) over limit)");

    Searcher s;
    s.n = p.n;
    s.k = p.k;
    s.d = p.d;
    s.target = p.target;
    s.symmetry = p.symmetry_pruning;
    s.node_limit = p.node_limit;
    if (p.time_limit_s) {
        s.has_deadline = true;
        s.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                        std::chrono::duration<double>(*p.time_limit_s));
    }

    s.num_dsets = binom_u64(p.n, p.d);
    std::uint64_t num_cands = binom_u64(p.n, p.k);
    s.cand_mask.reserve(num_cands);
    s.cand_dsubs.reserve(num_cands);
    for (Subset ks : KSubsetRange(p.n, p.k)) {
        s.cand_mask.push_back(ks.bits());
        std::vector<std::uint32_t> subs;
        subs.reserve(binom_u64(p.k, p.d));
        std::vector<int> elems = ks.elements();
        for (Subset sel : KSubsetRange(p.k, p.d)) {
            std::uint64_t bits = 0;
            for (int pos : sel.elements()) bits |= 1ull << (elems[pos - 1] - 1);
            subs.push_back(static_cast<std::uint32_t>(rank_mask(bits)));
        }
        std::sort(subs.begin(), subs.end());
        s.cand_dsubs.push_back(std::move(subs));
    }

    BigInt floor_num = BigInt(p.target) * binom(p.n, p.d) + binom(p.k, p.d) - 1;
    BigInt floor_big = floor_num / binom(p.k, p.d);
    s.floor_size = floor_big.fits_slong_p() ? floor_big.get_si()
                                            : std::numeric_limits<std::int64_t>::max();
    s.ekr_cap = (p.n >= 2 * p.k) ? static_cast<std::int64_t>(binom_u64(p.n - 1, p.k - 1)) : -1;

    s.deg.assign(s.num_dsets, 0);
    s.cnt.assign(s.num_dsets, 0);
    std::vector<std::uint32_t> pool(num_cands);
    for (std::uint64_t i = 0; i < num_cands; ++i) {
        pool[i] = static_cast<std::uint32_t>(i);
        for (std::uint32_t dr : s.cand_dsubs[i]) ++s.cnt[dr];
    }
    for (std::uint64_t r = 0; r < s.num_dsets; ++r)
        if (s.cnt[r] < s.target) ++s.dead_dsets;

    s.dfs(pool);

    SearchOutcome out;
    out.nodes_explored = s.nodes;
    out.bound_cuts = std::move(s.cuts);
    if (s.found) {
        std::vector<Subset> members;
        members.reserve(s.found->size());
        for (std::uint32_t id : *s.found) members.push_back(Subset(s.cand_mask[id], p.n));
        SetFamily witness(p.n, std::move(members));
        // independent re-verification through the families module
        if (!is_intersecting(witness) || min_degree(witness, p.d).value < p.target)
            throw std::logic_error("search: witness failed re-verification");
        out.status = SearchStatus::Witness;
        out.witness = std::move(witness);
    } else if (s.capped) {
        out.status = SearchStatus::Capped;
    } else {
        out.status = SearchStatus::Exhausted;
    }
    return out;
}

std::vector<TheoremScanEntry> scan_theorem(int n_max, int k_max, int d_max,
                                           std::uint64_t binom_cap) {
    std::vector<TheoremScanEntry> entries;
    for (int d = 2; d <= d_max; ++d)
        for (int k = d + 1; k <= k_max; ++k)
            for (int n = 2 * k; n <= std::min(n_max, kMaxGroundSet); ++n) {
                if (binom_u64(n, k) > binom_cap) continue;
                TheoremScanEntry e{n, k, d, ekr_degree_bound(n, k, d), {}, false};
                e.in_theorem_range = (n >= 2 * k + 2 * d - 3);
                SearchProblem p;
                p.n = n;
                p.k = k;
                p.d = d;
                BigInt target = e.bound + 1;
                if (!target.fits_slong_p())
                    throw std::invalid_argument("scan_theorem: target out of range");
                p.target = target.get_si();
                e.outcome = search_min_degree(p);
                if (e.in_theorem_range && e.outcome.status == SearchStatus::Witness)
                    throw std::logic_error("scan_theorem: witness inside theorem range at n=" +
                                           std::to_string(n) + " k=" + std::to_string(k) +
                                           " d=" + std::to_string(d));
                entries.push_back(std::move(e));
            }
    return entries;
}

}  // namespace ekr
