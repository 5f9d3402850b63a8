#include "ekr/subsets.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace ekr {

Subset::Subset(std::uint64_t bits, int n) : bits_(bits), n_(static_cast<std::uint8_t>(n)) {
    if (n < 0 || n > kMaxGroundSet)
        throw std::invalid_argument("Subset: ground set size must be in [0, 63]");
    if (n < 64 && (bits >> n) != 0)
        throw std::invalid_argument("Subset: element outside ground set [" + std::to_string(n) + "]");
}

Subset Subset::of(int n, std::initializer_list<int> elems) {
    return of(n, std::vector<int>(elems));
}

Subset Subset::of(int n, const std::vector<int>& elems) {
    std::uint64_t bits = 0;
    for (int e : elems) {
        if (e < 1 || e > n)
            throw std::invalid_argument("Subset: element " + std::to_string(e) +
                                        " outside [1, " + std::to_string(n) + "]");
        std::uint64_t bit = 1ull << (e - 1);
        if (bits & bit)
            throw std::invalid_argument("Subset: duplicate element " + std::to_string(e));
        bits |= bit;
    }
    return Subset(bits, n);
}

Subset Subset::full(int n) {
    if (n < 0 || n > kMaxGroundSet) throw std::invalid_argument("Subset: n out of range");
    return Subset(n == 0 ? 0 : (~0ull >> (64 - n)), n);
}

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (std::uint64_t b = bits_; b; b &= b - 1)
        out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string Subset::str() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

namespace {

// Pascal triangle of mpz values, grown row-wise on demand.
class PascalTable {
  public:
    BigInt get(long n, long k) {
        {
            std::shared_lock lock(mu_);
            if (static_cast<std::size_t>(n) < rows_.size()) return rows_[n][k];
        }
        std::unique_lock lock(mu_);
        while (rows_.size() <= static_cast<std::size_t>(n)) {
            std::size_t r = rows_.size();
            std::vector<BigInt> row(r + 1);
            row[0] = 1;
            row[r] = 1;
            for (std::size_t j = 1; j < r; ++j) row[j] = rows_[r - 1][j - 1] + rows_[r - 1][j];
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

  private:
    std::shared_mutex mu_;
    std::vector<std::vector<BigInt>> rows_;
};

PascalTable& pascal() {
    static PascalTable table;
    return table;
}

struct U64Table {
    std::uint64_t c[kMaxGroundSet + 1][kMaxGroundSet + 1];
    U64Table() {
        for (int n = 0; n <= kMaxGroundSet; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = (k == n) ? 1 : c[n - 1][k - 1] + c[n - 1][k];
            for (int k = n + 1; k <= kMaxGroundSet; ++k) c[n][k] = 0;
        }
    }
};

}  // namespace

BigInt binom(long n, long k) {
    if (n < 0) throw std::invalid_argument("binom: n must be non-negative");
    if (k < 0 || k > n) return 0;
    return pascal().get(n, k);
}

std::uint64_t binom_u64(int n, int k) {
    static const U64Table table;
    if (n < 0 || n > kMaxGroundSet) throw std::invalid_argument("binom_u64: n out of [0, 63]");
    if (k < 0 || k > n) return 0;
    return table.c[n][k];
}

BigInt falling(long x, long i) {
    if (i < 0) throw std::invalid_argument("falling: i must be non-negative");
    BigInt p = 1;
    for (long j = 0; j < i; ++j) p *= BigInt(x - j);
    return p;
}

std::uint64_t rank(const Subset& s) {
    std::uint64_t r = 0;
    int pos = 1;
    for (std::uint64_t b = s.bits(); b; b &= b - 1, ++pos) {
        int c = std::countr_zero(b) + 1;
        r += binom_u64(c - 1, pos);
    }
    return r;
}

Subset unrank(int n, int k, std::uint64_t r) {
    if (n < 0 || n > kMaxGroundSet || k < 0 || k > n)
        throw std::invalid_argument("unrank: need 0 <= k <= n <= 63");
    if (r >= binom_u64(n, k)) throw std::out_of_range("unrank: rank out of range");
    std::uint64_t bits = 0;
    for (int pos = k; pos >= 1; --pos) {
        int c = pos;
        while (c + 1 <= n && binom_u64(c, pos) <= r) ++c;
        bits |= 1ull << (c - 1);
        r -= binom_u64(c - 1, pos);
    }
    return Subset(bits, n);
}

KSubsetRange::KSubsetRange(int n, int k) : n_(n), k_(k) {
    if (n < 0 || n > kMaxGroundSet || k < 0 || k > n)
        throw std::invalid_argument("KSubsetRange: need 0 <= k <= n <= 63");
}

KSubsetRange::iterator& KSubsetRange::iterator::operator++() {
    if (mask_ == 0) {  // the k = 0 range has the single member {}
        done_ = true;
        return *this;
    }
    std::uint64_t v = mask_;
    std::uint64_t t = v | (v - 1);
    std::uint64_t next = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    if (n_ < 64 && (next >> n_) != 0) {
        done_ = true;
    } else {
        mask_ = next;
    }
    return *this;
}

KSubsetRange::iterator KSubsetRange::begin() const {
    std::uint64_t first = (k_ == 0) ? 0 : (~0ull >> (64 - k_));
    return iterator(first, n_, false);
}

KSubsetRange::iterator KSubsetRange::end() const {
    std::uint64_t first = (k_ == 0) ? 0 : (~0ull >> (64 - k_));
    return iterator(first, n_, true);
}

std::vector<Subset> all_k_subsets(int n, int k) {
    std::vector<Subset> out;
    out.reserve(binom_u64(n, k));
    for (Subset s : KSubsetRange(n, k)) out.push_back(s);
    return out;
}

}  // namespace ekr
