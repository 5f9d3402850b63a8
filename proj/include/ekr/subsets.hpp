#pragma once

// Combinatorial primitives: subsets of [n] as 64-bit masks (n <= 63),
// big-integer binomials and falling factorials, and the colexicographic
// bijection between k-subsets and {0, ..., C(n,k)-1}.
//
// Colex order on subsets compares the largest element of the symmetric
// difference; on bitmasks this is plain numeric order, which is why masks
// are the canonical representation everywhere in this library.

#include "ekr/numbers.hpp"

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ekr {

inline constexpr int kMaxGroundSet = 63;

/// A subset of [n] = {1, ..., n}. Bit i-1 of `bits` is set iff i is in S.
class Subset {
  public:
    Subset() : bits_(0), n_(0) {}
    Subset(std::uint64_t bits, int n);

    /// Builds {e1, e2, ...} over [n]; elements are 1-based and validated.
    static Subset of(int n, std::initializer_list<int> elems);
    static Subset of(int n, const std::vector<int>& elems);
    static Subset empty(int n) { return Subset(0, n); }
    static Subset full(int n);

    std::uint64_t bits() const { return bits_; }
    int ground_set() const { return n_; }
    int cardinality() const { return std::popcount(bits_); }

    bool contains(int elem) const { return (bits_ >> (elem - 1)) & 1u; }
    bool subset_of(const Subset& t) const { return (bits_ & ~t.bits_) == 0; }
    bool intersects(const Subset& t) const { return (bits_ & t.bits_) != 0; }
    bool disjoint(const Subset& t) const { return (bits_ & t.bits_) == 0; }

    /// Elements in increasing order, 1-based.
    std::vector<int> elements() const;
    /// "{1,2,3}" (or "{}").
    std::string str() const;

    friend bool operator==(const Subset&, const Subset&) = default;
    /// Colex order = numeric order of masks.
    friend auto operator<=>(const Subset& a, const Subset& b) { return a.bits_ <=> b.bits_; }

  private:
    std::uint64_t bits_;
    std::uint8_t n_;
};

/// C(n,k) as a big integer; 0 when k < 0 or k > n. Memoized in a Pascal
/// triangle grown on demand (thread-safe).
BigInt binom(long n, long k);

/// C(n,k) in a machine word; valid for the subset range n <= 63 where every
/// binomial fits in 63 bits.
std::uint64_t binom_u64(int n, int k);

/// Falling factorial x(x-1)...(x-i+1); 1 when i = 0. x may be negative.
BigInt falling(long x, long i);

/// Colex rank of a k-subset: sum of C(c-1, pos) over elements c at 1-based
/// positions pos in increasing order. Inverse of unrank.
std::uint64_t rank(const Subset& s);
Subset unrank(int n, int k, std::uint64_t r);

/// Iterates the C(n,k) k-subsets of [n] in colex order (= increasing mask
/// order, via Gosper's hack).
class KSubsetRange {
  public:
    KSubsetRange(int n, int k);

    class iterator {
      public:
        iterator(std::uint64_t mask, int n, bool done) : mask_(mask), n_(n), done_(done) {}
        Subset operator*() const { return Subset(mask_, n_); }
        iterator& operator++();
        bool operator!=(const iterator& o) const {
            return done_ != o.done_ || (!done_ && mask_ != o.mask_);
        }

      private:
        std::uint64_t mask_;
        int n_;
        bool done_;
    };

    iterator begin() const;
    iterator end() const;
    int n() const { return n_; }
    int k() const { return k_; }

  private:
    int n_, k_;
};

std::vector<Subset> all_k_subsets(int n, int k);

}  // namespace ekr
