#pragma once

// Set families over [n]: construction, degree counting, intersecting checks,
// the cataloged example families, and JSON file I/O.

#include "ekr/report.hpp"
#include "ekr/subsets.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ekr {

/// An ordered (colex) duplicate-free collection of subsets of [n].
/// uniform_k is present iff the family is non-empty and k-uniform (or empty
/// with an explicit hint, e.g. from a family file).
class SetFamily {
  public:
    explicit SetFamily(int n) : n_(n) {}
    SetFamily(int n, std::vector<Subset> members, std::optional<int> k_hint = std::nullopt);

    int ground_set() const { return n_; }
    const std::vector<Subset>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::optional<int> uniform_k() const { return uniform_k_; }
    bool is_uniform() const { return uniform_k_.has_value(); }

    bool contains(const Subset& s) const;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

  private:
    int n_;
    std::vector<Subset> members_;
    std::optional<int> uniform_k_;
};

/// All d-degrees of a family, indexed by colex rank of the d-set.
struct DegreeVector {
    int n = 0;
    int d = 0;
    std::vector<std::int64_t> counts;

    std::int64_t at(const Subset& s) const { return counts[rank(s)]; }
};

/// True iff no member is empty and every two distinct members meet.
bool is_intersecting(const SetFamily& f);

/// A disjoint pair witnessing non-intersection (a member paired with itself
/// when that member is empty), or nullopt.
std::optional<std::pair<Subset, Subset>> find_disjoint_pair(const SetFamily& f);

/// Number of members containing s.
std::int64_t degree(const SetFamily& f, const Subset& s);

DegreeVector degree_vector(const SetFamily& f, int d);

struct MinDegree {
    std::int64_t value = 0;
    Subset argmin;  // colex-smallest minimizer
};

/// Minimum d-degree over all d-subsets of [n]; 0 when d exceeds every member.
MinDegree min_degree(const SetFamily& f, int d);

/// All k-subsets of [n] containing the base set b.
SetFamily star(int n, int k, const Subset& b);

/// The ten blocks of the unique 2-(6,3,2) design, on n = 6.
SetFamily design_2_6_3_2();

/// The seven lines of the Fano plane, on n = 7.
SetFamily fano();

/// All subsets of [n] of size >= (n+1)/2 (n odd; non-uniform).
SetFamily upper_half(int n);

/// N_m = #ordered pairs (S,T) in F x F with |S meet T| = m, for m = 0..k.
std::vector<std::uint64_t> intersection_distribution(const SetFamily& f);

/// C(n-d-1, k-d-1), the minimum d-degree bound for intersecting families.
BigInt ekr_degree_bound(int n, int k, int d);

/// Compares the minimum d-degree of the upper-half family on odd n against
/// every ground-element star of the full power set.
LemmaReport chvatal_check(int n, int d);

SetFamily load_family(const std::string& path);
void save_family(const SetFamily& f, const std::string& path);
SetFamily family_from_json_text(const std::string& text);
std::string family_to_json_text(const SetFamily& f);

}  // namespace ekr
