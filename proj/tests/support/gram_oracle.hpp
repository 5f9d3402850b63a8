#pragma once

// Test-only ground truth for spectral profiles: exact least-squares
// projection of a family's indicator vector onto the star-span flats
// F_i = span of all i-star indicators, then successive differences.
// Everything here is explicit rational linear algebra on star indicators;
// nothing is shared with the scheme module's moment/triangular route.

#include "ekr/families.hpp"
#include "ekr/numbers.hpp"

#include <vector>

namespace ekr::testing {

using RationalMatrix = std::vector<std::vector<BigRational>>;

/// Fraction-free Gauss-Jordan inverse of an integer matrix; throws on
/// singular input.
RationalMatrix invert_integer_matrix(const std::vector<std::vector<BigInt>>& a);

class GramOracle {
  public:
    GramOracle(int n, int k);

    /// |h_0|^2, ..., |h_k|^2 for the indicator vector of f. Every linear
    /// solve is residual-checked, so a wrong inverse cannot slip through.
    std::vector<BigRational> profile(const SetFamily& f) const;

    /// Squared norm of the projection of the indicator onto F_i, i <= k-1.
    BigRational flat_projection_norm(const SetFamily& f, int i) const;

    int n() const { return n_; }
    int k() const { return k_; }

  private:
    int n_, k_;
    std::vector<std::vector<std::vector<BigInt>>> gram_;  // per i = 0..k-1
    std::vector<RationalMatrix> gram_inv_;                // per i = 0..k-1
};

/// Exact projector matrix onto F_i, indexed by colex ranks of k-sets
/// (dimension C(n,k) x C(n,k)); intended for small matrix-level tests.
RationalMatrix star_span_projector(int n, int k, int i);

}  // namespace ekr::testing
