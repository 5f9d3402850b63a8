#pragma once

// Exact spectral engine for the Johnson/Kneser scheme on k-subsets of [n].
//
// The eigenspace decomposition R^C(n,k) = E_0 + ... + E_k diagonalizes every
// matrix whose (S,T)-entry depends only on |S meet T|. Projection norms of a
// family's indicator vector are recovered from intersection-size moments by
// solving the triangular system
//
//     sum_{j<=i} wtw_eigenvalue(n,k,i,j) * |h_j|^2 = moment(F, i),
//
// whose diagonal pivots C(n-2i, k-i) are positive for n >= 2k. This costs
// O(k^2) rationals plus O(|F|^2) popcounts instead of any C(n,k)-dimensional
// linear algebra.

#include "ekr/families.hpp"
#include "ekr/numbers.hpp"

#include <vector>

namespace ekr {

/// Eigenvalue of the Kneser adjacency matrix on E_i: (-1)^i C(n-k-i, k-i).
BigInt kneser_eigenvalue(int n, int k, int i);

/// dim E_i = C(n,i) - C(n,i-1), with C(n,-1) = 0.
BigInt eigenspace_dim(int n, int i);

/// Eigenvalue of W_{i,k}^T W_{i,k} on E_j: C(k-j, k-i) * C(n-i-j, k-i).
/// Vanishes for j > i.
BigInt wtw_eigenvalue(int n, int k, int i, int j);

/// h^T (W_{i,k}^T W_{i,k}) h = sum_m C(m, i) * N_m over the intersection
/// distribution N of the family.
BigInt moment(const SetFamily& f, int i);

/// Exact squared norms of the eigenspace projections of the indicator vector.
struct SpectralProfile {
    int n = 0;
    int k = 0;
    BigInt family_size;
    std::vector<BigRational> norms;  // |h_0|^2, ..., |h_k|^2

    BigRational sum() const;
};

SpectralProfile spectral_profile(const SetFamily& f);

/// h^T A h for the Kneser adjacency matrix, evaluated two independent ways:
/// combinatorially (# ordered disjoint pairs in F) and spectrally. A mismatch
/// is an internal-consistency failure and throws.
struct QuadraticValue {
    BigInt direct;
    BigRational spectral;
};

QuadraticValue kneser_quadratic(const SetFamily& f);

/// D_d^T M D_d where M is the d-set disjointness matrix: directly as
/// sum d_S d_T over ordered disjoint pairs, and spectrally as
/// sum_j (-1)^j C(k-j,d-j) C(n-d-j,d-j) C(n-d-j,k-d) |h_j|^2. Throws on
/// mismatch.
QuadraticValue disjoint_quadratic_form(const SetFamily& f, int d);

}  // namespace ekr
