#pragma once

// Exact verifiers for the inequality chain behind the minimum-degree bound
// for intersecting families: the binomial comparison, the Hoffman-type
// eigenvalue inequality, the degree quadratic, the coefficient identities
// and claims, the hypergeometric identity, the technical falling-factorial
// inequality, the final factorization, and the end-to-end theorem check.

#include "ekr/families.hpp"
#include "ekr/report.hpp"
#include "ekr/scheme.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace ekr {

/// A precondition of a lemma verifier failed; message carries the witness.
class PreconditionError : public std::invalid_argument {
  public:
    PreconditionError(const std::string& message, std::string witness)
        : std::invalid_argument(message + " (witness: " + witness + ")"),
          witness_(std::move(witness)) {}

    const std::string& witness() const { return witness_; }

  private:
    std::string witness_;
};

/// Exact coefficients of the two combined inequalities, for k > d >= 1 and
/// n >= 2k+1:
///   a_i = (k-d)/(n-k) C(n-k,k) + (-1)^i C(n-k-i, k-i)
///   b_i = (-1)^i C(k-i,d-i) C(n-d-i,d-i) C(n-d-i,k-d)
///   c   = (k-d)/(n-k) C(n-k,k)
///   f   = 2 C(n-d-1,k-d-1) C(n-d,d) C(k,d)
///   g   = C(n-d-1,k-d-1)^2 C(n,d) C(n-d,d)
struct CoefficientSet {
    int n = 0, k = 0, d = 0;
    std::vector<BigRational> a, b;  // indices 0..d
    BigRational c, f, g;
};

CoefficientSet coefficients(int n, int k, int d);

/// (k-d)/(n-k) C(n-k,k) >= C(n-k-d-1, k-d-1), equality exactly at n = 2k+1.
LemmaReport binomial_compare(int n, int k, int d);

/// The default replaceable constant of the Hoffman-type inequality.
BigRational default_hoffman_cap(int n, int k, int d);

/// For intersecting F: -cap |F| + sum_{i<=d} (cap + (-1)^i C(n-k-i,k-i)) |h_i|^2 <= 0.
/// cap defaults to (k-d)/(n-k) C(n-k,k); overrides must be at least
/// C(n-k-d-1, k-d-1).
LemmaReport hoffman_slack(const SetFamily& f, int d,
                          std::optional<BigRational> cap = std::nullopt);

/// Both evaluation routes of the degree quadratic (no hypothesis needed):
/// raw = sum over ordered disjoint d-set pairs of (d_S - bound)(d_T - bound),
/// spectral = the eigenvalue expansion. Throws on mismatch.
struct RoutePair {
    BigRational raw, spectral;
};
RoutePair degree_quadratic_routes(const SetFamily& f, int d);

/// Lemma verifier: requires min d-degree >= C(n-d-1,k-d-1) (argmin witness on
/// violation); asserts the expression is >= 0, strictly when the hypothesis
/// is strict, and that both routes agree.
LemmaReport degree_quadratic(const SetFamily& f, int d);

/// b_0 - a_0 b_1/a_1 = n(k-d)/(k(n-d)) * b_0, strictly positive.
LemmaReport claim1(int n, int k, int d);

/// b_i <= a_i b_1/a_1 for 2 <= i <= d (even i need n >= 2k+1, odd i need
/// n >= 2k+2d-3); also cross-checks the falling-factorial forms of
/// a_i/(-a_1) and b_i/(-b_1).
LemmaReport claim2(int n, int k, int d, int i);

/// f - b_1 c/a_1 = (2kn-dk-dn)/(k(n-d)) * C(n-d-1,k-d-1) C(n-d,d) C(k,d).
LemmaReport claim3(int n, int k, int d);

/// S_i(n) and T_i(n) of the technical inequality, as exact rationals.
BigRational technical_S(int n, int k, int i);
BigRational technical_T(int n, int k, int d, int i);

/// k S_i(n) - d T_i(n) <= k-d for k > d >= i >= 3 and n >= 2k+2d-3, with the
/// sub-checks used in its proof (bounds, ratio monotonicity, base-case
/// monotonicity in i, closing cubic).
LemmaReport technical_inequality(int n, int k, int d, int i);

/// sum_{i=j}^d (-1)^i C(k-i,d-i)^2 C(k-j,k-i) C(n-i-j,k-i)
///   = (-1)^j C(k-j,d-j) C(n-d-j,d-j) C(n-d-j,k-d), for j <= d < k <= n/2.
LemmaReport hahn_identity(int n, int k, int d, int j);

/// The combined quadratic and its factored form, evaluated at m.
struct FactorizationValue {
    BigRational combined, factored;
};
FactorizationValue final_factorization(int n, int k, int d, const BigRational& m);

/// Checks combined = ratio * factored (fixed positive ratio) by evaluation at
/// three points, plus vanishing at both displayed roots.
LemmaReport final_factorization_check(int n, int k, int d);

/// End-to-end check: for uniform intersecting F with k > d >= 2 and
/// n >= 2k+2d-3, asserts min d-degree <= C(n-d-1,k-d-1) and attaches the
/// inequality-chain trace; outside that range reports quantities only.
LemmaReport theorem_check(const SetFamily& f, int d);

// ---------------------------------------------------------------------------
// Grid scans. Each report is passed to `sink` (if given) in deterministic
// parameter order; the summary tallies verdicts and keeps every failure.
// ---------------------------------------------------------------------------

struct ScanSummary {
    std::uint64_t total = 0, pass = 0, equality = 0, fail = 0, out_of_range = 0;
    std::vector<LemmaReport> failures;

    void add(const LemmaReport& r, const std::function<void(const LemmaReport&)>& sink);
    bool ok() const { return fail == 0; }
};

using ReportSink = std::function<void(const LemmaReport&)>;

ScanSummary scan_binomial_compare(int kmax = 25, int nmax = 80, const ReportSink& sink = {});
ScanSummary scan_hahn(int nmax = 40, int kmax = 20, const ReportSink& sink = {});
ScanSummary scan_claims(int kmax = 20, int nmax = 80, const ReportSink& sink = {});
ScanSummary scan_technical(int kmax = 20, int nmax = 80, const ReportSink& sink = {});
ScanSummary scan_factorization(int kmax = 15, int nmax = 60, const ReportSink& sink = {});

/// Hoffman inequality over the applicable cataloged families plus seeded
/// random intersecting families, at every admissible d.
ScanSummary scan_hoffman(std::size_t random_families = 100, std::uint64_t seed = 2024,
                         const ReportSink& sink = {});

/// Degree-quadratic route equivalence over cataloged families plus seeded
/// random uniform families, at every d < k (C(n,d) kept small by choice of
/// parameters).
ScanSummary scan_degree_quadratic(std::size_t random_families = 100, std::uint64_t seed = 2024,
                                  const ReportSink& sink = {});

}  // namespace ekr
