#pragma once

// Structured verdicts for lemma and identity checks. Every verifier returns
// one of these rather than a bare bool so that zero-slack boundary cases
// (n = 2k+1, tight stars) stay distinguishable from strict passes.

#include "ekr/numbers.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ekr {

enum class Verdict {
    Pass,      // inequality holds strictly
    Equality,  // holds with slack exactly 0 (non-failure)
    Fail,
    OutOfRange,  // parameters outside the statement's range; quantities reported, no claim made
};

std::string verdict_name(Verdict v);

struct LemmaParams {
    std::optional<long> n, k, d, i, j;
    std::string str() const;
};

struct LemmaReport {
    std::string lemma;  // "lemma31", "lemma32", "lemma33", "claim1", ...
    LemmaParams params;
    BigRational lhs, rhs;
    // Margin of the asserted relation: for "lhs <= rhs" this is rhs - lhs,
    // for "lhs >= rhs" it is lhs - rhs. Slack >= 0 iff verdict is not Fail.
    BigRational slack;
    std::string relation;  // "<=", ">=", "=="
    Verdict verdict = Verdict::Pass;
    std::string witness;  // optional: offending pair, argmin subset, ...
    std::vector<std::pair<std::string, std::string>> details;  // named sub-check values
    std::vector<LemmaReport> children;                         // trace of dependent checks

    bool failed() const { return verdict == Verdict::Fail; }
};

/// Builds a report for "lhs <= rhs" (relation flipped via `geq`), deriving
/// slack and the pass/equality/fail verdict from exact comparison.
LemmaReport make_comparison_report(std::string lemma, LemmaParams params, BigRational lhs,
                                   BigRational rhs, bool geq);

/// Report for an identity that must hold exactly.
LemmaReport make_identity_report(std::string lemma, LemmaParams params, BigRational lhs,
                                 BigRational rhs);

}  // namespace ekr
