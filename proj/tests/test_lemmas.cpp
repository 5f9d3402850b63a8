#include "ekr/lemmas.hpp"

#include "ekr/family_gen.hpp"

#include <doctest.h>

using namespace ekr;

TEST_CASE("binomial comparison (lemma 3.1)") {
    LemmaReport r1 = binomial_compare(7, 3, 1);
    CHECK(r1.lhs == 2);
    CHECK(r1.rhs == 2);
    CHECK(r1.verdict == Verdict::Equality);

    LemmaReport r2 = binomial_compare(8, 3, 1);
    CHECK(r2.lhs == 4);
    CHECK(r2.rhs == 3);
    CHECK(r2.verdict == Verdict::Pass);

    LemmaReport r3 = binomial_compare(5, 2, 1);
    CHECK(r3.lhs == 1);
    CHECK(r3.rhs == 1);
    CHECK(r3.verdict == Verdict::Equality);

    CHECK_THROWS_AS(binomial_compare(6, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(binomial_compare(9, 3, 3), std::invalid_argument);
}

TEST_CASE("lemma 3.1 equality exactly on the n = 2k+1 line") {
    ScanSummary s = scan_binomial_compare(10, 40);
    CHECK(s.fail == 0);
    CHECK(s.total > 0);
    // count equalities: one per (k, d) pair at n = 2k+1
    std::uint64_t expected_equalities = 0;
    for (int k = 2; k <= 10; ++k)
        for (int d = 1; d < k; ++d)
            if (2 * k + 1 <= 40) ++expected_equalities;
    CHECK(s.equality == expected_equalities);
}

TEST_CASE("hoffman inequality (lemma 3.2)") {
    LemmaReport tight = hoffman_slack(star(5, 2, Subset::of(5, {1})), 1);
    CHECK(tight.lhs == 0);
    CHECK(tight.verdict == Verdict::Equality);

    LemmaReport f2 = hoffman_slack(fano(), 2);
    CHECK(f2.verdict != Verdict::Fail);
    CHECK(f2.lhs <= 0);

    LemmaReport s2 = hoffman_slack(star(7, 3, Subset::of(7, {1})), 2);
    CHECK(s2.lhs <= 0);
    CHECK(s2.verdict != Verdict::Fail);
}

TEST_CASE("hoffman rejects non-intersecting families with a witness") {
    SetFamily bad(7, {Subset::of(7, {1, 2, 3}), Subset::of(7, {4, 5, 6})});
    CHECK_THROWS_WITH_AS(hoffman_slack(bad, 1),
                         doctest::Contains("{1,2,3}"), PreconditionError);
}

TEST_CASE("hoffman cap override") {
    SetFamily f = fano();
    // floor: C(n-k-d-1, k-d-1) = C(2,0) = 1 at (7,3,2)
    CHECK_THROWS_AS(hoffman_slack(f, 2, make_rational(1, 2)), std::invalid_argument);
    LemmaReport at_floor = hoffman_slack(f, 2, BigRational(1));
    CHECK(at_floor.verdict != Verdict::Fail);
    LemmaReport above = hoffman_slack(f, 2, BigRational(5));
    CHECK(above.verdict != Verdict::Fail);
}

TEST_CASE("degree quadratic (lemma 3.3)") {
    // star: min degree equals the bound exactly
    LemmaReport rs = degree_quadratic(star(7, 3, Subset::of(7, {1})), 2);
    CHECK(rs.verdict != Verdict::Fail);

    // full family: min degree strictly above the bound, inequality strict
    LemmaReport rf = degree_quadratic(SetFamily(7, all_k_subsets(7, 3)), 2);
    CHECK(rf.verdict == Verdict::Pass);
    CHECK(rf.lhs > 0);

    // hypothesis violation carries the argmin witness
    CHECK_THROWS_AS(degree_quadratic(SetFamily(9, {Subset::of(9, {1, 2, 3, 4})}), 2),
                    PreconditionError);
}

TEST_CASE("degree quadratic routes agree without any hypothesis") {
    SplitMix64 rng(99);
    for (int t = 0; t < 15; ++t) {
        SetFamily f = random_uniform_family(8, 3, 1 + rng.below(25), rng);
        for (int d = 0; d < 3; ++d) {
            RoutePair rp = degree_quadratic_routes(f, d);  // throws on mismatch
            CHECK(rp.raw == rp.spectral);
        }
    }
}

TEST_CASE("coefficients at (7,3,2)") {
    CoefficientSet cs = coefficients(7, 3, 2);
    CHECK(cs.a == std::vector<BigRational>{BigRational(5), BigRational(-2), BigRational(3)});
    CHECK(cs.b == std::vector<BigRational>{BigRational(150), BigRational(-32), BigRational(3)});
    CHECK(cs.c == 1);
    CHECK(cs.f == 60);
    CHECK(cs.g == 210);
}

TEST_CASE("coefficient signs and the a_1 closed form") {
    for (auto [n, k, d] : {std::tuple{7, 3, 2}, {9, 4, 2}, {11, 4, 3}, {21, 8, 5}}) {
        CoefficientSet cs = coefficients(n, k, d);
        CHECK(cs.a[0] > 0);
        CHECK(cs.b[0] > 0);
        CHECK(cs.a[1] < 0);
        CHECK(cs.b[1] < 0);
        CHECK(cs.a[1] == make_rational(BigInt(-d * binom(n - k, k)), BigInt(n - k)));
    }
}

TEST_CASE("claims at (7,3,2)") {
    LemmaReport c1 = claim1(7, 3, 2);
    CHECK(c1.lhs == 70);
    CHECK(c1.verdict == Verdict::Equality);

    LemmaReport c2 = claim2(7, 3, 2, 2);
    CHECK(c2.lhs == 3);
    CHECK(c2.rhs == 48);
    CHECK(c2.verdict == Verdict::Pass);

    LemmaReport c3 = claim3(7, 3, 2);
    CHECK(c3.lhs == 44);
    CHECK(c3.verdict == Verdict::Equality);
}

TEST_CASE("claim 2 odd case at the base threshold") {
    // (k,d) = (4,3), i = 3, n = 2k+2d-3 = 11
    LemmaReport r = claim2(11, 4, 3, 3);
    CHECK(r.verdict != Verdict::Fail);
}

TEST_CASE("technical inequality (lemma A.3)") {
    LemmaReport r = technical_inequality(11, 4, 3, 3);
    CHECK(technical_S(11, 4, 3) == make_rational(1, 5));
    CHECK(technical_T(11, 4, 3, 3) == make_rational(5, 441));
    CHECK(r.lhs == make_rational(563, 735));
    CHECK(r.rhs == 1);
    CHECK(r.verdict == Verdict::Pass);

    // cubic at d = 3 collapses to 12k^2 - 36k + 42
    for (int k = 4; k <= 9; ++k) {
        int n0 = 2 * k + 3;
        LemmaReport rb = technical_inequality(n0, k, 3, 3);
        CHECK(rb.verdict != Verdict::Fail);
        for (const auto& [key, value] : rb.details)
            if (key == "base_cubic")
                CHECK(value == to_string(BigInt(12 * k * k - 36 * k + 42)));
    }

    CHECK_THROWS_AS(technical_inequality(11, 4, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(technical_inequality(10, 4, 3, 3), std::invalid_argument);
}

TEST_CASE("hahn identity (lemma A.2)") {
    LemmaReport r = hahn_identity(4, 2, 1, 0);
    CHECK(r.lhs == 18);
    CHECK(r.rhs == 18);
    CHECK(r.verdict == Verdict::Equality);

    // j = d collapses the sum to a single term
    LemmaReport rc = hahn_identity(10, 4, 2, 2);
    CHECK(rc.verdict == Verdict::Equality);

    ScanSummary s = scan_hahn(24, 12);
    CHECK(s.fail == 0);
    CHECK(s.total == s.equality);
}

TEST_CASE("final factorization at (7,3,2)") {
    CHECK(final_factorization(7, 3, 2, BigRational(15)).combined == 0);
    CHECK(final_factorization(7, 3, 2, BigRational(7)).combined == 0);

    FactorizationValue at0 = final_factorization(7, 3, 2, BigRational(0));
    CHECK(at0.combined == 210);
    CHECK(at0.factored == 105);

    LemmaReport r = final_factorization_check(7, 3, 2);
    CHECK(r.verdict == Verdict::Equality);
}

TEST_CASE("theorem check") {
    LemmaReport rf = theorem_check(fano(), 2);
    CHECK(rf.verdict != Verdict::Fail);
    CHECK(rf.verdict != Verdict::OutOfRange);
    CHECK(rf.lhs == 1);
    CHECK(rf.rhs == 1);
    CHECK(!rf.children.empty());

    LemmaReport rd = theorem_check(design_2_6_3_2(), 2);
    CHECK(rd.verdict == Verdict::OutOfRange);
    CHECK(rd.lhs == 2);
    CHECK(rd.rhs == 1);

    LemmaReport rs = theorem_check(star(11, 4, Subset::of(11, {3})), 3);
    CHECK(rs.verdict != Verdict::Fail);
    CHECK(rs.verdict != Verdict::OutOfRange);
    CHECK(rs.lhs == 1);
    CHECK(rs.rhs == 1);

    SetFamily bad(7, {Subset::of(7, {1, 2, 3}), Subset::of(7, {4, 5, 6})});
    CHECK_THROWS_AS(theorem_check(bad, 2), PreconditionError);
}

TEST_CASE("claims scan on a reduced grid") {
    ScanSummary s = scan_claims(8, 40);
    CHECK(s.fail == 0);
}

TEST_CASE("technical scan on a reduced grid") {
    ScanSummary s = scan_technical(8, 40);
    CHECK(s.fail == 0);
    CHECK(s.total > 0);
}

TEST_CASE("factorization scan on a reduced grid") {
    ScanSummary s = scan_factorization(7, 30);
    CHECK(s.fail == 0);
}

TEST_CASE("hoffman scan with a few random families") {
    ScanSummary s = scan_hoffman(10, 321);
    CHECK(s.fail == 0);
    CHECK(s.total > 0);
}

TEST_CASE("degree quadratic scan with a few random families") {
    ScanSummary s = scan_degree_quadratic(10, 321);
    CHECK(s.fail == 0);
}
