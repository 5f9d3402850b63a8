#include "ekr/scheme.hpp"

#include "ekr/family_gen.hpp"
#include "support/gram_oracle.hpp"

#include <doctest.h>

using namespace ekr;

TEST_CASE("kneser eigenvalues") {
    CHECK(kneser_eigenvalue(5, 2, 1) == -2);
    CHECK(kneser_eigenvalue(6, 3, 0) == 1);
    CHECK(kneser_eigenvalue(8, 4, 4) == 1);
    CHECK(kneser_eigenvalue(10, 5, 5) == -1);
    CHECK_THROWS_AS(kneser_eigenvalue(5, 3, 0), std::invalid_argument);
}

TEST_CASE("eigenspace dimensions") {
    CHECK(eigenspace_dim(5, 1) == 4);
    CHECK(eigenspace_dim(9, 0) == 1);
    for (auto [n, k] : {std::pair{5, 2}, {7, 3}, {9, 4}, {12, 5}}) {
        BigInt total = 0;
        for (int i = 0; i <= k; ++i) total += eigenspace_dim(n, i);
        CHECK(total == binom(n, k));
    }
}

TEST_CASE("wtw eigenvalue formula and triangularity") {
    CHECK(wtw_eigenvalue(5, 2, 1, 1) == 3);
    CHECK(wtw_eigenvalue(9, 4, 4, 0) == 1);  // identity matrix at i = k
    // vanishes above the diagonal, positive on and below, exhaustively
    for (int k = 0; k <= 12; ++k)
        for (int n = 2 * k; n <= 40; ++n)
            for (int i = 0; i <= k; ++i)
                for (int j = 0; j <= k; ++j) {
                    BigInt v = wtw_eigenvalue(n, k, i, j);
                    if (j > i)
                        CHECK(v == 0);
                    else
                        CHECK(v > 0);
                }
}

TEST_CASE("moments") {
    SetFamily s = star(5, 2, Subset::of(5, {1}));
    CHECK(moment(s, 0) == 16);
    CHECK(moment(s, 1) == 20);
    CHECK(moment(s, 2) == 4);

    // single member: the only contribution is the diagonal pair, whose
    // quadratic-form entry counts the i-subsets of the member
    SetFamily single(7, {Subset::of(7, {2, 4, 6})});
    for (int i = 0; i <= 3; ++i) CHECK(moment(single, i) == binom(3, i));
    CHECK(moment(single, 0) == 1);  // |F|^2
    CHECK(moment(single, 3) == 1);  // |F|
}

TEST_CASE("spectral profile: frozen oracle values") {
    // values computed by the Gram-projection oracle (see oracle-equivalence
    // tests below for the live cross-check)
    SpectralProfile p = spectral_profile(star(5, 2, Subset::of(5, {1})));
    REQUIRE(p.norms.size() == 3);
    CHECK(p.norms[0] == make_rational(8, 5));
    CHECK(p.norms[1] == make_rational(12, 5));
    CHECK(p.norms[2] == 0);

    SpectralProfile q = spectral_profile(SetFamily(5, {Subset::of(5, {1, 2})}));
    CHECK(q.norms[0] == make_rational(1, 10));
    CHECK(q.norms[1] == make_rational(2, 5));
    CHECK(q.norms[2] == make_rational(1, 2));
    // single-set profile coincides with eigenspace_dim(n, j) / C(n, k)
    for (int j = 0; j <= 2; ++j)
        CHECK(q.norms[j] == make_rational(eigenspace_dim(5, j), binom(5, 2)));

    SpectralProfile full = spectral_profile(SetFamily(6, all_k_subsets(6, 3)));
    CHECK(full.norms[0] == 20);
    for (int j = 1; j <= 3; ++j) CHECK(full.norms[j] == 0);
}

TEST_CASE("spectral profile invariants on random families") {
    SplitMix64 rng(42);
    for (auto [n, k] : {std::pair{7, 3}, {9, 4}, {10, 2}}) {
        for (int t = 0; t < 20; ++t) {
            SetFamily f = random_uniform_family(n, k, 2 + rng.below(binom_u64(n, k)), rng);
            SpectralProfile p = spectral_profile(f);
            BigInt size(static_cast<long>(f.size()));
            CHECK(p.sum() == BigRational(size));
            CHECK(p.norms[0] == make_rational(size * size, binom(n, k)));
            for (const BigRational& x : p.norms) CHECK(x >= 0);
        }
    }
}

TEST_CASE("spectral profile rejects degenerate input") {
    CHECK_THROWS_AS(spectral_profile(upper_half(5)), std::invalid_argument);
    CHECK_THROWS_AS(spectral_profile(SetFamily(5, all_k_subsets(5, 3))), std::invalid_argument);
}

TEST_CASE("kneser quadratic two ways") {
    QuadraticValue qv = kneser_quadratic(SetFamily(4, all_k_subsets(4, 2)));
    CHECK(qv.direct == 6);
    CHECK(qv.spectral == 6);

    SetFamily two(4, {Subset::of(4, {1, 2}), Subset::of(4, {3, 4})});
    QuadraticValue qd = kneser_quadratic(two);
    CHECK(qd.direct == 2);

    CHECK(kneser_quadratic(fano()).direct == 0);
    CHECK(kneser_quadratic(design_2_6_3_2()).direct == 0);
}

TEST_CASE("kneser quadratic on random families never desyncs") {
    SplitMix64 rng(577);
    for (int t = 0; t < 40; ++t) {
        SetFamily f = random_uniform_family(8, 3, 2 + rng.below(40), rng);
        QuadraticValue qv = kneser_quadratic(f);  // throws on route mismatch
        CHECK(BigRational(qv.direct) == qv.spectral);
        CHECK(is_intersecting(f) == (qv.direct == 0));
    }
}

TEST_CASE("disjoint quadratic form two ways") {
    SetFamily single(7, {Subset::of(7, {1, 2, 3})});
    for (int d = 0; d <= 2; ++d) {
        QuadraticValue qv = disjoint_quadratic_form(single, d);
        CHECK(BigRational(qv.direct) == qv.spectral);
    }

    QuadraticValue qs = disjoint_quadratic_form(star(7, 3, Subset::of(7, {1})), 2);
    CHECK(BigRational(qs.direct) == qs.spectral);

    SetFamily f = fano();
    QuadraticValue q0 = disjoint_quadratic_form(f, 0);
    CHECK(q0.direct == BigInt(static_cast<long>(f.size())) * BigInt(static_cast<long>(f.size())));
}

TEST_CASE("oracle equivalence on a quick grid") {
    // the full C(n,k) <= 500 sweep runs in the acceptance suite
    SplitMix64 rng(2718);
    for (auto [n, k] : {std::pair{6, 2}, {7, 3}, {8, 3}, {9, 2}}) {
        testing::GramOracle oracle(n, k);
        for (int t = 0; t < 8; ++t) {
            SetFamily f = random_uniform_family(n, k, 1 + rng.below(binom_u64(n, k)), rng);
            SpectralProfile p = spectral_profile(f);
            std::vector<BigRational> expected = oracle.profile(f);
            REQUIRE(p.norms.size() == expected.size());
            for (std::size_t j = 0; j < expected.size(); ++j) CHECK(p.norms[j] == expected[j]);
        }
    }
}
