#include "ekr/scheme.hpp"

#include <stdexcept>

namespace ekr {

namespace {

void require_uniform(const SetFamily& f, const char* who) {
    if (!f.is_uniform())
        throw std::invalid_argument(std::string(who) + ": family must be uniform");
}

void require_halved(int n, int k, const char* who) {
    if (n < 2 * k)
        throw std::invalid_argument(std::string(who) + ": scheme degenerate, need n >= 2k");
}

}  // namespace

BigInt kneser_eigenvalue(int n, int k, int i) {
    if (i < 0 || i > k) throw std::invalid_argument("kneser_eigenvalue: need 0 <= i <= k");
    require_halved(n, k, "kneser_eigenvalue");
    BigInt v = binom(n - k - i, k - i);
    return (i % 2 == 0) ? v : BigInt(-v);
}

BigInt eigenspace_dim(int n, int i) {
    if (i < 0 || 2 * i > n) throw std::invalid_argument("eigenspace_dim: need 0 <= i <= n/2");
    if (i == 0) return 1;
    return binom(n, i) - binom(n, i - 1);
}

BigInt wtw_eigenvalue(int n, int k, int i, int j) {
    if (i < 0 || i > k || j < 0 || j > k)
        throw std::invalid_argument("wtw_eigenvalue: need 0 <= i, j <= k");
    if (2 * k > n) throw std::invalid_argument("wtw_eigenvalue: need k <= n/2");
    return binom(k - j, k - i) * binom(n - i - j, k - i);  // zero for j > i
}

BigInt moment(const SetFamily& f, int i) {
    require_uniform(f, "moment");
    int k = *f.uniform_k();
    if (i < 0 || i > k) throw std::invalid_argument("moment: need 0 <= i <= k");
    std::vector<std::uint64_t> dist = intersection_distribution(f);
    BigInt acc = 0;
    for (int m = i; m <= k; ++m) acc += binom(m, i) * BigInt(dist[m]);
    return acc;
}

BigRational SpectralProfile::sum() const {
    BigRational s = 0;
    for (const BigRational& x : norms) s += x;
    return s;
}

SpectralProfile spectral_profile(const SetFamily& f) {
    require_uniform(f, "spectral_profile");
    int n = f.ground_set();
    int k = *f.uniform_k();
    require_halved(n, k, "spectral_profile");

    std::vector<std::uint64_t> dist = intersection_distribution(f);
    std::vector<BigInt> moments(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
        BigInt acc = 0;
        for (int m = i; m <= k; ++m) acc += binom(m, i) * BigInt(dist[m]);
        moments[i] = acc;
    }

    SpectralProfile profile;
    profile.n = n;
    profile.k = k;
    profile.family_size = BigInt(static_cast<unsigned long>(f.size()));
    profile.norms.resize(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
        BigRational rhs(moments[i]);
        for (int j = 0; j < i; ++j) rhs -= BigRational(wtw_eigenvalue(n, k, i, j)) * profile.norms[j];
        profile.norms[i] = rhs / BigRational(wtw_eigenvalue(n, k, i, i));
    }
    return profile;
}

QuadraticValue kneser_quadratic(const SetFamily& f) {
    require_uniform(f, "kneser_quadratic");
    int n = f.ground_set();
    int k = *f.uniform_k();
    require_halved(n, k, "kneser_quadratic");

    QuadraticValue out;
    out.direct = 0;
    const auto& m = f.members();
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a + 1; b < m.size(); ++b)
            if (m[a].disjoint(m[b])) out.direct += 2;

    SpectralProfile profile = spectral_profile(f);
    out.spectral = 0;
    for (int i = 0; i <= k; ++i)
        out.spectral += BigRational(kneser_eigenvalue(n, k, i)) * profile.norms[i];

    if (out.spectral != BigRational(out.direct))
        throw std::logic_error("kneser_quadratic: spectral and combinatorial routes disagree");
    return out;
}

QuadraticValue disjoint_quadratic_form(const SetFamily& f, int d) {
    require_uniform(f, "disjoint_quadratic_form");
    int n = f.ground_set();
    int k = *f.uniform_k();
    require_halved(n, k, "disjoint_quadratic_form");
    if (d < 0 || d >= k) throw std::invalid_argument("disjoint_quadratic_form: need 0 <= d < k");

    DegreeVector dv = degree_vector(f, d);
    std::vector<Subset> dsets = all_k_subsets(n, d);
    QuadraticValue out;
    out.direct = 0;
    for (std::size_t a = 0; a < dsets.size(); ++a) {
        if (dv.counts[a] == 0) continue;
        for (std::size_t b = 0; b < dsets.size(); ++b)
            if (dsets[a].disjoint(dsets[b]))
                out.direct += BigInt(dv.counts[a]) * BigInt(dv.counts[b]);
    }

    SpectralProfile profile = spectral_profile(f);
    out.spectral = 0;
    for (int j = 0; j <= d; ++j) {
        BigInt coeff = binom(k - j, d - j) * binom(n - d - j, d - j) * binom(n - d - j, k - d);
        BigRational term = BigRational(coeff) * profile.norms[j];
        if (j % 2 == 0)
            out.spectral += term;
        else
            out.spectral -= term;
    }

    if (out.spectral != BigRational(out.direct))
        throw std::logic_error("disjoint_quadratic_form: spectral and direct routes disagree");
    return out;
}

}  // namespace ekr
