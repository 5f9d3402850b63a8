#include "support/gram_oracle.hpp"

#include "ekr/runtime.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace ekr::testing {

namespace {

// Runs fn(row) over [begin, end) on a few threads; rows are independent.
template <typename Fn>
void parallel_rows(std::size_t begin, std::size_t end, std::size_t grain, Fn fn) {
    std::size_t count = end - begin;
    unsigned hw = thread_count();
    if (hw < 2 || count < 2 * grain) {
        for (std::size_t r = begin; r < end; ++r) fn(r);
        return;
    }
    unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(count / grain) + 1);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([=] {
            for (std::size_t r = begin + w; r < end; r += workers) fn(r);
        });
    }
    for (auto& t : threads) t.join();
}

}  // namespace

RationalMatrix invert_integer_matrix(const std::vector<std::vector<BigInt>>& a) {
    std::size_t m = a.size();
    std::vector<std::vector<BigInt>> left = a;
    std::vector<std::vector<BigInt>> right(m, std::vector<BigInt>(m, 0));
    for (std::size_t i = 0; i < m; ++i) right[i][i] = 1;

    BigInt prev = 1;
    for (std::size_t r = 0; r < m; ++r) {
        std::size_t p = r;
        while (p < m && left[p][r] == 0) ++p;
        if (p == m) throw std::runtime_error("invert_integer_matrix: singular matrix");
        if (p != r) {
            std::swap(left[p], left[r]);
            std::swap(right[p], right[r]);
        }
        const BigInt piv = left[r][r];
        parallel_rows(0, m, 64, [&](std::size_t i) {
            if (i == r) return;
            const BigInt f = left[i][r];
            for (std::size_t j = 0; j < m; ++j) {
                left[i][j] = (piv * left[i][j] - f * left[r][j]) / prev;
                right[i][j] = (piv * right[i][j] - f * right[r][j]) / prev;
            }
        });
        prev = piv;
    }

    RationalMatrix inv(m, std::vector<BigRational>(m));
    for (std::size_t i = 0; i < m; ++i) {
        const BigInt& div = left[i][i];
        if (div == 0) throw std::runtime_error("invert_integer_matrix: zero divisor");
        for (std::size_t j = 0; j < m; ++j) inv[i][j] = make_rational(right[i][j], div);
    }
    return inv;
}

GramOracle::GramOracle(int n, int k) : n_(n), k_(k) {
    if (!(0 <= k && 2 * k <= n && n <= kMaxGroundSet))
        throw std::invalid_argument("GramOracle: need 0 <= k <= n/2, n <= 63");
    gram_.resize(k);
    gram_inv_.resize(k);
    for (int i = 0; i < k; ++i) {
        std::vector<Subset> isets = all_k_subsets(n, i);
        std::size_t m = isets.size();
        std::vector<std::vector<BigInt>> g(m, std::vector<BigInt>(m));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                int u = std::popcount(isets[a].bits() | isets[b].bits());
                // <v_A, v_B> = # k-sets containing A union B
                g[a][b] = binom(n - u, k - u);
            }
        gram_inv_[i] = invert_integer_matrix(g);
        gram_[i] = std::move(g);
    }
}

BigRational GramOracle::flat_projection_norm(const SetFamily& f, int i) const {
    if (i < 0 || i >= k_) throw std::invalid_argument("flat_projection_norm: need 0 <= i < k");
    std::vector<Subset> isets = all_k_subsets(n_, i);
    std::size_t m = isets.size();
    std::vector<BigInt> b(m);
    for (std::size_t a = 0; a < m; ++a) b[a] = degree(f, isets[a]);

    const RationalMatrix& inv = gram_inv_[i];
    std::vector<BigRational> y(m, BigRational(0));
    for (std::size_t r = 0; r < m; ++r) {
        BigRational acc = 0;
        for (std::size_t c = 0; c < m; ++c)
            if (b[c] != 0) acc += inv[r][c] * BigRational(b[c]);
        y[r] = acc;
    }

    // residual check: the least-squares system G y = b must hold exactly
    for (std::size_t r = 0; r < m; ++r) {
        BigRational acc = 0;
        for (std::size_t c = 0; c < m; ++c) acc += BigRational(gram_[i][r][c]) * y[c];
        if (acc != BigRational(b[r]))
            throw std::runtime_error("GramOracle: residual check failed");
    }

    BigRational norm = 0;
    for (std::size_t r = 0; r < m; ++r)
        if (b[r] != 0) norm += BigRational(b[r]) * y[r];
    return norm;
}

std::vector<BigRational> GramOracle::profile(const SetFamily& f) const {
    if (!f.is_uniform() || *f.uniform_k() != k_)
        throw std::invalid_argument("GramOracle::profile: family is not k-uniform");
    std::vector<BigRational> norms(static_cast<std::size_t>(k_) + 1);
    BigRational prev_flat = 0;
    for (int i = 0; i < k_; ++i) {
        BigRational flat = flat_projection_norm(f, i);
        norms[i] = flat - prev_flat;
        prev_flat = flat;
    }
    // F_k is the whole space: the k-star indicators are the standard basis
    norms[k_] = BigRational(BigInt(static_cast<long>(f.size()))) - prev_flat;
    return norms;
}

RationalMatrix star_span_projector(int n, int k, int i) {
    std::vector<Subset> isets = all_k_subsets(n, i);
    std::vector<Subset> ksets = all_k_subsets(n, k);
    std::size_t m = isets.size();
    std::size_t cols = ksets.size();

    if (i == k) {  // identity
        RationalMatrix p(cols, std::vector<BigRational>(cols, BigRational(0)));
        for (std::size_t s = 0; s < cols; ++s) p[s][s] = 1;
        return p;
    }

    std::vector<std::vector<BigInt>> g(m, std::vector<BigInt>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            int u = std::popcount(isets[a].bits() | isets[b].bits());
            g[a][b] = binom(n - u, k - u);
        }
    RationalMatrix inv = invert_integer_matrix(g);

    // P = W^T G^{-1} W with W the i-in-k inclusion matrix
    std::vector<std::vector<std::size_t>> rows_of_col(cols);
    for (std::size_t s = 0; s < cols; ++s)
        for (std::size_t a = 0; a < m; ++a)
            if (isets[a].subset_of(ksets[s])) rows_of_col[s].push_back(a);

    RationalMatrix p(cols, std::vector<BigRational>(cols, BigRational(0)));
    for (std::size_t s = 0; s < cols; ++s)
        for (std::size_t t = 0; t < cols; ++t) {
            BigRational acc = 0;
            for (std::size_t a : rows_of_col[s])
                for (std::size_t b : rows_of_col[t]) acc += inv[a][b];
            p[s][t] = acc;
        }
    return p;
}

}  // namespace ekr::testing
