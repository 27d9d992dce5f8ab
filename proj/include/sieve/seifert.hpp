#pragma once

// Seifert matrices for odd pretzel knots and the exact determinant machinery
// built on them.  K(k_1,...,k_{2g+1}) denotes the genus-g pretzel knot
// P(-2k_1-1, ..., -2k_{2g+1}-1) with all k_i >= 0; these are alternating,
// thin, and have tau = g.

#include <sieve/exact.hpp>
#include <sieve/polynomial.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace sieve {

using IntMatrix = std::vector<std::vector<Int>>;

/// Signed determinant by fraction-free Bareiss elimination (exact, integral).
[[nodiscard]] inline Int det_bareiss(IntMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_bareiss: matrix must be square");
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Seifert matrix -A_2g of K(k_1,...,k_{2g+1}): A is the 2g x 2g tridiagonal
/// matrix with A_ii = k_i + k_{i+1} + 1, A_{i,i+1} = k_{i+1} and
/// A_{i+1,i} = k_{i+1} + 1 (1-based band indices).  Rejects even-length
/// tuples and negative twist parameters.
[[nodiscard]] inline IntMatrix seifert_pretzel(const std::vector<Int>& ks) {
    if (ks.size() < 3 || ks.size() % 2 == 0)
        throw std::invalid_argument("seifert_pretzel: need an odd number (>= 3) of strand parameters");
    for (const auto& k : ks)
        if (k < 0) throw std::domain_error("seifert_pretzel: strand parameters must be >= 0");
    const std::size_t n = ks.size() - 1;  // 2g
    IntMatrix a(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = ks[i] + ks[i + 1] + 1;
        if (i + 1 < n) {
            a[i][i + 1] = ks[i + 1];
            a[i + 1][i] = ks[i + 1] + 1;
        }
    }
    for (auto& row : a)
        for (auto& x : row) x = -x;
    return a;
}

/// |det(V + V^T)| — the knot determinant from a Seifert matrix.
[[nodiscard]] inline Int det_oracle(const IntMatrix& v) {
    const std::size_t n = v.size();
    IntMatrix s(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i].size() != n) throw std::invalid_argument("det_oracle: matrix must be square");
        for (std::size_t j = 0; j < n; ++j) s[i][j] = v[i][j] + v[j][i];
    }
    return boost::multiprecision::abs(det_bareiss(std::move(s)));
}

/// Closed-form determinant of K(k_1,...,k_{2g+1}) in terms of the
/// elementary symmetric functions s_m of the k_i:
///   det = sum_{m=0}^{2g} 2^m (2g+1-m) s_m.
[[nodiscard]] inline Int det_pretzel(const std::vector<Int>& ks) {
    if (ks.size() < 3 || ks.size() % 2 == 0)
        throw std::invalid_argument("det_pretzel: need an odd number (>= 3) of strand parameters");
    for (const auto& k : ks)
        if (k < 0) throw std::domain_error("det_pretzel: strand parameters must be >= 0");
    const std::size_t n = ks.size();  // 2g+1
    std::vector<Int> s = elem_sym_all(ks);
    Int total = 0, pow2 = 1;
    for (std::size_t m = 0; m < n; ++m) {
        total += pow2 * Int(n - m) * s[m];
        pow2 *= 2;
    }
    return total;
}

/// For odd positive p_1,...,p_{n+1}, builds the n x n symmetric tridiagonal
/// matrix Q_n with Q_ii = p_i + p_{i+1} and off-diagonal band p_{i+1} (the
/// A + A^T shape of the pretzel Seifert form in the variables p_i = 2k_i+1),
/// and evaluates det Q_n by two independent routes: Bareiss elimination and
/// the elementary symmetric polynomial s_n(p_1..p_{n+1}).  Returns the
/// common value; a disagreement would be a kernel bug and throws.
[[nodiscard]] inline Int det_claim_Q(const std::vector<Int>& ps) {
    if (ps.size() < 2) throw std::invalid_argument("det_claim_Q: need at least two entries");
    for (const auto& p : ps)
        if (p <= 0 || p % 2 == 0) throw std::domain_error("det_claim_Q: entries must be odd and positive");
    const std::size_t n = ps.size() - 1;
    IntMatrix q(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) {
        q[i][i] = ps[i] + ps[i + 1];
        if (i + 1 < n) {
            q[i][i + 1] = ps[i + 1];
            q[i + 1][i] = ps[i + 1];
        }
    }
    Int det = det_bareiss(std::move(q));
    Int sym = elem_sym(n, ps);
    if (det != sym) throw std::logic_error("det_claim_Q: tridiagonal determinant disagrees with s_n");
    return det;
}

}  // namespace sieve
