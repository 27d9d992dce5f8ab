#pragma once

// Conway polynomials: exact extraction from a Seifert matrix, and closed
// forms for the T(2,n) torus family and the double twist knots
// J(-(2k+1), 2g) = K(k, 0, ..., 0).

#include <sieve/exact.hpp>
#include <sieve/polynomial.hpp>
#include <sieve/seifert.hpp>

#include <stdexcept>
#include <vector>

namespace sieve {

/// Conway polynomial nabla(z) from a 2g x 2g Seifert matrix V, via
/// P(w) = det(wV - V^T) evaluated exactly at 2g+1 integer points, Lagrange
/// interpolation, the palindromic symmetry w^{2g} P(1/w) = P(w), and the
/// change of variable t^s + t^{-s} = Q_s(z^2 + 2) with Q_0 = 2, Q_1 = y,
/// Q_{s+1} = y Q_s - Q_{s-1}.  Normalized so nabla(0) = +1; inputs whose
/// symmetrized form is not unimodular (not a knot Seifert matrix) are
/// rejected.
[[nodiscard]] inline IntPoly conway_from_seifert(const IntMatrix& v) {
    const std::size_t n = v.size();
    if (n % 2 != 0) throw std::domain_error("conway_from_seifert: Seifert matrix of a knot has even rank");
    for (const auto& row : v)
        if (row.size() != n) throw std::invalid_argument("conway_from_seifert: matrix must be square");

    // Interpolate P(w) = det(wV - V^T), degree <= n, through w = 0..n.
    std::vector<Rat> xs, ys;
    for (std::size_t w = 0; w <= n; ++w) {
        IntMatrix m(n, std::vector<Int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = Int(w) * v[i][j] - v[j][i];
        xs.emplace_back(w);
        ys.emplace_back(det_bareiss(std::move(m)));
    }
    std::vector<Rat> p(n + 1, Rat(0));  // coefficients of P
    for (std::size_t i = 0; i <= n; ++i) {
        // Lagrange basis polynomial for node xs[i], scaled by ys[i].
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= xs[j] * basis[d];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        for (std::size_t d = 0; d < basis.size(); ++d) p[d] += ys[i] * basis[d] / denom;
    }
    std::vector<Int> pc(n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
        if (den(p[d]) != 1) throw std::logic_error("conway_from_seifert: non-integral interpolation");
        pc[d] = num(p[d]);
    }
    for (std::size_t d = 0; d <= n; ++d)
        if (pc[d] != pc[n - d]) throw std::logic_error("conway_from_seifert: det(wV - V^T) not palindromic");

    // Delta(t) = a_0 + sum_{s>=1} a_s (t^s + t^{-s}) with a_s = P_{n/2+s};
    // substitute t^s + t^{-s} = Q_s(y), y = z^2 + 2.
    const std::size_t h = n / 2;
    const IntPoly y(std::vector<Int>{2, 0, 1});  // z^2 + 2
    IntPoly nabla(std::vector<Int>{pc[h]});
    IntPoly qa(std::vector<Int>{2});  // Q_0
    IntPoly qb = y;                   // Q_1
    for (std::size_t s = 1; s <= h; ++s) {
        nabla = nabla + pc[h + s] * qb;  // qb == Q_s here
        IntPoly qn = y * qb - qa;
        qa = qb;
        qb = qn;
    }

    Int c0 = nabla.coeff(0);
    if (c0 == 1) return nabla;
    if (c0 == -1) return Int(-1) * nabla;
    throw std::domain_error("conway_from_seifert: matrix is not a knot Seifert matrix (det(V+V^T) not odd-unimodular at z=0)");
}

/// Conway polynomial of the (2,n) torus link/knot, n >= 1:
///   n = 2g+1 (knot):  sum_j C(g+j, 2j) z^{2j}
///   n = 2g   (link):  sum_{j>=1} C(g+j-1, 2j-1) z^{2j-1}
[[nodiscard]] inline IntPoly conway_torus_link(const Int& n) {
    if (n < 1) throw std::domain_error("conway_torus_link: need n >= 1");
    std::vector<Int> c;
    if (n % 2 == 1) {
        Int g = (n - 1) / 2;
        c.assign(static_cast<std::size_t>(2 * g.convert_to<long>()) + 1, Int(0));
        for (Int j = 0; j <= g; ++j) c[static_cast<std::size_t>((2 * j).convert_to<long>())] = binomial(g + j, 2 * j);
    } else {
        Int g = n / 2;
        c.assign(static_cast<std::size_t>((2 * g - 1).convert_to<long>()) + 1, Int(0));
        for (Int j = 1; j <= g; ++j)
            c[static_cast<std::size_t>((2 * j - 1).convert_to<long>())] = binomial(g + j - 1, 2 * j - 1);
    }
    return IntPoly(std::move(c));
}

/// Conway polynomial of the double twist knot J(-(2k+1), 2g), k >= 0, g >= 1:
/// nabla_{T(2,2g+1)} + k z nabla_{T(2,2g)}.
[[nodiscard]] inline IntPoly conway_double_twist(const Int& k, const Int& g) {
    if (g < 1) throw std::domain_error("conway_double_twist: need g >= 1");
    if (k < 0) throw std::domain_error("conway_double_twist: need k >= 0");
    return conway_torus_link(2 * g + 1) + k * conway_torus_link(2 * g).times_x();
}

}  // namespace sieve
