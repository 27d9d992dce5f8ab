#pragma once

// Dense integer polynomials in one variable, elementary symmetric functions,
// and exact binomials.  Degrees stay tiny (Conway polynomials of desk-scale
// knots), so a plain coefficient vector is the right representation.

#include <sieve/exact.hpp>

#include <cstddef>
#include <vector>

namespace sieve {

/// Polynomial with exact integer coefficients, c[i] multiplying x^i.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    [[nodiscard]] bool is_zero() const { return c.empty(); }
    /// Degree, with deg(0) = -1.
    [[nodiscard]] long degree() const { return static_cast<long>(c.size()) - 1; }
    [[nodiscard]] Int coeff(std::size_t i) const { return i < c.size() ? c[i] : Int(0); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const Int& s, const IntPoly& a) {
        std::vector<Int> r = a.c;
        for (auto& x : r) x *= s;
        return IntPoly(std::move(r));
    }
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    [[nodiscard]] Int eval(const Int& x) const {
        Int v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }
    [[nodiscard]] Rat eval(const Rat& x) const {
        Rat v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * x + Rat(c[i]);
        return v;
    }
    /// For a polynomial with only even-degree terms, evaluate it as a
    /// polynomial in x^2 at the given value of x^2.
    [[nodiscard]] Int eval_at_x_squared(const Int& x2) const {
        Int v = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (i % 2 == 1) {
                if (c[i] != 0) throw std::domain_error("eval_at_x_squared: polynomial has odd-degree terms");
                continue;
            }
            v = v * x2 + c[i];
        }
        return v;
    }

    /// Shift by one variable power: x * this.
    [[nodiscard]] IntPoly times_x() const {
        if (is_zero()) return {};
        std::vector<Int> r(c.size() + 1, Int(0));
        for (std::size_t i = 0; i < c.size(); ++i) r[i + 1] = c[i];
        return IntPoly(std::move(r));
    }
};

/// Monomial coefficient * x^deg.
[[nodiscard]] inline IntPoly monomial(Int coefficient, std::size_t deg) {
    std::vector<Int> c(deg + 1, Int(0));
    c[deg] = std::move(coefficient);
    return IntPoly(std::move(c));
}

/// All elementary symmetric functions s_0..s_n of the given values, by the
/// one-row recurrence s_m(x_1..x_{j+1}) = s_m(x_1..x_j) + x_{j+1} s_{m-1}(x_1..x_j).
[[nodiscard]] inline std::vector<Int> elem_sym_all(const std::vector<Int>& xs) {
    std::vector<Int> s(xs.size() + 1, Int(0));
    s[0] = 1;
    for (std::size_t j = 0; j < xs.size(); ++j)
        for (std::size_t m = j + 1; m >= 1; --m) s[m] += xs[j] * s[m - 1];
    return s;
}

/// The n-th elementary symmetric polynomial of the given values; 1 for
/// n = 0, 0 for n greater than the number of values.
[[nodiscard]] inline Int elem_sym(std::size_t n, const std::vector<Int>& xs) {
    if (n > xs.size()) return 0;
    return elem_sym_all(xs)[n];
}

/// Exact binomial coefficient, 0 for k < 0 or k > n.
[[nodiscard]] inline Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int kk = k;
    if (n - k < kk) kk = n - k;
    Int r = 1;
    for (Int i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        r /= i;  // exact at every step: r is C(n-kk+i, i)
    }
    return r;
}

}  // namespace sieve
