#pragma once

// Exact integer / rational arithmetic used throughout the library, plus the
// two small extensions the curve pairing needs: rationals perturbed by a
// symbolic infinitesimal (for tie-breaking against half-integer grid lines)
// and canonical surgery slopes.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace sieve {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

[[nodiscard]] inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
[[nodiscard]] inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Floor of n/d for exact integers, d != 0.
[[nodiscard]] inline Int floor_div(const Int& n, const Int& d) {
    if (d == 0) throw std::domain_error("floor_div: zero divisor");
    Int q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

/// Ceiling of n/d for exact integers, d != 0.
[[nodiscard]] inline Int ceil_div(const Int& n, const Int& d) {
    return -floor_div(-n, d);
}

[[nodiscard]] inline Int floor_rat(const Rat& r) { return floor_div(num(r), den(r)); }
[[nodiscard]] inline Int ceil_rat(const Rat& r) { return ceil_div(num(r), den(r)); }

[[nodiscard]] inline int sign_of(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
[[nodiscard]] inline int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

/// A rational number plus a symbolic multiple of an infinitesimal eps > 0:
/// value + eps_coeff * eps.  Total order is lexicographic, which is exactly
/// the order of v + eps_coeff*e for all sufficiently small real e > 0.
struct EpsRat {
    Rat value;
    Int eps_coeff;

    EpsRat() : value(0), eps_coeff(0) {}
    EpsRat(Rat v) : value(std::move(v)), eps_coeff(0) {}  // NOLINT(google-explicit-constructor)
    EpsRat(Rat v, Int e) : value(std::move(v)), eps_coeff(std::move(e)) {}

    friend bool operator==(const EpsRat& a, const EpsRat& b) {
        return a.value == b.value && a.eps_coeff == b.eps_coeff;
    }
    friend std::strong_ordering operator<=>(const EpsRat& a, const EpsRat& b) {
        if (a.value != b.value) return a.value < b.value ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.eps_coeff != b.eps_coeff)
            return a.eps_coeff < b.eps_coeff ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend EpsRat operator+(const EpsRat& a, const EpsRat& b) {
        return EpsRat(a.value + b.value, a.eps_coeff + b.eps_coeff);
    }
    friend EpsRat operator-(const EpsRat& a, const EpsRat& b) {
        return EpsRat(a.value - b.value, a.eps_coeff - b.eps_coeff);
    }
    friend EpsRat operator-(const EpsRat& a) { return EpsRat(-a.value, -a.eps_coeff); }

    /// Scale by an exact rational.  Only integer eps coefficients are kept,
    /// so the scale factor must keep eps_coeff integral.
    friend EpsRat operator*(const Rat& c, const EpsRat& a) {
        Rat e = c * Rat(a.eps_coeff);
        if (den(e) != 1) throw std::domain_error("EpsRat: non-integral eps coefficient");
        return EpsRat(c * a.value, num(e));
    }
    friend EpsRat operator/(const EpsRat& a, const Rat& c) {
        if (c == 0) throw std::domain_error("EpsRat: division by zero");
        return (Rat(1) / c) * a;
    }
};

/// Index of the unit height band (i-1/2, i+1/2) containing h, i.e. the
/// nearest integer to h.  Heights exactly on a boundary i+1/2 are resolved
/// by the infinitesimal part; a boundary height with eps_coeff == 0 has no
/// well-defined band and is rejected.
[[nodiscard]] inline Int level_of(const EpsRat& h) {
    Rat t = h.value + Rat(1, 2);
    if (den(t) == 1) {
        // h.value sits exactly on a band boundary.
        if (h.eps_coeff > 0) return num(t);
        if (h.eps_coeff < 0) return num(t) - 1;
        throw std::domain_error("level_of: height on a band boundary with no tie-break");
    }
    return floor_rat(t);
}

/// A surgery slope p/q in canonical form: gcd(p,q)=1 and p >= 0, with p > 0
/// unless the slope is 0/1.  Infinity is 1/0.
struct Slope {
    Int p;
    Int q;

    [[nodiscard]] bool is_infinite() const { return q == 0; }
    [[nodiscard]] Rat value() const {
        if (q == 0) throw std::domain_error("Slope: infinite slope has no rational value");
        return Rat(p) / Rat(q);
    }
    [[nodiscard]] std::string str() const {
        if (q == 0) return "inf";
        return p.str() + "/" + q.str();
    }
    friend bool operator==(const Slope&, const Slope&) = default;
};

/// Canonicalize a slope fraction: divide by gcd and normalize signs so that
/// p >= 0 (q carries the sign).  (0,0) is not a slope.
[[nodiscard]] inline Slope reduce_slope(Int p, Int q) {
    if (p == 0 && q == 0) throw std::domain_error("reduce_slope: 0/0 is not a slope");
    if (q == 0) return {1, 0};
    if (p == 0) return {0, 1};
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(p), boost::multiprecision::abs(q));
    p /= g;
    q /= g;
    if (p < 0) { p = -p; q = -q; }
    return {p, q};
}

[[nodiscard]] inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(boost::multiprecision::abs(a), boost::multiprecision::abs(b));
}

}  // namespace sieve
