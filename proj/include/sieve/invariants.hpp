#pragma once

// Closed-form invariant packages (g, tau, V, a2, a4, v3, det, ...) for the
// knot families the obstruction engine understands.  v3 is normalized so
// that the right-handed trefoil has v3 = 1.

#include <sieve/conway.hpp>
#include <sieve/curve.hpp>
#include <sieve/exact.hpp>
#include <sieve/polynomial.hpp>
#include <sieve/seifert.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sieve {

struct InvariantPackage {
    std::string family;
    long genus = 0;
    long tau = 0;
    int eps = 0;
    std::optional<Int> V;
    std::optional<Int> a2;
    std::optional<Int> a4;
    std::optional<Rat> v3;
    std::optional<Int> det;
    std::optional<bool> lspace_knot;
    std::optional<Int> conway_degree;
    std::optional<Int> signature;
};

/// Invariants of the pretzel knot K(k_1,...,k_{2g+1}), entries >= 0:
/// a2 = g(g+1)/2 + g s1 + s2,
/// v3 = (g(g+1)(2g+1)/3 + g(2g+1) s1 + g s1^2 + 2g s2 + s1 s2 + s3) / 2,
/// V from the determinant closed form, a4 from the Seifert-matrix oracle.
/// These knots are alternating with signature -2g, so tau = g and eps = 1;
/// they are L-space knots exactly when every k_i = 0 (torus knots).
[[nodiscard]] inline InvariantPackage pretzel_package(const std::vector<Int>& ks) {
    InvariantPackage pkg;
    pkg.family = "pretzel";
    Int det = det_pretzel(ks);  // validates the tuple shape
    const long g = (static_cast<long>(ks.size()) - 1) / 2;
    const Int gi(g);
    Int s1 = elem_sym(1, ks), s2 = elem_sym(2, ks), s3 = elem_sym(3, ks);
    pkg.genus = g;
    pkg.tau = g;
    pkg.eps = 1;
    pkg.det = det;
    pkg.V = (det + 2 * gi - 3) / 2;
    pkg.a2 = gi * (gi + 1) / 2 + gi * s1 + s2;
    pkg.v3 = Rat(gi * (gi + 1) * (2 * gi + 1) / 3 + gi * (2 * gi + 1) * s1 + gi * s1 * s1 +
                 2 * gi * s2 + s1 * s2 + s3, 2);
    pkg.a4 = conway_from_seifert(seifert_pretzel(ks)).coeff(4);
    bool all_zero = true;
    for (const auto& k : ks)
        if (k != 0) all_zero = false;
    pkg.lspace_knot = all_zero;
    pkg.conway_degree = 2 * gi;
    pkg.signature = -2 * gi;
    return pkg;
}

/// Invariants of the double twist knot J(-(2k+1), 2g) = K(k, 0, ..., 0):
/// a2 = g(g+1)/2 + kg, v3 = (g(g+1)(2g+1)/3 + g(2g+1)k + gk^2)/2,
/// V = 2g - 1 + 2gk, a4 = C(g+2,4) + k C(g+1,3).
[[nodiscard]] inline InvariantPackage double_twist_package(const Int& k, const Int& g) {
    if (g < 1) throw std::domain_error("double_twist_package: need g >= 1");
    if (k < 0) throw std::domain_error("double_twist_package: need k >= 0");
    InvariantPackage pkg;
    pkg.family = "doubletwist";
    pkg.genus = g.convert_to<long>();
    pkg.tau = pkg.genus;
    pkg.eps = 1;
    pkg.a2 = g * (g + 1) / 2 + k * g;
    pkg.v3 = Rat(g * (g + 1) * (2 * g + 1) / 3 + g * (2 * g + 1) * k + g * k * k, 2);
    pkg.V = 2 * g - 1 + 2 * g * k;
    pkg.a4 = binomial(g + 2, 4) + k * binomial(g + 1, 3);
    pkg.det = 2 * g + 1 + 4 * g * k;
    pkg.lspace_knot = (k == 0);
    pkg.conway_degree = 2 * g;
    pkg.signature = -2 * g;
    return pkg;
}

/// Invariants of the positively-clasped Whitehead double D_+(K, n), given
/// the companion's a2 and tau.  The Conway polynomial is 1 - n z^2, so
/// a2 = -n and a4 = 0; v3 = -2 a2(K) + (n^2 - n)/2; tau is 1 when
/// n < 2 tau(K) and 0 otherwise.  V and det depend on more of the companion
/// than this package sees, so they stay unknown; a genus-1 L-space knot
/// would have to look like a trefoil (a2 = 1), which pins lspace_knot
/// everywhere except n = -1, and n = 0 may be the unknot.
[[nodiscard]] inline InvariantPackage whitehead_package(const Int& a2_companion, const Int& tau_companion,
                                                        const Int& n) {
    InvariantPackage pkg;
    pkg.family = "whitehead";
    pkg.genus = 1;
    pkg.tau = (n < 2 * tau_companion) ? 1 : 0;
    pkg.eps = static_cast<int>(pkg.tau);
    pkg.a2 = -n;
    pkg.a4 = 0;
    pkg.v3 = Rat(-2 * a2_companion) + Rat(n * n - n, 2);
    if (n == -1 || n == 0)
        pkg.lspace_knot = std::nullopt;
    else
        pkg.lspace_knot = false;
    pkg.conway_degree = (n != 0) ? 2 : 0;
    return pkg;
}

}  // namespace sieve
