#pragma once

// Textual knot-family descriptors for the command-line front end:
//
//   pretzel:k1,k2,...      odd-pretzel K(k1,...,k_{2g+1}), twists 2k_i+1
//   doubletwist:k,g        double twist knot J(-(2k+1), 2g)
//   whitehead:a2,tau,n     Whitehead double D_+(K, n), companion data a2/tau
//   thin:det,tau           thin knot with the given determinant and tau
//   lspace:g               genus-g L-space knot (one vertical per level)
//
// Structural problems (unknown family, wrong arity, non-integer tokens)
// throw std::invalid_argument with position information; value problems
// (negative twists, impossible determinants) surface as std::domain_error
// from the model constructors.

#include <sieve/curve.hpp>
#include <sieve/exact.hpp>
#include <sieve/invariants.hpp>

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sieve {

/// A parsed family descriptor: the family keyword plus its integer
/// parameters, still unvalidated at the value level.
struct FamilyKnot {
    std::string family;
    std::vector<Int> params;
    friend bool operator==(const FamilyKnot&, const FamilyKnot&) = default;
};

namespace detail {
/// Parses one signed decimal integer; `what` names the token in errors.
[[nodiscard]] inline Int parse_int_token(const std::string& tok, const std::string& what) {
    std::size_t i = 0;
    if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) ++i;
    if (i == tok.size())
        throw std::invalid_argument("spec: expected an integer for " + what + ", got \"" + tok + "\"");
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9')
            throw std::invalid_argument("spec: expected an integer for " + what + ", got \"" + tok +
                                        "\" (bad character at position " + std::to_string(i) + ")");
    return Int(tok[0] == '+' ? tok.substr(1) : tok);
}

[[nodiscard]] inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        out.push_back(s.substr(start, comma == std::string::npos ? comma : comma - start));
        if (comma == std::string::npos) return out;
        start = comma + 1;
    }
}
}  // namespace detail

/// Parses "family:i1,i2,..." into a FamilyKnot, enforcing the arity of each
/// family.  All failures here are parse errors (std::invalid_argument).
[[nodiscard]] inline FamilyKnot parse_knot_spec(const std::string& s) {
    const std::size_t colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("spec: expected \"family:params\", missing ':' in \"" + s + "\"");
    FamilyKnot fk;
    fk.family = s.substr(0, colon);
    const std::string body = s.substr(colon + 1);
    if (body.empty())
        throw std::invalid_argument("spec: family \"" + fk.family + "\" needs parameters after ':'");
    std::size_t idx = 0;
    for (const std::string& tok : detail::split_commas(body))
        fk.params.push_back(detail::parse_int_token(tok, "parameter " + std::to_string(++idx)));

    auto want = [&](std::size_t arity, const char* shape) {
        if (fk.params.size() != arity)
            throw std::invalid_argument("spec: " + fk.family + " takes " + shape + ", got " +
                                        std::to_string(fk.params.size()) + " parameter(s)");
    };
    if (fk.family == "pretzel") {
        if (fk.params.size() < 3 || fk.params.size() % 2 == 0)
            throw std::invalid_argument("spec: pretzel takes an odd number (>= 3) of twist parameters, got " +
                                        std::to_string(fk.params.size()));
    } else if (fk.family == "doubletwist") {
        want(2, "exactly 2 parameters (k, g)");
    } else if (fk.family == "whitehead") {
        want(3, "exactly 3 parameters (a2, tau, n)");
    } else if (fk.family == "thin") {
        want(2, "exactly 2 parameters (det, tau)");
    } else if (fk.family == "lspace") {
        want(1, "exactly 1 parameter (g)");
    } else {
        throw std::invalid_argument("spec: unknown family \"" + fk.family +
                                    "\" (expected pretzel, doubletwist, whitehead, thin or lspace)");
    }
    return fk;
}

/// Parses a surgery slope: "p/q", a bare integer "p", or "inf".  Signs are
/// accepted on either component; the result is canonicalized (p >= 0, q
/// carries the sign).  Parse failures throw std::invalid_argument.
[[nodiscard]] inline Slope parse_slope(const std::string& s) {
    if (s == "inf") return {1, 0};
    const std::size_t slash = s.find('/');
    Int p, q;
    if (slash == std::string::npos) {
        p = detail::parse_int_token(s, "slope numerator");
        q = 1;
    } else {
        p = detail::parse_int_token(s.substr(0, slash), "slope numerator");
        q = detail::parse_int_token(s.substr(slash + 1), "slope denominator");
    }
    if (p == 0 && q == 0) throw std::domain_error("slope: 0/0 is not a slope");
    return reduce_slope(p, q);
}

/// The invariant package the descriptor resolves to.  Value-level problems
/// (negative twists, impossible determinants) throw std::domain_error.
[[nodiscard]] inline InvariantPackage package_for(const FamilyKnot& fk) {
    if (fk.family == "pretzel") return pretzel_package(fk.params);
    if (fk.family == "doubletwist") return double_twist_package(fk.params[0], fk.params[1]);
    if (fk.family == "whitehead") return whitehead_package(fk.params[0], fk.params[1], fk.params[2]);
    if (fk.family == "thin") {
        const Int& det = fk.params[0];
        if (fk.params[1] < std::numeric_limits<long>::min() || fk.params[1] > std::numeric_limits<long>::max())
            throw std::domain_error("thin: tau out of range");
        const long tau = fk.params[1].convert_to<long>();
        PulledTightCurve c = curve_from_thin(det, tau);  // validates (det, tau)
        InvariantPackage pkg;
        pkg.family = "thin";
        pkg.genus = c.genus();
        pkg.tau = tau;
        pkg.eps = tau > 0 ? 1 : (tau < 0 ? -1 : 0);
        pkg.V = c.V();
        pkg.det = det;
        return pkg;
    }
    if (fk.family == "lspace") {
        if (fk.params[0] < 1 || fk.params[0] > 1000) throw std::domain_error("lspace: need 1 <= g <= 1000");
        const long g = fk.params[0].convert_to<long>();
        InvariantPackage pkg;
        pkg.family = "lspace";
        pkg.genus = g;
        pkg.tau = g;
        pkg.eps = 1;
        pkg.V = Int(2 * g - 1);
        pkg.lspace_knot = true;
        return pkg;
    }
    throw std::invalid_argument("spec: unknown family \"" + fk.family + "\"");
}

/// The pulled-tight curve the descriptor resolves to, when the family
/// determines one.  Whitehead doubles have unknown V/det, hence no curve.
[[nodiscard]] inline std::optional<PulledTightCurve> curve_for(const FamilyKnot& fk) {
    if (fk.family == "pretzel") return curve_from_pretzel(fk.params);
    if (fk.family == "doubletwist") {
        InvariantPackage pkg = double_twist_package(fk.params[0], fk.params[1]);  // validates (k, g)
        return curve_from_thin(*pkg.det, pkg.genus);
    }
    if (fk.family == "whitehead") return std::nullopt;
    if (fk.family == "thin") {
        InvariantPackage pkg = package_for(fk);
        return curve_from_thin(*pkg.det, static_cast<long>(pkg.tau));
    }
    if (fk.family == "lspace") {
        InvariantPackage pkg = package_for(fk);  // validates g
        return curve_lspace(pkg.genus);
    }
    throw std::invalid_argument("spec: unknown family \"" + fk.family + "\"");
}

}  // namespace sieve
