#pragma once

// Shared random generators for property tests: structurally valid curves and
// reduced slopes, drawn from the same family the acceptance checks use.

#include <sieve/curve.hpp>
#include <sieve/exact.hpp>

#include <random>
#include <vector>

namespace sieve::testing {

/// Random curve with g <= 4 and symmetric counts n_i <= 4.
///
/// With sign_consistent = false, (tau, eps) range over everything the type
/// admits — enough for purely combinatorial identities like the Spin^c
/// partition of the total rank.  With sign_consistent = true the pair is
/// restricted to eps = sign(tau) and the staircase band is kept nonempty
/// (n_i >= 1 for |i| <= |tau|-1), i.e. the shape actual knot curves have;
/// positivity of every per-Spin^c rank is a theorem only there.
inline PulledTightCurve random_curve(std::mt19937& rng, bool sign_consistent = false) {
    std::uniform_int_distribution<long> dg(1, 4);
    const long g = dg(rng);
    std::uniform_int_distribution<long> dtau(-g, g);
    long tau = dtau(rng);
    int eps;
    if (sign_consistent) {
        eps = tau > 0 ? 1 : (tau < 0 ? -1 : 0);
    } else if (tau == 0) {
        eps = std::uniform_int_distribution<int>(-1, 1)(rng);
    } else {
        eps = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? -1 : 1;
    }
    std::uniform_int_distribution<int> dn(0, 4);
    const long t = tau >= 0 ? tau : -tau;
    std::vector<Int> counts(static_cast<std::size_t>(2 * g - 1), Int(0));
    for (long i = 0; i < g; ++i) {
        Int n = dn(rng);
        if (i == 0 && tau > 0 && n == 0) n = 1;
        if (sign_consistent && i <= t - 1 && n == 0) n = 1;
        counts[static_cast<std::size_t>(g - 1 + i)] = n;
        counts[static_cast<std::size_t>(g - 1 - i)] = n;
    }
    return PulledTightCurve::make(g, tau, eps, std::move(counts));
}

/// Random reduced slope with numerator/denominator bounded by `bound`,
/// never 0 or infinity.
inline Slope random_slope(std::mt19937& rng, long bound) {
    std::uniform_int_distribution<long> dp(1, bound), dq(-bound, bound);
    for (;;) {
        long q = dq(rng);
        if (q == 0) continue;
        return reduce_slope(dp(rng), q);
    }
}

}  // namespace sieve::testing
