#pragma once

// Exact intersection pairing between the pulled-tight curve and the line
// lifts of a surgery slope p/q.  A lift indexed by j in Z/p crosses the
// boundary circle mu at heights { m/q + 1/2 + eps : m = j mod p } for a
// symbolic infinitesimal eps > 0; each wrap contributes the vertical
// multiplicity at its height band plus (possibly) one crossing with the
// diagonal component.  Everything is integer/rational arithmetic — no
// geometry is ever approximated.

#include <sieve/curve.hpp>
#include <sieve/exact.hpp>

#include <stdexcept>
#include <vector>

namespace sieve {

/// Total rank of HF-hat of p/q-surgery: |p - q(2*tau - eps)| + |q| V.
/// The 0-slope on an eps = 0 curve is excluded (the formula undercounts it).
[[nodiscard]] inline Int total_rank(const PulledTightCurve& c, const Slope& r) {
    if (r.p == 0 && c.eps() == 0)
        throw std::domain_error("total_rank: slope 0 is excluded when eps = 0");
    return boost::multiprecision::abs(r.p - r.q * c.slope_s()) +
           boost::multiprecision::abs(r.q) * c.V();
}

/// Per-Spin^c ranks, indexed by the lift class j = 0..p-1.  Requires p >= 1.
[[nodiscard]] inline std::vector<Int> spinc_ranks(const PulledTightCurve& c, const Slope& r) {
    if (r.p <= 0) throw std::domain_error("spinc_ranks: need p >= 1");
    const long p = r.p.convert_to<long>();
    std::vector<Int> rank(static_cast<std::size_t>(p), Int(0));
    if (r.q == 0) {
        // Infinity surgery: only the closing component of gamma_0 crosses mu.
        rank[0] = 1;
        return rank;
    }
    const Int q = r.q;
    const long g = c.genus();
    auto lift_of = [&](const Int& m) -> std::size_t {
        Int j = m % p;
        if (j < 0) j += p;
        return static_cast<std::size_t>(j.convert_to<long>());
    };

    // Vertical segments: a wrap at height h = m/q + 1/2 + eps meets the
    // stack at its band when h lies strictly inside (-g + 1/2, g - 1/2);
    // with the tie-break this is exactly -g <= m/q < g - 1.
    if (g >= 1) {
        Int m_lo, m_hi;
        if (q > 0) {
            m_lo = -g * q;
            m_hi = (g - 1) * q - 1;
        } else {
            m_lo = (g - 1) * q + 1;
            m_hi = -g * q;
        }
        for (Int m = m_lo; m <= m_hi; ++m) {
            Int level = level_of(EpsRat(Rat(m) / Rat(q) + Rat(1, 2), 1));
            rank[lift_of(m)] += c.n(level.convert_to<long>());
        }
    }

    // Diagonal component: the wrap from (0, h) to (1, h + p/q) crosses the
    // segment from (0, -D) to (1, D), D = tau - eps/2, exactly when
    // (h + D)(h + p/q - D) < 0, i.e. h strictly between -D and D - p/q.
    // With h = m/q + 1/2 + eps this pins an exact integer range for m.
    const Rat d = c.diag_D();
    const Rat pq = Rat(r.p) / Rat(q);
    Rat b1 = -d, b2 = d - pq;
    if (b2 < b1) std::swap(b1, b2);
    // m/q >= b1 - 1/2 (boundary admitted by eps) and m/q < b2 - 1/2.
    const Rat lo = b1 - Rat(1, 2), hi = b2 - Rat(1, 2);
    Int m1, m2;
    if (q > 0) {
        m1 = ceil_rat(Rat(q) * lo);
        m2 = ceil_rat(Rat(q) * hi) - 1;
    } else {
        m1 = floor_rat(Rat(q) * hi) + 1;
        m2 = floor_rat(Rat(q) * lo);
    }
    for (Int m = m1; m <= m2; ++m) rank[lift_of(m)] += 1;

    return rank;
}

/// Rank of a single lift; indices are canonicalized mod p.
[[nodiscard]] inline Int rank_of_lift(const PulledTightCurve& c, const Slope& r, Int j) {
    std::vector<Int> all = spinc_ranks(c, r);
    j %= r.p;
    if (j < 0) j += r.p;
    return all[static_cast<std::size_t>(j.convert_to<long>())];
}

/// For tau = g > 0 and slope > 2g - 1: every per-Spin^c rank is at most
/// max_i n_i.  Returns the (always-true, by the theorem) comparison so that
/// the test suite can treat a false as a kernel bug.
[[nodiscard]] inline bool lemma_pos_holds(const PulledTightCurve& c, const Slope& r) {
    if (!(c.tau() == c.genus() && c.tau() > 0))
        throw std::domain_error("lemma_pos_holds: needs tau = g > 0");
    if (r.q <= 0 || r.p <= r.q * (2 * c.genus() - 1))
        throw std::domain_error("lemma_pos_holds: needs slope > 2g - 1");
    const Int cap = c.max_n();
    for (const Int& x : spinc_ranks(c, r))
        if (x > cap) return false;
    return true;
}

/// For tau > 0 and negative slope: some per-Spin^c rank is at least
/// max_i n_i + 1.
[[nodiscard]] inline bool lemma_neg_holds(const PulledTightCurve& c, const Slope& r) {
    if (c.tau() <= 0) throw std::domain_error("lemma_neg_holds: needs tau > 0");
    if (r.q >= 0) throw std::domain_error("lemma_neg_holds: needs a negative slope");
    const Int bar = c.max_n() + 1;
    for (const Int& x : spinc_ranks(c, r))
        if (x >= bar) return true;
    return false;
}

}  // namespace sieve
