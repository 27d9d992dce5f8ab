#pragma once

// The pulled-tight model of a knot's immersed curve invariant in the
// punctured cylinder: the data (g, tau, eps, {n_i}) together with the single
// non-vertical (diagonal) component of slope 2*tau - eps.  Constructors for
// the thin-knot families used downstream, plus an explicit piecewise-linear
// realization for intersection counting.

#include <sieve/exact.hpp>
#include <sieve/seifert.hpp>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sieve {

/// The non-vertical component: runs once around the cylinder from
/// (0, -tau + eps/2) to (1, tau - eps/2), rising by the integer slope
/// s = 2*tau - eps.
struct DiagonalSpec {
    Int slope_s;
    Rat y_start;
    Rat y_end;
    friend bool operator==(const DiagonalSpec&, const DiagonalSpec&) = default;
};

/// Immersed-curve data in pulled-tight position.  Only the multiplicities
/// matter for pairing: n_i vertical segments at height band i, one diagonal
/// of slope 2*tau - eps (a horizontal circle when eps = 0 and tau = 0).
/// Heights live strictly between -(g - 1/2) and g - 1/2.
class PulledTightCurve {
public:
    /// Validates the model invariants: eps in {-1,0,1}, eps = 0 forces
    /// tau = 0, |tau| <= g, counts symmetric (n_i = n_{-i}) and supported on
    /// |i| <= g-1, and n_0 >= 1 whenever tau > 0.
    static PulledTightCurve make(long g, long tau, int eps, std::vector<Int> counts) {
        if (g < 0) throw std::domain_error("curve: genus must be nonnegative");
        if (eps < -1 || eps > 1) throw std::domain_error("curve: eps must be -1, 0 or 1");
        if (eps == 0 && tau != 0) throw std::domain_error("curve: eps = 0 forces tau = 0");
        if (tau > g || -tau > g) throw std::domain_error("curve: |tau| must be at most g");
        const std::size_t want = g == 0 ? 0 : static_cast<std::size_t>(2 * g - 1);
        if (counts.size() != want)
            throw std::invalid_argument("curve: vertical counts must cover levels -(g-1)..(g-1)");
        for (const auto& n : counts)
            if (n < 0) throw std::domain_error("curve: vertical counts must be nonnegative");
        PulledTightCurve c;
        c.g_ = g;
        c.tau_ = tau;
        c.eps_ = eps;
        c.counts_ = std::move(counts);
        for (long i = 1; i < g; ++i)
            if (c.n(i) != c.n(-i)) throw std::domain_error("curve: vertical counts must be symmetric");
        if (tau > 0 && c.n(0) < 1) throw std::domain_error("curve: tau > 0 requires n_0 >= 1");
        return c;
    }

    [[nodiscard]] long genus() const { return g_; }
    [[nodiscard]] long tau() const { return tau_; }
    [[nodiscard]] int eps() const { return eps_; }

    /// Vertical multiplicity at level i (0 outside the support band).
    [[nodiscard]] Int n(long i) const {
        if (i <= -g_ || i >= g_) return 0;
        return counts_[static_cast<std::size_t>(i + g_ - 1)];
    }
    [[nodiscard]] Int V() const {
        Int v = 0;
        for (const auto& x : counts_) v += x;
        return v;
    }
    [[nodiscard]] Int max_n() const {
        Int m = 0;
        for (const auto& x : counts_)
            if (x > m) m = x;
        return m;
    }

    /// Integer slope of the diagonal component: s = 2*tau - eps.
    [[nodiscard]] Int slope_s() const { return Int(2) * tau_ - eps_; }
    /// Half of the diagonal's total rise: D = tau - eps/2.
    [[nodiscard]] Rat diag_D() const { return Rat(tau_) - Rat(eps_, 2); }
    [[nodiscard]] DiagonalSpec diagonal() const {
        return {slope_s(), -diag_D(), diag_D()};
    }

private:
    long g_ = 0;
    long tau_ = 0;
    int eps_ = 0;
    std::vector<Int> counts_;
};

/// Figure-eight placement: count of figure-eights per level.  Must be
/// symmetric in the level and supported on |level| <= g-1.
using Fig8Layout = std::vector<std::pair<long, Int>>;

namespace detail {
/// Shared tail of the thin-curve constructors: staircase through levels
/// |i| <= |tau|-1 plus F figure-eights (2 vertical segments each) placed by
/// the layout (default: all at level 0).
inline PulledTightCurve thin_curve(long g, long tau_abs, int eps, const Int& fig8s,
                                   const std::optional<Fig8Layout>& layout) {
    std::vector<Int> counts(g == 0 ? 0 : static_cast<std::size_t>(2 * g - 1), Int(0));
    auto bump = [&](long level, const Int& by) {
        if (level <= -g || level >= g) throw std::domain_error("curve: figure-eight level outside support");
        counts[static_cast<std::size_t>(level + g - 1)] += by;
    };
    for (long i = -(tau_abs - 1); i <= tau_abs - 1; ++i) bump(i, 1);
    if (layout) {
        Int placed = 0;
        for (const auto& [level, cnt] : *layout) {
            if (cnt < 0) throw std::domain_error("curve: negative figure-eight count");
            bump(level, 2 * cnt);
            placed += cnt;
        }
        if (placed != fig8s) throw std::domain_error("curve: figure-eight layout must place exactly F of them");
    } else if (fig8s > 0) {
        bump(0, 2 * fig8s);
    }
    return PulledTightCurve::make(g, tau_abs, eps, std::move(counts));
}
}  // namespace detail

/// Curve of a thin knot with the given determinant and tau.  The mirror is
/// normalized away: the returned curve carries |tau| and eps = sign-of-tau
/// mapped to {0, 1}.  V = (det + 2|tau| - 3)/2 for tau != 0 and (det - 1)/2
/// for tau = 0; the difference V - (2|tau| - 1) is carried by F
/// figure-eights, and (det, tau) pairs for which F is not a nonnegative
/// integer are rejected.
[[nodiscard]] inline PulledTightCurve curve_from_thin(const Int& det, long tau,
                                                      const std::optional<Fig8Layout>& layout = std::nullopt) {
    if (det <= 0 || det % 2 == 0) throw std::domain_error("curve_from_thin: determinant must be odd and positive");
    const long t = tau >= 0 ? tau : -tau;
    Int numer;  // 4F
    if (t != 0) {
        if (det < 2 * t + 1) throw std::domain_error("curve_from_thin: determinant too small for |tau|");
        numer = det - 2 * t - 1;
    } else {
        numer = det - 1;
    }
    if (numer % 4 != 0)
        throw std::domain_error("curve_from_thin: no thin curve with this (det, tau): fractional figure-eight count");
    Int f = numer / 4;
    long g = t != 0 ? t : (det > 1 ? 1 : 0);
    if (layout)  // figure-eights may sit above the staircase; widen the band
        for (const auto& [level, cnt] : *layout)
            if (cnt > 0) g = std::max(g, (level >= 0 ? level : -level) + 1);
    return detail::thin_curve(g, t, t != 0 ? 1 : 0, f, layout);
}

/// Curve of the pretzel knot K(k_1,...,k_{2g+1}): tau = g, eps = 1, and
/// V = g - 3/2 + det/2 with det from the closed form.
[[nodiscard]] inline PulledTightCurve curve_from_pretzel(const std::vector<Int>& ks,
                                                         const std::optional<Fig8Layout>& layout = std::nullopt) {
    const long g = (static_cast<long>(ks.size()) - 1) / 2;
    Int det = det_pretzel(ks);  // validates shape
    Int f = (det - 2 * g - 1) / 4;  // integral for this family
    return detail::thin_curve(g, g, 1, f, layout);
}

/// Curve of an L-space knot of genus g: a single component with tau = g,
/// eps = 1 and exactly one vertical segment per level, so V = 2g - 1.
[[nodiscard]] inline PulledTightCurve curve_lspace(long g) {
    if (g < 1) throw std::domain_error("curve_lspace: need g >= 1");
    std::vector<Int> counts(static_cast<std::size_t>(2 * g - 1), Int(1));
    return PulledTightCurve::make(g, g, 1, std::move(counts));
}

/// One vertical segment of a concrete realization.
struct VerticalSegment {
    Rat x;
    long level;
    Rat y_lo;
    Rat y_hi;
};

/// Concrete pulled-tight position: verticals stacked in x in (3/4, 1), plus
/// either the diagonal component or (eps = 0) a horizontal circle at y = 0.
struct PLRealization {
    std::vector<VerticalSegment> verticals;
    std::optional<DiagonalSpec> diagonal;
    std::optional<Rat> horizontal_height;
};

/// Lay out the curve concretely.  Verticals at level i span
/// (i - 1/2 + clearance, i + 1/2 - clearance) at distinct x-coordinates in
/// (3/4, 1), listed by level then stack position.
[[nodiscard]] inline PLRealization realize_pl(const PulledTightCurve& c, const Rat& clearance) {
    if (clearance <= 0) throw std::domain_error("realize_pl: clearance must be positive");
    if (clearance >= Rat(1, 2)) throw std::domain_error("realize_pl: clearance must leave the band nonempty");
    PLRealization r;
    Int v = c.V();
    Int idx = 0;
    for (long i = -(c.genus() - 1); i <= c.genus() - 1; ++i) {
        for (Int k = 0; k < c.n(i); ++k) {
            Rat x = Rat(1) - Rat(idx + 1) / (Rat(4) * (Rat(v) + 1));
            r.verticals.push_back({x, i, Rat(i) - Rat(1, 2) + clearance, Rat(i) + Rat(1, 2) - clearance});
            ++idx;
        }
    }
    if (c.eps() != 0)
        r.diagonal = c.diagonal();
    else
        r.horizontal_height = Rat(0);
    return r;
}

}  // namespace sieve
