#pragma once

// Command-line front end: subcommands invariants | rank | obstruct |
// classify | scan, JSON reports (schema "surgery-sieve/1") or plain text.
//
// Exit codes: 0 success (including "obstructed" results), 2 parse error
// (bad flags, malformed specs or slopes), 3 domain error (inputs outside a
// model's domain).  The dispatcher never lets an exception escape.
//
// Output is deterministic: JSON keys are sorted, rationals are emitted as
// canonical "n/d" strings (plain integers when the denominator is 1), and
// integers that do not fit in 64 bits fall back to decimal strings.

#include <sieve/invariants.hpp>
#include <sieve/knotspec.hpp>
#include <sieve/lspace.hpp>
#include <sieve/obstruct.hpp>
#include <sieve/pairing.hpp>
#include <sieve/verdict.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sieve::cli {

using nlohmann::json;

inline constexpr const char* kSchema = "surgery-sieve/1";

/// Integer as a JSON number when it fits in 64 bits, else a decimal string.
[[nodiscard]] inline json json_int(const Int& x) {
    static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
    static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
    if (x < lo || x > hi) return x.str();
    return x.convert_to<std::int64_t>();
}

/// Rational as a JSON number when integral, else a canonical "n/d" string.
[[nodiscard]] inline json json_rat(const Rat& x) {
    if (den(x) == 1) return json_int(num(x));
    return x.str();
}

[[nodiscard]] inline json verdict_json(const Verdict& v) {
    json j;
    j["status"] = to_string(v.status);
    j["rule"] = v.rule;
    if (v.citation) j["citation"] = *v.citation;
    if (v.lhs) j["lhs"] = json_rat(*v.lhs);
    if (v.rhs) j["rhs"] = json_rat(*v.rhs);
    if (!v.detail.empty()) {
        json d;
        for (const auto& [key, value] : v.detail) d[key] = value;
        j["detail"] = d;
    }
    return j;
}

namespace detail {
/// Thin curves with tau < 0 are stored as their mirrors, so rank queries
/// flip the slope sign (conjugation relabels Spin^c; totals and multisets
/// are unaffected).
[[nodiscard]] inline Slope oriented_slope(const InvariantPackage& pkg, const Slope& r) {
    if (pkg.tau < 0) return {r.p, -r.q};
    return r;
}

[[nodiscard]] inline std::string ranks_str(std::vector<Int> rk) {
    std::sort(rk.begin(), rk.end());
    std::string s = "[";
    for (std::size_t i = 0; i < rk.size(); ++i) {
        if (i) s += ", ";
        s += rk[i].str();
    }
    return s + "]";
}
}  // namespace detail

[[nodiscard]] inline json invariants_report(const FamilyKnot& fk) {
    const InvariantPackage pkg = package_for(fk);
    json j;
    j["schema"] = kSchema;
    j["command"] = "invariants";
    j["family"] = pkg.family;
    j["g"] = pkg.genus;
    j["tau"] = pkg.tau;
    j["eps"] = pkg.eps;
    if (pkg.V) j["V"] = json_int(*pkg.V);
    if (pkg.a2) j["a2"] = json_int(*pkg.a2);
    if (pkg.a4) j["a4"] = json_int(*pkg.a4);
    if (pkg.v3) j["v3"] = json_rat(*pkg.v3);
    if (pkg.det) j["det"] = json_int(*pkg.det);
    if (pkg.lspace_knot) j["lspace_knot"] = *pkg.lspace_knot;
    return j;
}

[[nodiscard]] inline json rank_report(const FamilyKnot& fk, const Slope& slope, bool want_spinc) {
    const InvariantPackage pkg = package_for(fk);
    const std::optional<PulledTightCurve> curve = curve_for(fk);
    if (!curve)
        throw std::domain_error("rank: the " + fk.family +
                                " family does not determine a curve model (V and det unknown)");
    const Slope r = detail::oriented_slope(pkg, slope);
    const Int total = total_rank(*curve, r);
    json j;
    j["schema"] = kSchema;
    j["command"] = "rank";
    j["spec"] = fk.family;
    j["slope"] = slope.str();
    j["total"] = json_int(total);
    if (r.p >= 1) {
        // End-to-end check, always on: the per-Spin^c ranks must partition
        // the closed-form total.
        const std::vector<Int> per = spinc_ranks(*curve, r);
        Int sum = 0;
        for (const Int& x : per) sum += x;
        if (sum != total) throw std::logic_error("rank: per-Spin^c ranks do not sum to the total");
        if (want_spinc) {
            json arr = json::array();
            for (const Int& x : per) arr.push_back(json_int(x));
            j["per_spinc"] = arr;
        }
    } else if (want_spinc) {
        throw std::domain_error("rank: 0-surgery has infinitely many Spin^c structures; --spinc needs p >= 1");
    }
    return j;
}

namespace detail {
/// The obstruction battery shared by `obstruct` and `scan`: every check
/// whose inputs are available runs; each returns a Verdict.  q and qp are
/// the two surgery denominators over the common p (already reduced).
[[nodiscard]] inline std::vector<Verdict> battery(const FamilyKnot& fk, const InvariantPackage& pkg,
                                                  const std::optional<PulledTightCurve>& curve, const Int& p,
                                                  const Int& q, const Int& qp) {
    std::vector<Verdict> out;
    const bool opposite = (q > 0 && qp < 0) || (q < 0 && qp > 0);
    const Int qpos = q > 0 ? q : qp;
    const Int qneg = q > 0 ? qp : q;

    // Per-Spin^c rank multisets must agree (conjugation permutes Spin^c and
    // mirroring preserves ranks, so any cosmetic pair has equal multisets).
    if (curve && p >= 1) {
        std::vector<Int> r1 = spinc_ranks(*curve, oriented_slope(pkg, {p, q}));
        std::vector<Int> r2 = spinc_ranks(*curve, oriented_slope(pkg, {p, qp}));
        std::sort(r1.begin(), r1.end());
        std::sort(r2.begin(), r2.end());
        Int t1 = 0, t2 = 0;
        for (const Int& x : r1) t1 += x;
        for (const Int& x : r2) t2 += x;
        Verdict v = Verdict::comparison(r1 == r2 ? Status::ConsistentWith : Status::Obstructed,
                                        "spinc-rank-multiset", Rat(t1), Rat(t2));
        if (r1 != r2) v.with("ranks-1", ranks_str(r1)).with("ranks-2", ranks_str(r2));
        out.push_back(std::move(v));
    }

    // Opposite-sign surgery equation (needs tau = g and V).
    if (opposite && pkg.V && pkg.tau == pkg.genus && pkg.genus > 0)
        out.push_back(thm_main_check(pkg.genus, pkg.tau, *pkg.V, p, qpos, qneg));

    // Finite-type equation (any sign pattern, q != q').
    if (pkg.a2 && pkg.a4 && pkg.v3 && q != qp) out.push_back(thm_ft_check(*pkg.a2, *pkg.a4, *pkg.v3, p, q, qp));

    // Slope-free combination of the two equations above.
    if (opposite && pkg.V && pkg.a2 && pkg.a4 && pkg.v3 && pkg.tau == pkg.genus && pkg.genus > 0 && *pkg.v3 != 0)
        out.push_back(cor_combo_check(pkg.genus, *pkg.V, *pkg.a2, *pkg.a4, *pkg.v3));

    // Same-sign pairs demand an L-space knot.
    if (!opposite && pkg.lspace_knot) {
        const bool is_l = *pkg.lspace_knot;
        out.push_back(Verdict::make(is_l ? Status::ConsistentWith : Status::Obstructed, "same-sign-lspace-gate")
                          .with("note", is_l ? "same-sign pairs require an L-space knot; this family qualifies"
                                             : "same-sign pairs require an L-space knot; this knot is not one"));
    }

    // Graded refinement for the L-space family: applies exactly to the
    // rank-balanced pairs (p, q), (p, -q + p/(2g-1)).
    if (fk.family == "lspace" && opposite) {
        const long g = pkg.genus;
        const Int w = 2 * Int(g) - 1;
        if (g >= 2 && p % w == 0 && qpos * w > p && gcd_int(p, qpos) == 1 && qneg == -qpos + p / w)
            out.push_back(thm_lspace_verify(g, p, qpos));
    }
    return out;
}

[[nodiscard]] inline const char* summarize(const std::vector<Verdict>& verdicts) {
    bool consistent = false;
    for (const Verdict& v : verdicts) {
        if (v.status == Status::Obstructed) return "obstructed";
        if (v.status == Status::ConsistentWith) consistent = true;
    }
    return consistent ? "consistent" : "inconclusive";
}
}  // namespace detail

[[nodiscard]] inline json obstruct_report(const FamilyKnot& fk, const Slope& s1, const Slope& s2) {
    if (s1.is_infinite() || s2.is_infinite())
        throw std::domain_error("obstruct: chiral comparisons need finite slopes");
    if (s1 == s2) throw std::domain_error("obstruct: the two slopes must be distinct");
    if (s1.p != s2.p)
        throw std::domain_error("obstruct: |H_1| of the surgeries must match, so the reduced numerators "
                                "must be equal; got " +
                                s1.str() + " and " + s2.str());
    if (s1.p == 0) throw std::domain_error("obstruct: 0-surgery pairs are outside the model");

    const InvariantPackage pkg = package_for(fk);
    const std::optional<PulledTightCurve> curve = curve_for(fk);
    const std::vector<Verdict> verdicts = detail::battery(fk, pkg, curve, s1.p, s1.q, s2.q);

    json j;
    j["schema"] = kSchema;
    j["command"] = "obstruct";
    j["spec"] = fk.family;
    j["slopes"] = json::array({s1.str(), s2.str()});
    json arr = json::array();
    for (const Verdict& v : verdicts) arr.push_back(verdict_json(v));
    j["verdicts"] = arr;
    j["summary"] = detail::summarize(verdicts);
    return j;
}

[[nodiscard]] inline json classify_report(const FamilyKnot& fk) {
    Verdict v = Verdict::make(Status::Inconclusive, "unset");
    if (fk.family == "pretzel") {
        v = classify_pretzel(fk.params);
    } else if (fk.family == "doubletwist") {
        InvariantPackage pkg = double_twist_package(fk.params[0], fk.params[1]);  // validates (k, g)
        std::vector<Int> ks(static_cast<std::size_t>(2 * pkg.genus + 1), Int(0));
        ks[0] = fk.params[0];
        v = classify_pretzel(ks);
    } else if (fk.family == "whitehead") {
        v = classify_whitehead(fk.params[0], fk.params[1], fk.params[2]);
    } else {
        throw std::domain_error("classify: no classifier for the " + fk.family +
                                " family (classification covers pretzel, doubletwist and whitehead)");
    }
    json j;
    j["schema"] = kSchema;
    j["command"] = "classify";
    j["spec"] = fk.family;
    j["verdict"] = verdict_json(v);
    return j;
}

[[nodiscard]] inline json scan_report(const FamilyKnot& fk, const Int& p_max) {
    json j;
    j["schema"] = kSchema;
    j["command"] = "scan";
    j["spec"] = fk.family;
    j["p_max"] = json_int(p_max);
    if (p_max <= 0) {  // nothing to enumerate; any well-formed spec is fine
        j["candidates"] = 0;
        j["survivors"] = json::array();
        return j;
    }
    const InvariantPackage pkg = package_for(fk);
    if (!(pkg.tau == pkg.genus && pkg.genus > 0))
        throw std::domain_error("scan: the candidate filter needs a tau = g family");
    if (!pkg.V) throw std::domain_error("scan: the candidate filter needs V, unknown for the " + fk.family +
                                        " family");
    const std::optional<PulledTightCurve> curve = curve_for(fk);
    const std::vector<MainPair> pairs = enumerate_main_pairs(pkg.genus, *pkg.V, p_max);
    json survivors = json::array();
    for (const MainPair& mp : pairs) {
        const std::vector<Verdict> verdicts = detail::battery(fk, pkg, curve, mp.p, mp.q, mp.qp);
        bool dead = false;
        for (const Verdict& v : verdicts)
            if (v.status == Status::Obstructed) dead = true;
        if (!dead) {
            json s;
            s["p"] = json_int(mp.p);
            s["q"] = json_int(mp.q);
            s["q_prime"] = json_int(mp.qp);
            json arr = json::array();
            for (const Verdict& v : verdicts) arr.push_back(verdict_json(v));
            s["verdicts"] = arr;
            survivors.push_back(std::move(s));
        }
    }
    j["candidates"] = pairs.size();
    j["survivors"] = survivors;
    return j;
}

/// Plain-text rendering: one "key: value" line per scalar, nested objects
/// and arrays indented.  Deterministic because the JSON keys are sorted.
inline void render_text(const json& j, std::ostream& os, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() && value.front().is_object())) {
                os << pad << key << ":\n";
                render_text(value, os, indent + 1);
            } else {
                os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& item : j.items()) {
            os << pad << "-\n";
            render_text(item.value(), os, indent + 1);
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

/// Runs one CLI invocation.  `args` excludes the program name; the rendered
/// report (or error) is written to `out`.  Returns the process exit code:
/// 0 success, 2 parse error, 3 domain error.  Never throws.
inline int run_cli(const std::vector<std::string>& args, std::string& out) {
    CLI::App app{"surgery-sieve: exact surgery obstruction reports for thin knot families"};
    app.require_subcommand(1);

    std::string spec_s, slope1_s, slope2_s;
    bool want_spinc = false, want_text = false, want_json = false;
    long long p_max = 100;

    auto add_output_flags = [&](CLI::App* c) {
        c->add_flag("--json", want_json, "emit a JSON report (default)");
        c->add_flag("--text", want_text, "emit a plain-text report");
    };
    CLI::App* c_inv = app.add_subcommand("invariants", "report the family's invariant package");
    c_inv->add_option("spec", spec_s, "knot family descriptor")->required();
    add_output_flags(c_inv);
    CLI::App* c_rank = app.add_subcommand("rank", "total (and per-Spin^c) rank of a surgery");
    c_rank->add_option("spec", spec_s, "knot family descriptor")->required();
    c_rank->add_option("slope", slope1_s, "surgery slope p/q (or \"inf\")")->required();
    c_rank->add_flag("--spinc", want_spinc, "include the per-Spin^c rank list");
    add_output_flags(c_rank);
    CLI::App* c_obs = app.add_subcommand("obstruct", "run the obstruction battery on a slope pair");
    c_obs->add_option("spec", spec_s, "knot family descriptor")->required();
    c_obs->add_option("slope1", slope1_s, "first surgery slope")->required();
    c_obs->add_option("slope2", slope2_s, "second surgery slope")->required();
    add_output_flags(c_obs);
    CLI::App* c_cls = app.add_subcommand("classify", "family-level classification verdict");
    c_cls->add_option("spec", spec_s, "knot family descriptor")->required();
    add_output_flags(c_cls);
    CLI::App* c_scan = app.add_subcommand("scan", "enumerate candidate pairs and report survivors");
    c_scan->add_option("spec", spec_s, "knot family descriptor")->required();
    c_scan->add_option("--p-max", p_max, "largest surgery numerator to enumerate");
    add_output_flags(c_scan);

    auto emit = [&](const json& j) {
        if (want_text) {
            std::ostringstream os;
            render_text(j, os);
            out = os.str();
        } else {
            out = j.dump(2);
        }
    };
    auto emit_error = [&](const char* kind, const std::string& message) {
        json j;
        j["schema"] = kSchema;
        j["error"] = message;
        j["error_kind"] = kind;
        emit(j);
    };

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out = app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        emit_error("parse", e.what());
        return 2;
    }

    try {
        if (app.got_subcommand(c_inv)) {
            emit(invariants_report(parse_knot_spec(spec_s)));
        } else if (app.got_subcommand(c_rank)) {
            emit(rank_report(parse_knot_spec(spec_s), parse_slope(slope1_s), want_spinc));
        } else if (app.got_subcommand(c_obs)) {
            emit(obstruct_report(parse_knot_spec(spec_s), parse_slope(slope1_s), parse_slope(slope2_s)));
        } else if (app.got_subcommand(c_cls)) {
            emit(classify_report(parse_knot_spec(spec_s)));
        } else if (app.got_subcommand(c_scan)) {
            emit(scan_report(parse_knot_spec(spec_s), Int(p_max)));
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        emit_error("parse", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        emit_error("domain", e.what());
        return 3;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 3;
    }
}

}  // namespace sieve::cli
