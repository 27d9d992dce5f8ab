#pragma once

// Outcome type shared by all obstruction checks.  A check either rules the
// surgery pair out (Obstructed), finds its equations satisfied
// (ConsistentWith), defers to a published classification (ByCitation), or
// cannot decide (Inconclusive).  lhs/rhs carry the two sides of whichever
// relation was decisive, and detail holds named extras for reporting.

#include <sieve/exact.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sieve {

enum class Status { Obstructed, ConsistentWith, Inconclusive, ByCitation };

[[nodiscard]] inline const char* to_string(Status s) {
    switch (s) {
        case Status::Obstructed: return "obstructed";
        case Status::ConsistentWith: return "consistent";
        case Status::Inconclusive: return "inconclusive";
        case Status::ByCitation: return "by-citation";
    }
    return "unknown";
}

struct Verdict {
    Status status = Status::Inconclusive;
    std::string rule;
    std::optional<std::string> citation;
    std::optional<Rat> lhs;
    std::optional<Rat> rhs;
    std::vector<std::pair<std::string, std::string>> detail;

    [[nodiscard]] bool obstructed() const { return status == Status::Obstructed; }

    Verdict& with(std::string key, std::string value) {
        detail.emplace_back(std::move(key), std::move(value));
        return *this;
    }

    [[nodiscard]] static Verdict make(Status st, std::string rule_name) {
        Verdict v;
        v.status = st;
        v.rule = std::move(rule_name);
        return v;
    }

    [[nodiscard]] static Verdict comparison(Status st, std::string rule_name, Rat l, Rat r) {
        Verdict v = make(st, std::move(rule_name));
        v.lhs = std::move(l);
        v.rhs = std::move(r);
        return v;
    }

    [[nodiscard]] static Verdict cite(std::string rule_name, std::string where) {
        Verdict v = make(Status::ByCitation, std::move(rule_name));
        v.citation = std::move(where);
        return v;
    }
};

}  // namespace sieve
