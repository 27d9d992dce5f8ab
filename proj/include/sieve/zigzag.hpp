#pragma once

// Zig-zag graded sets: odd-length integer sequences (m_1, ..., m_{2n+1})
// whose consecutive differences are odd and alternate in sign (rising into
// even positions, falling out of them).  These encode the relative Maslov
// gradings of one Spin^c summand's generators; the shift operators S_i and
// the average-gap statistic delta_avg drive the chirality obstruction.

#include <sieve/exact.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sieve {

using ZigZag = std::vector<Int>;

/// Parse a sequence as a zig-zag set: odd length 2n+1 with
/// m_{i+1} - m_i an odd positive integer for odd i and m_i - m_{i+1} an odd
/// positive integer for even i (1-indexed).  Returns n, or nullopt.
[[nodiscard]] inline std::optional<long> is_zigzag(const ZigZag& seq) {
    if (seq.empty() || seq.size() % 2 == 0) return std::nullopt;
    for (std::size_t idx = 0; idx + 1 < seq.size(); ++idx) {
        // idx is 0-based; the gap joins 1-indexed positions idx+1 and idx+2.
        Int d = (idx % 2 == 0) ? Int(seq[idx + 1] - seq[idx]) : Int(seq[idx] - seq[idx + 1]);
        if (d <= 0 || d % 2 == 0) return std::nullopt;
    }
    return static_cast<long>(seq.size() / 2);
}

/// The shift operator S_i, 1 <= i <= 2n: adds 2 to every entry after
/// position i when i is odd, subtracts 2 when i is even.
[[nodiscard]] inline ZigZag shift_S(long i, ZigZag seq) {
    if (seq.empty() || seq.size() % 2 == 0)
        throw std::invalid_argument("shift_S: need an odd-length sequence");
    const long two_n = static_cast<long>(seq.size()) - 1;
    if (i < 1 || i > two_n) throw std::out_of_range("shift_S: gap index out of range");
    const Int delta = (i % 2 == 1) ? 2 : -2;
    for (long t = i; t <= two_n; ++t) seq[static_cast<std::size_t>(t)] += delta;
    return seq;
}

/// delta_avg = (m_2 + m_4 + ... + m_{2n}) / n - (m_1 + m_3 + ...) / (n+1),
/// the difference between the average even-position (peak) and odd-position
/// (valley) gradings.  Singletons have no peaks; their value is 0 by
/// convention.
[[nodiscard]] inline Rat delta_avg(const ZigZag& seq) {
    if (seq.empty() || seq.size() % 2 == 0)
        throw std::invalid_argument("delta_avg: need an odd-length sequence");
    const long n = static_cast<long>(seq.size() / 2);
    if (n == 0) return Rat(0);
    Int even_sum = 0, odd_sum = 0;
    for (std::size_t idx = 0; idx < seq.size(); ++idx) {
        if (idx % 2 == 1)
            even_sum += seq[idx];  // 1-indexed even positions
        else
            odd_sum += seq[idx];
    }
    return Rat(even_sum, Int(n)) - Rat(odd_sum, Int(n + 1));
}

[[nodiscard]] inline std::string zigzag_str(const ZigZag& seq) {
    std::string out = "(";
    for (std::size_t idx = 0; idx < seq.size(); ++idx) {
        if (idx) out += ", ";
        out += seq[idx].str();
    }
    return out + ")";
}

}  // namespace sieve
