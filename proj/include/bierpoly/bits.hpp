#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace bierpoly {

/// Subset of a ground set, one bit per element (element i is bit i).
using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool contains(Mask set, int i) { return (set >> i) & 1U; }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::vector<int> elements(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    while (m != 0) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline Mask mask_of(const std::vector<int>& elems) {
    Mask m = 0;
    for (int e : elems) m |= bit(e);
    return m;
}

/// Calls f(sub) for every subset of `m`, including the empty set and m itself.
template <class F>
void for_each_subset(Mask m, F&& f) {
    Mask sub = m;
    while (true) {
        f(sub);
        if (sub == 0) break;
        sub = (sub - 1) & m;
    }
}

/// "{1,3,4}" with 1-based element names.
inline std::string format_set(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int e : elements(m)) {
        if (!first) s += ",";
        s += std::to_string(e + 1);
        first = false;
    }
    return s + "}";
}

}  // namespace bierpoly
