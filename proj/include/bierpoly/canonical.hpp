#pragma once

#include "bierpoly/bits.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bierpoly {

/// A family of subsets of {0..num_vertices-1}; used for canonical labeling of
/// complexes (facets of K) and of spheres (facets of Bier(K)).
struct SetSystem {
    int num_vertices = 0;
    std::vector<Mask> sets;
};

namespace detail {

// Colors are ranks: equal color means same cell, order of cells is canonical.
inline int refine(const SetSystem& sys, std::vector<int>& color) {
    const int n = sys.num_vertices;
    int num_colors = 0;
    {
        std::vector<int> sorted = color;
        std::sort(sorted.begin(), sorted.end());
        num_colors = static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }
    while (true) {
        std::vector<std::vector<int>> set_sig(sys.sets.size());
        for (std::size_t s = 0; s < sys.sets.size(); ++s) {
            for (int v : elements(sys.sets[s])) set_sig[s].push_back(color[v]);
            std::sort(set_sig[s].begin(), set_sig[s].end());
        }
        using VertexSig = std::pair<int, std::vector<std::vector<int>>>;
        std::vector<VertexSig> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) sig[v].first = color[v];
        for (std::size_t s = 0; s < sys.sets.size(); ++s)
            for (int v : elements(sys.sets[s])) sig[v].second.push_back(set_sig[s]);
        for (auto& s : sig) std::sort(s.second.begin(), s.second.end());
        std::vector<VertexSig> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        int fresh = static_cast<int>(uniq.size());
        if (fresh == num_colors) return num_colors;
        num_colors = fresh;
    }
}

inline std::vector<Mask> relabel(const SetSystem& sys, const std::vector<int>& perm) {
    std::vector<Mask> out;
    out.reserve(sys.sets.size());
    for (Mask s : sys.sets) {
        Mask t = 0;
        for (int v : elements(s)) t |= bit(perm[v]);
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline void search(const SetSystem& sys, std::vector<int> color, std::optional<std::vector<Mask>>& best,
                   std::vector<int>& best_perm) {
    const int n = sys.num_vertices;
    int num_colors = refine(sys, color);
    if (num_colors == n) {
        auto code = relabel(sys, color);
        if (!best || code < *best) {
            best = std::move(code);
            best_perm = color;
        }
        return;
    }
    // First non-singleton cell in canonical order.
    std::vector<int> cell_size(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) ++cell_size[color[v]];
    int target = 0;
    while (cell_size[target] < 2) ++target;
    for (int v = 0; v < n; ++v) {
        if (color[v] != target) continue;
        std::vector<int> child = color;
        for (int u = 0; u < n; ++u)
            if (child[u] > target || (child[u] == target && u != v)) ++child[u];
        search(sys, std::move(child), best, best_perm);
    }
}

}  // namespace detail

/// Permutation `perm` (vertex -> canonical position) such that two set systems
/// are isomorphic iff their relabeled sorted set lists coincide.
inline std::vector<int> canonical_labeling(const SetSystem& sys) {
    std::optional<std::vector<Mask>> best;
    std::vector<int> perm;
    detail::search(sys, std::vector<int>(static_cast<std::size_t>(sys.num_vertices), 0), best, perm);
    return perm;
}

/// Byte-string label, equal iff the systems are isomorphic.
inline std::string canonical_label(const SetSystem& sys) {
    auto perm = canonical_labeling(sys);
    auto code = detail::relabel(sys, perm);
    std::string out = "v" + std::to_string(sys.num_vertices) + ":";
    char buf[24];
    for (Mask m : code) {
        std::snprintf(buf, sizeof buf, "%llx.", static_cast<unsigned long long>(m));
        out += buf;
    }
    return out;
}

}  // namespace bierpoly
