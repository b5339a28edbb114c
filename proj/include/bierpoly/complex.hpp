#pragma once

#include "bierpoly/bits.hpp"
#include "bierpoly/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace bierpoly {

constexpr int kMaxGroundSet = 24;

/// A simplicial complex K on the ground set [n] (internally {0..n-1}): the
/// losing coalitions of a simple game. Stored by its facets; faces are the
/// downward closure, always including the empty face.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Facets given as bitmasks; dominated sets are dropped.
    static SimplicialComplex from_masks(int n, std::vector<Mask> sets) {
        if (n <= 0) throw std::invalid_argument("ground set size must be positive");
        if (n > kMaxGroundSet) throw std::invalid_argument("ground set size " + std::to_string(n) + " exceeds 24");
        for (Mask s : sets)
            if (!is_subset(s, full_mask(n)))
                throw std::invalid_argument("face " + format_set(s) + " has a vertex outside [" + std::to_string(n) + "]");
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        std::vector<Mask> maximal;
        for (Mask s : sets) {
            bool dominated = std::any_of(sets.begin(), sets.end(), [&](Mask t) { return t != s && is_subset(s, t); });
            if (!dominated) maximal.push_back(s);
        }
        if (maximal.empty()) maximal.push_back(0);
        SimplicialComplex k;
        k.n_ = n;
        k.facets_ = std::move(maximal);
        if (n <= 16) {
            k.member_.assign(std::size_t{1} << n, false);
            for (Mask f : k.facets_) for_each_subset(f, [&](Mask a) { k.member_[a] = true; });
        }
        return k;
    }

    int n() const { return n_; }
    const std::vector<Mask>& facets() const { return facets_; }

    bool contains(Mask a) const {
        if (!member_.empty()) return a < member_.size() && member_[a];
        return std::any_of(facets_.begin(), facets_.end(), [&](Mask f) { return is_subset(a, f); });
    }

    /// All faces in increasing (size, mask) order.
    std::vector<Mask> faces() const {
        std::vector<Mask> out;
        for (Mask f : facets_) for_each_subset(f, [&](Mask a) { out.push_back(a); });
        sort_by_size(out);
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::vector<Mask> minimal_nonfaces() const {
        std::vector<Mask> out;
        for (Mask s = 0; s <= full_mask(n_); ++s) {
            if (contains(s)) continue;
            bool minimal = true;
            for (int i : elements(s))
                if (!contains(s & ~bit(i))) {
                    minimal = false;
                    break;
                }
            if (minimal) out.push_back(s);
        }
        sort_by_size(out);
        return out;
    }

    bool proper() const { return !contains(full_mask(n_)); }

    std::size_t num_faces() const { return faces().size(); }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

    static void sort_by_size(std::vector<Mask>& v) {
        std::sort(v.begin(), v.end(), [](Mask a, Mask b) {
            return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
        });
    }

private:
    int n_ = 0;
    std::vector<Mask> facets_;
    std::vector<bool> member_;
};

/// build(n, facets) with 1-based vertex ids.
inline SimplicialComplex build(int n, const std::vector<std::vector<int>>& facets) {
    if (n <= 0) throw std::invalid_argument("ground set size must be positive");
    std::vector<Mask> sets;
    for (const auto& f : facets) {
        Mask m = 0;
        for (int v : f) {
            if (v < 1 || v > n)
                throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
            m |= bit(v - 1);
        }
        sets.push_back(m);
    }
    return SimplicialComplex::from_masks(n, std::move(sets));
}

/// The simple game whose losing coalitions form K.
class SimpleGame {
public:
    explicit SimpleGame(SimplicialComplex k) : k_(std::move(k)) {}
    int players() const { return k_.n(); }
    bool winning(Mask coalition) const { return !k_.contains(coalition); }
    std::vector<Mask> minimal_winning() const { return k_.minimal_nonfaces(); }
    const SimplicialComplex& losing() const { return k_; }

private:
    SimplicialComplex k_;
};

struct ComplexReport {
    bool proper = false;
    Mask ghost_vertices = 0;  // {v} not a face
    Mask dual_ghosts = 0;     // [n]\{v} a face: v~ is absent from Bier(K)
};

inline ComplexReport validate(const SimplicialComplex& k) {
    ComplexReport r;
    r.proper = k.proper();
    for (int v = 0; v < k.n(); ++v) {
        if (!k.contains(bit(v))) r.ghost_vertices |= bit(v);
        if (k.contains(full_mask(k.n()) & ~bit(v))) r.dual_ghosts |= bit(v);
    }
    return r;
}

inline void require_proper(const SimplicialComplex& k) {
    if (!k.proper()) throw std::invalid_argument("complex is not proper (contains the whole ground set)");
}

inline void require_no_ghosts(const SimplicialComplex& k) {
    require_proper(k);
    if (Mask g = validate(k).ghost_vertices; g != 0)
        throw std::invalid_argument("complex has ghost vertices " + format_set(g));
}

/// K° = {A : [n]\A not in K}; its facets are complements of minimal non-faces.
inline SimplicialComplex alexander_dual(const SimplicialComplex& k) {
    require_proper(k);
    std::vector<Mask> facets;
    for (Mask s : k.minimal_nonfaces()) facets.push_back(full_mask(k.n()) & ~s);
    return SimplicialComplex::from_masks(k.n(), std::move(facets));
}

/// Relabels vertex i as perm[i] (0-based).
inline SimplicialComplex permute(const SimplicialComplex& k, const std::vector<int>& perm) {
    std::vector<Mask> sets;
    for (Mask f : k.facets()) {
        Mask g = 0;
        for (int v : elements(f)) g |= bit(perm[v]);
        sets.push_back(g);
    }
    return SimplicialComplex::from_masks(k.n(), std::move(sets));
}

/// Equal labels iff the complexes are isomorphic under a ground-set permutation.
inline std::string canonical_form(const SimplicialComplex& k) {
    SetSystem sys{k.n(), k.facets()};
    return "n" + std::to_string(k.n()) + "|" + canonical_label(sys);
}

}  // namespace bierpoly
