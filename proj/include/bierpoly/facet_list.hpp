#pragma once

#include "bierpoly/bits.hpp"
#include "bierpoly/canonical.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace bierpoly {

/// A pure simplicial complex given by its facets over vertices {0..num_vertices-1}.
struct FacetList {
    int num_vertices = 0;
    std::vector<Mask> facets;

    Mask vertices() const {
        Mask m = 0;
        for (Mask f : facets) m |= f;
        return m;
    }
};

class NotPseudomanifold : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotOrientable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Face counts (f_0, ..., f_top) of the downward closure, empty face excluded.
inline std::vector<long> f_vector(const FacetList& fl) {
    std::unordered_set<Mask> faces;
    int top = 0;
    for (Mask f : fl.facets) {
        top = std::max(top, popcount(f));
        for_each_subset(f, [&](Mask a) {
            if (a != 0) faces.insert(a);
        });
    }
    std::vector<long> fv(static_cast<std::size_t>(std::max(top, 1)), 0);
    for (Mask a : faces) ++fv[static_cast<std::size_t>(popcount(a) - 1)];
    return fv;
}

inline long euler_characteristic(const std::vector<long>& fv) {
    long chi = 0;
    for (std::size_t i = 0; i < fv.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * fv[i];
    return chi;
}

/// Sign of the permutation taking the sorted order of `tuple` to `tuple`.
inline int permutation_sign(const std::vector<int>& tuple) {
    int inversions = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] > tuple[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

struct OrientedFacet {
    std::vector<int> vertices;  // increasing vertex order
    int sign = 1;
};

using OrientedFacets = std::vector<OrientedFacet>;

/// Ridge -> incident (facet index, position of the omitted vertex).
inline std::unordered_map<Mask, std::vector<std::pair<int, int>>> ridge_incidence(const FacetList& fl) {
    std::unordered_map<Mask, std::vector<std::pair<int, int>>> inc;
    for (std::size_t f = 0; f < fl.facets.size(); ++f) {
        auto verts = elements(fl.facets[f]);
        for (std::size_t pos = 0; pos < verts.size(); ++pos)
            inc[fl.facets[f] & ~bit(verts[pos])].push_back({static_cast<int>(f), static_cast<int>(pos)});
    }
    return inc;
}

inline void require_pseudomanifold(const FacetList& fl) {
    for (const auto& [ridge, inc] : ridge_incidence(fl))
        if (inc.size() != 2)
            throw NotPseudomanifold("ridge with " + std::to_string(inc.size()) + " incident facets");
}

/// Coherent orientation under the boundary convention
/// d(a_1..a_k) = sum_i (-1)^i (a_1..^a_i..a_k): every ridge receives opposite
/// induced signs from its two facets. The first facet gets sign +1.
inline OrientedFacets orient(const FacetList& fl) {
    auto inc = ridge_incidence(fl);
    for (const auto& [ridge, list] : inc)
        if (list.size() != 2) throw NotPseudomanifold("ridge with " + std::to_string(list.size()) + " incident facets");
    const std::size_t m = fl.facets.size();
    std::vector<int> sign(m, 0);
    OrientedFacets out(m);
    for (std::size_t f = 0; f < m; ++f) out[f].vertices = elements(fl.facets[f]);
    if (m == 0) return out;
    std::queue<int> todo;
    sign[0] = 1;
    todo.push(0);
    while (!todo.empty()) {
        int f = todo.front();
        todo.pop();
        const auto& verts = out[static_cast<std::size_t>(f)].vertices;
        for (std::size_t pos = 0; pos < verts.size(); ++pos) {
            const auto& list = inc.at(fl.facets[static_cast<std::size_t>(f)] & ~bit(verts[pos]));
            auto [g, gpos] = list[0].first == f ? list[1] : list[0];
            // induced signs: sign[f]*(-1)^pos and sign[g]*(-1)^gpos must cancel
            int want = -sign[static_cast<std::size_t>(f)] * (((static_cast<int>(pos) + gpos) % 2 == 0) ? 1 : -1);
            if (sign[static_cast<std::size_t>(g)] == 0) {
                sign[static_cast<std::size_t>(g)] = want;
                todo.push(g);
            } else if (sign[static_cast<std::size_t>(g)] != want) {
                throw NotOrientable("orientation propagation conflict");
            }
        }
    }
    for (std::size_t f = 0; f < m; ++f) {
        if (sign[f] == 0) throw NotPseudomanifold("facet graph is not connected");
        out[f].sign = sign[f];
    }
    return out;
}

/// Vertex bijections phi (a-vertex -> b-vertex, -1 on vertices absent from a)
/// mapping the facets of `a` exactly onto the facets of `b`. Stops after the
/// first hit unless `find_all`.
inline std::vector<std::vector<int>> facet_isomorphisms(const FacetList& a, const FacetList& b, bool find_all) {
    std::vector<std::vector<int>> found;
    if (a.facets.size() != b.facets.size()) return found;
    auto va = elements(a.vertices()), vb = elements(b.vertices());
    if (va.size() != vb.size()) return found;

    auto profile = [](const FacetList& fl, int nv) {
        std::vector<int> count(static_cast<std::size_t>(nv), 0);
        std::vector<Mask> adj(static_cast<std::size_t>(nv), 0);
        for (Mask f : fl.facets)
            for (int v : elements(f)) {
                ++count[static_cast<std::size_t>(v)];
                adj[static_cast<std::size_t>(v)] |= f & ~bit(v);
            }
        return std::pair{count, adj};
    };
    auto [count_a, adj_a] = profile(a, a.num_vertices);
    auto [count_b, adj_b] = profile(b, b.num_vertices);

    std::unordered_set<Mask> b_facets(b.facets.begin(), b.facets.end());

    // Search order: BFS over the 1-skeleton from the lowest-numbered vertex.
    std::vector<int> order;
    Mask seen = 0;
    for (int start : va) {
        if (contains(seen, start)) continue;
        std::queue<int> q;
        q.push(start);
        seen |= bit(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int u : elements(adj_a[static_cast<std::size_t>(v)] & ~seen)) {
                seen |= bit(u);
                q.push(u);
            }
        }
    }
    std::vector<int> rank(static_cast<std::size_t>(a.num_vertices), -1);
    for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    // Facets to check once their last vertex (in search order) is placed.
    std::vector<std::vector<Mask>> completes(order.size());
    for (Mask f : a.facets) {
        int last = -1;
        for (int v : elements(f)) last = std::max(last, rank[static_cast<std::size_t>(v)]);
        completes[static_cast<std::size_t>(last)].push_back(f);
    }

    std::vector<int> phi(static_cast<std::size_t>(a.num_vertices), -1);
    Mask used = 0;
    std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
        if (depth == order.size()) {
            found.push_back(phi);
            return !find_all;
        }
        int v = order[depth];
        for (int w : vb) {
            if (contains(used, w)) continue;
            if (count_a[static_cast<std::size_t>(v)] != count_b[static_cast<std::size_t>(w)]) continue;
            if (popcount(adj_a[static_cast<std::size_t>(v)]) != popcount(adj_b[static_cast<std::size_t>(w)])) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                int u = order[d];
                bool ea = contains(adj_a[static_cast<std::size_t>(v)], u);
                bool eb = contains(adj_b[static_cast<std::size_t>(w)], phi[static_cast<std::size_t>(u)]);
                ok = ea == eb;
            }
            if (!ok) continue;
            phi[static_cast<std::size_t>(v)] = w;
            used |= bit(w);
            for (Mask f : completes[depth]) {
                Mask img = 0;
                for (int x : elements(f)) img |= bit(phi[static_cast<std::size_t>(x)]);
                if (!b_facets.count(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok && place(depth + 1)) return true;
            used &= ~bit(w);
            phi[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    place(0);
    return found;
}

/// Isomorphism-invariant label of the abstract complex (absent vertices ignored).
inline std::string canonical_label(const FacetList& fl) {
    auto verts = elements(fl.vertices());
    std::vector<int> compact(static_cast<std::size_t>(fl.num_vertices), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) compact[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    SetSystem sys{static_cast<int>(verts.size()), {}};
    for (Mask f : fl.facets) {
        Mask g = 0;
        for (int v : elements(f)) g |= bit(compact[static_cast<std::size_t>(v)]);
        sys.sets.push_back(g);
    }
    return canonical_label(sys);
}

}  // namespace bierpoly
