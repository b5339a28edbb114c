#pragma once

#include "bierpoly/complex.hpp"
#include "bierpoly/facet_list.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace bierpoly {

/// Vertex i (index 1..n) or its barred copy i~ of Bier(K).
struct BierVertex {
    int index = 1;
    bool barred = false;

    friend bool operator==(const BierVertex&, const BierVertex&) = default;
};

/// Dense vertex id: i -> i-1, i~ -> n+i-1.
inline int vertex_id(int n, BierVertex v) { return v.barred ? n + v.index - 1 : v.index - 1; }

inline BierVertex vertex_of(int n, int id) { return id < n ? BierVertex{id + 1, false} : BierVertex{id - n + 1, true}; }

inline std::string vertex_name(int n, int id) {
    auto v = vertex_of(n, id);
    return std::to_string(v.index) + (v.barred ? "~" : "");
}

/// Facet (A, pivot): A in K, A+pivot not in K; barred part is [n] \ (A+pivot).
struct BierFacet {
    Mask losing = 0;  // A, unbarred part
    int pivot = 0;    // 0-based

    Mask barred(int n) const { return full_mask(n) & ~(losing | bit(pivot)); }
    Mask vertex_mask(int n) const { return losing | (barred(n) << n); }

    friend bool operator==(const BierFacet&, const BierFacet&) = default;
    friend bool operator<(const BierFacet& a, const BierFacet& b) {
        return a.losing != b.losing ? a.losing < b.losing : a.pivot < b.pivot;
    }
};

enum class RidgeKind { Lambda, V, X };

inline const char* to_string(RidgeKind k) {
    switch (k) {
        case RidgeKind::Lambda: return "Lambda";
        case RidgeKind::V: return "V";
        case RidgeKind::X: return "X";
    }
    return "?";
}

/// Ridge X1 + {c1,c2} + X2 = [n], X1 in K, X2 in K°. For X-ridges c2 is the
/// pivot with X1+c2 in K.
struct Ridge {
    Mask x1 = 0;
    int c1 = 0, c2 = 0;
    Mask x2 = 0;
    RidgeKind kind = RidgeKind::Lambda;

    Mask vertex_mask(int n) const { return x1 | (x2 << n); }
};

class BierSphere;
inline BierSphere retriangulate(const BierSphere& bl, Mask a);

class BierSphere {
public:
    /// Bier(K) = K *_Delta K°: facets are the boundary pairs (A, A+v).
    static BierSphere of(const SimplicialComplex& k) {
        require_no_ghosts(k);
        BierSphere b;
        b.k_ = k;
        const int n = k.n();
        for (Mask a : k.faces())
            for (int v = 0; v < n; ++v)
                if (!contains(a, v) && !k.contains(a | bit(v))) b.facets_.push_back({a, v});
        std::sort(b.facets_.begin(), b.facets_.end());
        return b;
    }

    /// Accepts an explicit facet list over the 2n Bier vertex ids and checks it
    /// is exactly Bier(K) for the complex K it determines.
    static BierSphere from_facet_list(int n, const FacetList& fl) {
        if (fl.num_vertices != 2 * n) throw std::invalid_argument("facet list is not over 2n Bier vertices");
        std::vector<Mask> losing;
        for (Mask f : fl.facets) {
            Mask a = f & full_mask(n), c = f >> n;
            if ((a & c) != 0) throw std::invalid_argument("facet contains both i and i~");
            if (popcount(a | c) != n - 1) throw std::invalid_argument("facet does not have n-1 vertices");
            losing.push_back(a);
        }
        auto k = SimplicialComplex::from_masks(n, losing);
        auto b = of(k);
        std::vector<Mask> mine, theirs(fl.facets);
        for (const auto& f : b.facets_) mine.push_back(f.vertex_mask(n));
        std::sort(mine.begin(), mine.end());
        std::sort(theirs.begin(), theirs.end());
        if (mine != theirs) throw std::invalid_argument("facet list is not the Bier sphere of any complex");
        return b;
    }

    int n() const { return k_.n(); }
    int dimension() const { return n() - 2; }
    const SimplicialComplex& complex() const { return k_; }
    const std::vector<BierFacet>& facets() const { return facets_; }

    FacetList facet_list() const {
        FacetList fl{2 * n(), {}};
        for (const auto& f : facets_) fl.facets.push_back(f.vertex_mask(n()));
        return fl;
    }

    Mask vertices() const { return facet_list().vertices(); }

    friend bool operator==(const BierSphere& a, const BierSphere& b) {
        return a.n() == b.n() && a.facets_ == b.facets_;
    }

private:
    friend BierSphere retriangulate(const BierSphere&, Mask);

    SimplicialComplex k_;
    std::vector<BierFacet> facets_;
};

inline BierSphere bier_sphere(const SimplicialComplex& k) { return BierSphere::of(k); }

/// All ridges with their Lambda / V / X classification; the empty ridge of
/// the 0-sphere (n = 2) is excluded.
inline std::vector<Ridge> ridges(const BierSphere& b) {
    const auto& k = b.complex();
    const int n = k.n();
    std::vector<Ridge> out;
    for (int c1 = 0; c1 < n; ++c1)
        for (int c2 = c1 + 1; c2 < n; ++c2) {
            Mask rest = full_mask(n) & ~(bit(c1) | bit(c2));
            for_each_subset(rest, [&](Mask x1) {
                Mask x2 = rest & ~x1;
                if (x1 == 0 && x2 == 0) return;
                if (!k.contains(x1) || k.contains(x1 | bit(c1) | bit(c2))) return;
                bool in1 = k.contains(x1 | bit(c1)), in2 = k.contains(x1 | bit(c2));
                Ridge r{x1, c1, c2, x2, RidgeKind::Lambda};
                if (in1 && in2) {
                    r.kind = RidgeKind::Lambda;
                } else if (!in1 && !in2) {
                    r.kind = RidgeKind::V;
                } else {
                    r.kind = RidgeKind::X;
                    if (in1) std::swap(r.c1, r.c2);
                }
                out.push_back(r);
            });
        }
    std::sort(out.begin(), out.end(), [](const Ridge& a, const Ridge& b) {
        return std::tie(a.x1, a.c1, a.c2) < std::tie(b.x1, b.c1, b.c2);
    });
    return out;
}

/// The two facets of Bier(K) containing the ridge.
inline std::pair<BierFacet, BierFacet> incident_facets(const SimplicialComplex& k, const Ridge& r) {
    std::vector<BierFacet> fs;
    for (auto [c, other] : {std::pair{r.c1, r.c2}, std::pair{r.c2, r.c1}}) {
        if (k.contains(r.x1 | bit(c)))
            fs.push_back({r.x1 | bit(c), other});
        else
            fs.push_back({r.x1, c});
    }
    return {fs[0], fs[1]};
}

inline std::vector<long> f_vector(const BierSphere& b) { return f_vector(b.facet_list()); }

inline OrientedFacets orient(const BierSphere& b) { return orient(b.facet_list()); }

/// Bier(L + {A}) from Bier(L): removes (A\i) + A^c~ for i in A and adds
/// A + (A+i)^c~ for i not in A.
inline BierSphere retriangulate(const BierSphere& bl, Mask a) {
    const auto& l = bl.complex();
    const int n = l.n();
    if (!is_subset(a, full_mask(n))) throw std::invalid_argument("face has vertices outside the ground set");
    if (l.contains(a)) throw std::invalid_argument("face " + format_set(a) + " is already in L");
    if (popcount(a) < 2) throw std::invalid_argument("new face " + format_set(a) + " would be a ghost vertex of L");
    if (a == full_mask(n)) throw std::invalid_argument("adding the whole ground set makes the complex improper");
    for (int i : elements(a))
        if (!l.contains(a & ~bit(i)))
            throw std::invalid_argument("L + " + format_set(a) + " is not downward closed");
    std::vector<Mask> facets = l.facets();
    facets.push_back(a);
    auto k = SimplicialComplex::from_masks(n, std::move(facets));

    std::vector<BierFacet> out;
    for (const auto& f : bl.facets())
        if (!(contains(a, f.pivot) && (f.losing | bit(f.pivot)) == a)) out.push_back(f);
    for (int i = 0; i < n; ++i)
        if (!contains(a, i)) out.push_back({a, i});
    std::sort(out.begin(), out.end());

    BierSphere result;
    result.k_ = std::move(k);
    result.facets_ = std::move(out);
    return result;
}

}  // namespace bierpoly
