#pragma once

// Slow, independent reference implementations used to cross-check the
// library. Nothing here shares code with the routines under test beyond the
// basic value types.

#include "bierpoly/bierpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using namespace bierpoly;

// Fourier-Motzkin elimination on a homogeneous system a.x (> | >=) 0.
inline bool fm_feasible(const LinearSystem& s) {
    struct Row {
        std::vector<Rational> a;
        bool strict;
        bool operator<(const Row& o) const { return std::tie(a, strict) < std::tie(o.a, o.strict); }
    };
    auto normalize = [](Row r) {
        Rational m = 0;
        for (const auto& x : r.a)
            if (x != 0) {
                m = x < 0 ? Rational(-x) : x;
                break;
            }
        if (m != 0)
            for (auto& x : r.a) x /= m;
        return r;
    };
    std::set<Row> rows;
    for (const auto& r : s.rows) rows.insert(normalize({r.coeffs, r.relation == Relation::Greater}));
    for (std::size_t j = 0; j < s.width(); ++j) {
        std::vector<Row> pos, neg;
        std::set<Row> next;
        for (const auto& r : rows) {
            if (r.a[j] > 0)
                pos.push_back(r);
            else if (r.a[j] < 0)
                neg.push_back(r);
            else
                next.insert(r);
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Row c{std::vector<Rational>(s.width()), p.strict || q.strict};
                for (std::size_t k = 0; k < s.width(); ++k) c.a[k] = -q.a[j] * p.a[k] + p.a[j] * q.a[k];
                next.insert(normalize(c));
            }
        rows = std::move(next);
    }
    for (const auto& r : rows)
        if (r.strict) return false;  // 0 > 0
    return true;
}

// Determinant by cofactor expansion (tiny matrices only).
inline Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Rational total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<Rational>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        Rational t = m[0][c] * cofactor_det(minor);
        total += c % 2 == 0 ? t : Rational(-t);
    }
    return total;
}

struct Hull {
    std::set<Mask> facets;  // over point indices
    std::set<Mask> edges;
};

// Every d-subset spanning a supporting hyperplane gives the facet of all
// points on it; edges are pairs whose common facets cut out exactly them.
inline Hull brute_hull(const std::vector<std::vector<Rational>>& pts) {
    const std::size_t m = pts.size(), d = pts[0].size();
    Hull h;
    std::vector<std::size_t> pick(d);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == d) {
            // normal_k = (-1)^k det(differences with column k removed)
            std::vector<Rational> normal(d);
            bool zero = true;
            for (std::size_t k = 0; k < d; ++k) {
                std::vector<std::vector<Rational>> sub;
                for (std::size_t r = 1; r < d; ++r) {
                    std::vector<Rational> row;
                    for (std::size_t c = 0; c < d; ++c)
                        if (c != k) row.push_back(pts[pick[r]][c] - pts[pick[0]][c]);
                    sub.push_back(row);
                }
                normal[k] = cofactor_det(sub);
                if (k % 2 == 1) normal[k] = -normal[k];
                if (normal[k] != 0) zero = false;
            }
            if (zero) return;
            int side = 0;
            Mask on = 0;
            for (std::size_t p = 0; p < m; ++p) {
                Rational v = 0;
                for (std::size_t c = 0; c < d; ++c) v += normal[c] * (pts[p][c] - pts[pick[0]][c]);
                int sg = v.sign();
                if (sg == 0) {
                    on |= bit(static_cast<int>(p));
                } else if (side == 0) {
                    side = sg;
                } else if (side != sg) {
                    return;
                }
            }
            h.facets.insert(on);
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p + 1; q < m; ++q) {
            Mask pair = bit(static_cast<int>(p)) | bit(static_cast<int>(q));
            Mask meet = full_mask(static_cast<int>(m));
            bool any = false;
            for (Mask f : h.facets)
                if (is_subset(pair, f)) {
                    meet &= f;
                    any = true;
                }
            if (any && meet == pair) h.edges.insert(pair);
        }
    return h;
}

// Lexicographically least sorted facet list over all relabelings.
inline std::vector<Mask> brute_canonical(const SimplicialComplex& k) {
    std::vector<int> perm(static_cast<std::size_t>(k.n()));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Mask> best;
    do {
        std::vector<Mask> img;
        for (Mask f : k.facets()) {
            Mask g = 0;
            for (int v : elements(f)) g |= bit(perm[static_cast<std::size_t>(v)]);
            img.push_back(g);
        }
        std::sort(img.begin(), img.end());
        if (best.empty() || img < best) best = img;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Number of vertex bijections carrying facets of a onto facets of b.
inline std::size_t brute_isomorphism_count(const std::vector<Mask>& a, const std::vector<Mask>& b, int nv) {
    std::set<Mask> target(b.begin(), b.end());
    std::vector<int> perm(static_cast<std::size_t>(nv));
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    do {
        bool ok = a.size() == b.size();
        for (std::size_t i = 0; ok && i < a.size(); ++i) {
            Mask g = 0;
            for (int v : elements(a[i])) g |= bit(perm[static_cast<std::size_t>(v)]);
            ok = target.count(g) > 0;
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Boundary-pair enumeration straight from the definition: A in K, B in K°
// disjoint with |A| + |B| = n - 1.
inline std::set<Mask> brute_bier_facets(const SimplicialComplex& k) {
    const int n = k.n();
    std::set<Mask> out;
    for (Mask a = 0; a <= full_mask(n); ++a)
        for (Mask b = 0; b <= full_mask(n); ++b) {
            if ((a & b) != 0 || popcount(a) + popcount(b) != n - 1) continue;
            bool a_in = k.contains(a);
            bool b_in_dual = !k.contains(full_mask(n) & ~b);
            if (a_in && b_in_dual) out.insert(a | (b << n));
        }
    return out;
}

// All labeled complexes on [n] that contain every singleton and are proper.
inline std::vector<SimplicialComplex> all_labeled_complexes(int n) {
    std::vector<Mask> cand;
    for (Mask s = 0; s < full_mask(n); ++s)
        if (popcount(s) >= 2) cand.push_back(s);
    SimplicialComplex::sort_by_size(cand);
    std::vector<SimplicialComplex> out;
    std::vector<bool> in(std::size_t{1} << n, false);
    in[0] = true;
    for (int v = 0; v < n; ++v) in[bit(v)] = true;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cand.size()) {
            std::vector<Mask> faces;
            for (Mask s = 0; s < in.size(); ++s)
                if (in[s]) faces.push_back(s);
            out.push_back(SimplicialComplex::from_masks(n, faces));
            return;
        }
        rec(i + 1);
        for (int v : elements(cand[i]))
            if (!in[cand[i] & ~bit(v)]) return;
        in[cand[i]] = true;
        rec(i + 1);
        in[cand[i]] = false;
    };
    rec(0);
    return out;
}

}  // namespace oracle
