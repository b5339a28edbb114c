#pragma once

#include "bierpoly/bier.hpp"
#include "bierpoly/complex.hpp"
#include "bierpoly/facet_list.hpp"
#include "bierpoly/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bierpoly {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Labeled points in R^d. Bier realizations use labels "i" and "i~".
struct PointConfiguration {
    int d = 0;
    std::vector<std::string> labels;
    std::vector<Vector> coords;

    std::size_t size() const { return labels.size(); }

    void add(std::string label, Vector x) {
        if (static_cast<int>(x.size()) != d)
            throw std::invalid_argument("point '" + label + "' has " + std::to_string(x.size()) + " coordinates, expected " + std::to_string(d));
        if (find(label)) throw std::invalid_argument("duplicate point label '" + label + "'");
        labels.push_back(std::move(label));
        coords.push_back(std::move(x));
    }

    std::optional<std::size_t> find(const std::string& label) const {
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) return std::nullopt;
        return static_cast<std::size_t>(it - labels.begin());
    }

    std::size_t index_of(const std::string& label) const {
        auto i = find(label);
        if (!i) throw std::invalid_argument("no point labeled '" + label + "'");
        return *i;
    }

    friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;
};

/// Bier vertex id of a label "i" / "i~" over ground set [n].
inline int bier_vertex_of_label(int n, const std::string& label) {
    bool barred = !label.empty() && label.back() == '~';
    std::string digits = barred ? label.substr(0, label.size() - 1) : label;
    std::size_t used = 0;
    int i = 0;
    try {
        i = std::stoi(digits, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (digits.empty() || used != digits.size() || i < 1 || i > n)
        throw std::invalid_argument("'" + label + "' is not a Bier vertex label over [" + std::to_string(n) + "]");
    return vertex_id(n, {i, barred});
}

/// Rays delta_i = e_i - (1/n) sum e_k and barred rays -delta_i of Fan(K).
struct FanRays {
    int n = 0;
    std::vector<Vector> unbarred, barred;
};

inline FanRays fan_rays(int n) {
    FanRays r{n, {}, {}};
    for (int i = 0; i < n; ++i) {
        Vector v(static_cast<std::size_t>(n), Rational(-1, n));
        v[static_cast<std::size_t>(i)] += 1;
        Vector w = v;
        for (auto& c : w) c = -c;
        r.unbarred.push_back(std::move(v));
        r.barred.push_back(std::move(w));
    }
    return r;
}

inline Rational determinant(Matrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

/// Row-reduces in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rational inv = 1 / m[r][c];
        for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Matrix m) { return row_reduce(m).size(); }

/// Sign of det[(p_1,1); ...; (p_{d+1},1)] for the labeled points in order.
inline int orientation_sign(const PointConfiguration& config, const std::vector<std::string>& tuple) {
    if (static_cast<int>(tuple.size()) != config.d + 1)
        throw std::invalid_argument("orientation needs d+1 = " + std::to_string(config.d + 1) + " labels");
    Matrix m;
    for (const auto& label : tuple) {
        Vector row = config.coords[config.index_of(label)];
        row.push_back(1);
        m.push_back(std::move(row));
    }
    return sign(determinant(std::move(m)));
}

/// normal . x <= offset on the whole configuration, with equality on the facet.
struct Hyperplane {
    Vector normal;
    Rational offset;
};

/// Facets and edges of a hull, over point indices of the configuration.
struct FaceLattice {
    int dimension = 0;
    std::size_t num_points = 0;
    std::vector<Mask> facets;
    std::vector<Hyperplane> hyperplanes;  // parallel to facets
    std::vector<std::pair<int, int>> edges;

    FacetList facet_list() const { return {static_cast<int>(num_points), facets}; }
};

namespace detail {

// Hyperplane a.x = b through the given points, or nullopt if they do not
// span a unique one. The normal is scaled to coprime integers.
inline std::optional<Hyperplane> hyperplane_through(const PointConfiguration& c, const std::vector<int>& pts) {
    const auto d = static_cast<std::size_t>(c.d);
    Matrix m;
    for (int p : pts) {
        Vector row = c.coords[static_cast<std::size_t>(p)];
        row.push_back(-1);
        m.push_back(std::move(row));
    }
    auto pivots = row_reduce(m);
    if (pivots.size() != d) return std::nullopt;
    std::size_t free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
    Vector sol(d + 1, Rational(0));
    sol[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = -m[r][free_col];
    Integer l = 1;
    for (const auto& x : sol) {
        const Integer& den = boost::multiprecision::denominator(x);
        l = l / boost::multiprecision::gcd(l, den) * den;
    }
    Integer g = 0;
    for (const auto& x : sol) g = boost::multiprecision::gcd(g, Integer(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x))));
    if (g < 0) g = -g;
    for (auto& x : sol) x *= Rational(l, g);
    Hyperplane h;
    h.offset = sol[d];
    sol.pop_back();
    h.normal = std::move(sol);
    return h;
}

inline Rational dot(const Vector& a, const Vector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

template <class F>
void for_each_combination(int m, int k, F&& f) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (k > m) return;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace detail

/// Exact convex hull by enumerating hyperplanes through d-subsets of points.
/// Every point must be a vertex; coplanar supporting points share one facet.
inline FaceLattice convex_hull(const PointConfiguration& config) {
    const int d = config.d;
    const int m = static_cast<int>(config.size());
    if (d < 1) throw GeometryError("hull needs dimension at least 1");
    if (m > 60) throw GeometryError("too many points for exhaustive hull");
    {
        Matrix diffs;
        for (int i = 1; i < m; ++i) {
            Vector row = config.coords[static_cast<std::size_t>(i)];
            for (int k = 0; k < d; ++k) row[static_cast<std::size_t>(k)] -= config.coords[0][static_cast<std::size_t>(k)];
            diffs.push_back(std::move(row));
        }
        if (m == 0 || rank(std::move(diffs)) != static_cast<std::size_t>(d))
            throw GeometryError("degenerate configuration: points do not affinely span R^" + std::to_string(d));
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (config.coords[static_cast<std::size_t>(i)] == config.coords[static_cast<std::size_t>(j)])
                throw GeometryError("points '" + config.labels[static_cast<std::size_t>(i)] + "' and '" + config.labels[static_cast<std::size_t>(j)] + "' coincide");
    FaceLattice lat;
    lat.dimension = d;
    lat.num_points = static_cast<std::size_t>(m);
    detail::for_each_combination(m, d, [&](const std::vector<int>& pts) {
        Mask s = mask_of(pts);
        for (Mask f : lat.facets)
            if (is_subset(s, f)) return;
        auto h = detail::hyperplane_through(config, pts);
        if (!h) return;
        int pos = 0, neg = 0;
        Mask on = 0;
        for (int i = 0; i < m; ++i) {
            int sg = sign(detail::dot(h->normal, config.coords[static_cast<std::size_t>(i)]) - h->offset);
            if (sg > 0) ++pos;
            if (sg < 0) ++neg;
            if (sg == 0) on |= bit(i);
        }
        if (pos > 0 && neg > 0) return;
        if (pos > 0) {
            for (auto& x : h->normal) x = -x;
            h->offset = -h->offset;
        }
        lat.facets.push_back(on);
        lat.hyperplanes.push_back(std::move(*h));
    });

    auto normal_rank = [&](Mask pts) {
        Matrix normals;
        for (std::size_t f = 0; f < lat.facets.size(); ++f)
            if (is_subset(pts, lat.facets[f])) normals.push_back(lat.hyperplanes[f].normal);
        return normals.empty() ? std::size_t{0} : rank(std::move(normals));
    };
    for (int i = 0; i < m; ++i)
        if (normal_rank(bit(i)) != static_cast<std::size_t>(d))
            throw GeometryError("point '" + config.labels[static_cast<std::size_t>(i)] + "' is not a vertex of the hull");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (normal_rank(bit(i) | bit(j)) == static_cast<std::size_t>(d - 1)) lat.edges.push_back({i, j});

    std::vector<std::size_t> order(lat.facets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lat.facets[a] < lat.facets[b]; });
    FaceLattice sorted = lat;
    for (std::size_t i = 0; i < order.size(); ++i) {
        sorted.facets[i] = lat.facets[order[i]];
        sorted.hyperplanes[i] = lat.hyperplanes[order[i]];
    }
    return sorted;
}

/// Bijections sigma (Bier vertex id -> point index, -1 on absent vertices)
/// carrying the facets of B exactly onto the hull facets.
inline std::vector<std::vector<int>> lattice_isomorphisms(const BierSphere& b, const FaceLattice& lat, bool find_all = true) {
    return facet_isomorphisms(b.facet_list(), lat.facet_list(), find_all);
}

inline std::optional<std::vector<int>> lattice_isomorphism(const BierSphere& b, const FaceLattice& lat) {
    auto all = lattice_isomorphisms(b, lat, false);
    if (all.empty()) return std::nullopt;
    return all.front();
}

/// Hull + lattice isomorphism of the points against B, exact; returns the
/// bijection (sphere vertex id -> point index) when they agree.
inline std::optional<std::vector<int>> verify_realization(const BierSphere& b, const PointConfiguration& c) {
    FaceLattice lat;
    try {
        lat = convex_hull(c);
    } catch (const GeometryError&) {
        return std::nullopt;
    }
    return lattice_isomorphism(b, lat);
}

/// Hull facets rewritten over Bier vertex ids through the point labels.
inline std::vector<Mask> bier_facets_of_hull(const PointConfiguration& config, const FaceLattice& lat, int n) {
    std::vector<int> id(config.size());
    for (std::size_t p = 0; p < config.size(); ++p) id[p] = bier_vertex_of_label(n, config.labels[p]);
    std::vector<Mask> out;
    for (Mask f : lat.facets) {
        Mask g = 0;
        for (int p : elements(f)) g |= bit(id[static_cast<std::size_t>(p)]);
        out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// True iff the hull of the labeled configuration has exactly the facets of B
/// (identity labeling).
inline bool realizes(const PointConfiguration& config, const BierSphere& b) {
    FaceLattice lat;
    try {
        lat = convex_hull(config);
    } catch (const GeometryError&) {
        return false;
    }
    std::vector<Mask> want;
    for (const auto& f : b.facets()) want.push_back(f.vertex_mask(b.n()));
    std::sort(want.begin(), want.end());
    return bier_facets_of_hull(config, lat, b.n()) == want;
}

inline std::vector<Vector> default_circuit(int n) {
    std::vector<Vector> b;
    for (int i = 0; i + 1 < n; ++i) {
        Vector e(static_cast<std::size_t>(n - 1), Rational(0));
        e[static_cast<std::size_t>(i)] = 1;
        b.push_back(std::move(e));
    }
    b.push_back(Vector(static_cast<std::size_t>(n - 1), Rational(-1)));
    return b;
}

/// x_i = b_i / mu_i, y_i = -((1-alpha)/(alpha mu_i)) b_i; labels "i", "i~".
/// The hull boundary realizes Bier(Tr_{mu<alpha}) when every point is a
/// vertex of it.
inline PointConfiguration threshold_realization(const std::vector<Rational>& mu, const Rational& alpha,
                                                std::optional<std::vector<Vector>> circuit = std::nullopt) {
    const int n = static_cast<int>(mu.size());
    if (n < 2) throw std::invalid_argument("need at least two players");
    if (n > kMaxGroundSet) throw std::invalid_argument("too many players");
    Rational total = 0;
    for (const auto& x : mu) {
        if (x <= 0) throw std::invalid_argument("weights must be strictly positive");
        total += x;
    }
    if (total != 1) throw std::invalid_argument("weights must sum to 1");
    if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("threshold must lie in (0,1)");
    for (Mask a = 0; a <= full_mask(n); ++a) {
        Rational s = 0;
        for (int i : elements(a)) s += mu[static_cast<std::size_t>(i)];
        if (s == alpha) throw std::invalid_argument("coalition " + format_set(a) + " has weight exactly equal to the threshold");
    }
    auto b = circuit ? *circuit : default_circuit(n);
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("circuit must have n points");
    for (const auto& v : b)
        if (static_cast<int>(v.size()) != n - 1) throw std::invalid_argument("circuit points must lie in R^(n-1)");
    for (int k = 0; k < n - 1; ++k) {
        Rational s = 0;
        for (const auto& v : b) s += v[static_cast<std::size_t>(k)];
        if (s != 0) throw std::invalid_argument("degenerate circuit: points do not sum to zero");
    }
    for (int skip = 0; skip < n; ++skip) {
        Matrix m;
        for (int i = 0; i < n; ++i)
            if (i != skip) m.push_back(b[static_cast<std::size_t>(i)]);
        if (rank(std::move(m)) != static_cast<std::size_t>(n - 1))
            throw std::invalid_argument("degenerate circuit: a proper subset is linearly dependent");
    }
    PointConfiguration c;
    c.d = n - 1;
    for (int i = 0; i < n; ++i) {
        Vector x = b[static_cast<std::size_t>(i)];
        for (auto& v : x) v /= mu[static_cast<std::size_t>(i)];
        c.add(std::to_string(i + 1), std::move(x));
    }
    Rational k = (1 - alpha) / alpha;
    for (int i = 0; i < n; ++i) {
        Vector y = b[static_cast<std::size_t>(i)];
        for (auto& v : y) v *= -k / mu[static_cast<std::size_t>(i)];
        c.add(std::to_string(i + 1) + "~", std::move(y));
    }
    return c;
}

/// Drops points whose label is not a vertex of B (absent barred vertices).
inline PointConfiguration restrict_to_sphere(const PointConfiguration& c, const BierSphere& b) {
    Mask present = b.vertices();
    PointConfiguration out;
    out.d = c.d;
    for (std::size_t p = 0; p < c.size(); ++p)
        if (contains(present, bier_vertex_of_label(b.n(), c.labels[p]))) out.add(c.labels[p], c.coords[p]);
    return out;
}

/// Coefficients of v in the rays of Cone(facet): lambda_i (i in A) then
/// mu_j (j barred), each block in increasing order.
inline Vector fan_coefficients(int n, const BierFacet& f, const Vector& v) {
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector has wrong length");
    const Rational& c = v[static_cast<std::size_t>(f.pivot)];
    Vector out;
    for (int i : elements(f.losing)) out.push_back(v[static_cast<std::size_t>(i)] - c);
    for (int j : elements(f.barred(n))) out.push_back(c - v[static_cast<std::size_t>(j)]);
    return out;
}

/// The maximal cone of Fan(K) containing v in its interior, or nullopt when
/// v lies on a wall.
inline std::optional<BierFacet> fan_locate(const SimplicialComplex& k, const Vector& v) {
    if (static_cast<int>(v.size()) != k.n()) throw std::invalid_argument("vector has wrong length");
    Rational s = 0;
    for (const auto& x : v) s += x;
    if (s != 0) throw std::invalid_argument("vector is not in the zero-sum hyperplane");
    const BierSphere b = bier_sphere(k);
    for (const auto& f : b.facets()) {
        auto coef = fan_coefficients(k.n(), f, v);
        if (std::all_of(coef.begin(), coef.end(), [](const Rational& x) { return x > 0; })) return f;
    }
    return std::nullopt;
}

}  // namespace bierpoly
