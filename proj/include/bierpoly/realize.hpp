#pragma once

#include "bierpoly/bier.hpp"
#include "bierpoly/classify.hpp"
#include "bierpoly/geom.hpp"
#include "bierpoly/poly.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace bierpoly {

/// L = Tr_{mu<alpha} inside K, and the faces A_1..A_k with K = L + {A_i},
/// sorted by (dimension, mask) so every prefix is a complex.
struct ThresholdSeed {
    SimplicialComplex L;
    std::vector<Rational> mu;
    Rational alpha;
    std::vector<Mask> added_faces;
};

/// Threshold subcomplexes of K that keep every singleton and remove as few
/// faces as possible. Removal sets are up-sets of K; candidates of each size
/// are tried in lexicographic order of their face lists. At most `limit`
/// seeds, smallest removals first.
inline std::vector<ThresholdSeed> threshold_seeds(const SimplicialComplex& k, std::size_t limit) {
    require_no_ghosts(k);
    if (is_threshold(k)) throw std::invalid_argument("complex is already threshold");
    std::vector<Mask> faces;
    for (Mask f : k.faces())
        if (popcount(f) >= 2) faces.push_back(f);
    if (faces.size() > 64) throw std::invalid_argument("too many faces for the seed search");
    const std::size_t m = faces.size();
    std::vector<std::uint64_t> above(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && is_subset(faces[i], faces[j])) above[i] |= std::uint64_t{1} << j;

    auto face_list = [&](std::uint64_t r) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < m; ++i)
            if ((r >> i) & 1U) out.push_back(i);
        return out;
    };

    std::vector<ThresholdSeed> seeds;
    std::vector<std::uint64_t> level{0};
    while (!level.empty() && seeds.size() < limit) {
        std::sort(level.begin(), level.end(), [&](std::uint64_t a, std::uint64_t b) { return face_list(a) < face_list(b); });
        for (std::uint64_t r : level) {
            std::vector<Mask> kept;
            for (Mask f : k.faces())
                if (popcount(f) < 2) kept.push_back(f);
            std::vector<Mask> removed;
            for (std::size_t i = 0; i < m; ++i) ((r >> i) & 1U ? removed : kept).push_back(faces[i]);
            auto l = SimplicialComplex::from_masks(k.n(), kept);
            auto res = solve(reduced_system(l, Mode::Strict));
            if (!res.feasible) continue;
            auto cert = certificate_from_witness(res.witness);
            if (!verify_certificate(l, cert, Mode::Strict)) throw std::logic_error("seed certificate failed verification");
            SimplicialComplex::sort_by_size(removed);
            seeds.push_back({std::move(l), std::move(cert.weights), std::move(cert.quota), std::move(removed)});
            if (seeds.size() >= limit) break;
        }
        std::unordered_set<std::uint64_t> next;
        for (std::uint64_t r : level)
            for (std::size_t i = 0; i < m; ++i)
                if (!((r >> i) & 1U) && (above[i] & ~r) == 0) next.insert(r | (std::uint64_t{1} << i));
        level.assign(next.begin(), next.end());
        if (level.size() > 2'000'000) throw std::runtime_error("seed search exploded");
    }
    if (seeds.empty()) throw std::logic_error("no threshold subcomplex found; the vertex skeleton should always qualify");
    return seeds;
}

inline ThresholdSeed maximal_threshold_subcomplex(const SimplicialComplex& k) { return threshold_seeds(k, 1).front(); }

/// Radial variation of `base` (a convex realization of `previous`) towards
/// `target`: vertices in `varied` get a free positive multiplier. The
/// translation, if any, is applied to every point first.
struct VariationProblem {
    PointConfiguration base;
    BierSphere previous;
    BierSphere target;
    std::vector<int> varied;  // Bier vertex ids
    Vector translation;       // empty: none
};

/// Rows p > 0 in multipliers named t<i> (vertex i) and s<j> (vertex j~).
struct VariationSystem {
    int n = 0;
    std::vector<std::string> variables;
    std::vector<int> vertices;  // Bier vertex id per variable
    PointConfiguration base;    // translated and restricted to the target's vertices
    std::vector<MultilinearPoly> rows;

    /// Exact check, including positivity of the multipliers.
    bool verify(const std::vector<Rational>& x) const {
        if (x.size() != variables.size()) throw std::invalid_argument("solution has wrong length");
        for (const auto& v : x)
            if (v <= 0) return false;
        return std::all_of(rows.begin(), rows.end(), [&](const MultilinearPoly& p) { return p.evaluate(x) > 0; });
    }

    PointConfiguration apply(const std::vector<Rational>& x) const {
        PointConfiguration out = base;
        for (std::size_t k = 0; k < vertices.size(); ++k) {
            auto p = out.index_of(vertex_name(n, vertices[k]));
            for (auto& c : out.coords[p]) c *= x[k];
        }
        return out;
    }

    std::string dump() const {
        std::string out;
        for (const auto& r : rows) out += r.to_string(variables) + " > 0\n";
        return out;
    }
};

inline std::string multiplier_name(int n, int vertex) {
    auto v = vertex_of(n, vertex);
    return (v.barred ? "s" : "t") + std::to_string(v.index);
}

inline PointConfiguration translated(const PointConfiguration& c, const Vector& t) {
    if (t.empty()) return c;
    if (static_cast<int>(t.size()) != c.d) throw std::invalid_argument("translation has wrong dimension");
    PointConfiguration out = c;
    for (auto& x : out.coords)
        for (std::size_t k = 0; k < x.size(); ++k) x[k] += t[k];
    return out;
}

/// One row [tv_{F*j}] > 0 per oriented target facet F and outside vertex j.
/// The determinant is expanded along its column of ones, so each row is
/// multilinear; rows are divided by their common monomial (multipliers are
/// positive), scaled to primitive integers and deduplicated, and rows that
/// hold for all positive multipliers are dropped.
inline VariationSystem variation_system(const VariationProblem& p) {
    const int n = p.target.n();
    const int d = p.base.d;
    if (d != n - 1) throw std::invalid_argument("configuration dimension must be n-1");
    auto oriented = orient(p.target);  // throws on non-pseudomanifolds
    const Mask present = p.target.vertices();

    VariationSystem sys;
    sys.n = n;
    {
        auto moved = translated(p.base, p.translation);
        sys.base.d = d;
        for (std::size_t i = 0; i < moved.size(); ++i)
            if (contains(present, bier_vertex_of_label(n, moved.labels[i]))) sys.base.add(moved.labels[i], moved.coords[i]);
    }
    std::vector<int> var_of(static_cast<std::size_t>(2 * n), -1);
    std::vector<int> varied = p.varied;
    std::sort(varied.begin(), varied.end());
    varied.erase(std::unique(varied.begin(), varied.end()), varied.end());
    for (int v : varied) {
        if (!contains(present, v)) continue;
        var_of[static_cast<std::size_t>(v)] = static_cast<int>(sys.variables.size());
        sys.variables.push_back(multiplier_name(n, v));
        sys.vertices.push_back(v);
    }
    std::vector<const Vector*> point(static_cast<std::size_t>(2 * n), nullptr);
    for (std::size_t i = 0; i < sys.base.size(); ++i)
        point[static_cast<std::size_t>(bier_vertex_of_label(n, sys.base.labels[i]))] = &sys.base.coords[i];
    for (int v : elements(present))
        if (!point[static_cast<std::size_t>(v)]) throw std::invalid_argument("base configuration lacks vertex " + vertex_name(n, v));

    auto det_of = [&](const std::vector<int>& verts) {
        Matrix m;
        for (int v : verts) m.push_back(*point[static_cast<std::size_t>(v)]);
        return determinant(std::move(m));
    };
    auto affine_det = [&](const std::vector<int>& verts) {
        Matrix m;
        for (int v : verts) {
            Vector row = *point[static_cast<std::size_t>(v)];
            row.push_back(1);
            m.push_back(std::move(row));
        }
        return determinant(std::move(m));
    };

    // Global sign from a facet the base already realizes.
    std::set<Mask> previous_facets;
    for (const auto& f : p.previous.facets()) previous_facets.insert(f.vertex_mask(p.previous.n()));
    int global = 0;
    for (const auto& of : oriented) {
        Mask fm = mask_of(of.vertices);
        if (!previous_facets.count(fm)) continue;
        for (int j : elements(present & ~fm)) {
            auto verts = of.vertices;
            verts.push_back(j);
            int s = sign(affine_det(verts));
            if (s != 0) {
                global = s * of.sign;
                break;
            }
        }
        if (global != 0) break;
    }
    if (global == 0) throw std::invalid_argument("base configuration shares no non-degenerate facet with the target");

    std::set<MultilinearPoly> seen;
    for (const auto& of : oriented) {
        Mask fm = mask_of(of.vertices);
        std::vector<int> rows_v = of.vertices;
        Rational base_minor = det_of(rows_v);  // cofactor of the outside vertex row
        for (int j : elements(present & ~fm)) {
            rows_v.push_back(j);
            MultilinearPoly poly;
            for (int q = 0; q <= d; ++q) {
                Rational c;
                if (q == d) {
                    c = base_minor;
                } else {
                    std::vector<int> minor;
                    for (int r = 0; r <= d; ++r)
                        if (r != q) minor.push_back(rows_v[static_cast<std::size_t>(r)]);
                    c = det_of(minor);
                }
                if ((q + d) % 2 == 1) c = -c;
                Mask mono = 0;
                for (int r = 0; r <= d; ++r) {
                    int var = var_of[static_cast<std::size_t>(rows_v[static_cast<std::size_t>(r)])];
                    if (r != q && var >= 0) mono |= bit(var);
                }
                poly.add_term(mono, c);
            }
            rows_v.pop_back();
            poly = poly.scaled(Rational(global * of.sign)).without_common_monomial();
            if (poly.terms().size() == 1 && poly.terms().begin()->second > 0) continue;
            poly = poly.primitive();
            if (seen.insert(poly).second) sys.rows.push_back(std::move(poly));
        }
    }
    return sys;
}

struct SearchOptions {
    int restarts = 64;
    int sweeps = 200;
    Integer max_denominator = Integer(1000000000000LL);
};

namespace detail {

// Rows in floating point over u = log x, each normalized by its largest
// coefficient. The margin of a row is P(x) / sum |c_S| x^S in [-1, 1]: scale
// free, and positive exactly when the row holds.
struct FloatRows {
    struct Term {
        Mask mono;
        double coef;
    };
    std::vector<std::vector<Term>> rows;
    std::size_t vars = 0;

    FloatRows(const std::vector<MultilinearPoly>& polys, std::size_t nv) : vars(nv) {
        for (const auto& p : polys) {
            Rational big = 0;
            for (const auto& [s, c] : p.terms()) big = std::max(big, c < 0 ? Rational(-c) : c);
            std::vector<Term> r;
            for (const auto& [s, c] : p.terms()) r.push_back({s, big == 0 ? 0.0 : to_double(c / big)});
            rows.push_back(std::move(r));
        }
    }

    static double monomial(Mask m, const std::vector<double>& x) {
        double v = 1;
        while (m != 0) {
            v *= x[static_cast<std::size_t>(std::countr_zero(m))];
            m &= m - 1;
        }
        return v;
    }

    double margin(std::size_t k, const std::vector<double>& x) const {
        double num = 0, den = 0;
        for (const auto& t : rows[k]) {
            double v = monomial(t.mono, x);
            num += t.coef * v;
            den += std::fabs(t.coef) * v;
        }
        return den > 0 ? num / den : -1.0;
    }

    double min_margin(const std::vector<double>& x) const {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < rows.size(); ++k) best = std::min(best, margin(k, x));
        return best;
    }

    // Soft minimum -tau*log(sum exp(-m_k/tau)) of the margins and its
    // gradient with respect to u = log x.
    double soft_min(const std::vector<double>& x, double tau, std::vector<double>& grad) {
        const std::size_t r = rows.size();
        m_.resize(r);
        dm_.resize(r * vars);
        pv_.resize(vars);
        sv_.resize(vars);
        for (std::size_t k = 0; k < r; ++k) {
            double num = 0, den = 0;
            std::fill(pv_.begin(), pv_.end(), 0.0);
            std::fill(sv_.begin(), sv_.end(), 0.0);
            for (const auto& t : rows[k]) {
                double v = monomial(t.mono, x);
                double a = t.coef * v, b = std::fabs(t.coef) * v;
                num += a;
                den += b;
                for (Mask mm = t.mono; mm != 0; mm &= mm - 1) {
                    auto i = static_cast<std::size_t>(std::countr_zero(mm));
                    pv_[i] += a;
                    sv_[i] += b;
                }
            }
            double* d = &dm_[k * vars];
            if (den <= 0) {
                m_[k] = -1;
                std::fill(d, d + vars, 0.0);
                continue;
            }
            m_[k] = num / den;
            for (std::size_t i = 0; i < vars; ++i) d[i] = (pv_[i] * den - num * sv_[i]) / (den * den);
        }
        double lo = *std::min_element(m_.begin(), m_.end());
        double z = 0;
        std::fill(grad.begin(), grad.end(), 0.0);
        for (std::size_t k = 0; k < r; ++k) {
            double w = std::exp(-(m_[k] - lo) / tau);
            if (w < 1e-300) continue;
            z += w;
            const double* d = &dm_[k * vars];
            for (std::size_t i = 0; i < vars; ++i) grad[i] += w * d[i];
        }
        for (auto& g : grad) g /= z;
        return lo - tau * std::log(z);
    }

private:
    std::vector<double> m_, dm_, pv_, sv_;
};

inline std::vector<Integer> denominator_ladder(const Integer& max_den) {
    std::vector<Integer> out;
    for (Integer d = 10; d < max_den; d *= 10) out.push_back(d);
    out.push_back(max_den);
    return out;
}

}  // namespace detail

/// Seeded search for positive multipliers satisfying every row: gradient
/// ascent (Adam) in log scale on a soft minimum of the normalized row
/// margins, annealing the softness, with random restarts. Candidates are
/// rationalized with growing denominators and returned only after exact
/// verification.
inline std::optional<std::vector<Rational>> solve_variation(const VariationSystem& sys, std::uint64_t seed,
                                                            const SearchOptions& opt = {}) {
    const std::size_t nv = sys.variables.size();
    if (sys.rows.empty()) return std::vector<Rational>(nv, Rational(1));
    for (const auto& r : sys.rows)
        if (r.support() == 0) return std::nullopt;  // constant rows left in the system are never positive
    detail::FloatRows fr(sys.rows, nv);
    std::mt19937_64 rng(seed);
    const auto ladder = detail::denominator_ladder(opt.max_denominator);

    auto try_rationalize = [&](const std::vector<double>& x) -> std::optional<std::vector<Rational>> {
        for (const auto& den : ladder) {
            std::vector<Rational> q;
            for (double v : x) {
                Rational r = best_rational_approximation(v, den);
                if (r <= 0) r = Rational(1, den);
                q.push_back(std::move(r));
            }
            if (sys.verify(q)) return q;
        }
        return std::nullopt;
    };

    constexpr double kLogBound = 7.0;  // multipliers stay within [e^-7, e^7]
    for (int restart = 0; restart < opt.restarts; ++restart) {
        std::vector<double> u(nv, 0.0);
        if (restart > 0) {
            double spread = std::min(0.5 + 0.15 * restart, 3.0);
            std::uniform_real_distribution<double> dist(-spread, spread);
            for (auto& v : u) v = dist(rng);
        }
        std::vector<double> x(nv), grad(nv), m1(nv, 0.0), m2(nv, 0.0);
        auto sync = [&] {
            for (std::size_t i = 0; i < nv; ++i) x[i] = std::exp(u[i]);
        };
        sync();
        double best = fr.min_margin(x);
        int since_best = 0;
        const int iterations = 10 * opt.sweeps;
        for (int it = 0; it < iterations; ++it) {
            if (it % 10 == 0) {
                double cur = fr.min_margin(x);
                if (cur > 0)
                    if (auto q = try_rationalize(x)) return q;
                if (cur > best + 1e-9) {
                    best = cur;
                    since_best = 0;
                } else if (++since_best > 40) {
                    break;
                }
            }
            double tau = std::max(0.002, 0.05 * std::pow(0.995, it));
            fr.soft_min(x, tau, grad);
            const double lr = 0.05, b1 = 0.9, b2 = 0.999;
            for (std::size_t i = 0; i < nv; ++i) {
                m1[i] = b1 * m1[i] + (1 - b1) * grad[i];
                m2[i] = b2 * m2[i] + (1 - b2) * grad[i] * grad[i];
                double mh = m1[i] / (1 - std::pow(b1, it + 1)), vh = m2[i] / (1 - std::pow(b2, it + 1));
                u[i] = std::clamp(u[i] + lr * mh / (std::sqrt(vh) + 1e-12), -kLogBound, kLogBound);
            }
            sync();
        }
        if (fr.min_margin(x) > 0)
            if (auto q = try_rationalize(x)) return q;
    }
    return std::nullopt;
}

/// Rounds every coordinate to the smallest denominator (from a short ladder)
/// that still realizes B exactly; returns the input unchanged if none does.
inline PointConfiguration simplify_coordinates(const PointConfiguration& c, const BierSphere& b) {
    for (long den : {10L, 100L, 1000L, 10000L, 1000000L}) {
        PointConfiguration r = c;
        for (auto& x : r.coords)
            for (auto& v : x) v = best_rational_approximation(v, Integer(den));
        if (realizes(r, b)) return r;
    }
    return c;
}

struct RealizeOptions {
    std::uint64_t seed = 0;
    SearchOptions search;
    int translations = 6;  // translation attempts per step before varying all vertices; the
                           // search restart budget is shared by all attempts of a step
    std::size_t seed_alternatives = 6;
    int rounds = 4;  // full passes over the seeds, each with a fresh random stream
};

struct StepRecord {
    Mask face = 0;
    Vector translation;
    std::vector<std::string> variables;
    std::vector<Rational> multipliers;
    int attempts = 0;
    bool varied_all = false;
    bool verified = false;
};

struct RealizationResult {
    bool success = false;
    PointConfiguration config;
    std::optional<ThresholdSeed> seed;
    std::vector<StepRecord> steps;
    int failed_step = -1;  // index into the seed's added faces
    int seeds_tried = 0;
    std::string failure;
};

namespace detail {

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a * 0x9E3779B97F4A7C15ULL + b + 0x632BE59BD9B4E019ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Translation vector T (new point = old + T) placing the origin at an
// interior point: attempt 0 follows the mean direction u of the varied
// points (origin moved to o - c*u, half way to the boundary); later attempts
// randomize c and u, or pick a random interior point.
inline Vector choose_translation(const PointConfiguration& c, const FaceLattice& hull, const std::vector<std::size_t>& varied_points,
                                 int attempt, std::mt19937_64& rng) {
    const auto d = static_cast<std::size_t>(c.d);
    std::vector<std::vector<double>> pts;
    for (const auto& x : c.coords) {
        std::vector<double> p;
        for (const auto& v : x) p.push_back(to_double(v));
        pts.push_back(std::move(p));
    }
    std::vector<std::pair<std::vector<double>, double>> planes;
    for (const auto& h : hull.hyperplanes) {
        std::vector<double> a;
        for (const auto& v : h.normal) a.push_back(to_double(v));
        planes.push_back({std::move(a), to_double(h.offset)});
    }
    auto dotd = [](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };
    std::vector<double> o(d, 0.0);
    bool interior = std::all_of(planes.begin(), planes.end(), [](const auto& pl) { return pl.second > 0; });
    if (!interior)
        for (const auto& p : pts)
            for (std::size_t k = 0; k < d; ++k) o[k] += p[k] / static_cast<double>(pts.size());

    std::vector<double> target(d, 0.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (attempt > 0 && attempt % 2 == 0) {
        std::exponential_distribution<double> ex(1.0);
        double total = 0;
        for (const auto& p : pts) {
            double w = ex(rng);
            total += w;
            for (std::size_t k = 0; k < d; ++k) target[k] += w * p[k];
        }
        for (auto& v : target) v /= total;
    } else {
        std::vector<double> u(d, 0.0);
        for (auto i : varied_points)
            for (std::size_t k = 0; k < d; ++k) u[k] += pts[i][k] - o[k];
        double norm = std::sqrt(dotd(u, u));
        if (attempt > 0) {
            std::normal_distribution<double> g(0.0, 0.5 * std::max(norm, 1.0));
            for (auto& v : u) v += g(rng);
            norm = std::sqrt(dotd(u, u));
        }
        if (norm < 1e-12) return Vector(d, Rational(0));
        double cmax = std::numeric_limits<double>::infinity();
        for (const auto& [a, b] : planes) {
            double au = dotd(a, u);
            if (au < 0) cmax = std::min(cmax, (b - dotd(a, o)) / (-au));
        }
        if (!std::isfinite(cmax)) cmax = 1.0;
        double frac = attempt == 0 ? 0.5 : 0.15 + 0.7 * unit(rng);
        for (std::size_t k = 0; k < d; ++k) target[k] = o[k] - frac * cmax * u[k];
    }
    double scale = 1;
    for (const auto& p : pts)
        for (double v : p) scale = std::max(scale, std::fabs(v));
    Integer den = Integer(static_cast<long long>(std::max(10.0, std::pow(10.0, std::ceil(3 - std::log10(scale))))));
    Vector t;
    for (std::size_t k = 0; k < d; ++k) t.push_back(best_rational_approximation(-target[k], den));
    return t;
}

}  // namespace detail

/// Convex realization of Bier(K) with Bier labels. Threshold complexes use
/// the canonical realization; otherwise the sphere is grown from a threshold
/// seed by re-triangulations and radial variations. The result is verified
/// exactly (hull plus face-lattice isomorphism) before success is reported;
/// a failure only means the search budget ran out.
inline RealizationResult realize_bier(const SimplicialComplex& k, const RealizeOptions& opt = {}) {
    require_no_ghosts(k);
    const int n = k.n();
    const BierSphere goal = bier_sphere(k);
    RealizationResult out;

    auto final_check = [&](const PointConfiguration& c) {
        if (!realizes(c, goal)) return false;
        return lattice_isomorphism(goal, convex_hull(c)).has_value();
    };

    {
        auto res = solve(reduced_system(k, Mode::Strict));
        if (res.feasible) {
            auto cert = certificate_from_witness(res.witness);
            auto c = restrict_to_sphere(threshold_realization(cert.weights, cert.quota), goal);
            if (!final_check(c)) throw std::logic_error("canonical realization failed verification");
            out.success = true;
            out.config = simplify_coordinates(c, goal);
            out.seed = ThresholdSeed{k, cert.weights, cert.quota, {}};
            return out;
        }
    }

    auto try_seed = [&](const ThresholdSeed& seed, std::size_t si, std::uint64_t stream) {
        RealizationResult attempt;
        attempt.seed = seed;
        BierSphere current = bier_sphere(seed.L);
        PointConfiguration config = restrict_to_sphere(threshold_realization(seed.mu, seed.alpha), current);
        if (!realizes(config, current)) throw std::logic_error("canonical seed realization failed verification");
        config = simplify_coordinates(config, current);

        for (std::size_t step = 0; step < seed.added_faces.size(); ++step) {
            const Mask a = seed.added_faces[step];
            BierSphere target = retriangulate(current, a);
            const Mask present = target.vertices();
            std::vector<int> partial, all;
            for (int v : elements(present)) {
                all.push_back(v);
                auto bv = vertex_of(n, v);
                if (bv.barred != contains(a, bv.index - 1)) partial.push_back(v);
            }
            PointConfiguration restricted = restrict_to_sphere(config, target);
            FaceLattice hull = convex_hull(config);

            StepRecord rec;
            rec.face = a;
            bool done = false;
            const int plans = 2 * opt.translations;
            for (int plan = 0; plan < plans && !done; ++plan) {
                bool vary_all = plan >= opt.translations;
                int attempt_no = plan % opt.translations;
                std::mt19937_64 rng(detail::mix(detail::mix(stream, si * 1000 + step), static_cast<std::uint64_t>(plan)));
                const auto& varied = vary_all ? all : partial;
                std::vector<std::size_t> varied_points;
                for (int v : varied)
                    if (auto p = config.find(vertex_name(n, v))) varied_points.push_back(*p);
                Vector t = detail::choose_translation(config, hull, varied_points, attempt_no, rng);
                ++rec.attempts;
                VariationSystem sys;
                try {
                    sys = variation_system({restricted, current, target, varied, t});
                } catch (const std::invalid_argument&) {
                    continue;
                }
                SearchOptions per_plan = opt.search;
                per_plan.restarts = std::max(1, (opt.search.restarts + plans - 1) / plans);
                auto sol = solve_variation(sys, rng(), per_plan);
                if (!sol) continue;
                PointConfiguration next = sys.apply(*sol);
                if (!realizes(next, target)) continue;
                rec.translation = t;
                rec.variables = sys.variables;
                rec.multipliers = *sol;
                rec.varied_all = vary_all;
                rec.verified = true;
                config = simplify_coordinates(next, target);
                done = true;
            }
            attempt.steps.push_back(rec);
            if (!done) {
                attempt.failed_step = static_cast<int>(step);
                attempt.failure = "no verified radial variation for face " + format_set(a) + " after " + std::to_string(rec.attempts) +
                                  " attempts of " + std::to_string(opt.search.restarts) + " restarts";
                return attempt;
            }
            current = std::move(target);
        }
        if (!final_check(config)) throw std::logic_error("final configuration failed verification");
        attempt.success = true;
        attempt.config = std::move(config);
        return attempt;
    };

    // Each round revisits every seed with a fresh random stream; the first
    // failure is reported when all rounds are exhausted.
    auto seeds = threshold_seeds(k, opt.seed_alternatives);
    std::optional<RealizationResult> first_failure;
    int tried = 0;
    for (int round = 0; round < std::max(1, opt.rounds); ++round) {
        const std::uint64_t stream = round == 0 ? opt.seed : detail::mix(opt.seed, 0x5eed0000ULL + static_cast<std::uint64_t>(round));
        for (std::size_t si = 0; si < seeds.size(); ++si) {
            auto attempt = try_seed(seeds[si], si, stream);
            attempt.seeds_tried = ++tried;
            if (attempt.success) return attempt;
            if (!first_failure) first_failure = std::move(attempt);
        }
    }
    first_failure->seeds_tried = tried;
    return *first_failure;
}

}  // namespace bierpoly
