#pragma once

#include "bierpoly/bier.hpp"
#include "bierpoly/complex.hpp"
#include "bierpoly/linfeas.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bierpoly {

enum class Mode { Strict, NonStrict };

/// Strictly positive weights w and quota q for the players.
struct WeightCertificate {
    std::vector<Rational> weights;
    Rational quota;
};

/// Values f(i) (unbarred) and f(i~) (barred) on the Bier vertices.
struct KSubmodularFunction {
    std::vector<Rational> unbarred;
    std::vector<Rational> barred;
};

enum class GameTag { Weighted, RoughlyWeighted, Neither };

inline const char* to_string(GameTag t) {
    switch (t) {
        case GameTag::Weighted: return "weighted";
        case GameTag::RoughlyWeighted: return "roughly-weighted";
        case GameTag::Neither: return "neither";
    }
    return "?";
}

struct GameClass {
    GameTag tag = GameTag::Neither;
    std::optional<WeightCertificate> certificate;
};

inline Rational weight_of(const std::vector<Rational>& w, Mask coalition) {
    Rational s = 0;
    for (int i : elements(coalition)) s += w[static_cast<std::size_t>(i)];
    return s;
}

/// The definition check over all 2^n coalitions. Strict mode: losing iff
/// w(X) < q and no ties. Rough mode: w(X) > q implies winning, w(X) < q
/// implies losing.
inline bool verify_certificate(const SimplicialComplex& k, const WeightCertificate& c, Mode mode) {
    const int n = k.n();
    if (c.weights.size() != static_cast<std::size_t>(n)) return false;
    for (const auto& w : c.weights)
        if (w <= 0) return false;
    if (c.quota <= 0) return false;
    for (Mask x = 0; x <= full_mask(n); ++x) {
        Rational wx = weight_of(c.weights, x);
        bool losing = k.contains(x);
        if (mode == Mode::Strict) {
            if (losing ? !(wx < c.quota) : !(wx > c.quota)) return false;
        } else {
            if (wx > c.quota && losing) return false;
            if (wx < c.quota && !losing) return false;
        }
    }
    return true;
}

/// One row per ridge of Bier(K) over x_1..x_n, y_1..y_n (f(i) = x_i,
/// f(i~) = y_i). Strict: Lambda / V / X rows; non-strict: Lambda / V rows
/// become >= and each X ridge gives x_c2 > 0, y_c2 > 0.
inline LinearSystem ridge_system(const SimplicialComplex& k, Mode mode) {
    require_no_ghosts(k);
    const int n = k.n();
    LinearSystem sys;
    for (int i = 1; i <= n; ++i) sys.variables.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) sys.variables.push_back("y" + std::to_string(i));
    auto x = [&](int i) { return static_cast<std::size_t>(i); };
    auto y = [&](int i) { return static_cast<std::size_t>(n + i); };
    const Relation wall = mode == Mode::Strict ? Relation::Greater : Relation::GreaterEqual;
    for (const auto& r : ridges(bier_sphere(k))) {
        std::vector<Rational> row(static_cast<std::size_t>(2 * n), Rational(0));
        switch (r.kind) {
            case RidgeKind::Lambda:
                row[x(r.c1)] += 1;
                row[x(r.c2)] += 1;
                for (int i : elements(r.x1)) row[x(i)] += 1;
                for (int j : elements(r.x2)) row[y(j)] -= 1;
                sys.add(std::move(row), wall);
                break;
            case RidgeKind::V:
                row[y(r.c1)] += 1;
                row[y(r.c2)] += 1;
                for (int j : elements(r.x2)) row[y(j)] += 1;
                for (int i : elements(r.x1)) row[x(i)] -= 1;
                sys.add(std::move(row), wall);
                break;
            case RidgeKind::X:
                if (mode == Mode::Strict) {
                    row[x(r.c2)] = 1;
                    row[y(r.c2)] = 1;
                    sys.add(std::move(row), Relation::Greater);
                } else {
                    auto other = row;
                    row[x(r.c2)] = 1;
                    other[y(r.c2)] = 1;
                    sys.add(std::move(row), Relation::Greater);
                    sys.add(std::move(other), Relation::Greater);
                }
                break;
        }
    }
    return sys;
}

/// Over z_1..z_n, Q: z(S) - Q > 0 for minimal non-faces S, Q - z(T) > 0 for
/// facets T, z_i > 0. Non-strict mode relaxes the first two families to >=.
inline LinearSystem reduced_system(const SimplicialComplex& k, Mode mode) {
    require_no_ghosts(k);
    const int n = k.n();
    LinearSystem sys;
    for (int i = 1; i <= n; ++i) sys.variables.push_back("z" + std::to_string(i));
    sys.variables.push_back("Q");
    const Relation rel = mode == Mode::Strict ? Relation::Greater : Relation::GreaterEqual;
    const auto width = static_cast<std::size_t>(n + 1);
    for (Mask s : k.minimal_nonfaces()) {
        std::vector<Rational> row(width, Rational(0));
        for (int i : elements(s)) row[static_cast<std::size_t>(i)] = 1;
        row[static_cast<std::size_t>(n)] = -1;
        sys.add(std::move(row), rel);
    }
    for (Mask t : k.facets()) {
        std::vector<Rational> row(width, Rational(0));
        for (int i : elements(t)) row[static_cast<std::size_t>(i)] = -1;
        row[static_cast<std::size_t>(n)] = 1;
        sys.add(std::move(row), rel);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> row(width, Rational(0));
        row[static_cast<std::size_t>(i)] = 1;
        sys.add(std::move(row), Relation::Greater);
    }
    return sys;
}

/// Turns a witness (z, Q) of the reduced system into weights normalized to
/// w([n]) = 1.
inline WeightCertificate certificate_from_witness(const std::vector<Rational>& zq) {
    const std::size_t n = zq.size() - 1;
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i) total += zq[i];
    WeightCertificate c;
    for (std::size_t i = 0; i < n; ++i) c.weights.push_back(zq[i] / total);
    c.quota = zq[n] / total;
    return c;
}

/// Weighted iff the strict reduced system is feasible; otherwise roughly
/// weighted iff the non-strict one is. Certificates are re-verified against
/// the definitions before they are returned.
inline GameClass classify_game(const SimplicialComplex& k) {
    require_no_ghosts(k);
    for (Mode mode : {Mode::Strict, Mode::NonStrict}) {
        auto res = solve(reduced_system(k, mode));
        if (!res.feasible) continue;
        auto cert = certificate_from_witness(res.witness);
        if (!verify_certificate(k, cert, mode))
            throw std::logic_error("LP certificate failed the coalition check");
        return {mode == Mode::Strict ? GameTag::Weighted : GameTag::RoughlyWeighted, std::move(cert)};
    }
    return {GameTag::Neither, std::nullopt};
}

inline bool is_threshold(const SimplicialComplex& k) { return solve(reduced_system(k, Mode::Strict)).feasible; }

/// f(i) = (1-q) w_i, f(i~) = q w_i for a certificate with w([n]) = 1.
inline KSubmodularFunction submodular_from_weights(const SimplicialComplex& k, const WeightCertificate& c, Mode mode) {
    if (c.quota <= 0 || c.quota >= 1) throw std::invalid_argument("quota must lie in (0,1)");
    if (c.weights.size() != static_cast<std::size_t>(k.n())) throw std::invalid_argument("weight vector has wrong length");
    Rational total = 0;
    for (const auto& w : c.weights) total += w;
    if (total != 1) throw std::invalid_argument("weights must be normalized to w([n]) = 1");
    if (!verify_certificate(k, c, mode)) throw std::invalid_argument("certificate is not valid for K");
    KSubmodularFunction f;
    for (const auto& w : c.weights) {
        f.unbarred.push_back((1 - c.quota) * w);
        f.barred.push_back(c.quota * w);
    }
    return f;
}

inline bool check_submodular(const SimplicialComplex& k, const KSubmodularFunction& f, Mode mode) {
    const auto n = static_cast<std::size_t>(k.n());
    if (f.unbarred.size() != n || f.barred.size() != n) return false;
    std::vector<Rational> xy(f.unbarred);
    xy.insert(xy.end(), f.barred.begin(), f.barred.end());
    return verify(ridge_system(k, mode), xy);
}

}  // namespace bierpoly
