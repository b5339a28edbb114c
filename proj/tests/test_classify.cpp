#include "bierpoly/classify.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace bierpoly;

namespace {

SimplicialComplex pentagon() { return build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}); }
SimplicialComplex two_segments() { return build(4, {{1, 2}, {3, 4}}); }

// Tr_{mu < alpha}: the coalitions lighter than alpha.
SimplicialComplex threshold_complex(const std::vector<Rational>& mu, const Rational& alpha) {
    const int n = static_cast<int>(mu.size());
    std::vector<Mask> faces;
    for (Mask a = 0; a <= full_mask(n); ++a)
        if (weight_of(mu, a) < alpha) faces.push_back(a);
    return SimplicialComplex::from_masks(n, faces);
}

std::vector<Rational> rats(std::vector<std::pair<long, long>> v) {
    std::vector<Rational> out;
    for (auto [p, q] : v) out.emplace_back(p, q);
    return out;
}

}  // namespace

TEST(RidgeSystem, Hexagon) {
    auto s = ridge_system(build(3, {{1}, {2}, {3}}), Mode::Strict);
    EXPECT_EQ(s.width(), 6u);
    EXPECT_EQ(s.rows.size(), 6u);
}

TEST(RidgeSystem, XRows) {
    auto k = build(3, {{1, 2}, {3}});
    auto s = ridge_system(k, Mode::Strict);
    EXPECT_EQ(s.rows.size(), 5u);
    // Each X-ridge contributes x_c2 + y_c2 > 0.
    int two_term = 0;
    for (const auto& r : ridges(bier_sphere(k)))
        if (r.kind == RidgeKind::X) {
            std::vector<Rational> want(6, 0);
            want[static_cast<std::size_t>(r.c2)] = 1;
            want[static_cast<std::size_t>(3 + r.c2)] = 1;
            bool found = std::any_of(s.rows.begin(), s.rows.end(), [&](const LinearRow& row) { return row.coeffs == want; });
            EXPECT_TRUE(found);
            ++two_term;
        }
    EXPECT_EQ(two_term, 2);
}

TEST(RidgeSystem, ZeroSphereEmpty) {
    auto s = ridge_system(build(2, {{1}, {2}}), Mode::Strict);
    EXPECT_TRUE(s.rows.empty());
    EXPECT_TRUE(solve(s).feasible);
}

TEST(RidgeSystem, GhostsRejected) {
    EXPECT_THROW(ridge_system(build(3, {{1, 2}}), Mode::Strict), std::invalid_argument);
    EXPECT_THROW(reduced_system(build(3, {{1, 2}}), Mode::Strict), std::invalid_argument);
}

TEST(ReducedSystem, PathOnThreeWitness) {
    auto k = build(3, {{1, 2}, {3}});
    auto s = reduced_system(k, Mode::Strict);
    EXPECT_TRUE(verify(s, rats({{4, 20}, {4, 20}, {7, 20}, {9, 20}})));
    EXPECT_TRUE(solve(s).feasible);
}

TEST(ReducedSystem, PentagonNonStrictWitness) {
    auto r = solve(reduced_system(pentagon(), Mode::NonStrict));
    ASSERT_TRUE(r.feasible);
    EXPECT_TRUE(verify_certificate(pentagon(), certificate_from_witness(r.witness), Mode::NonStrict));
}

TEST(ClassifyGame, TwoSegmentsRoughlyWeighted) {
    auto g = classify_game(two_segments());
    EXPECT_EQ(g.tag, GameTag::RoughlyWeighted);
    ASSERT_TRUE(g.certificate);
    EXPECT_TRUE(verify_certificate(two_segments(), *g.certificate, Mode::NonStrict));
    EXPECT_TRUE(verify_certificate(two_segments(), {rats({{1, 4}, {1, 4}, {1, 4}, {1, 4}}), Rational(1, 2)}, Mode::NonStrict));
}

TEST(ClassifyGame, PentagonRoughlyWeighted) {
    auto g = classify_game(pentagon());
    EXPECT_EQ(g.tag, GameTag::RoughlyWeighted);
    EXPECT_STREQ(to_string(g.tag), "roughly-weighted");
}

TEST(ClassifyGame, ThresholdComplexIsWeighted) {
    auto mu = rats({{1, 3}, {1, 3}, {1, 6}, {1, 6}});
    auto k = threshold_complex(mu, Rational(5, 12));
    EXPECT_TRUE(verify_certificate(k, {mu, Rational(5, 12)}, Mode::Strict));
    auto g = classify_game(k);
    EXPECT_EQ(g.tag, GameTag::Weighted);
    EXPECT_TRUE(verify_certificate(k, *g.certificate, Mode::Strict));
}

TEST(ClassifyGame, PermutationEquivariant) {
    const std::vector<int> perm{2, 0, 3, 1};
    for (const auto& k : enumerate_complexes(4)) {
        auto p = permute(k, perm);
        auto g = classify_game(k), h = classify_game(p);
        EXPECT_EQ(g.tag, h.tag);
        if (g.certificate) {
            WeightCertificate moved{std::vector<Rational>(4), g.certificate->quota};
            for (std::size_t i = 0; i < 4; ++i) moved.weights[static_cast<std::size_t>(perm[i])] = g.certificate->weights[i];
            EXPECT_TRUE(verify_certificate(p, moved, g.tag == GameTag::Weighted ? Mode::Strict : Mode::NonStrict));
        }
    }
}

TEST(ClassifyGame, TagsMatchFourierMotzkin) {
    for (int n = 2; n <= 4; ++n)
        for (const auto& k : oracle::all_labeled_complexes(n)) {
            auto g = classify_game(k);
            bool strict = oracle::fm_feasible(reduced_system(k, Mode::Strict));
            bool rough = oracle::fm_feasible(reduced_system(k, Mode::NonStrict));
            EXPECT_EQ(g.tag, strict ? GameTag::Weighted : rough ? GameTag::RoughlyWeighted : GameTag::Neither);
            EXPECT_EQ(g.certificate.has_value(), g.tag != GameTag::Neither);
        }
}

TEST(Certificate, DefinitionCheck) {
    auto c5 = pentagon();
    std::vector<Rational> w(5, Rational(1, 5));
    EXPECT_TRUE(verify_certificate(c5, {w, Rational(2, 5)}, Mode::NonStrict));
    EXPECT_FALSE(verify_certificate(c5, {w, Rational(2, 5)}, Mode::Strict));
    EXPECT_FALSE(verify_certificate(c5, {w, Rational(1, 5)}, Mode::NonStrict));
    EXPECT_FALSE(verify_certificate(c5, {w, Rational(0)}, Mode::NonStrict));
}

TEST(Submodular, PentagonRough) {
    std::vector<Rational> w(5, Rational(1, 5));
    auto f = submodular_from_weights(pentagon(), {w, Rational(2, 5)}, Mode::NonStrict);
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ(f.unbarred[static_cast<std::size_t>(i)], Rational(3, 25));
        EXPECT_EQ(f.barred[static_cast<std::size_t>(i)], Rational(2, 25));
    }
    EXPECT_TRUE(check_submodular(pentagon(), f, Mode::NonStrict));
}

TEST(Submodular, ThresholdStrict) {
    auto mu = rats({{1, 3}, {1, 3}, {1, 6}, {1, 6}});
    auto k = threshold_complex(mu, Rational(5, 12));
    auto f = submodular_from_weights(k, {mu, Rational(5, 12)}, Mode::Strict);
    EXPECT_TRUE(check_submodular(k, f, Mode::Strict));
}

TEST(Submodular, Errors) {
    std::vector<Rational> w(5, Rational(1, 5));
    EXPECT_THROW(submodular_from_weights(pentagon(), {w, Rational(0)}, Mode::NonStrict), std::invalid_argument);
    EXPECT_THROW(submodular_from_weights(pentagon(), {w, Rational(1)}, Mode::NonStrict), std::invalid_argument);
    EXPECT_THROW(submodular_from_weights(pentagon(), {w, Rational(2, 5)}, Mode::Strict), std::invalid_argument);
}

TEST(Submodular, ZeroFailsStrictWithXRidge) {
    auto k = build(3, {{1, 2}, {3}});
    KSubmodularFunction zero{std::vector<Rational>(3, 0), std::vector<Rational>(3, 0)};
    EXPECT_FALSE(check_submodular(k, zero, Mode::Strict));
}

TEST(Submodular, OnesOnHexagon) {
    auto k = build(3, {{1}, {2}, {3}});
    KSubmodularFunction ones{std::vector<Rational>(3, 1), std::vector<Rational>(3, 1)};
    EXPECT_TRUE(check_submodular(k, ones, Mode::Strict));
}

TEST(Equivalence, ReducedVersusRidgeAndFourierMotzkin) {
    for (int n = 2; n <= 4; ++n)
        for (const auto& k : oracle::all_labeled_complexes(n))
            for (Mode mode : {Mode::Strict, Mode::NonStrict}) {
                bool reduced = solve(reduced_system(k, mode)).feasible;
                EXPECT_EQ(reduced, oracle::fm_feasible(reduced_system(k, mode)));
                EXPECT_EQ(reduced, solve(ridge_system(k, mode)).feasible);
            }
}
