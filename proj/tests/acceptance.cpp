// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "bierpoly/bierpoly.hpp"
#include "support/oracles.hpp"
#include "support/reference_data.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

using namespace bierpoly;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

SimplicialComplex pentagon() { return build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}); }
SimplicialComplex two_segments() { return build(4, {{1, 2}, {3, 4}}); }

// Complexes covered by the property suites: every labeled one for n <= 4,
// the isomorphism classes for n = 5.
std::vector<SimplicialComplex> property_corpus() {
    std::vector<SimplicialComplex> out;
    for (int n = 2; n <= 4; ++n)
        for (auto& k : oracle::all_labeled_complexes(n)) out.push_back(std::move(k));
    for (auto& k : enumerate_complexes(5)) out.push_back(std::move(k));
    return out;
}

SurveyReport five_with_realization() {
    SurveyOptions o;
    o.n = 5;
    o.jobs = jobs();
    return survey(o);
}

void census(Outcome& o, const SurveyReport& r) {
    o.require(r.non_threshold == 88, "non-threshold classes = " + std::to_string(r.non_threshold));
    o.require(r.spheres == 48, "distinct spheres = " + std::to_string(r.spheres));
    o.detail << r.total << " classes, " << r.non_threshold << " non-threshold, " << r.spheres << " spheres";
}

void all_realized(Outcome& o, const SurveyReport& r) {
    o.require(r.realized == 48 && r.failed == 0, "realized " + std::to_string(r.realized) + ", failed " + std::to_string(r.failed));
    for (const auto& s : r.sphere_records) o.require(s.realized && s.reverified, s.id + " not verified");
    o.detail << "realized " << r.realized << ", failed " << r.failed << " in " << r.seconds << " s";
    for (const auto& n : r.notes) o.detail << "; " << n;
}

void ambient_six(Outcome& o) {
    SurveyOptions opt;
    opt.n = 5;
    opt.ambient = 6;
    opt.jobs = jobs();
    auto r = survey(opt);
    o.require(r.non_threshold == 88, "non-threshold classes = " + std::to_string(r.non_threshold));
    o.require(r.spheres == 88, "pairwise non-isomorphic spheres = " + std::to_string(r.spheres));
    o.require(r.realized == 88 && r.failed == 0, "realized " + std::to_string(r.realized) + ", failed " + std::to_string(r.failed));
    o.detail << r.spheres << " spheres, realized " << r.realized << ", failed " << r.failed << " in " << r.seconds << " s";
    for (const auto& n : r.notes) o.detail << "; " << n;
}

void poly0_replay(Outcome& o) {
    auto lat = convex_hull(ref::poly0());
    std::set<Mask> facets(lat.facets.begin(), lat.facets.end()), edges;
    for (auto [a, b] : lat.edges) edges.insert(bit(a) | bit(b));
    std::set<Mask> want_f, want_e;
    for (const auto& f : ref::kFacetsQ) want_f.insert(ref::digits_mask(f));
    for (const auto& e : ref::kEdgesQ) want_e.insert(ref::digits_mask(e));
    o.require(facets == want_f && facets.size() == 25, "hull facets differ from the table");
    o.require(edges == want_e && edges.size() == 35, "hull edges differ from the table");

    auto via_c5 = lattice_isomorphism(bier_sphere(pentagon()), lat);
    o.require(via_c5.has_value(), "no isomorphism with Bier(C5)");
    auto table = ref::fundamental_class_sphere();
    auto all = lattice_isomorphisms(table, lat);
    o.require(std::find(all.begin(), all.end(), ref::published_sigma()) != all.end(), "sigma(k~) = 3k+2 not among the isomorphisms");
    for (const auto& s : all)
        for (int k = 1; k <= 5; ++k)
            o.require(s[static_cast<std::size_t>(vertex_id(5, {k, false}))] == (s[static_cast<std::size_t>(vertex_id(5, {k, true}))] + 5) % 10,
                      "isomorphism breaks the i <-> i+5 pairing");

    auto fl = table.facet_list();
    auto oriented = orient(fl);
    std::map<Mask, int> sign;
    for (std::size_t i = 0; i < fl.facets.size(); ++i) sign[fl.facets[i]] = oriented[i].sign;
    int global = 0;
    for (std::size_t row = 0; row < 5; ++row)
        for (const auto& t : ref::kFundamentalClass[row]) {
            auto ids = ref::tuple_ids(t);
            int s = permutation_sign(ids) * sign.at(mask_of(ids)) * ref::kFundamentalSigns[row];
            if (global == 0) global = s;
            o.require(s == global, "orientation disagrees at " + t);
        }
    o.detail << facets.size() << " facets, " << edges.size() << " edges, " << all.size() << " isomorphisms, orientation global sign " << global;
}

void two_segment_problem(Outcome& o) {
    auto l = build(4, {{1}, {2}, {3, 4}});
    auto sys = variation_system({threshold_realization({Rational(1, 3), Rational(1, 3), Rational(1, 6), Rational(1, 6)}, Rational(5, 12)),
                                 bier_sphere(l), bier_sphere(two_segments()), {0, 1, 6, 7}, {Rational(3), Rational(3), Rational(0)}});
    std::set<MultilinearPoly> got(sys.rows.begin(), sys.rows.end()), want;
    for (const auto& r : ref::kTwoSegmentRows) want.insert(ref::parse_poly(r, sys.variables).primitive());
    o.require(got == want, "rows differ from the displayed system (" + std::to_string(got.size()) + " vs " + std::to_string(want.size()) + ")");
    std::vector<Rational> x;
    for (const auto& s : ref::kTwoSegmentSolution) x.push_back(parse_rational(s));
    o.require(sys.verify(x), "published solution fails verification");
    o.require(realizes(sys.apply(x), bier_sphere(two_segments())), "moved points do not realize the target");
    o.detail << got.size() << " rows equal the " << want.size() << " displayed rows; solution verified";
}

void strict_equivalence(Outcome& o, const std::vector<SimplicialComplex>& corpus) {
    std::size_t feasible = 0, fm_checked = 0;
    for (const auto& k : corpus) {
        auto reduced = reduced_system(k, Mode::Strict);
        auto res = solve(reduced);
        bool cert = res.feasible && verify_certificate(k, certificate_from_witness(res.witness), Mode::Strict);
        o.require(res.feasible == cert, "feasible witness without a valid certificate");
        o.require(res.feasible == solve(ridge_system(k, Mode::Strict)).feasible, "ridge and reduced systems disagree");
        if (k.n() <= 4) {
            o.require(res.feasible == oracle::fm_feasible(reduced), "simplex disagrees with Fourier-Motzkin");
            ++fm_checked;
        }
        if (!res.feasible) {
            // no certificate: a weighted game would give a feasible point
            o.require(classify_game(k).tag != GameTag::Weighted, "infeasible yet classified weighted");
        }
        feasible += res.feasible;
    }
    o.detail << corpus.size() << " complexes, " << feasible << " weighted, " << fm_checked << " cross-checked by elimination";
}

void rough_equivalence(Outcome& o, const std::vector<SimplicialComplex>& corpus) {
    std::size_t rough = 0;
    for (const auto& k : corpus) {
        auto reduced = reduced_system(k, Mode::NonStrict);
        auto res = solve(reduced);
        bool cert = res.feasible && verify_certificate(k, certificate_from_witness(res.witness), Mode::NonStrict);
        o.require(res.feasible == cert, "non-strict witness without a valid rough certificate");
        o.require(res.feasible == solve(ridge_system(k, Mode::NonStrict)).feasible, "non-strict ridge and reduced systems disagree");
        if (k.n() <= 4) o.require(res.feasible == oracle::fm_feasible(reduced), "simplex disagrees with Fourier-Motzkin");
        auto g = classify_game(k);
        if (g.tag == GameTag::Weighted) o.require(verify_certificate(k, *g.certificate, Mode::NonStrict), "weighted certificate fails rough check");
        if (g.tag == GameTag::RoughlyWeighted) ++rough;
    }
    for (const auto& k : {pentagon(), two_segments()}) {
        auto g = classify_game(k);
        o.require(g.tag == GameTag::RoughlyWeighted, "C5 / two segments not roughly weighted");
        o.require(!solve(reduced_system(k, Mode::Strict)).feasible, "C5 / two segments strictly feasible");
    }
    o.detail << rough << " roughly-weighted-only complexes; C5 and two segments roughly weighted, not weighted";
}

void canonical_realization(Outcome& o) {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + trial % 3;
        std::uniform_int_distribution<long> wdist(1, 12);
        std::vector<long> w(static_cast<std::size_t>(n));
        long total = 0, top = 0;
        for (auto& x : w) {
            x = wdist(rng);
            total += x;
            top = std::max(top, x);
        }
        // alpha = (2m+1)/(2W) avoids ties; top <= m < W keeps K proper and ghost-free
        long m = std::uniform_int_distribution<long>(top, total - 1)(rng);
        std::vector<Rational> mu;
        for (long x : w) mu.emplace_back(x, total);
        Rational alpha(2 * m + 1, 2 * total);
        std::vector<Mask> faces;
        for (Mask a = 0; a <= full_mask(n); ++a)
            if (weight_of(mu, a) < alpha) faces.push_back(a);
        auto k = SimplicialComplex::from_masks(n, faces);
        auto b = bier_sphere(k);
        auto c = restrict_to_sphere(threshold_realization(mu, alpha), b);
        o.require(verify_realization(b, c).has_value(), "random threshold pair not realized (trial " + std::to_string(trial) + ")");
        ++checked;
    }
    auto ex1 = threshold_realization({Rational(1, 3), Rational(1, 3), Rational(1, 6), Rational(1, 6)}, Rational(5, 12));
    o.require(ex1.coords == ref::to_vectors(ref::kTwoSegmentSeedPoints), "two-segment seed points differ");
    o.require(realizes(ex1, bier_sphere(build(4, {{1}, {2}, {3, 4}}))), "two-segment seed does not realize L");
    auto c5 = threshold_realization({Rational(3, 10), Rational(1, 50), Rational(1, 25), Rational(8, 25), Rational(8, 25)}, Rational(33, 100));
    o.require(c5.coords == ref::to_vectors(ref::kPentagonSeedPoints), "pentagon seed matrix differs");
    o.detail << checked << " random pairs realized; both seed matrices bit-exact";
}

void structural(Outcome& o) {
    std::size_t complexes = 0, vectors = 0;
    for (int n = 2; n <= 5; ++n) {
        auto all = n <= 4 ? oracle::all_labeled_complexes(n) : enumerate_complexes(n);
        for (const auto& k : all) {
            ++complexes;
            o.require(alexander_dual(alexander_dual(k)) == k, "dual is not an involution");
            auto b = bier_sphere(k);
            o.require(euler_characteristic(f_vector(b)) == 1 + ((n - 2) % 2 == 0 ? 1 : -1), "Euler characteristic");
            if (n >= 3) {
                try {
                    require_pseudomanifold(b.facet_list());
                    orient(b);
                } catch (const std::exception& e) {
                    o.require(false, std::string("pseudomanifold/orientation: ") + e.what());
                }
            }
            if (n < 3) continue;  // a 0-sphere has no ridges to classify and no generic fan directions
            auto dual = alexander_dual(k);
            std::set<Mask> listed;
            for (const auto& r : ridges(b)) {
                listed.insert(r.vertex_mask(n));
                bool in1 = k.contains(r.x1 | bit(r.c1)), in2 = k.contains(r.x1 | bit(r.c2));
                bool ok = r.kind == RidgeKind::Lambda ? in1 && in2
                        : r.kind == RidgeKind::V      ? !in1 && !in2
                                                      : !in1 && in2 && dual.contains(r.x2 | bit(r.c2)) && !dual.contains(r.x2 | bit(r.c1));
                o.require(ok, "ridge kind inconsistent");
            }
            std::set<Mask> all_ridges;
            for (Mask f : b.facet_list().facets)
                for (int v : elements(f)) all_ridges.insert(f & ~bit(v));
            o.require(all_ridges == listed, "ridges are not partitioned into kinds");

            if (n <= 4)
                for (Mask a : k.facets()) {
                    if (popcount(a) < 2) continue;
                    std::vector<Mask> rest;
                    for (Mask f : k.faces())
                        if (f != a) rest.push_back(f);
                    o.require(retriangulate(bier_sphere(SimplicialComplex::from_masks(n, rest)), a) == b, "retriangulate differs from direct construction");
                }

            std::mt19937_64 rng(static_cast<std::uint64_t>(complexes));
            std::uniform_int_distribution<long> coord(-1'000'000, 1'000'000);
            for (int t = 0; t < 1000; ++t) {
                Vector v;
                Rational s = 0;
                for (int i = 0; i + 1 < n; ++i) {
                    v.emplace_back(coord(rng));
                    s += v.back();
                }
                v.push_back(-s);
                int inside = 0;
                for (const auto& f : b.facets()) {
                    auto c = fan_coefficients(n, f, v);
                    inside += std::all_of(c.begin(), c.end(), [](const Rational& x) { return x > 0; });
                }
                auto hit = fan_locate(k, v);
                // a vector on a wall is not generic; it must not sit in any open cone
                o.require(hit ? inside == 1 : inside == 0, "fan cones overlap or leave a gap");
                ++vectors;
            }
        }
    }
    o.detail << complexes << " complexes, " << vectors << " fan vectors";
}

}  // namespace

int main() {
    int failures = 0;
    auto run = [&](int id, const std::string& name, const std::function<void(Outcome&)>& body) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            body(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.str().c_str(), secs);
        std::fflush(stdout);
        failures += !o.pass;
    };

    SurveyReport five;
    bool have_five = false;
    run(1, "census of five-element complexes", [&](Outcome& o) {
        five = five_with_realization();
        have_five = true;
        census(o, five);
    });
    run(2, "every ten-vertex sphere realized", [&](Outcome& o) {
        o.require(have_five, "survey did not run");
        if (have_five) all_realized(o, five);
    });
    run(3, "spheres in a six-element ground set", ambient_six);
    run(4, "numerical pentagon realization replay", poly0_replay);
    run(5, "two-segment variation system replay", two_segment_problem);
    auto corpus = property_corpus();
    run(6, "threshold <=> strict feasibility", [&](Outcome& o) { strict_equivalence(o, corpus); });
    run(7, "roughly weighted <=> non-strict feasibility", [&](Outcome& o) { rough_equivalence(o, corpus); });
    run(8, "canonical threshold realizations", canonical_realization);
    run(9, "structural invariants", structural);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
