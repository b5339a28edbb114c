#pragma once

#include "bierpoly/bier.hpp"
#include "bierpoly/classify.hpp"
#include "bierpoly/complex.hpp"
#include "bierpoly/geom.hpp"
#include "bierpoly/io.hpp"
#include "bierpoly/realize.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace bierpoly {

constexpr int kMaxSurveyGroundSet = 6;

/// Adds elements n+1..ambient to K as vertices (singleton facets).
inline SimplicialComplex embed(const SimplicialComplex& k, int ambient) {
    if (ambient < k.n()) throw std::invalid_argument("ambient ground set smaller than the complex's");
    std::vector<Mask> facets = k.facets();
    for (int v = k.n(); v < ambient; ++v) facets.push_back(bit(v));
    return SimplicialComplex::from_masks(ambient, std::move(facets));
}

/// Proper complexes on [n] with every singleton a face, one per isomorphism
/// class, ordered by (number of faces, canonical form); embedded in [ambient].
inline std::vector<SimplicialComplex> enumerate_complexes(int n, int ambient = 0) {
    if (n < 1) throw std::invalid_argument("ground set size must be positive");
    if (n > kMaxSurveyGroundSet) throw std::invalid_argument("exhaustive enumeration is limited to n <= 6");
    if (ambient == 0) ambient = n;

    // Candidate faces beyond the singletons, in (size, mask) order so every
    // codimension-one subset is decided before the set itself.
    std::vector<Mask> candidates;
    for (Mask s = 1; s < full_mask(n); ++s)
        if (popcount(s) >= 2) candidates.push_back(s);
    SimplicialComplex::sort_by_size(candidates);

    std::vector<bool> in(std::size_t{1} << n, false);
    in[0] = true;
    for (int v = 0; v < n; ++v) in[bit(v)] = true;

    std::map<std::string, std::pair<std::size_t, SimplicialComplex>> classes;
    auto emit = [&] {
        std::vector<Mask> faces;
        std::size_t count = 0;
        for (Mask s = 0; s < in.size(); ++s)
            if (in[s]) {
                faces.push_back(s);
                ++count;
            }
        auto k = SimplicialComplex::from_masks(n, std::move(faces));
        classes.try_emplace(canonical_form(k), count, k);
    };
    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (i == candidates.size()) {
            emit();
            return;
        }
        self(self, i + 1);
        Mask s = candidates[i];
        for (int v : elements(s))
            if (!in[s & ~bit(v)]) return;
        in[s] = true;
        self(self, i + 1);
        in[s] = false;
    };
    dfs(dfs, 0);

    std::vector<std::pair<std::size_t, std::pair<std::string, SimplicialComplex>>> ordered;
    for (auto& [label, entry] : classes) ordered.push_back({entry.first, {label, entry.second}});
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<SimplicialComplex> out;
    for (auto& [count, entry] : ordered) out.push_back(embed(entry.second, ambient));
    return out;
}

struct SurveyOptions {
    int n = 5;
    int ambient = 0;  // 0: same as n
    RealizeOptions realize;
    unsigned jobs = 1;
    bool realize_spheres = true;
    std::filesystem::path out_dir;  // empty: no artifacts
};

struct ClassRecord {
    std::string id;
    SimplicialComplex complex;
    GameClass game;
    int sphere = -1;  // index into SurveyReport::sphere_records for non-threshold classes
};

struct SphereRecord {
    std::string id;
    std::size_t representative = 0;  // index into SurveyReport::classes
    std::vector<std::size_t> members;
    int vertices = 0;
    bool attempted = false;
    bool realized = false;
    bool reverified = false;  // from the written coordinates alone
    double seconds = 0;
    RealizationResult result;
};

struct SurveyReport {
    int n = 0;
    int ambient = 0;
    std::size_t total = 0, threshold = 0, non_threshold = 0, spheres = 0, realized = 0, failed = 0;
    std::vector<ClassRecord> classes;
    std::vector<SphereRecord> sphere_records;
    std::map<int, std::size_t> vertex_counts;
    std::vector<std::string> notes;
    double seconds = 0;
};

inline nlohmann::json to_json(const SurveyReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["ambient"] = r.ambient;
    j["total"] = r.total;
    j["threshold"] = r.threshold;
    j["non_threshold"] = r.non_threshold;
    j["spheres"] = r.spheres;
    j["realized"] = r.realized;
    j["failed"] = r.failed;
    j["seconds"] = r.seconds;
    j["vertex_counts"] = nlohmann::json::object();
    for (auto [v, c] : r.vertex_counts) j["vertex_counts"][std::to_string(v)] = c;
    j["notes"] = r.notes;
    j["classes"] = nlohmann::json::array();
    for (const auto& c : r.classes) {
        nlohmann::json e = to_json(c.game);
        e["id"] = c.id;
        if (c.sphere >= 0) e["sphere"] = r.sphere_records[static_cast<std::size_t>(c.sphere)].id;
        j["classes"].push_back(e);
    }
    j["sphere_records"] = nlohmann::json::array();
    for (const auto& s : r.sphere_records) {
        nlohmann::json e;
        e["id"] = s.id;
        e["complex"] = r.classes[s.representative].id;
        e["members"] = nlohmann::json::array();
        for (auto m : s.members) e["members"].push_back(r.classes[m].id);
        e["vertices"] = s.vertices;
        e["status"] = !s.attempted ? "skipped" : s.realized && s.reverified ? "realized" : "not realized within budget";
        e["seconds"] = s.seconds;
        j["sphere_records"].push_back(e);
    }
    return j;
}

inline SurveyReport survey(const SurveyOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    SurveyReport r;
    r.n = opt.n;
    r.ambient = opt.ambient == 0 ? opt.n : opt.ambient;
    if (r.ambient < r.n) throw std::invalid_argument("ambient must be at least n");

    auto complexes = enumerate_complexes(r.n, r.ambient);
    r.total = complexes.size();
    std::map<std::string, int> sphere_index;
    for (std::size_t i = 0; i < complexes.size(); ++i) {
        ClassRecord c;
        c.id = "k" + std::to_string(i + 1);
        c.complex = complexes[i];
        c.game = classify_game(c.complex);
        if (c.game.tag == GameTag::Weighted) {
            ++r.threshold;
        } else {
            ++r.non_threshold;
            BierSphere b = bier_sphere(c.complex);
            auto [it, fresh] = sphere_index.try_emplace(canonical_label(b.facet_list()), static_cast<int>(r.sphere_records.size()));
            if (fresh) {
                SphereRecord s;
                s.id = "s" + std::to_string(r.sphere_records.size() + 1);
                s.representative = i;
                s.vertices = popcount(b.vertices());
                r.sphere_records.push_back(s);
            }
            c.sphere = it->second;
            r.sphere_records[static_cast<std::size_t>(it->second)].members.push_back(i);
        }
        r.classes.push_back(std::move(c));
    }
    r.spheres = r.sphere_records.size();
    for (const auto& s : r.sphere_records) ++r.vertex_counts[s.vertices];

    if (opt.realize_spheres) {
        std::atomic<std::size_t> next{0};
        std::mutex error_mutex;
        std::exception_ptr error;
        auto worker = [&] {
            for (std::size_t i; (i = next++) < r.sphere_records.size();) {
                auto& s = r.sphere_records[i];
                try {
                    const auto& k = r.classes[s.representative].complex;
                    auto t0 = std::chrono::steady_clock::now();
                    RealizeOptions ro = opt.realize;
                    ro.seed = detail::mix(opt.realize.seed, i);
                    s.result = realize_bier(k, ro);
                    s.attempted = true;
                    s.realized = s.result.success;
                    if (s.realized) {
                        // Round-trip through the artifact text so the check sees only what is written.
                        auto c = parse_real(format_real(k.n(), s.result.config));
                        s.reverified = verify_realization(bier_sphere(k), c).has_value();
                    }
                    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::max(1u, opt.jobs); ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
        for (const auto& s : r.sphere_records) (s.realized && s.reverified ? r.realized : r.failed) += 1;
    }

    // Embedded elements are ordinary vertices, so spheres keep both copies of
    // them; record the vertex counts so they can be checked against expectations.
    for (auto [v, c] : r.vertex_counts)
        r.notes.push_back(std::to_string(c) + " sphere(s) on " + std::to_string(v) + " vertices");
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (!opt.out_dir.empty()) {
        namespace fs = std::filesystem;
        for (const auto& c : r.classes) detail::write_file(opt.out_dir / "complexes" / (c.id + ".cmplx"), format_complex(c.complex));
        for (const auto& s : r.sphere_records) {
            const auto& k = r.classes[s.representative].complex;
            detail::write_file(opt.out_dir / "spheres" / (s.id + ".bier"), format_bier(bier_sphere(k)));
            if (!s.attempted) continue;
            detail::write_file(opt.out_dir / "logs" / (s.id + ".json"), to_json(k.n(), s.result).dump(2) + "\n");
            if (s.realized) detail::write_file(opt.out_dir / "realizations" / (s.id + ".real"), format_real(k.n(), s.result.config));
        }
        detail::write_file(opt.out_dir / "report.json", to_json(r).dump(2) + "\n");
    }
    return r;
}

}  // namespace bierpoly
