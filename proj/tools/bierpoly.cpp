// bierpoly: command-line front end for complexes, Bier spheres and their
// convex realizations.

#include "bierpoly/bierpoly.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace fs = std::filesystem;
using namespace bierpoly;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

void emit(const std::optional<fs::path>& out, const std::string& text) {
    if (out)
        detail::write_file(*out, text);
    else
        std::cout << text;
}

struct SearchFlags {
    std::uint64_t seed = 0;
    int restarts = SearchOptions{}.restarts;
    std::string max_denominator = "1000000000000";

    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", seed, "random seed; every random choice derives from it");
        cmd->add_option("--restarts", restarts, "solver restarts per retriangulation step")->check(CLI::PositiveNumber);
        cmd->add_option("--max-denominator", max_denominator, "largest denominator tried when rationalizing multipliers");
    }

    RealizeOptions options() const {
        RealizeOptions o;
        o.seed = seed;
        o.search.restarts = restarts;
        o.search.max_denominator = Integer(max_denominator);
        if (o.search.max_denominator < 10) throw std::invalid_argument("--max-denominator must be at least 10");
        return o;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bier spheres of simplicial complexes: classification and convex realization"};
    app.require_subcommand(1);

    fs::path in, sphere_path, points_path;
    std::optional<fs::path> out, log;
    SearchFlags flags;
    int n = 5, ambient = 0;
    unsigned jobs = 1;
    fs::path survey_dir = "survey";

    auto* dual = app.add_subcommand("dual", "write the Alexander dual of a complex");
    dual->add_option("--in", in, ".cmplx input")->required();
    dual->add_option("--out", out, ".cmplx output (default: stdout)");

    auto* sphere = app.add_subcommand("sphere", "write the Bier sphere of a complex");
    sphere->add_option("--in", in, ".cmplx input")->required();
    sphere->add_option("--out", out, ".bier output (default: stdout)");

    auto* classify = app.add_subcommand("classify", "weighted / roughly weighted classification with certificate");
    classify->add_option("--in", in, ".cmplx input")->required();

    auto* realize = app.add_subcommand("realize", "search for a convex realization of the Bier sphere");
    realize->add_option("--in", in, ".cmplx input")->required();
    realize->add_option("--out", out, ".real output (default: stdout)");
    realize->add_option("--log", log, "JSON step log");
    flags.attach(realize);

    auto* verify = app.add_subcommand("verify", "check that points span a polytope with the sphere's face lattice");
    verify->add_option("--sphere", sphere_path, ".bier input")->required();
    verify->add_option("--points", points_path, ".real input")->required();

    auto* census = app.add_subcommand("survey", "enumerate, classify and realize all complexes on [n]");
    census->add_option("-n", n, "ground set size")->check(CLI::Range(1, kMaxSurveyGroundSet));
    census->add_option("--ambient", ambient, "embed every complex in [ambient]");
    census->add_option("--out", survey_dir, "report directory")->capture_default_str();
    census->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    flags.attach(census);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*dual) {
            emit(out, format_complex(alexander_dual(read_complex(in))));
            return kOk;
        }
        if (*sphere) {
            emit(out, format_bier(bier_sphere(read_complex(in))));
            return kOk;
        }
        if (*classify) {
            std::cout << to_json(classify_game(read_complex(in))).dump() << "\n";
            return kOk;
        }
        if (*realize) {
            auto k = read_complex(in);
            auto result = realize_bier(k, flags.options());
            if (log) detail::write_file(*log, to_json(k.n(), result).dump(2) + "\n");
            if (!result.success) {
                std::cerr << "not realized within budget: " << result.failure << "\n";
                return kFailed;
            }
            emit(out, format_real(k.n(), result.config));
            return kOk;
        }
        if (*verify) {
            auto b = read_bier(sphere_path);
            auto points = read_real(points_path);
            auto sigma = verify_realization(b, points);
            if (!sigma) {
                std::cout << "NOT ISOMORPHIC\n";
                return kFailed;
            }
            for (int v : elements(b.vertices()))
                std::cout << vertex_name(b.n(), v) << " -> " << points.labels[static_cast<std::size_t>((*sigma)[static_cast<std::size_t>(v)])] << "\n";
            return kOk;
        }
        if (*census) {
            SurveyOptions o;
            o.n = n;
            o.ambient = ambient;
            o.jobs = jobs;
            o.realize = flags.options();
            o.out_dir = survey_dir;
            auto r = survey(o);
            std::cout << "complexes " << r.total << "\nthreshold " << r.threshold << "\nnon-threshold " << r.non_threshold
                      << "\nspheres " << r.spheres << "\nrealized " << r.realized << "\nfailed " << r.failed << "\n";
            for (const auto& note : r.notes) std::cout << "note: " << note << "\n";
            std::cout << "report " << (survey_dir / "report.json").string() << "\n";
            return r.failed == 0 ? kOk : kFailed;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
