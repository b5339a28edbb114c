#pragma once

#include "bierpoly/bier.hpp"
#include "bierpoly/classify.hpp"
#include "bierpoly/complex.hpp"
#include "bierpoly/geom.hpp"
#include "bierpoly/realize.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bierpoly {

/// Malformed input file; `line` is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, const std::string& what)
        : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

// Non-empty lines with comments stripped, paired with their line numbers.
inline std::vector<std::pair<int, std::vector<std::string>>> tokenized_lines(std::istream& in) {
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        for (std::string t; ss >> t;) tokens.push_back(t);
        if (!tokens.empty()) out.push_back({no, std::move(tokens)});
    }
    return out;
}

inline int parse_int(const std::string& source, int line, const std::string& token) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size() || token.empty()) throw ParseError(source, line, "expected an integer, got '" + token + "'");
    return v;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

}  // namespace detail

// .cmplx: "n <int>", then one facet per line as 1-based vertex ids.

inline SimplicialComplex parse_complex(const std::string& text, const std::string& source = "<complex>") {
    std::istringstream in(text);
    auto lines = detail::tokenized_lines(in);
    if (lines.empty()) throw ParseError(source, 0, "empty input, expected 'n <int>'");
    const auto& [hline, head] = lines.front();
    if (head.size() != 2 || head[0] != "n") throw ParseError(source, hline, "expected 'n <int>'");
    int n = detail::parse_int(source, hline, head[1]);
    if (n < 1 || n > kMaxGroundSet) throw ParseError(source, hline, "ground set size out of range 1..24");
    std::vector<Mask> facets;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, tokens] = lines[i];
        Mask m = 0;
        for (const auto& t : tokens) {
            int v = detail::parse_int(source, no, t);
            if (v < 1 || v > n) throw ParseError(source, no, "vertex " + t + " out of range 1.." + std::to_string(n));
            m |= bit(v - 1);
        }
        facets.push_back(m);
    }
    return SimplicialComplex::from_masks(n, std::move(facets));
}

inline std::string format_complex(const SimplicialComplex& k) {
    std::string out = "n " + std::to_string(k.n()) + "\n";
    auto facets = k.facets();
    SimplicialComplex::sort_by_size(facets);
    for (Mask f : facets) {
        std::string line;
        for (int v : elements(f)) line += (line.empty() ? "" : " ") + std::to_string(v + 1);
        out += line + "\n";
    }
    return out;
}

// .bier: "n <int>", then one facet per line, vertices "i" or "i~".

inline BierSphere parse_bier(const std::string& text, const std::string& source = "<sphere>") {
    std::istringstream in(text);
    auto lines = detail::tokenized_lines(in);
    if (lines.empty()) throw ParseError(source, 0, "empty input, expected 'n <int>'");
    const auto& [hline, head] = lines.front();
    if (head.size() != 2 || head[0] != "n") throw ParseError(source, hline, "expected 'n <int>'");
    int n = detail::parse_int(source, hline, head[1]);
    if (n < 2 || n > kMaxGroundSet) throw ParseError(source, hline, "ground set size out of range 2..24");
    FacetList fl{2 * n, {}};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, tokens] = lines[i];
        Mask m = 0;
        for (const auto& t : tokens) {
            try {
                m |= bit(bier_vertex_of_label(n, t));
            } catch (const std::invalid_argument& e) {
                throw ParseError(source, no, e.what());
            }
        }
        fl.facets.push_back(m);
    }
    try {
        return BierSphere::from_facet_list(n, fl);
    } catch (const std::invalid_argument& e) {
        throw ParseError(source, 0, e.what());
    }
}

inline std::string format_bier(const BierSphere& b) {
    const int n = b.n();
    std::string out = "n " + std::to_string(n) + "\n";
    for (const auto& f : b.facets()) {
        std::string line;
        for (int v : elements(f.vertex_mask(n))) line += (line.empty() ? "" : " ") + vertex_name(n, v);
        out += line + "\n";
    }
    return out;
}

// .real: "n <int> d <int>", then "label c_1 ... c_d" per point. Labels are
// free-form tokens; realizations use "i" / "i~" so they can be checked by name.

inline PointConfiguration parse_real(const std::string& text, const std::string& source = "<points>") {
    std::istringstream in(text);
    auto lines = detail::tokenized_lines(in);
    if (lines.empty()) throw ParseError(source, 0, "empty input, expected 'n <int> d <int>'");
    const auto& [hline, head] = lines.front();
    if (head.size() != 4 || head[0] != "n" || head[2] != "d") throw ParseError(source, hline, "expected 'n <int> d <int>'");
    int n = detail::parse_int(source, hline, head[1]);
    int d = detail::parse_int(source, hline, head[3]);
    if (n < 1 || n > kMaxGroundSet || d < 1) throw ParseError(source, hline, "bad sizes");
    if (static_cast<int>(lines.size()) - 1 > 2 * n) throw ParseError(source, lines[static_cast<std::size_t>(2 * n + 1)].first, "more than 2n points");
    PointConfiguration c;
    c.d = d;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, tokens] = lines[i];
        if (static_cast<int>(tokens.size()) != d + 1)
            throw ParseError(source, no, "expected a label and " + std::to_string(d) + " coordinates");
        try {
            Vector x;
            for (std::size_t k = 1; k < tokens.size(); ++k) x.push_back(parse_rational(tokens[k]));
            c.add(tokens[0], std::move(x));
        } catch (const std::invalid_argument& e) {
            throw ParseError(source, no, e.what());
        }
    }
    return c;
}

inline std::string format_real(int n, const PointConfiguration& c) {
    std::string out = "n " + std::to_string(n) + " d " + std::to_string(c.d) + "\n";
    for (std::size_t p = 0; p < c.size(); ++p) {
        out += c.labels[p];
        for (const auto& x : c.coords[p]) out += " " + to_string(x);
        out += "\n";
    }
    return out;
}

inline SimplicialComplex read_complex(const std::filesystem::path& p) { return parse_complex(detail::read_file(p), p.string()); }
inline BierSphere read_bier(const std::filesystem::path& p) { return parse_bier(detail::read_file(p), p.string()); }
inline PointConfiguration read_real(const std::filesystem::path& p) { return parse_real(detail::read_file(p), p.string()); }

// JSON views.

inline nlohmann::json to_json(const GameClass& g) {
    nlohmann::json j;
    j["tag"] = to_string(g.tag);
    if (g.certificate) {
        j["weights"] = nlohmann::json::array();
        for (const auto& w : g.certificate->weights) j["weights"].push_back(to_string(w));
        j["quota"] = to_string(g.certificate->quota);
    }
    return j;
}

inline GameClass game_class_from_json(const nlohmann::json& j) {
    GameClass g;
    const std::string tag = j.at("tag").get<std::string>();
    if (tag == "weighted")
        g.tag = GameTag::Weighted;
    else if (tag == "roughly-weighted")
        g.tag = GameTag::RoughlyWeighted;
    else if (tag == "neither")
        g.tag = GameTag::Neither;
    else
        throw std::invalid_argument("unknown tag '" + tag + "'");
    if (j.contains("weights")) {
        WeightCertificate c;
        for (const auto& w : j.at("weights")) c.weights.push_back(parse_rational(w.get<std::string>()));
        c.quota = parse_rational(j.at("quota").get<std::string>());
        g.certificate = std::move(c);
    }
    return g;
}

inline nlohmann::json to_json(int n, const RealizationResult& r) {
    nlohmann::json j;
    j["success"] = r.success;
    if (r.seed) {
        nlohmann::json s;
        s["L"] = nlohmann::json::array();
        for (Mask f : r.seed->L.facets()) s["L"].push_back(format_set(f));
        s["mu"] = nlohmann::json::array();
        for (const auto& m : r.seed->mu) s["mu"].push_back(to_string(m));
        s["alpha"] = to_string(r.seed->alpha);
        s["added_faces"] = nlohmann::json::array();
        for (Mask f : r.seed->added_faces) s["added_faces"].push_back(format_set(f));
        j["seed"] = s;
    }
    j["steps"] = nlohmann::json::array();
    for (const auto& st : r.steps) {
        nlohmann::json s;
        s["face"] = format_set(st.face);
        s["translation"] = nlohmann::json::array();
        for (const auto& t : st.translation) s["translation"].push_back(to_string(t));
        s["multipliers"] = nlohmann::json::object();
        for (std::size_t i = 0; i < st.variables.size(); ++i) s["multipliers"][st.variables[i]] = to_string(st.multipliers[i]);
        s["attempts"] = st.attempts;
        s["varied_all"] = st.varied_all;
        s["verified"] = st.verified;
        j["steps"].push_back(s);
    }
    j["seeds_tried"] = r.seeds_tried;
    if (!r.success) {
        j["failed_step"] = r.failed_step;
        j["failure"] = r.failure;
    }
    (void)n;
    return j;
}

}  // namespace bierpoly
