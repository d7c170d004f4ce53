#pragma once

// File formats around the engines: hex-vector result files with JSON
// metadata sidecars, class reports with line-number mappings, and invariant
// reports.  Byte layouts are documented in docs/formats.md.

#include "smallcover/classify.hpp"
#include "smallcover/polytope_io.hpp"
#include "smallcover/search.hpp"
#include "smallcover/topology.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>

namespace smallcover {

// one vector per line, lowercase hex, newline-terminated, sorted
inline void write_vector_file(const std::string& path, const std::vector<ColoringVector>& vs) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    for (const auto& v : vs) os << encode_hex(v) << "\n";
}

inline std::vector<ColoringVector> read_vector_file(const std::string& path, const Polytope& P,
                                                    bool validate = false) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::vector<ColoringVector> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(decode_hex(line, P, validate));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

// stable digest of the polytope's canonical file image
inline uint64_t polytope_digest(const Polytope& P) {
    std::ostringstream ss;
    save_polytope(P, ss);
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : ss.str()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// name of a coloring set by its sorted added colors, e.g. "7-11-13-14"
inline std::string coloring_set_name(const std::vector<Color>& palette, int dimension) {
    auto basis = standard_basis_colors(dimension);
    std::vector<int> added;
    for (Color c : palette)
        if (std::find(basis.begin(), basis.end(), c) == basis.end()) added.push_back(c);
    std::sort(added.begin(), added.end());
    if (added.empty()) return "basis-only";
    std::string name;
    for (size_t i = 0; i < added.size(); ++i)
        name += (i ? "-" : "") + std::to_string(added[i]);
    return name;
}

inline void write_metadata(const std::string& path, const Polytope& P, const SearchTask& task,
                           const std::string& engine_name, size_t count, double wall_seconds,
                           int workers) {
    nlohmann::json j;
    j["polytope"] = P.name;
    j["polytope_digest"] = polytope_digest(P);
    j["palette"] = std::vector<int>(task.palette.begin(), task.palette.end());
    j["engine"] = engine_name;
    j["split_threshold"] = task.split_threshold;
    j["fix_basis"] = task.fix_basis;
    j["workers"] = workers;
    j["count"] = count;
    j["wall_time_seconds"] = wall_seconds;
    if (!task.fixed_prefix.empty()) {
        nlohmann::json prefix = nlohmann::json::array();
        for (auto [f, c] : task.fixed_prefix) prefix.push_back({{"facet", f + 1}, {"color", c}});
        j["fixed_prefix"] = prefix;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << j.dump(2) << "\n";
}

// class report: one line per class "<canonical-hex> <member-count>
// <orientable|nonorientable>"; mapping file: "<input-line> <class-index>"
inline void write_class_report(const std::string& path, const std::string& mapping_path,
                               const std::vector<EquivalenceClass>& classes) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    std::vector<std::pair<int, int>> mapping;  // input line -> class index
    for (size_t c = 0; c < classes.size(); ++c) {
        os << encode_hex(classes[c].canonical) << " " << classes[c].member_indices.size() << " "
           << (classes[c].orientable ? "orientable" : "nonorientable") << "\n";
        for (int idx : classes[c].member_indices)
            mapping.emplace_back(idx + 1, static_cast<int>(c) + 1);
    }
    std::sort(mapping.begin(), mapping.end());
    std::ofstream ms(mapping_path);
    if (!ms) throw std::runtime_error("cannot open " + mapping_path + " for writing");
    for (auto [line, cls] : mapping) ms << line << " " << cls << "\n";
}

inline std::vector<std::pair<std::string, std::string>> read_class_report(
    const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::vector<std::pair<std::string, std::string>> out;
    std::string canonical, flag;
    size_t members;
    while (is >> canonical >> members >> flag) out.emplace_back(canonical, flag);
    return out;
}

// invariant report for one vector: orientability, Betti tables, Euler
// characteristic, intersection form; optional per-support breakdown
inline void write_invariant_report(std::ostream& os, const Polytope& P, const ColoringVector& v,
                                   bool double_cover, bool mod2, bool verbose) {
    os << "vector " << encode_hex(v) << "\n";
    bool orientable = is_orientable(P, v);
    os << "orientable " << (orientable ? "yes" : "no") << "\n";

    CharacteristicMatrix M = double_cover ? z25_extension(P, v)
                                          : CharacteristicMatrix::from_coloring(P, gl_normalize(P, v));
    if (double_cover) os << "double-cover yes\n";

    BettiTable rational = rational_betti_table(P, M);
    os << "betti rational";
    for (long long b : rational.betti) os << " " << b;
    os << "\n";
    if (mod2) {
        BettiTable m2 = mod2_betti_from_hvector(P);
        os << "betti mod2";
        for (long long b : m2.betti) os << " " << b;
        os << "\n";
    }
    os << "euler " << euler_characteristic(rational) << "\n";
    if (orientable || double_cover) {
        auto form = intersection_form_report(P, M);
        os << "intersection-form even signature 0 hyperbolic-planes " << form.hyperbolic_summands
           << "\n";
    } else {
        os << "intersection-form none (non-orientable)\n";
    }
    os << "torsion not-computed\n";
    if (verbose) {
        for (const auto& e : row_space(M)) {
            os << "omega " << e.combo << " size " << e.support.size();
            if (!e.support.empty()) {
                SimplicialComplex K = full_subcomplex(P, e.support);
                auto comps = components(P, K);
                os << " components " << comps.size() << " facets";
                for (int f : e.support) os << " " << f + 1;
            }
            os << "\n";
        }
    }
    os << "end\n";
}

}  // namespace smallcover
