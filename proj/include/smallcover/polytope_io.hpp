#pragma once

// Text interchange format for polytopes; byte-exact round trip.  Grammar is
// documented in docs/formats.md.  Labels are 1-based in the file.

#include "smallcover/polytope.hpp"

#include <fstream>
#include <sstream>

namespace smallcover {

inline std::string rational_to_text(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_text(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) throw std::runtime_error("polytope file: bad rational " + s);
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den <= 0) throw std::runtime_error("polytope file: non-positive denominator in " + s);
    return Rational(num, den);
}

inline void save_polytope(const Polytope& P, std::ostream& os) {
    os << "polytope " << P.name << "\n";
    os << "dimension " << P.dimension << "\n";
    os << "facets " << P.facet_count << "\n";
    if (P.declared_vertices >= 0) os << "vertices " << P.declared_vertices << "\n";
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < P.facet_count; ++i)
        for (int j = i + 1; j < P.facet_count; ++j)
            if (P.adjacent(i, j)) pairs.emplace_back(i, j);
    os << "adjacency " << pairs.size() << "\n";
    for (auto [i, j] : pairs) os << i + 1 << " " << j + 1 << "\n";
    if (P.has_centers()) {
        os << "centers\n";
        for (const auto& q : P.centers) {
            const QuadraticRational* comps[4] = {&q.w, &q.x, &q.y, &q.z};
            for (int c = 0; c < 4; ++c)
                os << rational_to_text(comps[c]->a) << " " << rational_to_text(comps[c]->b)
                   << (c == 3 ? "" : " ");
            os << "\n";
        }
    }
    os << "end\n";
}

inline void save_polytope(const Polytope& P, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    save_polytope(P, os);
}

inline Polytope load_polytope(std::istream& is) {
    std::string key, name;
    if (!(is >> key >> name) || key != "polytope")
        throw std::runtime_error("polytope file: expected 'polytope <name>'");
    int dim = 0, m = 0;
    if (!(is >> key >> dim) || key != "dimension" || dim < 1)
        throw std::runtime_error("polytope file: expected 'dimension <n>'");
    if (!(is >> key >> m) || key != "facets" || m < 1)
        throw std::runtime_error("polytope file: expected 'facets <m>'");
    Polytope P(name, dim, m);

    if (!(is >> key)) throw std::runtime_error("polytope file: truncated");
    if (key == "vertices") {
        if (!(is >> P.declared_vertices)) throw std::runtime_error("polytope file: bad vertex count");
        if (!(is >> key)) throw std::runtime_error("polytope file: truncated");
    }
    if (key != "adjacency") throw std::runtime_error("polytope file: expected 'adjacency <count>'");
    long count = 0;
    if (!(is >> count) || count < 0) throw std::runtime_error("polytope file: bad adjacency count");
    for (long e = 0; e < count; ++e) {
        int i = 0, j = 0;
        if (!(is >> i >> j)) throw std::runtime_error("polytope file: truncated adjacency list");
        if (i < 1 || j < 1 || i > m || j > m)
            throw std::runtime_error("polytope file: facet label out of range");
        if (i == j) throw std::runtime_error("polytope file: facet adjacent to itself");
        if (P.adjacent(i - 1, j - 1)) throw std::runtime_error("polytope file: duplicate pair");
        P.set_adjacent(i - 1, j - 1);
    }
    if (!(is >> key)) throw std::runtime_error("polytope file: truncated");
    if (key == "centers") {
        P.centers.resize(m);
        for (int f = 0; f < m; ++f) {
            std::string t[8];
            for (auto& s : t)
                if (!(is >> s)) throw std::runtime_error("polytope file: truncated centers");
            P.centers[f] = {{rational_from_text(t[0]), rational_from_text(t[1])},
                            {rational_from_text(t[2]), rational_from_text(t[3])},
                            {rational_from_text(t[4]), rational_from_text(t[5])},
                            {rational_from_text(t[6]), rational_from_text(t[7])}};
        }
        if (!(is >> key)) throw std::runtime_error("polytope file: truncated");
    }
    if (key != "end") throw std::runtime_error("polytope file: expected 'end'");
    return P;
}

inline Polytope load_polytope(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return load_polytope(is);
}

}  // namespace smallcover
