#pragma once

// DJ-equivalence classification: two colorings are equivalent when one is a
// linear recoloring of a symmetry-permuted copy of the other, which for
// 120-cell small covers coincides with homeomorphism.  Classes are keyed by
// a canonical form, the lexicographic minimum of the normalized symmetry
// orbit.

#include "smallcover/coloring.hpp"
#include "smallcover/symmetry.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>

namespace smallcover {

// output[i] = v[a(i)]; precomposition with an adjacency-preserving map
// keeps non-singularity.
inline ColoringVector recolor_by_symmetry(const ColoringVector& v, const FacetPermutation& a) {
    ColoringVector w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[a.images[i]];
    return w;
}

// Minimum of gl_normalize(v o a) over the whole symmetry group; constant on
// DJ classes and distinct across them.
inline ColoringVector canonical_form(const Polytope& P, const ColoringVector& v,
                                     const std::vector<FacetPermutation>& group) {
    ColoringVector best;
    for (const auto& a : group) {
        ColoringVector w = gl_normalize(P, recolor_by_symmetry(v, a));
        if (best.empty() || w < best) best = std::move(w);
    }
    return best;
}

// Orbit route of the pairwise test: v2 normalized must appear among the
// normalized symmetry images of v1.
inline bool dj_equivalent_orbit(const Polytope& P, const ColoringVector& v1,
                                const ColoringVector& v2,
                                const std::vector<FacetPermutation>& group) {
    ColoringVector target = gl_normalize(P, v2);
    for (const auto& a : group)
        if (gl_normalize(P, recolor_by_symmetry(v1, a)) == target) return true;
    return false;
}

// Canonical-form equality, cross-checked against the orbit-intersection
// route; the two must agree.
inline bool dj_equivalent(const Polytope& P, const ColoringVector& v1, const ColoringVector& v2,
                          const std::vector<FacetPermutation>& group) {
    bool by_canonical = canonical_form(P, v1, group) == canonical_form(P, v2, group);
    bool by_orbit = dj_equivalent_orbit(P, v1, v2, group);
    if (by_canonical != by_orbit)
        throw std::runtime_error("dj_equivalent: canonical and orbit routes disagree");
    return by_canonical;
}

struct EquivalenceClass {
    ColoringVector canonical;
    std::vector<int> member_indices;  // positions in the input list, sorted
    bool orientable = false;
};

namespace detail {

struct VectorHash {
    size_t operator()(const ColoringVector& v) const {
        size_t h = 1469598103934665603ull;
        for (Color c : v) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace detail

// Partition a set of normalized vectors into DJ classes.  One symmetry-orbit
// sweep per class: the orbit of the first unassigned vector is intersected
// with the input set, which marks every classmate at once.
inline std::vector<EquivalenceClass> group_classes(const Polytope& P,
                                                   const std::vector<ColoringVector>& vectors,
                                                   const std::vector<FacetPermutation>& group) {
    std::unordered_map<ColoringVector, int, detail::VectorHash> index;
    index.reserve(vectors.size() * 2);
    for (size_t i = 0; i < vectors.size(); ++i) index.emplace(vectors[i], static_cast<int>(i));
    if (index.size() != vectors.size())
        throw std::invalid_argument("group_classes: duplicate input vectors");

    std::vector<char> assigned(vectors.size(), 0);
    std::vector<EquivalenceClass> classes;
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (assigned[i]) continue;
        EquivalenceClass cls;
        for (const auto& a : group) {
            ColoringVector w = gl_normalize(P, recolor_by_symmetry(vectors[i], a));
            auto it = index.find(w);
            if (it != index.end() && !assigned[it->second]) {
                assigned[it->second] = 1;
                cls.member_indices.push_back(it->second);
            }
            if (cls.canonical.empty() || w < cls.canonical) cls.canonical = std::move(w);
        }
        std::sort(cls.member_indices.begin(), cls.member_indices.end());
        cls.orientable = is_orientable(P, cls.canonical);
        for (int idx : cls.member_indices)
            if (is_orientable(P, vectors[idx]) != cls.orientable)
                throw std::runtime_error("group_classes: orientability not constant on a class");
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const EquivalenceClass& a, const EquivalenceClass& b) {
                  return a.canonical < b.canonical;
              });
    return classes;
}

}  // namespace smallcover
