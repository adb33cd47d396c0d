#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spherekit/complex.hpp"

namespace spherekit {

/// Bijection on vertex ids. map[v] = image of v; -1 entries are ignored
/// (vertices outside the complex).
struct VertexPermutation {
    std::vector<int> map;

    int apply(VertexId v) const { return map[static_cast<std::size_t>(v)]; }
    Face apply(Face f) const;
    VertexPermutation inverse() const;
    VertexPermutation compose(const VertexPermutation& then) const;
    bool is_identity() const;

    /// e.g. "(u1 u3 u2 u4)(w1 w4 w2 w3)"; fixed points omitted.
    std::string cycle_notation(const SimplicialComplex& K) const;

    /// Parses cycle notation against K's vertex labels (or numeric ids).
    static VertexPermutation from_cycles(const std::string& text, const SimplicialComplex& K);

    bool operator==(const VertexPermutation&) const = default;
};

/// Whether pi maps the facet set of K onto itself.
bool is_automorphism(const SimplicialComplex& K, const VertexPermutation& pi);

struct CanonicalForm {
    /// Canonical facet list over vertices 0..n-1; equal across isomorphic
    /// complexes.
    std::vector<Face> facets;
    /// original id -> canonical id (-1 for ids outside the complex)
    std::vector<int> relabeling;
};

/// Relabeling-invariant normal form via partition refinement and
/// individualization (minimum leaf image).
CanonicalForm canonical_form(const SimplicialComplex& K);

struct GroupDescription {
    std::vector<VertexPermutation> generators;
    std::uint64_t order = 1;
    std::vector<std::vector<VertexId>> vertex_orbits;
};

/// Full automorphism group. Colors are ignored unless color_preserving is
/// set, in which case only automorphisms stabilizing the coloring count.
GroupDescription automorphism_group(const SimplicialComplex& K, bool color_preserving = false);

/// A facet-preserving bijection K1 -> K2, or nullopt.
std::optional<VertexPermutation> are_isomorphic(const SimplicialComplex& K1,
                                                const SimplicialComplex& K2);

}  // namespace spherekit
