#pragma once

#include <optional>
#include <vector>

#include "spherekit/homology.hpp"
#include "spherekit/search.hpp"
#include "spherekit/symmetry.hpp"
#include "spherekit/vectors.hpp"

namespace spherekit {

/// What to generate: balanced complexes of the given dimension with
/// prescribed color class sizes, optionally edge-bounded, neighborly,
/// invariant under a vertex group, and matching a homology target.
/// Vertices are laid out class by class: color i occupies a contiguous id
/// range.
struct EnumerationSpec {
    int dim = 2;
    std::vector<int> color_sizes;
    std::optional<long long> max_edges;
    std::optional<int> neighborly_k;
    std::vector<VertexPermutation> symmetry;
    std::optional<HomologyProfile> target_homology;

    int num_colors() const { return static_cast<int>(color_sizes.size()); }
    int vertex_count() const;
    Coloring coloring() const;
    void validate() const;

    std::string to_json() const;
    static EnumerationSpec from_json(const std::string& text);
    /// Stable digest of the spec, used as the on-disk cache key.
    std::string digest() const;
};

struct CensusEntry {
    SimplicialComplex complex;  // canonical labeling, colored
    FaceVector fvec;
    std::uint64_t aut_order = 0;
    HomologyProfile hom;
};

struct Census {
    std::vector<CensusEntry> entries;
    /// True when the whole constrained space was explored (a complete census
    /// or a certified empty one); false after first-found exits and budget
    /// exhaustion.
    bool exhaustive = false;
    SearchStatus status = SearchStatus::undecided;
    std::uint64_t nodes_explored = 0;
};

/// Isomorph-free exhaustive generation of balanced homology spheres.
/// Supported regimes: dim 2 (arbitrary class sizes in budget), and dim 3
/// with a color class of size 2 or 3 (star assembly over that class).
/// Anything else is refused loudly.
Census enumerate_balanced_spheres(const EnumerationSpec& spec, SearchOptions opts = {});

/// Backtracking over facet orbits of the symmetry group. Every output is
/// invariant under the group and satisfies the spec constraints. In
/// first_found mode the census holds at most one entry.
Census search_symmetric(const EnumerationSpec& spec, bool first_found, SearchOptions opts = {});

/// Partition of all rainbow d-subsets into orbits under the group generated
/// by `generators` (deterministic order: by lex-least facet).
std::vector<std::vector<Face>> orbit_facets(const Coloring& kappa,
                                            const std::vector<VertexPermutation>& generators);

/// Re-runs the generation-time predicate stack on a cached entry.
/// `require_sphere` matches enumerate_balanced_spheres; search results are
/// checked against the spec constraints only.
bool verify_census_entry(const EnumerationSpec& spec, const SimplicialComplex& K,
                         bool require_sphere);

}  // namespace spherekit
