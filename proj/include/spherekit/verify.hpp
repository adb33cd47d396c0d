#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spherekit/homology.hpp"
#include "spherekit/vectors.hpp"

namespace spherekit {

/// Outcome of a recognition predicate. A failing report always carries
/// enough to re-check the failure by hand: a witness face where applicable,
/// and a one-line explanation otherwise.
struct PredicateReport {
    bool pass = false;
    std::optional<Face> witness;
    std::string detail;

    explicit operator bool() const { return pass; }

    static PredicateReport ok(std::string detail = "") {
        return {true, std::nullopt, std::move(detail)};
    }
    static PredicateReport failed(std::string detail, std::optional<Face> witness = std::nullopt) {
        return {false, std::move(witness), std::move(detail)};
    }
};

/// Exact search for a proper d-coloring of the 1-skeleton.
/// Requires dim(K) = d-1.
std::optional<Coloring> find_proper_coloring(const SimplicialComplex& K, int d);

/// Every set of <= k vertices with pairwise distinct colors is a face.
/// Fail witness: the lex-least missing rainbow set.
PredicateReport is_k_neighborly(const SimplicialComplex& K, const Coloring& kappa, int k);

/// H̃(lk σ) must match the sphere of dimension dim(K) - |σ| for every face σ,
/// the empty face included.
PredicateReport is_homology_sphere(const SimplicialComplex& K,
                                   Coefficients coeff = Coefficients::integers());

/// Homology ball: trivial global homology, ball-or-sphere face links, and a
/// boundary (the faces with homologically trivial links) that is a sphere.
PredicateReport is_homology_ball(const SimplicialComplex& K,
                                 Coefficients coeff = Coefficients::integers());

/// Subcomplex of faces whose link has vanishing reduced homology.
/// For a homology ball this is its boundary sphere.
SimplicialComplex homological_boundary(const SimplicialComplex& K,
                                       Coefficients coeff = Coefficients::integers());

/// Connected, pure, and every vertex link a homology sphere of codimension 1.
PredicateReport is_closed_homology_manifold(const SimplicialComplex& K,
                                            Coefficients coeff = Coefficients::integers());

/// Flag symmetry h_S = h_{[d]\S}. Requires a proper coloring and a homology
/// sphere (PreconditionError otherwise).
PredicateReport dehn_sommerville_flag(const SimplicialComplex& K, const Coloring& kappa);

/// All color classes of a balanced k-neighborly homology (2k-1)-sphere have
/// equal size. Preconditions are re-checked and reported as errors, not as a
/// fail verdict.
PredicateReport equal_color_sizes(const SimplicialComplex& K, const Coloring& kappa, int k);

/// Intersection of the links of the given vertices, as a subcomplex of K's
/// universe.
SimplicialComplex intersection_of_links(const SimplicialComplex& K, Face vertices);

struct LinkIntersectionProfile {
    std::vector<VertexId> class_vertices;
    /// pair_components[i][j] = number of connected components of
    /// lk(v_i) ∩ lk(v_j), for i < j; diagonal entries are 0.
    std::vector<std::vector<int>> pair_components;
    /// Homology of the triple intersection, for classes of exactly 3 vertices.
    std::optional<HomologyProfile> triple_homology;
};

LinkIntersectionProfile link_intersection_profile(const SimplicialComplex& K, Face color_class);

struct HeegaardReport {
    bool pass = false;
    HomologyProfile side_a, side_b, common;
    long long common_euler = 0;
    std::string detail;
};

/// Splits K along the union-of-stars surfaces of a size-4 color class,
/// partitioned as {a,b} | {c,d}. Passes when both sides have solid-torus
/// homology and the common boundary has torus homology with Euler
/// characteristic 0.
HeegaardReport heegaard_profile(const SimplicialComplex& K, VertexId a, VertexId b,
                                VertexId c, VertexId d);

/// Union of subcomplexes living in the same universe.
SimplicialComplex union_complexes(const SimplicialComplex& A, const SimplicialComplex& B);
/// Faces present in both subcomplexes.
SimplicialComplex intersect_complexes(const SimplicialComplex& A, const SimplicialComplex& B);

}  // namespace spherekit
