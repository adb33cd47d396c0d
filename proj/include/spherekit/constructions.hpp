#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "spherekit/complex.hpp"

namespace spherekit {

/// Thrown when packaged construction data fails its own validation
/// (mis-transcribed chords, a broken certificate).
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Boundary of the d-dimensional cross-polytope: the (d-1)-sphere on 2d
/// vertices, colored by antipodal pairs. cross_polytope(3) is the octahedron.
SimplicialComplex cross_polytope(int d);

/// The n-cycle as a 1-complex; 2-colored when n is even.
SimplicialComplex cycle(int n);

/// Join with a fresh 2-point complex (one new color when K is colored).
SimplicialComplex suspension(const SimplicialComplex& K);

/// Glues K1 and K2 along one facet of each, removed; `pairing` maps the
/// vertices of facet2 onto facet1 and must be color-compatible when both
/// complexes are colored.
SimplicialComplex balanced_connected_sum(const SimplicialComplex& K1, Face facet1,
                                         const SimplicialComplex& K2, Face facet2,
                                         const std::map<VertexId, VertexId>& pairing);

/// A polygon triangulated by non-crossing chords.
struct ChordedPolygon {
    std::vector<VertexId> boundary;               // cyclic order
    std::vector<std::pair<VertexId, VertexId>> chords;  // exactly n-3 of them
};

/// The 2-ball cut out of the polygon by its chords. Crossing chords, a wrong
/// chord count, or a subdivision that fails the ball check raise errors.
SimplicialComplex triangulate_polygon(const ChordedPolygon& p);

/// The 16-vertex balanced 2-neighborly homology 3-sphere, assembled from six
/// packaged disc triangulations (four cone links over a 12-gon).
SimplicialComplex gamma16();

/// The six 10-triangle discs the gamma16 links are glued from, in gamma16's
/// vertex universe. a, b, c share one rim; a_prime, b_prime, d share the
/// other (v1 and v2 swapped).
struct Gamma16Discs {
    SimplicialComplex a, b, c, d, a_prime, b_prime;
};
Gamma16Discs gamma16_discs();

/// Rank-selected subcomplex of gamma16 on the first three colors, in
/// gamma16's vertex universe.
SimplicialComplex gamma16_rank3();

/// The 16-vertex balanced 2-neighborly triangulation of the lens space
/// L(3,1); loaded from the packaged certificate and re-verified, or, when no
/// certificate is available, rediscovered by symmetric search.
SimplicialComplex lens16();

/// The three balanced 2-spheres on at most 9 vertices: octahedron,
/// suspension of a 6-cycle, and the unique one on 9 vertices.
SimplicialComplex sigma(int i);

/// The three balanced 3-spheres with 12 vertices and at most 50 edges,
/// ordered by edge count (42, 46, 48).
std::array<SimplicialComplex, 3> twelve_vertex_spheres();

/// The 7-vertex 2-torus.
SimplicialComplex torus7();

/// The 6-vertex real projective plane.
SimplicialComplex rp2_6();

/// CLI names: cross4, octahedron, sigma1..3, s1..s3, gamma16, gamma16-rank3,
/// lens16, torus7, rp2-6.
SimplicialComplex construct_by_name(const std::string& name);
std::vector<std::string> construction_names();

}  // namespace spherekit
