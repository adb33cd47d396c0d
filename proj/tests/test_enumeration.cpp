#include <doctest.h>

#include <numeric>
#include <set>

#include "spherekit/constructions.hpp"
#include "spherekit/enumeration.hpp"
#include "spherekit/verify.hpp"

using namespace spherekit;

namespace {

EnumerationSpec sizes_spec(int dim, std::vector<int> sizes) {
    EnumerationSpec s;
    s.dim = dim;
    s.color_sizes = std::move(sizes);
    return s;
}

}  // namespace

TEST_CASE("the octahedron is the only balanced sphere on 2+2+2 vertices") {
    Census c = enumerate_balanced_spheres(sizes_spec(2, {2, 2, 2}));
    CHECK(c.exhaustive);
    REQUIRE(c.entries.size() == 1);
    CHECK(are_isomorphic(c.entries[0].complex, cross_polytope(3)).has_value());

    // Brute-force oracle: every subset of the 8 rainbow triangles.
    std::vector<Face> tris;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int cc = 0; cc < 2; ++cc)
                tris.push_back(Face::of({a, 2 + b, 4 + cc}));
    int hits = 0;
    for (unsigned pick = 1; pick < 256; ++pick) {
        std::vector<Face> facets;
        for (int t = 0; t < 8; ++t)
            if ((pick >> t) & 1) facets.push_back(tris[static_cast<std::size_t>(t)]);
        SimplicialComplex K = SimplicialComplex::from_facets(facets);
        if (K.vertex_count() != 6) continue;
        if (!is_homology_sphere(K).pass) continue;
        ++hits;
        CHECK(are_isomorphic(K, cross_polytope(3)).has_value());
    }
    CHECK(hits == 1);  // all 8 triangles together, nothing else
}

TEST_CASE("unique balanced 2-sphere on 3+3+3 vertices") {
    Census c = enumerate_balanced_spheres(sizes_spec(2, {3, 3, 3}));
    CHECK(c.exhaustive);
    REQUIRE(c.entries.size() == 1);
    const CensusEntry& e = c.entries[0];
    CHECK(e.fvec.f_of(0) == 9);
    CHECK(e.fvec.f_of(1) == 21);
    CHECK(e.fvec.f_of(2) == 14);
    CHECK(e.hom.is_sphere_profile(2));
}

TEST_CASE("census of balanced 3-spheres on 3+3+3+3 vertices") {
    // The edge-bounded census. Published work reports three spheres here;
    // exhaustive enumeration (cross-checked independently) finds a fourth,
    // a second sphere with 48 edges whose links are not all 8-vertex.
    Census bounded = enumerate_balanced_spheres([&] {
        EnumerationSpec s = sizes_spec(3, {3, 3, 3, 3});
        s.max_edges = 50;
        return s;
    }());
    CHECK(bounded.exhaustive);
    std::multiset<long long> f1s;
    for (const auto& e : bounded.entries) f1s.insert(e.fvec.f_of(1));
    CHECK(f1s == std::multiset<long long>({42, 46, 48, 48}));

    std::multiset<std::uint64_t> auts;
    for (const auto& e : bounded.entries) auts.insert(e.aut_order);
    CHECK(auts.count(288) == 1);  // the join of two hexagons
    CHECK(auts.count(12) == 1);   // the second 48-edge sphere

    // Unrestricted: one more sphere, with 52 edges; none 2-neighborly.
    Census open_census = enumerate_balanced_spheres(sizes_spec(3, {3, 3, 3, 3}));
    CHECK(open_census.exhaustive);
    CHECK(open_census.entries.size() == 5);
    std::set<long long> spectrum;
    for (const auto& e : open_census.entries) {
        spectrum.insert(e.fvec.f_of(1));
        CHECK(e.hom.is_sphere_profile(3));
        CHECK_FALSE(is_k_neighborly(e.complex, e.complex.coloring(), 2).pass);
    }
    CHECK(spectrum == std::set<long long>({42, 46, 48, 52}));

    // Isomorph-freeness: canonical forms pairwise distinct.
    std::set<std::vector<Face>> canon;
    for (const auto& e : open_census.entries) canon.insert(e.complex.facets());
    CHECK(canon.size() == open_census.entries.size());

    // Every vertex link is one of the three balanced 2-spheres on <= 9
    // vertices.
    std::vector<SimplicialComplex> sigmas = {sigma(1), sigma(2), sigma(3)};
    for (const auto& e : open_census.entries) {
        bool all_links_known = true;
        e.complex.vertex_mask().for_each_vertex([&](VertexId v) {
            SimplicialComplex L = link(e.complex, Face::single(v));
            bool known = false;
            for (const auto& s : sigmas)
                if (are_isomorphic(L, s).has_value()) known = true;
            if (!known) all_links_known = false;
        });
        CHECK(all_links_known);
    }
}

TEST_CASE("orbit partitions of rainbow facets") {
    // Order-4 rotation of all four classes on 4+4+4+4 vertices acts freely.
    Coloring kappa;
    kappa.num_colors = 4;
    for (int c = 0; c < 4; ++c)
        for (int i = 0; i < 4; ++i) kappa.color_of.push_back(c);
    VertexPermutation rot;
    rot.map.resize(16);
    const int cyc[4] = {2, 3, 1, 0};
    for (int c = 0; c < 4; ++c)
        for (int i = 0; i < 4; ++i) rot.map[static_cast<std::size_t>(4 * c + i)] = 4 * c + cyc[i];
    auto orbits = orbit_facets(kappa, {rot});
    CHECK(orbits.size() == 64);
    for (const auto& orbit : orbits) CHECK(orbit.size() == 4);

    // Identity group: every facet is its own orbit.
    CHECK(orbit_facets(kappa, {}).size() == 256);

    // Full symmetric group on each class: a single orbit.
    std::vector<VertexPermutation> sym;
    for (int c = 0; c < 4; ++c) {
        for (int i = 0; i + 1 < 4; ++i) {
            VertexPermutation t;
            t.map.resize(16);
            std::iota(t.map.begin(), t.map.end(), 0);
            std::swap(t.map[static_cast<std::size_t>(4 * c + i)],
                      t.map[static_cast<std::size_t>(4 * c + i + 1)]);
            sym.push_back(t);
        }
    }
    CHECK(orbit_facets(kappa, sym).size() == 1);
}

TEST_CASE("identity-group search pins down the cross-polytope") {
    EnumerationSpec spec = sizes_spec(3, {2, 2, 2, 2});
    spec.neighborly_k = 2;
    HomologyProfile target;
    target.dim = 3;
    target.reduced_betti = {0, 0, 0, 0, 1};
    target.torsion.assign(5, {});
    spec.target_homology = target;
    Census c = search_symmetric(spec, /*first_found=*/false, {});
    CHECK(c.exhaustive);
    REQUIRE(c.entries.size() == 1);
    CHECK(are_isomorphic(c.entries[0].complex, cross_polytope(4)).has_value());
}

TEST_CASE("spec json round trip") {
    EnumerationSpec spec = sizes_spec(3, {4, 4, 4, 4});
    spec.neighborly_k = 2;
    spec.max_edges = 96;
    VertexPermutation rot;
    rot.map.resize(16);
    const int cyc[4] = {2, 3, 1, 0};
    for (int c = 0; c < 4; ++c)
        for (int i = 0; i < 4; ++i) rot.map[static_cast<std::size_t>(4 * c + i)] = 4 * c + cyc[i];
    spec.symmetry = {rot};
    HomologyProfile target;
    target.dim = 3;
    target.reduced_betti = {0, 0, 0, 0, 1};
    target.torsion.assign(5, {});
    target.torsion[2] = {BigInt(3)};
    spec.target_homology = target;

    EnumerationSpec back = EnumerationSpec::from_json(spec.to_json());
    CHECK(back.dim == spec.dim);
    CHECK(back.color_sizes == spec.color_sizes);
    CHECK(back.max_edges == spec.max_edges);
    CHECK(back.neighborly_k == spec.neighborly_k);
    CHECK(back.symmetry == spec.symmetry);
    CHECK(back.digest() == spec.digest());
    REQUIRE(back.target_homology.has_value());
    CHECK(back.target_homology->torsion_at(1) == spec.target_homology->torsion_at(1));
}

TEST_CASE("out-of-regime specs are refused") {
    CHECK_THROWS_AS(enumerate_balanced_spheres(sizes_spec(3, {5, 5, 5, 5})), InputError);
    CHECK_THROWS_AS(enumerate_balanced_spheres(sizes_spec(4, {2, 2, 2, 2, 2})), InputError);
    CHECK_THROWS_AS(enumerate_balanced_spheres(sizes_spec(2, {1, 3, 3})), InputError);
    // 4+4+4+4 is in the size regime but has no apex class of size <= 3.
    CHECK_THROWS_AS(enumerate_balanced_spheres(sizes_spec(3, {4, 4, 4, 4})), InputError);
}

TEST_CASE("cached entries re-verify") {
    Census c = enumerate_balanced_spheres(sizes_spec(2, {3, 3, 3}));
    EnumerationSpec spec = sizes_spec(2, {3, 3, 3});
    CHECK(verify_census_entry(spec, c.entries[0].complex, true));
    // Tampered entry: drop a facet.
    std::vector<Face> facets = c.entries[0].complex.facets();
    facets.pop_back();
    SimplicialComplex broken = SimplicialComplex::from_facets(facets);
    broken.set_coloring(c.entries[0].complex.coloring());
    CHECK_FALSE(verify_census_entry(spec, broken, true));
}

TEST_CASE("symmetric search under the order-4 generator of the 16-vertex sphere") {
    // gamma16 satisfies every constraint of this spec (including literal
    // invariance under its quoted rotation), so the search space is
    // nonempty; first-found returns the first valid complex in DFS order,
    // which happens to be a second 2-neighborly sphere, not gamma16.
    SimplicialComplex g = gamma16();
    VertexPermutation rot = VertexPermutation::from_cycles(
        "(u1 u3 u2 u4)(v1 z2 v2 z1)(v3 z4 v4 z3)(w1 w4 w2 w3)", g);
    EnumerationSpec spec;
    spec.dim = 3;
    spec.color_sizes = {4, 4, 4, 4};
    spec.neighborly_k = 2;
    spec.symmetry = {rot};
    HomologyProfile target;
    target.dim = 3;
    target.reduced_betti = {0, 0, 0, 0, 1};
    target.torsion.assign(5, {});
    spec.target_homology = target;

    // gamma16 itself passes the spec constraints.
    {
        std::vector<Face> mapped;
        for (Face f : g.facets()) mapped.push_back(rot.apply(f));
        std::sort(mapped.begin(), mapped.end(), lex_less);
        CHECK(mapped == g.facets());
        CHECK(is_k_neighborly(g, g.coloring(), 2).pass);
        CHECK(homology(g).is_sphere_profile(3));
    }

    Census c = search_symmetric(spec, /*first_found=*/true, {});
    REQUIRE(c.entries.size() == 1);
    const CensusEntry& e = c.entries[0];
    CHECK(e.hom.is_sphere_profile(3));
    CHECK(is_k_neighborly(e.complex, e.complex.coloring(), 2).pass);
    CHECK(is_homology_sphere(e.complex).pass);
    CHECK(e.fvec.f_of(1) == 96);
    // The search's first find is a second such sphere, with a larger group.
    CHECK(e.aut_order == 32);
    CHECK_FALSE(are_isomorphic(e.complex, g).has_value());
}
