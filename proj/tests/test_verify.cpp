#include <doctest.h>

#include <set>

#include "spherekit/constructions.hpp"
#include "spherekit/verify.hpp"

using namespace spherekit;

TEST_CASE("proper coloring search") {
    SimplicialComplex oct = cross_polytope(3);
    auto kappa = find_proper_coloring(oct, 3);
    REQUIRE(kappa.has_value());
    CHECK(is_proper_coloring(oct, *kappa));
    // Antipodal pairs are the only independent sets of size 2.
    for (int i = 0; i < 3; ++i)
        CHECK(kappa->color_of[static_cast<std::size_t>(2 * i)] ==
              kappa->color_of[static_cast<std::size_t>(2 * i + 1)]);

    // Boundary of the 3-simplex: complete graph on 4 vertices.
    SimplicialComplex simplex3 = SimplicialComplex::from_facets(
        {Face::of({0, 1, 2}), Face::of({0, 1, 3}), Face::of({0, 2, 3}), Face::of({1, 2, 3})});
    CHECK_FALSE(find_proper_coloring(simplex3, 3).has_value());
    CHECK_THROWS_AS(find_proper_coloring(simplex3, 4), InputError);  // dimension mismatch

    SimplicialComplex g = gamma16();
    auto found = find_proper_coloring(g, 4);
    REQUIRE(found.has_value());
    std::set<std::uint64_t> found_classes, letter_classes;
    for (int c = 0; c < 4; ++c) {
        found_classes.insert(found->color_class(c).bits());
        letter_classes.insert(g.coloring().color_class(c).bits());
    }
    CHECK(found_classes == letter_classes);
}

TEST_CASE("balanced neighborliness") {
    SimplicialComplex g = gamma16();
    CHECK(is_k_neighborly(g, g.coloring(), 2).pass);

    // Every rainbow set of a cross-polytope boundary is a face, so it is
    // balanced k-neighborly for every k up to the number of colors.
    SimplicialComplex cross = cross_polytope(4);
    CHECK(is_k_neighborly(cross, cross.coloring(), 2).pass);
    CHECK(is_k_neighborly(cross, cross.coloring(), 3).pass);
    CHECK(is_k_neighborly(cross, cross.coloring(), 4).pass);

    SimplicialComplex s2 = join_complexes(cycle(6), cycle(6)).complex;
    PredicateReport r = is_k_neighborly(s2, s2.coloring(), 2);
    CHECK_FALSE(r.pass);
    REQUIRE(r.witness.has_value());
    // Lex-least missing pair: vertices 0 and 3 sit at distance 3 on the
    // first hexagon with opposite colors.
    CHECK(*r.witness == Face::of({0, 3}));
}

TEST_CASE("homology sphere recognition") {
    auto spheres = twelve_vertex_spheres();
    for (const auto& s : spheres) CHECK(is_homology_sphere(s).pass);

    Gamma16Discs discs = gamma16_discs();
    PredicateReport ball = is_homology_ball(discs.a);
    CHECK(ball.pass);
    SimplicialComplex rim = homological_boundary(discs.a);
    CHECK(rim.dimension() == 1);
    CHECK(rim.facet_count() == 12);
    CHECK(rim.same_complex(boundary_complex(discs.a)));

    SimplicialComplex lens = lens16();
    CHECK(is_closed_homology_manifold(lens).pass);
    PredicateReport not_sphere = is_homology_sphere(lens);
    CHECK_FALSE(not_sphere.pass);
    REQUIRE(not_sphere.witness.has_value());
    CHECK(not_sphere.witness->empty());  // the global link carries the torsion

    CHECK_FALSE(is_homology_ball(cross_polytope(3)).pass);
    CHECK_FALSE(is_homology_sphere(discs.a).pass);
    CHECK_FALSE(is_closed_homology_manifold(discs.a).pass);
    CHECK_THROWS_AS(is_homology_sphere(SimplicialComplex::from_facets(
                        {Face::of({0, 1, 2}), Face::of({2, 3})})),
                    PreconditionError);
}

TEST_CASE("flag symmetry for balanced spheres") {
    SimplicialComplex cross = cross_polytope(4);
    CHECK(dehn_sommerville_flag(cross, cross.coloring()).pass);
    SimplicialComplex g = gamma16();
    CHECK(dehn_sommerville_flag(g, g.coloring()).pass);
    SimplicialComplex s2 = join_complexes(cycle(6), cycle(6)).complex;
    CHECK(dehn_sommerville_flag(s2, s2.coloring()).pass);

    Gamma16Discs discs = gamma16_discs();
    SimplicialComplex disc = discs.a;
    Coloring kappa;
    kappa.num_colors = 3;
    kappa.color_of.assign(static_cast<std::size_t>(disc.universe_size()), -1);
    disc.vertex_mask().for_each_vertex([&](VertexId v) {
        kappa.color_of[static_cast<std::size_t>(v)] = v / 4;
    });
    CHECK_THROWS_AS(dehn_sommerville_flag(disc, kappa), PreconditionError);
}

TEST_CASE("equal color sizes") {
    SimplicialComplex g = gamma16();
    PredicateReport r = equal_color_sizes(g, g.coloring(), 2);
    CHECK(r.pass);
    CHECK(r.detail.find("4") != std::string::npos);

    SimplicialComplex cross4 = cross_polytope(4);
    CHECK(equal_color_sizes(cross4, cross4.coloring(), 2).pass);
    SimplicialComplex cross6 = cross_polytope(6);
    CHECK(equal_color_sizes(cross6, cross6.coloring(), 3).pass);

    // Not 2-neighborly: precondition failure, not a verdict.
    SimplicialComplex s2 = join_complexes(cycle(6), cycle(6)).complex;
    CHECK_THROWS_AS(equal_color_sizes(s2, s2.coloring(), 2), PreconditionError);
}

TEST_CASE("link intersection profiles") {
    SimplicialComplex lens = lens16();
    Face z_class = lens.coloring().color_class(3);
    LinkIntersectionProfile prof = link_intersection_profile(lens, z_class);
    std::multiset<int> counts;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) counts.insert(prof.pair_components[i][j]);
    CHECK(counts == std::multiset<int>({2, 2, 3, 3, 3, 3}));
    // The packaged labeling pairs z1 with z2 and z3 with z4.
    CHECK(prof.pair_components[0][1] == 2);
    CHECK(prof.pair_components[2][3] == 2);
    CHECK(prof.pair_components[0][2] == 3);

    // Octahedral 3-sphere: both color-4 links equal the rank-3 subcomplex.
    SimplicialComplex cross = cross_polytope(4);
    LinkIntersectionProfile cp = link_intersection_profile(cross, cross.coloring().color_class(3));
    CHECK(cp.pair_components[0][1] == 1);

    // Size-3 class: pairwise 2-balls, triple a 1-sphere.
    auto spheres = twelve_vertex_spheres();
    const SimplicialComplex& s1 = spheres[0];
    Face cls = s1.coloring().color_class(3) & s1.vertex_mask();
    REQUIRE(cls.size() == 3);
    auto vs = cls.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            SimplicialComplex inter =
                intersection_of_links(s1, Face::single(vs[i]) | Face::single(vs[j]));
            CHECK(is_homology_ball(inter).pass);
            CHECK(inter.dimension() == 2);
        }
    LinkIntersectionProfile sp = link_intersection_profile(s1, cls);
    REQUIRE(sp.triple_homology.has_value());
    CHECK(sp.triple_homology->is_sphere_profile(1));
}

TEST_CASE("heegaard profile") {
    SimplicialComplex lens = lens16();
    // z1..z4 are ids 12..15 in the packaged labeling.
    HeegaardReport good = heegaard_profile(lens, 12, 13, 14, 15);
    CHECK(good.pass);
    CHECK(good.common_euler == 0);
    CHECK(good.side_a.betti(1) == 1);
    CHECK(good.common.betti(1) == 2);

    SimplicialComplex cross = cross_polytope(4);
    CHECK_THROWS_AS(heegaard_profile(cross, 6, 7, 6, 7), PreconditionError);

    // The 3-sphere: stars glued along a disc give a ball, not a solid torus.
    SimplicialComplex g = gamma16();
    HeegaardReport info = heegaard_profile(g, 12, 14, 13, 15);
    CHECK_FALSE(info.pass);
}
