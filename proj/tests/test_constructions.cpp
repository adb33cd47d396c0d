#include <doctest.h>

#include <cmath>
#include <set>

#include "spherekit/constructions.hpp"
#include "spherekit/decomposition.hpp"
#include "spherekit/enumeration.hpp"
#include "spherekit/symmetry.hpp"
#include "spherekit/verify.hpp"

using namespace spherekit;

TEST_CASE("cross polytopes and cycles") {
    SimplicialComplex c4 = cross_polytope(4);
    FaceVector f = f_vector(c4);
    CHECK(f.f == std::vector<long long>({1, 8, 24, 32, 16}));
    CHECK(is_homology_sphere(c4).pass);

    SimplicialComplex c6 = cycle(6);
    CHECK(c6.dimension() == 1);
    CHECK(c6.has_coloring());
    CHECK(is_homology_sphere(c6).pass);
    CHECK_FALSE(cycle(5).has_coloring());
    CHECK_THROWS_AS(cycle(2), InputError);
}

TEST_CASE("balanced connected sum builds the 42-edge sphere") {
    auto spheres = twelve_vertex_spheres();
    const SimplicialComplex& s1 = spheres[0];
    FaceVector f = f_vector(s1);
    CHECK(f.f_of(0) == 12);
    CHECK(f.f_of(1) == 42);
    CHECK(is_homology_sphere(s1).pass);
    CHECK(is_proper_coloring(s1, s1.coloring()));

    SimplicialComplex oct4 = cross_polytope(4);
    Face f1 = oct4.facets().front();
    std::map<VertexId, VertexId> wrong;  // color-incompatible pairing
    auto vs = f1.vertices();
    wrong[vs[0]] = vs[1] % 2 == 0 ? vs[1] + 1 : vs[1] - 1;
    CHECK_THROWS_AS(balanced_connected_sum(oct4, f1, oct4, f1, wrong), InputError);
}

TEST_CASE("join of two hexagons") {
    auto spheres = twelve_vertex_spheres();
    const SimplicialComplex& s2 = spheres[1];
    CHECK(f_vector(s2).f_of(1) == 48);  // 6 + 6 + 36
    CHECK(is_homology_sphere(s2).pass);
    CHECK(automorphism_group(s2).order == 288);
}

TEST_CASE("polygon triangulation from chords") {
    SimplicialComplex square = triangulate_polygon({{0, 1, 2, 3}, {{0, 2}}});
    CHECK(square.facet_count() == 2);

    CHECK_THROWS_AS(triangulate_polygon({{0, 1, 2, 3}, {}}), InputError);  // wrong count
    CHECK_THROWS_AS(triangulate_polygon({{0, 1, 2, 3, 4, 5}, {{0, 2}, {1, 3}, {0, 3}}}),
                    InputError);  // crossing
    CHECK_THROWS_AS(triangulate_polygon({{0, 1, 2, 3}, {{0, 1}}}), InputError);  // rim edge
}

TEST_CASE("disc triangulations match the geometric subdivision") {
    // Independent oracle: place the 12-gon on the unit circle; the triangle
    // set tiles the polygon exactly (areas add up, all edges are rim edges
    // or chords) and every triangle has one vertex per letter class.
    Gamma16Discs discs = gamma16_discs();
    struct Named {
        const SimplicialComplex* d;
        bool swapped;  // rim with v1 and v2 exchanged
    };
    std::vector<Named> all = {{&discs.a, false},   {&discs.b, false}, {&discs.c, false},
                              {&discs.d, true},    {&discs.a_prime, true},
                              {&discs.b_prime, true}};
    const std::vector<int> rim_plain = {10, 2, 6, 8, 1, 4, 0, 9, 7, 3, 11, 5};
    // (w3 u3 v3 w1 u2 v1 u1 w2 v4 u4 w4 v2) as vertex ids; swapped rim
    // exchanges ids 4 and 5.
    for (const auto& [dptr, swapped] : all) {
        const SimplicialComplex& d = *dptr;
        CHECK(d.facet_count() == 10);

        std::vector<int> rim = rim_plain;
        if (swapped)
            for (int& v : rim) v = (v == 4) ? 5 : (v == 5 ? 4 : v);
        double xs[16], ys[16];
        for (int i = 0; i < 12; ++i) {
            xs[rim[static_cast<std::size_t>(i)]] = std::cos(2 * M_PI * i / 12);
            ys[rim[static_cast<std::size_t>(i)]] = std::sin(2 * M_PI * i / 12);
        }
        double polygon_area = 12 * 0.5 * std::sin(2 * M_PI / 12);
        double tri_area = 0;
        for (Face t : d.facets()) {
            auto v = t.vertices();
            // one vertex per letter class
            std::set<int> letters{v[0] / 4, v[1] / 4, v[2] / 4};
            CHECK(letters == std::set<int>({0, 1, 2}));
            tri_area += 0.5 * std::abs((xs[v[1]] - xs[v[0]]) * (ys[v[2]] - ys[v[0]]) -
                                       (xs[v[2]] - xs[v[0]]) * (ys[v[1]] - ys[v[0]]));
        }
        CHECK(tri_area == doctest::Approx(polygon_area).epsilon(1e-9));
    }
}

TEST_CASE("the 16-vertex sphere") {
    SimplicialComplex g = gamma16();
    FaceVector f = f_vector(g);
    CHECK(f.f == std::vector<long long>({1, 16, 96, 160, 80}));

    SimplicialComplex lkz1 = link(g, Face::single(12));
    CHECK(lkz1.vertex_count() == 12);
    CHECK(lkz1.facet_count() == 20);

    CHECK(automorphism_group(g).order == 8);

    Gamma16Discs discs = gamma16_discs();
    CHECK(boundary_complex(discs.a).same_complex(boundary_complex(discs.b)));
    CHECK(boundary_complex(discs.a).same_complex(boundary_complex(discs.c)));
    CHECK(boundary_complex(discs.a_prime).same_complex(boundary_complex(discs.d)));
    CHECK(boundary_complex(discs.b_prime).same_complex(boundary_complex(discs.d)));
}

TEST_CASE("the lens space complex") {
    SimplicialComplex lens = lens16();
    CHECK(lens.vertex_count() == 16);
    for (int c = 0; c < 4; ++c)
        CHECK((lens.coloring().color_class(c) & lens.vertex_mask()).size() == 4);

    HomologyProfile hom = homology(lens);
    REQUIRE(hom.torsion_at(1).size() == 1);
    CHECK(hom.torsion_at(1)[0] == 3);

    std::vector<SimplicialComplex> z_links;
    lens.vertex_mask().for_each_vertex([&](VertexId v) {
        SimplicialComplex L = link(lens, Face::single(v));
        CHECK(L.vertex_count() == 12);
        CHECK(L.facet_count() == 20);
        CHECK(is_homology_sphere(L).pass);
        if (lens.coloring().color_of[static_cast<std::size_t>(v)] == 3)
            z_links.push_back(std::move(L));
    });
    REQUIRE(z_links.size() == 4);
    for (std::size_t i = 1; i < z_links.size(); ++i)
        CHECK(are_isomorphic(z_links[0], z_links[i]).has_value());
}

TEST_CASE("small balanced 2-spheres") {
    SimplicialComplex s2 = sigma(2);
    FaceVector f = f_vector(s2);
    CHECK(f.f == std::vector<long long>({1, 8, 18, 12}));

    SimplicialComplex s3 = sigma(3);
    int degree6 = 0;
    s3.vertex_mask().for_each_vertex([&](VertexId v) {
        if (link(s3, Face::single(v)).vertex_count() == 6) ++degree6;
    });
    CHECK(degree6 == 3);
}

TEST_CASE("the 46-edge sphere has all three small spheres as class links") {
    auto spheres = twelve_vertex_spheres();
    const SimplicialComplex& s3 = spheres[2];
    CHECK(f_vector(s3).f_of(1) == 46);
    std::vector<SimplicialComplex> sigmas = {sigma(1), sigma(2), sigma(3)};
    bool found_class = false;
    for (int c = 0; c < 4 && !found_class; ++c) {
        Face cls = s3.coloring().color_class(c) & s3.vertex_mask();
        std::multiset<int> sizes;
        cls.for_each_vertex([&](VertexId v) {
            sizes.insert(link(s3, Face::single(v)).vertex_count());
        });
        if (sizes != std::multiset<int>({6, 8, 9})) continue;
        found_class = true;
        cls.for_each_vertex([&](VertexId v) {
            SimplicialComplex L = link(s3, Face::single(v));
            int expect = L.vertex_count() == 6 ? 0 : (L.vertex_count() == 8 ? 1 : 2);
            CHECK(are_isomorphic(L, sigmas[static_cast<std::size_t>(expect)]).has_value());
        });
    }
    CHECK(found_class);
}

TEST_CASE("torus and projective plane fixtures") {
    SimplicialComplex t = torus7();
    CHECK(t.facet_count() == 14);
    CHECK(f_vector(t).f_of(1) == 21);
    HomologyProfile th = homology(t);
    CHECK(th.betti(1) == 2);
    CHECK(th.betti(2) == 1);

    HomologyProfile rp = homology(rp2_6());
    REQUIRE(rp.torsion_at(1).size() == 1);
    CHECK(rp.torsion_at(1)[0] == 2);
}

TEST_CASE("every named construction builds and self-identifies") {
    for (const std::string& name : construction_names()) {
        SimplicialComplex K = construct_by_name(name);
        CHECK(K.facet_count() > 0);
        CHECK(K.name() == name);
    }
    CHECK_THROWS_AS(construct_by_name("nonsense"), InputError);
}
