#include <doctest.h>

#include "spherekit/constructions.hpp"
#include "spherekit/json_io.hpp"
#include "spherekit/suite.hpp"
#include "spherekit/symmetry.hpp"
#include "spherekit/vectors.hpp"
#include "spherekit/verify.hpp"

using namespace spherekit;

static SimplicialComplex octahedron() { return cross_polytope(3); }

TEST_CASE("from_facets keeps maximal faces and counts faces") {
    SimplicialComplex oct = octahedron();
    CHECK(oct.dimension() == 2);
    FaceVector f = f_vector(oct);
    CHECK(f.f_of(-1) == 1);
    CHECK(f.f_of(0) == 6);
    CHECK(f.f_of(1) == 12);
    CHECK(f.f_of(2) == 8);

    SimplicialComplex k = SimplicialComplex::from_facets({Face::of({0, 1, 2}), Face::of({0, 1})});
    CHECK(k.facet_count() == 1);
    CHECK(k.facets()[0] == Face::of({0, 1, 2}));

    CHECK_THROWS_AS(SimplicialComplex::from_facets({}), InputError);
    CHECK_THROWS_AS(Face::from_vertices(std::vector<VertexId>{1, 1}), InputError);
}

TEST_CASE("from_facets accepts the assembled 16-vertex sphere") {
    SimplicialComplex g = gamma16();
    SimplicialComplex rebuilt = SimplicialComplex::from_facets(g.facets());
    CHECK(rebuilt.dimension() == 3);
    CHECK(rebuilt.vertex_count() == 16);
    CHECK(rebuilt.is_pure());
    CHECK(rebuilt.facet_count() == 80);
    // Idempotence: rebuilding from facets reproduces the same complex.
    CHECK(rebuilt.same_complex(g));
}

TEST_CASE("link") {
    SimplicialComplex cross4 = cross_polytope(4);
    SimplicialComplex lk = link(cross4, Face::single(0));
    auto iso = are_isomorphic(lk, octahedron());
    CHECK(iso.has_value());

    SimplicialComplex lk_facet = link(cross4, cross4.facets()[0]);
    CHECK(lk_facet.is_empty_complex());

    SimplicialComplex g = gamma16();
    SimplicialComplex lkz1 = link(g, Face::single(12));  // z1
    CHECK(lkz1.vertex_count() == 12);
    CHECK(lkz1.facet_count() == 20);
    CHECK(lkz1.dimension() == 2);

    CHECK_THROWS_AS(link(cross4, Face::of({0, 1})), InputError);  // antipodal: not a face
}

TEST_CASE("link composes") {
    SimplicialComplex g = gamma16();
    for (Face f : {Face::of({0, 4}), Face::of({3, 9}), Face::of({0, 4, 8})}) {
        auto vs = f.vertices();
        Face first = Face::single(vs[0]);
        SimplicialComplex once = link(g, first);
        SimplicialComplex twice = link(once, f - first);
        CHECK(twice.same_complex(link(g, f)));
    }
}

TEST_CASE("star, deletion, join") {
    SimplicialComplex oct = octahedron();
    SimplicialComplex st = star(oct, Face::single(0));
    CHECK(st.facet_count() == 4);
    SimplicialComplex bd = boundary_complex(st);
    CHECK(bd.same_complex(link(oct, Face::single(0))));
    CHECK(f_vector(bd).f_of(1) == 4);  // 4-cycle

    SimplicialComplex g = gamma16();
    SimplicialComplex g3 = deletion(g, g.coloring().color_class(3));
    FaceVector f = f_vector(g3);
    CHECK(f.f_of(0) == 12);
    CHECK(f.f_of(1) == 48);
    CHECK(f.f_of(2) == 40);

    CHECK_THROWS_AS(deletion(oct, oct.vertex_mask()), InputError);
    CHECK_THROWS_AS(star(oct, Face::of({0, 1})), InputError);

    SimplicialComplex s0 = SimplicialComplex::from_facets({Face::single(0), Face::single(1)});
    SimplicialComplex j = s0;
    for (int i = 0; i < 3; ++i) j = join_complexes(j, s0).complex;
    CHECK(f_vector(j).f_of(1) == 24);
    CHECK(are_isomorphic(j, cross_polytope(4)).has_value());
}

TEST_CASE("join relabels the second argument on collision") {
    SimplicialComplex a = SimplicialComplex::from_facets({Face::of({0, 1})});
    JoinResult r = join_complexes(a, a);
    CHECK(r.relabeled);
    CHECK(r.relabeling[0] == 2);
    CHECK(r.relabeling[1] == 3);
    CHECK(r.complex.vertex_count() == 4);
    JoinResult disjoint = join_complexes(
        a, SimplicialComplex::from_facets({Face::of({2, 3})}));
    CHECK_FALSE(disjoint.relabeled);
}

TEST_CASE("rank selection") {
    SimplicialComplex cross4 = cross_polytope(4);
    SimplicialComplex cyc = rank_selected(cross4, cross4.coloring(), 0b0011);
    CHECK(cyc.dimension() == 1);
    CHECK(f_vector(cyc).f_of(1) == 4);
    CHECK(is_homology_sphere(cyc).pass);

    SimplicialComplex g = gamma16();
    SimplicialComplex g3 = rank_selected(g, g.coloring(), 0b0111);
    CHECK(g3.same_complex(deletion(g, g.coloring().color_class(3))));

    CHECK(rank_selected(g, g.coloring(), 0b1111).same_complex(g));
    CHECK_THROWS_AS(rank_selected(g, g.coloring(), 0b11111), InputError);
}

TEST_CASE("boundary complex") {
    Gamma16Discs discs = gamma16_discs();
    SimplicialComplex rim = boundary_complex(discs.a);
    CHECK(rim.dimension() == 1);
    CHECK(f_vector(rim).f_of(0) == 12);
    CHECK(f_vector(rim).f_of(1) == 12);
    CHECK(is_homology_sphere(rim).pass);

    CHECK(boundary_complex(octahedron()).is_void());

    SimplicialComplex g = gamma16();
    SimplicialComplex st_z1 = star(g, Face::single(12));
    CHECK(boundary_complex(st_z1).same_complex(link(g, Face::single(12))));

    SimplicialComplex bad = SimplicialComplex::from_facets(
        {Face::of({0, 1, 2}), Face::of({0, 1, 3}), Face::of({0, 1, 4})});
    CHECK_THROWS_AS(boundary_complex(bad), PreconditionError);
}

TEST_CASE("f-vector and flag vectors") {
    SimplicialComplex s3 = sigma(3);
    FaceVector f = f_vector(s3);
    CHECK(f.f_of(0) == 9);
    CHECK(f.f_of(1) == 21);
    CHECK(f.f_of(2) == 14);

    SimplicialComplex cross4 = cross_polytope(4);
    FaceVector fc = f_vector(cross4);
    CHECK(fc.h == std::vector<long long>({1, 4, 6, 4, 1}));

    // Every flag h of the 4-cross-polytope boundary is the convolution of
    // the per-color h-vectors (1,1), hence 1.
    FlagVector flags = flag_vectors(cross4, cross4.coloring());
    for (unsigned S = 0; S < 16; ++S) CHECK(flags.h_of(S) == 1);

    // Recovery identities.
    for (int i = 0; i <= 4; ++i) {
        long long fsum = 0, hsum = 0;
        for (unsigned S = 0; S < 16; ++S) {
            if (std::popcount(S) != i) continue;
            fsum += flags.f_of(S);
            hsum += flags.h_of(S);
        }
        CHECK(fsum == fc.f_of(i - 1));
        CHECK(hsum == fc.h_of(i));
    }

    Coloring improper;
    improper.num_colors = 2;
    improper.color_of = {0, 0, 1, 1, 0, 1};
    CHECK_THROWS_AS(flag_vectors(octahedron(), improper), PreconditionError);
}

TEST_CASE("deletion of a color class equals the complementary rank selection") {
    SimplicialComplex g = gamma16();
    for (int c = 0; c < 4; ++c) {
        SimplicialComplex del = deletion(g, g.coloring().color_class(c));
        SimplicialComplex sel = rank_selected(g, g.coloring(), 0b1111u & ~(1u << c));
        CHECK(del.same_complex(sel));
    }
}

TEST_CASE("empty and void complexes are distinct") {
    SimplicialComplex e = SimplicialComplex::make_empty();
    SimplicialComplex v = SimplicialComplex::make_void();
    CHECK(e.is_empty_complex());
    CHECK_FALSE(e.is_void());
    CHECK(v.is_void());
    CHECK(e.dimension() == -1);
    CHECK(e.face_count(-1) == 1);
    CHECK(v.face_count(-1) == 0);
}

TEST_CASE("json round trip and determinism") {
    SimplicialComplex g = gamma16();
    std::string text = to_json_string(g);
    CHECK(text == to_json_string(g));
    SimplicialComplex back = parse_complex(text);
    CHECK(back.same_complex([&] {
        SimplicialComplex c = g;
        c.compact();
        return c;
    }()));
    CHECK(back.name() == "gamma16");
    CHECK(back.has_coloring());
    CHECK(back.label(12) == "z1");

    std::string cyc = to_json_string(cycle(3));
    CHECK(cyc.find("\"facets\": [") != std::string::npos);
    CHECK(parse_complex(cyc).facet_count() == 3);

    CHECK_THROWS_AS(parse_complex("{\"facets\": []}"), InputError);
    CHECK_THROWS_AS(parse_complex("not json"), InputError);
}

TEST_CASE("random complexes rebuild from their facets") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        SimplicialComplex k = random_complex(s, 8);
        SimplicialComplex again = SimplicialComplex::from_facets(k.facets());
        CHECK(again.same_complex(k));
    }
}
