#include <doctest.h>

#include <algorithm>
#include <map>

#include "spherekit/constructions.hpp"
#include "spherekit/decomposition.hpp"

using namespace spherekit;

namespace {

std::map<Face, int> facet_index(const SimplicialComplex& K) {
    std::map<Face, int> index;
    for (int i = 0; i < K.facet_count(); ++i) index[K.facets()[static_cast<std::size_t>(i)]] = i;
    return index;
}

std::vector<int> ids_of(const std::map<Face, int>& index,
                        std::initializer_list<const SimplicialComplex*> parts) {
    std::vector<int> ids;
    for (const SimplicialComplex* p : parts)
        for (Face f : p->facets()) ids.push_back(index.at(f));
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace

TEST_CASE("validating the packaged ear decomposition") {
    SimplicialComplex g3 = gamma16_rank3();
    Gamma16Discs discs = gamma16_discs();
    auto index = facet_index(g3);

    EarDecomposition good{{ids_of(index, {&discs.a, &discs.b}), ids_of(index, {&discs.c}),
                           ids_of(index, {&discs.d})}};
    CHECK(validate_ear_decomposition(g3, good).pass);

    // A disc is not a sphere, so it cannot open the decomposition.
    EarDecomposition bad{{ids_of(index, {&discs.c}), ids_of(index, {&discs.a, &discs.b}),
                          ids_of(index, {&discs.d})}};
    PredicateReport r = validate_ear_decomposition(g3, bad);
    CHECK_FALSE(r.pass);
    CHECK(r.detail.find("initial complex") != std::string::npos);

    EarDecomposition out_of_range{{{0, 1, 999}}};
    CHECK_THROWS_AS(validate_ear_decomposition(g3, out_of_range), InputError);
}

TEST_CASE("a cycle is its own ear decomposition") {
    SimplicialComplex c4 = cycle(4);
    EarDecomposition self{{{0, 1, 2, 3}}};
    CHECK(validate_ear_decomposition(c4, self).pass);

    auto found = find_ear_decomposition(c4);
    REQUIRE(found.status == SearchStatus::found);
    CHECK(found.witness->pieces.size() == 1);
    CHECK(validate_ear_decomposition(c4, *found.witness).pass);
}

TEST_CASE("ear decomposition search on the rank-3 subcomplex") {
    SimplicialComplex g3 = gamma16_rank3();
    auto found = find_ear_decomposition(g3);
    REQUIRE(found.status == SearchStatus::found);
    CHECK(found.witness->pieces.size() == 3);
    CHECK(validate_ear_decomposition(g3, *found.witness).pass);
}

TEST_CASE("the 7-vertex torus has no ear decomposition") {
    auto r = find_ear_decomposition(torus7());
    CHECK(r.status == SearchStatus::none);
}

TEST_CASE("shellings are found and validated") {
    SimplicialComplex oct = cross_polytope(3);
    auto r = find_shelling(oct);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(validate_shelling(oct, *r.witness).pass);

    SimplicialComplex g = gamma16();
    auto rg = find_shelling(g);
    REQUIRE(rg.status == SearchStatus::found);
    CHECK(validate_shelling(g, *rg.witness).pass);

    // Prefix property: every prefix attaches along pure codimension 1.
    const auto& order = rg.witness->order;
    int d = g.dimension() + 1;
    for (std::size_t j = 1; j < order.size(); ++j) {
        Face F = g.facets()[static_cast<std::size_t>(order[j])];
        std::vector<Face> inters;
        for (std::size_t i = 0; i < j; ++i)
            inters.push_back(F & g.facets()[static_cast<std::size_t>(order[i])]);
        std::sort(inters.begin(), inters.end(), [](Face a, Face b) { return a.size() > b.size(); });
        std::vector<Face> maximal;
        for (Face f : inters) {
            bool dominated = false;
            for (Face m : maximal)
                if (f.subset_of(m)) dominated = true;
            if (!dominated) maximal.push_back(f);
        }
        for (Face m : maximal) CHECK(m.size() == d - 1);
    }
}

TEST_CASE("the 7-vertex torus is unshellable") {
    auto r = find_shelling(torus7());
    CHECK(r.status == SearchStatus::none);
}

TEST_CASE("bad shelling orders are rejected") {
    SimplicialComplex oct = cross_polytope(3);
    Shelling not_all{{0, 1, 2}};
    CHECK_FALSE(validate_shelling(oct, not_all).pass);

    // Two facets meeting only in a vertex cannot be consecutive.
    // Facets 0 and 7 of the octahedron are antipodal triangles.
    std::vector<int> order{0, 7, 1, 2, 3, 4, 5, 6};
    CHECK_FALSE(validate_shelling(oct, Shelling{order}).pass);
}

TEST_CASE("budget exhaustion reports undecided") {
    SearchOptions tiny;
    tiny.node_budget = 3;
    auto r = find_shelling(gamma16(), tiny);
    CHECK(r.status == SearchStatus::undecided);
    auto re = find_ear_decomposition(gamma16_rank3(), tiny);
    CHECK(re.status == SearchStatus::undecided);
}

TEST_CASE("search round trip over the fixture corpus") {
    std::vector<SimplicialComplex> corpus = {cross_polytope(3), cross_polytope(4), sigma(2),
                                             sigma(3), gamma16_rank3()};
    for (const auto& K : corpus) {
        auto shell = find_shelling(K);
        REQUIRE(shell.status == SearchStatus::found);
        CHECK(validate_shelling(K, *shell.witness).pass);
        auto ear = find_ear_decomposition(K);
        REQUIRE(ear.status == SearchStatus::found);
        CHECK(validate_ear_decomposition(K, *ear.witness).pass);
    }
}
