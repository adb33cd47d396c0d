#include "spherekit/constructions.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "spherekit/enumeration.hpp"
#include "spherekit/verify.hpp"

namespace spherekit {

namespace detail {
std::vector<std::vector<int>> lens16_certificate();
}

static SimplicialComplex build_gamma16();
static SimplicialComplex build_lens16();
static std::array<SimplicialComplex, 3> build_twelve_vertex_spheres();

// ---- generic builders ----

SimplicialComplex cross_polytope(int d) {
    if (d < 1 || d > 6) throw InputError("cross_polytope supports 1 <= d <= 6");
    std::vector<Face> facets;
    for (unsigned pick = 0; pick < (1u << d); ++pick) {
        Face f;
        for (int i = 0; i < d; ++i) f = f | Face::single(2 * i + ((pick >> i) & 1));
        facets.push_back(f);
    }
    SimplicialComplex K = SimplicialComplex::from_facets(std::move(facets));
    Coloring kappa;
    kappa.num_colors = d;
    kappa.color_of.resize(static_cast<std::size_t>(2 * d));
    for (int i = 0; i < d; ++i)
        kappa.color_of[static_cast<std::size_t>(2 * i)] = kappa.color_of[static_cast<std::size_t>(2 * i + 1)] = i;
    K.set_coloring(std::move(kappa));
    K.set_name(d == 3 ? "octahedron" : "cross" + std::to_string(d));
    return K;
}

SimplicialComplex cycle(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    std::vector<Face> facets;
    for (int i = 0; i < n; ++i)
        facets.push_back(Face::single(i) | Face::single((i + 1) % n));
    SimplicialComplex K = SimplicialComplex::from_facets(std::move(facets));
    if (n % 2 == 0) {
        Coloring kappa;
        kappa.num_colors = 2;
        for (int i = 0; i < n; ++i) kappa.color_of.push_back(i % 2);
        K.set_coloring(std::move(kappa));
    }
    K.set_name("cycle" + std::to_string(n));
    return K;
}

SimplicialComplex suspension(const SimplicialComplex& K) {
    SimplicialComplex poles = SimplicialComplex::from_facets({Face::single(0), Face::single(1)});
    if (K.has_coloring()) {
        Coloring kappa;
        kappa.num_colors = 1;
        kappa.color_of = {0, 0};
        poles.set_coloring(std::move(kappa));
    }
    SimplicialComplex out = join_complexes(K, poles).complex;
    out.set_name(K.name().empty() ? "suspension" : "susp-" + K.name());
    return out;
}

SimplicialComplex balanced_connected_sum(const SimplicialComplex& K1, Face facet1,
                                         const SimplicialComplex& K2, Face facet2,
                                         const std::map<VertexId, VertexId>& pairing) {
    auto is_facet = [](const SimplicialComplex& K, Face f) {
        return std::find(K.facets().begin(), K.facets().end(), f) != K.facets().end();
    };
    if (!is_facet(K1, facet1) || !is_facet(K2, facet2))
        throw InputError("connected sum: the glued faces must be facets");
    if (static_cast<int>(pairing.size()) != facet2.size() || facet1.size() != facet2.size())
        throw InputError("connected sum: pairing must biject the two facets");
    for (auto [from, to] : pairing) {
        if (!facet2.contains(from) || !facet1.contains(to))
            throw InputError("connected sum: pairing is not between the given facets");
        if (K1.has_coloring() && K2.has_coloring() &&
            K1.coloring().color_of[static_cast<std::size_t>(to)] !=
                K2.coloring().color_of[static_cast<std::size_t>(from)])
            throw InputError("connected sum: pairing is not color-compatible");
    }

    // K2's unglued vertices move past K1's id range.
    std::vector<int> map2(static_cast<std::size_t>(K2.universe_size()), -1);
    int next = K1.universe_size();
    K2.vertex_mask().for_each_vertex([&](VertexId v) {
        auto it = pairing.find(v);
        map2[static_cast<std::size_t>(v)] = (it != pairing.end()) ? it->second : next++;
    });
    SimplicialComplex moved = K2.relabeled(map2);

    std::vector<Face> facets;
    for (Face f : K1.facets())
        if (!(f == facet1)) facets.push_back(f);
    Face moved_facet2 = [&] {
        std::uint64_t bits = 0;
        facet2.for_each_vertex([&](VertexId v) { bits |= std::uint64_t{1} << map2[static_cast<std::size_t>(v)]; });
        return Face::from_bits(bits);
    }();
    for (Face f : moved.facets())
        if (!(f == moved_facet2)) facets.push_back(f);
    SimplicialComplex out = SimplicialComplex::from_facets(std::move(facets));

    if (K1.has_coloring() && K2.has_coloring()) {
        Coloring kappa;
        kappa.num_colors = std::max(K1.coloring().num_colors, K2.coloring().num_colors);
        kappa.color_of.assign(static_cast<std::size_t>(out.universe_size()), -1);
        K1.vertex_mask().for_each_vertex([&](VertexId v) {
            kappa.color_of[static_cast<std::size_t>(v)] = K1.coloring().color_of[static_cast<std::size_t>(v)];
        });
        K2.vertex_mask().for_each_vertex([&](VertexId v) {
            kappa.color_of[static_cast<std::size_t>(map2[static_cast<std::size_t>(v)])] =
                K2.coloring().color_of[static_cast<std::size_t>(v)];
        });
        out.set_coloring(std::move(kappa));
    }
    return out;
}

SimplicialComplex triangulate_polygon(const ChordedPolygon& p) {
    int n = static_cast<int>(p.boundary.size());
    if (n < 3) throw InputError("polygon needs at least 3 vertices");
    {
        std::set<VertexId> uniq(p.boundary.begin(), p.boundary.end());
        if (static_cast<int>(uniq.size()) != n) throw InputError("repeated boundary vertex");
    }
    if (static_cast<int>(p.chords.size()) != n - 3)
        throw InputError("an n-gon triangulation needs exactly n-3 chords, got " +
                         std::to_string(p.chords.size()));

    std::vector<Face> triangles;
    // Recursive split along the first chord; a chord with endpoints on both
    // open sides of the splitter crosses it.
    std::function<void(std::vector<VertexId>, std::vector<std::pair<VertexId, VertexId>>)> split =
        [&](std::vector<VertexId> poly, std::vector<std::pair<VertexId, VertexId>> chords) {
            int m = static_cast<int>(poly.size());
            if (m == 3) {
                if (!chords.empty()) throw InputError("chord inside a triangle");
                triangles.push_back(Face::of({poly[0], poly[1], poly[2]}));
                return;
            }
            auto [a, b] = chords.front();
            auto ia = std::find(poly.begin(), poly.end(), a);
            auto ib = std::find(poly.begin(), poly.end(), b);
            if (ia == poly.end() || ib == poly.end())
                throw InputError("crossing chords: endpoint fell outside its sub-polygon");
            int i = static_cast<int>(ia - poly.begin());
            int j = static_cast<int>(ib - poly.begin());
            if (i > j) std::swap(i, j);
            if (j - i < 2 || (i == 0 && j == m - 1))
                throw InputError("chord duplicates a boundary edge");

            std::vector<VertexId> p1(poly.begin() + i, poly.begin() + j + 1);
            std::vector<VertexId> p2(poly.begin() + j, poly.end());
            p2.insert(p2.end(), poly.begin(), poly.begin() + i + 1);
            std::vector<std::pair<VertexId, VertexId>> c1, c2;
            std::set<VertexId> s1(p1.begin() + 1, p1.end() - 1);  // strict interior of side 1
            for (std::size_t k = 1; k < chords.size(); ++k) {
                auto [x, y] = chords[k];
                bool x1 = s1.count(x), y1 = s1.count(y);
                bool x_on = (x == poly[static_cast<std::size_t>(i)] || x == poly[static_cast<std::size_t>(j)]);
                bool y_on = (y == poly[static_cast<std::size_t>(i)] || y == poly[static_cast<std::size_t>(j)]);
                if ((x1 || x_on) && (y1 || y_on) && (x1 || y1))
                    c1.push_back(chords[k]);
                else if (!x1 && !y1)
                    c2.push_back(chords[k]);
                else
                    throw InputError("crossing chords");
            }
            split(std::move(p1), std::move(c1));
            split(std::move(p2), std::move(c2));
        };
    std::vector<std::pair<VertexId, VertexId>> chords = p.chords;
    if (chords.empty()) {
        triangles.push_back(Face::of({p.boundary[0], p.boundary[1], p.boundary[2]}));
    } else {
        split(p.boundary, chords);
    }
    SimplicialComplex ball = SimplicialComplex::from_facets(triangles);

    // The subdivision of an n-gon by n-3 chords has n-2 triangles; anything
    // else means the chord data is bad.
    if (static_cast<int>(triangles.size()) != n - 2)
        throw ConstructionError("polygon triangulation produced " +
                                std::to_string(triangles.size()) + " triangles");
    std::vector<Face> rim;
    for (int i = 0; i < n; ++i)
        rim.push_back(Face::single(p.boundary[static_cast<std::size_t>(i)]) |
                      Face::single(p.boundary[static_cast<std::size_t>((i + 1) % n)]));
    std::sort(rim.begin(), rim.end(), lex_less);
    SimplicialComplex rim_complex = boundary_complex(ball);
    if (rim_complex.facets() != rim)
        throw ConstructionError("polygon triangulation boundary does not match the rim");
    if (!is_homology_ball(ball).pass)
        throw ConstructionError("polygon triangulation is not a 2-ball");
    return ball;
}

// ---- the 16-vertex constructions ----

namespace {

// Vertex ids: u1..u4 = 0..3, v1..v4 = 4..7, w1..w4 = 8..11, z1..z4 = 12..15.
constexpr int U = 0, V = 4, W = 8, Z = 12;
int uid(int i) { return U + i - 1; }
int vid(int i) { return V + i - 1; }
int wid(int i) { return W + i - 1; }
int zid(int i) { return Z + i - 1; }

std::vector<std::string> uvwz_labels() {
    std::vector<std::string> labels(16);
    const char* letters = "uvwz";
    for (int c = 0; c < 4; ++c)
        for (int i = 0; i < 4; ++i)
            labels[static_cast<std::size_t>(4 * c + i)] = std::string(1, letters[c]) + std::to_string(i + 1);
    return labels;
}

Coloring uvwz_coloring() {
    Coloring kappa;
    kappa.num_colors = 4;
    kappa.color_of.resize(16);
    for (int v = 0; v < 16; ++v) kappa.color_of[static_cast<std::size_t>(v)] = v / 4;
    return kappa;
}

// Disc data for the four cone links. Two 12-gon rims differing by swapping
// v1 and v2; each disc is given by its chord list.
const std::vector<VertexId> kRimA = {wid(3), uid(3), vid(3), wid(1), uid(2), vid(1),
                                     uid(1), wid(2), vid(4), uid(4), wid(4), vid(2)};
const std::vector<VertexId> kRimD = {wid(3), uid(3), vid(3), wid(1), uid(2), vid(2),
                                     uid(1), wid(2), vid(4), uid(4), wid(4), vid(1)};

using ChordList = std::vector<std::pair<VertexId, VertexId>>;

const ChordList kChordsA = {{vid(2), uid(3)}, {uid(3), wid(1)}, {wid(1), vid(2)},
                            {vid(2), uid(2)}, {uid(2), wid(4)}, {wid(4), vid(1)},
                            {vid(1), uid(4)}, {uid(4), wid(2)}, {wid(2), vid(1)}};
const ChordList kChordsB = {{wid(3), vid(3)}, {vid(3), uid(2)}, {uid(2), wid(3)},
                            {vid(1), wid(3)}, {wid(3), uid(1)}, {uid(1), vid(2)},
                            {uid(1), wid(4)}, {wid(4), vid(4)}, {vid(4), uid(1)}};
const ChordList kChordsC = {{vid(1), wid(1)}, {wid(1), uid(1)}, {uid(1), vid(3)},
                            {vid(3), wid(2)}, {wid(2), uid(3)}, {uid(3), vid(4)},
                            {vid(4), wid(3)}, {wid(3), uid(4)}, {uid(4), vid(2)}};
const ChordList kChordsD = {{vid(2), wid(2)}, {wid(2), uid(2)}, {uid(2), vid(4)},
                            {vid(4), wid(1)}, {wid(1), uid(4)}, {uid(4), vid(3)},
                            {vid(3), wid(4)}, {wid(4), uid(3)}, {uid(3), vid(1)}};
const ChordList kChordsAp = {{uid(3), wid(1)}, {wid(1), vid(2)}, {vid(2), uid(3)},
                             {wid(2), uid(4)}, {uid(4), vid(1)}, {vid(1), wid(2)},
                             {vid(2), wid(3)}, {wid(3), uid(1)}, {uid(1), vid(1)}};
const ChordList kChordsBp = {{wid(3), vid(3)}, {vid(3), uid(2)}, {uid(2), wid(3)},
                             {uid(1), vid(4)}, {vid(4), wid(4)}, {wid(4), uid(1)},
                             {vid(1), uid(2)}, {uid(2), wid(4)}, {wid(4), vid(2)}};

SimplicialComplex disc(const std::vector<VertexId>& rim, const ChordList& chords) {
    return triangulate_polygon({rim, chords});
}

std::vector<Face> edge_set(const std::vector<Face>& triangles) {
    std::set<Face> edges;
    for (Face t : triangles) {
        auto vs = t.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                edges.insert(Face::single(vs[i]) | Face::single(vs[j]));
    }
    return {edges.begin(), edges.end()};
}

}  // namespace

Gamma16Discs gamma16_discs() {
    Gamma16Discs out{disc(kRimA, kChordsA),  disc(kRimA, kChordsB),  disc(kRimA, kChordsC),
                     disc(kRimD, kChordsD),  disc(kRimD, kChordsAp), disc(kRimD, kChordsBp)};
    SimplicialComplex host = SimplicialComplex::from_facets({Face::from_bits((std::uint64_t{1} << 16) - 1)});
    host.set_labels(uvwz_labels());
    host.set_coloring(uvwz_coloring());
    for (SimplicialComplex* disc_ptr :
         {&out.a, &out.b, &out.c, &out.d, &out.a_prime, &out.b_prime}) {
        SimplicialComplex widened = subcomplex_from_faces(host, disc_ptr->facets());
        *disc_ptr = std::move(widened);
    }
    return out;
}

SimplicialComplex gamma16() {
    static const SimplicialComplex cached = [] {
        return build_gamma16();
    }();
    return cached;
}

static SimplicialComplex build_gamma16() {
    Gamma16Discs discs = gamma16_discs();
    SimplicialComplex& A = discs.a;
    SimplicialComplex& B = discs.b;
    SimplicialComplex& C = discs.c;
    SimplicialComplex& D = discs.d;
    SimplicialComplex& Ap = discs.a_prime;
    SimplicialComplex& Bp = discs.b_prime;

    auto same_boundary = [](const SimplicialComplex& x, const SimplicialComplex& y) {
        return boundary_complex(x).facets() == boundary_complex(y).facets();
    };
    if (!same_boundary(A, B) || !same_boundary(A, C))
        throw ConstructionError("discs A, B, C do not share their rim");
    if (!same_boundary(Ap, D) || !same_boundary(Bp, D))
        throw ConstructionError("discs A', B', D do not share their rim");

    // A' and B' carve up the same sphere as A and B.
    {
        std::vector<Face> ab = A.facets();
        ab.insert(ab.end(), B.facets().begin(), B.facets().end());
        std::vector<Face> apbp = Ap.facets();
        apbp.insert(apbp.end(), Bp.facets().begin(), Bp.facets().end());
        std::sort(ab.begin(), ab.end(), lex_less);
        std::sort(apbp.begin(), apbp.end(), lex_less);
        if (ab != apbp) throw ConstructionError("A' u B' is not the sphere A u B");
    }

    // D's chords are exactly the bicolored pairs missing from A u B u C.
    {
        std::vector<Face> abc = A.facets();
        abc.insert(abc.end(), B.facets().begin(), B.facets().end());
        abc.insert(abc.end(), C.facets().begin(), C.facets().end());
        std::set<Face> present;
        for (Face e : edge_set(abc)) present.insert(e);
        std::set<Face> missing;
        for (int x = 0; x < 12; ++x)
            for (int y = x + 1; y < 12; ++y) {
                if (x / 4 == y / 4) continue;  // same letter class
                Face e = Face::single(x) | Face::single(y);
                if (!present.count(e)) missing.insert(e);
            }
        std::set<Face> d_chords;
        for (auto [x, y] : kChordsD) d_chords.insert(Face::single(x) | Face::single(y));
        if (missing != d_chords)
            throw ConstructionError("D's chords are not the missing edges of A u B u C");
        // And D's rim lies inside A u B.
        std::set<Face> ab_edges;
        std::vector<Face> ab = A.facets();
        ab.insert(ab.end(), B.facets().begin(), B.facets().end());
        for (Face e : edge_set(ab)) ab_edges.insert(e);
        SimplicialComplex rim_d = boundary_complex(D);
        for (Face e : rim_d.facets())
            if (!ab_edges.count(e)) throw ConstructionError("D's rim is not inside A u B");
    }

    struct LinkSpec {
        int apex;
        const SimplicialComplex* left;
        const SimplicialComplex* right;
    };
    const LinkSpec links[] = {{zid(1), &A, &C}, {zid(2), &Ap, &D}, {zid(3), &B, &C}, {zid(4), &Bp, &D}};

    std::vector<Face> facets;
    for (const LinkSpec& ls : links) {
        std::vector<Face> sphere = ls.left->facets();
        sphere.insert(sphere.end(), ls.right->facets().begin(), ls.right->facets().end());
        SimplicialComplex link_complex = SimplicialComplex::from_facets(sphere);
        if (link_complex.vertex_count() != 12 || link_complex.facet_count() != 20 ||
            !is_homology_sphere(link_complex).pass)
            throw ConstructionError("assembled cone link is not a 12-vertex 2-sphere");
        for (Face t : link_complex.facets()) facets.push_back(t | Face::single(ls.apex));
    }

    SimplicialComplex K = SimplicialComplex::from_facets(std::move(facets));
    K.set_labels(uvwz_labels());
    K.set_coloring(uvwz_coloring());
    K.set_name("gamma16");
    return K;
}

SimplicialComplex gamma16_rank3() {
    SimplicialComplex K = gamma16();
    SimplicialComplex out = rank_selected(K, K.coloring(), 0b0111);
    out.set_name("gamma16-rank3");
    return out;
}

SimplicialComplex lens16() {
    static const SimplicialComplex cached = [] { return build_lens16(); }();
    return cached;
}

static SimplicialComplex build_lens16() {
    auto cert = detail::lens16_certificate();
    SimplicialComplex K;
    if (!cert.empty()) {
        std::vector<Face> facets;
        for (const auto& f : cert) facets.push_back(Face::from_vertices(f));
        K = SimplicialComplex::from_facets(std::move(facets));
        K.set_labels(uvwz_labels());
        K.set_coloring(uvwz_coloring());
    } else {
        // Rediscover by orbit search under the order-4 rotation of all four
        // classes, then keep the certificate for this process.
        EnumerationSpec spec;
        spec.dim = 3;
        spec.color_sizes = {4, 4, 4, 4};
        spec.neighborly_k = 2;
        VertexPermutation rot;
        rot.map.resize(16);
        const int cycle4[4] = {2, 3, 1, 0};  // 1->3, 3->2, 2->4, 4->1 (0-based)
        for (int c = 0; c < 4; ++c)
            for (int i = 0; i < 4; ++i)
                rot.map[static_cast<std::size_t>(4 * c + i)] = 4 * c + cycle4[i];
        spec.symmetry = {rot};
        HomologyProfile target;
        target.dim = 3;
        target.reduced_betti = {0, 0, 0, 0, 1};
        target.torsion.assign(5, {});
        target.torsion[2] = {BigInt(3)};
        spec.target_homology = target;

        Census census = search_symmetric(spec, /*first_found=*/true, {});
        if (census.entries.empty())
            throw ConstructionError("lens space search found nothing (status " +
                                    to_string(census.status) + ")");
        K = census.entries.front().complex;
        // Lay the classes out contiguously and order the last class so that
        // its first two vertices are the pair whose links meet in two
        // components (the handlebody split used below).
        {
            const Coloring& kappa = K.coloring();
            LinkIntersectionProfile prof =
                link_intersection_profile(K, kappa.color_class(3) & K.vertex_mask());
            std::vector<VertexId> z;
            z.push_back(prof.class_vertices[0]);
            for (std::size_t j = 1; j < 4; ++j)
                if (prof.pair_components[0][j] == 2) z.push_back(prof.class_vertices[j]);
            for (std::size_t j = 1; j < 4; ++j)
                if (prof.pair_components[0][j] != 2) z.push_back(prof.class_vertices[j]);
            if (z.size() != 4) throw ConstructionError("lens16: no 2-component pairing");
            std::vector<int> newid(static_cast<std::size_t>(K.universe_size()), -1);
            std::array<int, 4> next{0, 4, 8, 12};
            for (std::size_t i = 0; i < z.size(); ++i) newid[static_cast<std::size_t>(z[i])] = 12 + static_cast<int>(i);
            K.vertex_mask().for_each_vertex([&](VertexId v) {
                int c = kappa.color_of[static_cast<std::size_t>(v)];
                if (c != 3) newid[static_cast<std::size_t>(v)] = next[static_cast<std::size_t>(c)]++;
            });
            K = K.relabeled(newid);
        }
        K.set_labels(uvwz_labels());
        K.set_coloring(uvwz_coloring());
    }
    K.set_name("lens16");

    // Re-verify the certificate before handing it out.
    const Coloring& kappa = K.coloring();
    if (!is_proper_coloring(K, kappa) || kappa.num_colors != 4)
        throw ConstructionError("lens16 certificate: coloring broken");
    if (!is_k_neighborly(K, kappa, 2).pass)
        throw ConstructionError("lens16 certificate: not 2-neighborly");
    if (!is_closed_homology_manifold(K).pass)
        throw ConstructionError("lens16 certificate: not a closed 3-manifold");
    HomologyProfile hom = homology(K);
    bool lens_homology = hom.betti(0) == 0 && hom.betti(1) == 0 && hom.betti(2) == 0 &&
                         hom.betti(3) == 1 && hom.torsion_at(1).size() == 1 &&
                         hom.torsion_at(1)[0] == 3 && hom.torsion_at(2).empty();
    if (!lens_homology)
        throw ConstructionError("lens16 certificate: homology is " + hom.to_string());
    return K;
}

SimplicialComplex sigma(int i) {
    if (i == 1) {
        SimplicialComplex K = cross_polytope(3);
        K.set_name("sigma1");
        return K;
    }
    if (i == 2) {
        SimplicialComplex K = suspension(cycle(6));
        K.set_name("sigma2");
        return K;
    }
    if (i == 3) {
        static const SimplicialComplex cached = [] {
            EnumerationSpec spec;
            spec.dim = 2;
            spec.color_sizes = {3, 3, 3};
            Census census = enumerate_balanced_spheres(spec);
            if (census.entries.size() != 1)
                throw ConstructionError(
                    "expected a unique balanced 2-sphere on 3+3+3 vertices, got " +
                    std::to_string(census.entries.size()));
            SimplicialComplex K = census.entries.front().complex;
            K.set_name("sigma3");
            return K;
        }();
        return cached;
    }
    throw InputError("sigma index must be 1, 2 or 3");
}

std::array<SimplicialComplex, 3> twelve_vertex_spheres() {
    static const std::array<SimplicialComplex, 3> cached = [] { return build_twelve_vertex_spheres(); }();
    return cached;
}

static std::array<SimplicialComplex, 3> build_twelve_vertex_spheres() {
    // S1: connected sum of two octahedral 3-spheres along a color-compatible
    // facet pairing.
    SimplicialComplex oct4 = cross_polytope(4);
    Face f1 = oct4.facets().front();
    std::map<VertexId, VertexId> pairing;
    auto vs = f1.vertices();
    for (VertexId v : vs) pairing[v] = v;
    SimplicialComplex s1 = balanced_connected_sum(oct4, f1, oct4, f1, pairing);
    s1.set_name("s1");

    SimplicialComplex s2 = join_complexes(cycle(6), cycle(6)).complex;
    s2.set_name("s2");

    EnumerationSpec spec;
    spec.dim = 3;
    spec.color_sizes = {3, 3, 3, 3};
    spec.max_edges = 50;
    Census census = enumerate_balanced_spheres(spec);
    SimplicialComplex s3;
    int hits = 0;
    for (const CensusEntry& e : census.entries)
        if (e.fvec.f_of(1) == 46) {
            s3 = e.complex;
            ++hits;
        }
    if (hits != 1)
        throw ConstructionError("expected exactly one 12-vertex balanced 3-sphere with 46 edges");
    s3.set_name("s3");
    return {std::move(s1), std::move(s2), std::move(s3)};
}

SimplicialComplex torus7() {
    std::vector<Face> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back(Face::of({i, (i + 1) % 7, (i + 3) % 7}));
        facets.push_back(Face::of({i, (i + 2) % 7, (i + 3) % 7}));
    }
    SimplicialComplex K = SimplicialComplex::from_facets(std::move(facets));
    K.set_name("torus7");
    return K;
}

SimplicialComplex rp2_6() {
    std::vector<Face> facets = {Face::of({0, 1, 2}), Face::of({0, 1, 3}), Face::of({0, 2, 4}),
                                Face::of({0, 3, 5}), Face::of({0, 4, 5}), Face::of({1, 2, 5}),
                                Face::of({1, 3, 4}), Face::of({1, 4, 5}), Face::of({2, 3, 4}),
                                Face::of({2, 3, 5})};
    SimplicialComplex K = SimplicialComplex::from_facets(std::move(facets));
    K.set_name("rp2-6");
    return K;
}

SimplicialComplex construct_by_name(const std::string& name) {
    if (name == "cross4") return cross_polytope(4);
    if (name == "octahedron") return cross_polytope(3);
    if (name == "sigma1") return sigma(1);
    if (name == "sigma2") return sigma(2);
    if (name == "sigma3") return sigma(3);
    if (name == "s1") return twelve_vertex_spheres()[0];
    if (name == "s2") return twelve_vertex_spheres()[1];
    if (name == "s3") return twelve_vertex_spheres()[2];
    if (name == "gamma16") return gamma16();
    if (name == "gamma16-rank3") return gamma16_rank3();
    if (name == "lens16") return lens16();
    if (name == "torus7") return torus7();
    if (name == "rp2-6") return rp2_6();
    throw InputError("unknown construction '" + name + "'");
}

std::vector<std::string> construction_names() {
    return {"cross4", "octahedron", "sigma1", "sigma2",       "sigma3", "s1",     "s2",
            "s3",     "gamma16",    "lens16", "gamma16-rank3", "torus7", "rp2-6"};
}

}  // namespace spherekit
