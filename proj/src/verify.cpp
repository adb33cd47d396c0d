#include "spherekit/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace spherekit {

namespace {

// Homology of small subcomplexes gets recomputed across face loops; keyed by
// the exact facet list, which is sound (isomorphic-but-differently-labeled
// links miss the cache and are simply recomputed).
struct LinkCache {
    Coefficients coeff;
    std::unordered_map<std::size_t, std::vector<std::pair<std::vector<Face>, HomologyProfile>>> map;

    static std::size_t hash_facets(const std::vector<Face>& fs) {
        std::size_t h = 0xcbf29ce484222325ull;
        for (Face f : fs) {
            h ^= std::hash<Face>{}(f);
            h *= 0x100000001b3ull;
        }
        return h;
    }

    const HomologyProfile& profile(const SimplicialComplex& L) {
        std::size_t h = hash_facets(L.facets());
        auto& bucket = map[h];
        for (auto& [key, value] : bucket)
            if (key == L.facets()) return value;
        bucket.push_back({L.facets(), homology(L, coeff)});
        return bucket.back().second;
    }
};

SimplicialComplex link_in(const SimplicialComplex& K, Face sigma) {
    std::vector<Face> faces;
    for (Face f : K.facets())
        if (sigma.subset_of(f)) faces.push_back(f - sigma);
    return subcomplex_from_faces(K, std::move(faces));
}

}  // namespace

std::optional<Coloring> find_proper_coloring(const SimplicialComplex& K, int d) {
    if (d < 1) throw InputError("need at least one color");
    if (K.dimension() != d - 1)
        throw InputError("dimension mismatch: complex of dimension " +
                         std::to_string(K.dimension()) + " vs " + std::to_string(d) + " colors");

    std::vector<VertexId> verts = K.vertex_mask().vertices();
    int n = static_cast<int>(verts.size());
    std::vector<int> pos(static_cast<std::size_t>(K.universe_size()), -1);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;

    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (Face e : K.faces_of_dim(1)) {
        auto vs = e.vertices();
        int a = pos[static_cast<std::size_t>(vs[0])], b = pos[static_cast<std::size_t>(vs[1])];
        adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
    }

    // Order by degree, descending: fails fast on dense graphs.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(adj[static_cast<std::size_t>(a)]) > std::popcount(adj[static_cast<std::size_t>(b)]);
    });

    std::vector<int> color(static_cast<std::size_t>(n), -1);
    // Standard symmetry break: a new color may only be opened in order.
    std::function<bool(int, int)> assign = [&](int idx, int used) {
        if (idx == n) return true;
        int v = order[static_cast<std::size_t>(idx)];
        int limit = std::min(d, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool clash = false;
            std::uint64_t nb = adj[static_cast<std::size_t>(v)];
            while (nb && !clash) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[static_cast<std::size_t>(u)] == c) clash = true;
            }
            if (clash) continue;
            color[static_cast<std::size_t>(v)] = c;
            if (assign(idx + 1, std::max(used, c + 1))) return true;
            color[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    if (!assign(0, 0)) return std::nullopt;

    Coloring kappa;
    kappa.num_colors = d;
    kappa.color_of.assign(static_cast<std::size_t>(K.universe_size()), -1);
    for (int i = 0; i < n; ++i)
        kappa.color_of[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] =
            color[static_cast<std::size_t>(i)];
    return kappa;
}

PredicateReport is_k_neighborly(const SimplicialComplex& K, const Coloring& kappa, int k) {
    if (!is_proper_coloring(K, kappa))
        throw PreconditionError("neighborliness requires a proper coloring");
    std::vector<VertexId> verts = K.vertex_mask().vertices();
    // Depth-first over rainbow subsets in lex order; the first miss found is
    // the lex-least one because supersets of a missing set are visited later.
    std::optional<Face> witness;
    std::function<bool(Face, unsigned, std::size_t)> scan =
        [&](Face current, unsigned colors_used, std::size_t next) -> bool {
        if (current.size() > 0 && !K.has_face(current)) {
            witness = current;
            return false;
        }
        if (current.size() == k) return true;
        for (std::size_t i = next; i < verts.size(); ++i) {
            VertexId v = verts[i];
            unsigned c = 1u << kappa.color_of[static_cast<std::size_t>(v)];
            if (colors_used & c) continue;
            if (!scan(current | Face::single(v), colors_used | c, i + 1)) return false;
        }
        return true;
    };
    if (!scan(Face{}, 0, 0))
        return PredicateReport::failed("missing rainbow face " + to_string(*witness), witness);
    return PredicateReport::ok("all rainbow sets of size <= " + std::to_string(k) + " are faces");
}

PredicateReport is_homology_sphere(const SimplicialComplex& K, Coefficients coeff) {
    if (K.is_void()) return PredicateReport::failed("void complex");
    if (!K.is_pure()) throw PreconditionError("homology sphere check requires a pure complex");
    int d1 = K.dimension();
    LinkCache cache{coeff, {}};
    std::optional<Face> witness;
    std::string why;
    for (Face sigma : K.all_faces()) {
        SimplicialComplex L = link_in(K, sigma);
        const HomologyProfile& p = cache.profile(L);
        if (!p.is_sphere_profile(d1 - sigma.size())) {
            if (!witness || lex_less(sigma, *witness)) {
                witness = sigma;
                why = "link of " + to_string(sigma) + " has homology " + p.to_string() +
                      ", expected a " + std::to_string(d1 - sigma.size()) + "-sphere";
            }
        }
    }
    if (witness) return PredicateReport::failed(why, witness);
    return PredicateReport::ok("homology " + std::to_string(d1) + "-sphere");
}

SimplicialComplex homological_boundary(const SimplicialComplex& K, Coefficients coeff) {
    LinkCache cache{coeff, {}};
    std::vector<Face> boundary;
    for (Face f : K.all_faces()) {
        SimplicialComplex L = link_in(K, f);
        if (cache.profile(L).is_trivial()) boundary.push_back(f);
    }
    return subcomplex_from_faces(K, std::move(boundary));
}

PredicateReport is_homology_ball(const SimplicialComplex& K, Coefficients coeff) {
    if (K.is_void()) return PredicateReport::failed("void complex");
    int d = K.dimension();
    if (d < 0) return PredicateReport::failed("the complex {∅} is not a ball");
    LinkCache cache{coeff, {}};

    HomologyProfile global = homology(K, coeff);
    if (!global.is_trivial())
        return PredicateReport::failed("global homology " + global.to_string() + " is not trivial",
                                       Face{});

    std::vector<Face> boundary;
    std::optional<Face> witness;
    std::string why;
    for (Face f : K.all_faces()) {
        SimplicialComplex L = link_in(K, f);
        const HomologyProfile& p = cache.profile(L);
        bool trivial = p.is_trivial();
        if (trivial && !f.empty()) boundary.push_back(f);
        if (!trivial && !p.is_sphere_profile(d - f.size())) {
            if (!witness || lex_less(f, *witness)) {
                witness = f;
                why = "link of " + to_string(f) + " has homology " + p.to_string() +
                      ", neither ball- nor sphere-like";
            }
        }
    }
    if (witness) return PredicateReport::failed(why, witness);

    if (boundary.empty())
        return PredicateReport::failed("no boundary: every face link is sphere-like");
    SimplicialComplex b = subcomplex_from_faces(K, std::move(boundary));
    PredicateReport br = is_homology_sphere(b, coeff);
    if (!br.pass)
        return PredicateReport::failed("boundary is not a homology sphere: " + br.detail,
                                       br.witness);
    if (b.dimension() != d - 1)
        return PredicateReport::failed("boundary has dimension " + std::to_string(b.dimension()) +
                                       ", expected " + std::to_string(d - 1));
    return PredicateReport::ok("homology " + std::to_string(d) + "-ball");
}

PredicateReport is_closed_homology_manifold(const SimplicialComplex& K, Coefficients coeff) {
    if (K.is_void() || K.is_empty_complex())
        return PredicateReport::failed("no vertices");
    if (!K.is_pure()) throw PreconditionError("manifold check requires a pure complex");
    if (!is_connected(K))
        return PredicateReport::failed("not connected: " +
                                       std::to_string(connected_component_count(K)) +
                                       " components");
    int d1 = K.dimension();
    std::optional<Face> witness;
    std::string why;
    K.vertex_mask().for_each_vertex([&](VertexId v) {
        if (witness) return;
        SimplicialComplex L = link_in(K, Face::single(v));
        PredicateReport r = is_homology_sphere(L, coeff);
        if (!r.pass || L.dimension() != d1 - 1) {
            witness = Face::single(v);
            why = "link of vertex " + std::to_string(v) + " is not a homology " +
                  std::to_string(d1 - 1) + "-sphere";
        }
    });
    if (witness) return PredicateReport::failed(why, witness);
    return PredicateReport::ok("closed homology " + std::to_string(d1) + "-manifold");
}

PredicateReport dehn_sommerville_flag(const SimplicialComplex& K, const Coloring& kappa) {
    if (!is_proper_coloring(K, kappa))
        throw PreconditionError("flag symmetry requires a proper coloring");
    PredicateReport sphere = is_homology_sphere(K);
    if (!sphere.pass)
        throw PreconditionError("flag symmetry applies to homology spheres only: " + sphere.detail);
    FlagVector flags = flag_vectors(K, kappa);
    unsigned full = (1u << kappa.num_colors) - 1;
    for (unsigned S = 0; S <= full; ++S) {
        if (flags.h_of(S) != flags.h_of(full & ~S)) {
            return PredicateReport::failed(
                "h_S asymmetry at S mask " + std::to_string(S) + ": " +
                std::to_string(flags.h_of(S)) + " vs " + std::to_string(flags.h_of(full & ~S)));
        }
    }
    return PredicateReport::ok("h_S = h_[d]\\S for all S");
}

PredicateReport equal_color_sizes(const SimplicialComplex& K, const Coloring& kappa, int k) {
    if (!is_proper_coloring(K, kappa))
        throw PreconditionError("equal color sizes: coloring is not proper");
    if (K.dimension() != 2 * k - 1)
        throw PreconditionError("equal color sizes: expected a (2k-1)-dimensional complex");
    if (kappa.num_colors != 2 * k)
        throw PreconditionError("equal color sizes: expected 2k colors");
    if (!is_k_neighborly(K, kappa, k).pass)
        throw PreconditionError("equal color sizes: complex is not balanced k-neighborly");
    if (!is_homology_sphere(K).pass)
        throw PreconditionError("equal color sizes: complex is not a homology sphere");
    std::vector<Face> classes = kappa.classes();
    for (const Face& c : classes)
        if (c.size() != classes[0].size())
            return PredicateReport::failed("color classes of sizes " +
                                               std::to_string(classes[0].size()) + " and " +
                                               std::to_string(c.size()),
                                           c);
    return PredicateReport::ok("all color classes have size " + std::to_string(classes[0].size()));
}

SimplicialComplex union_complexes(const SimplicialComplex& A, const SimplicialComplex& B) {
    std::vector<Face> faces = A.facets();
    faces.insert(faces.end(), B.facets().begin(), B.facets().end());
    return subcomplex_from_faces(A.universe_size() >= B.universe_size() ? A : B, std::move(faces));
}

SimplicialComplex intersect_complexes(const SimplicialComplex& A, const SimplicialComplex& B) {
    std::unordered_set<Face> in_b;
    for (Face f : B.all_faces()) in_b.insert(f);
    std::vector<Face> faces;
    for (Face f : A.all_faces())
        if (in_b.count(f)) faces.push_back(f);
    return subcomplex_from_faces(A.universe_size() >= B.universe_size() ? A : B, std::move(faces));
}

SimplicialComplex intersection_of_links(const SimplicialComplex& K, Face vertices) {
    if (vertices.empty()) throw InputError("intersection of links of no vertices");
    bool first = true;
    SimplicialComplex acc;
    vertices.for_each_vertex([&](VertexId v) {
        SimplicialComplex L = link_in(K, Face::single(v));
        acc = first ? L : intersect_complexes(acc, L);
        first = false;
    });
    return acc;
}

LinkIntersectionProfile link_intersection_profile(const SimplicialComplex& K, Face color_class) {
    LinkIntersectionProfile out;
    out.class_vertices = color_class.vertices();
    std::size_t n = out.class_vertices.size();
    out.pair_components.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            SimplicialComplex inter = intersection_of_links(
                K, Face::single(out.class_vertices[i]) | Face::single(out.class_vertices[j]));
            int c = connected_component_count(inter);
            out.pair_components[i][j] = c;
            out.pair_components[j][i] = c;
        }
    if (n == 3)
        out.triple_homology = homology(intersection_of_links(K, color_class));
    return out;
}

HeegaardReport heegaard_profile(const SimplicialComplex& K, VertexId a, VertexId b, VertexId c,
                                VertexId d) {
    HeegaardReport out;
    if (!K.has_coloring())
        throw PreconditionError("heegaard profile requires a colored complex");
    const Coloring& kappa = K.coloring();
    for (VertexId v : {a, b, c, d})
        if (!K.has_vertex(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
    int col = kappa.color_of[static_cast<std::size_t>(a)];
    for (VertexId v : {b, c, d})
        if (kappa.color_of[static_cast<std::size_t>(v)] != col)
            throw PreconditionError("vertices are not a single color class");
    if (kappa.color_class(col).size() != 4)
        throw PreconditionError("color class must have exactly 4 vertices, has " +
                                std::to_string(kappa.color_class(col).size()));
    PredicateReport manifold = is_closed_homology_manifold(K);
    if (!manifold.pass || K.dimension() != 3)
        throw PreconditionError("heegaard profile requires a closed 3-manifold: " + manifold.detail);

    SimplicialComplex A = union_complexes(star(K, Face::single(a)), star(K, Face::single(b)));
    SimplicialComplex B = union_complexes(star(K, Face::single(c)), star(K, Face::single(d)));
    SimplicialComplex I = intersect_complexes(A, B);

    out.side_a = homology(A);
    out.side_b = homology(B);
    out.common = homology(I);
    out.common_euler = f_vector(I).euler_characteristic();

    auto solid_torus = [](const HomologyProfile& p) {
        return p.betti(-1) == 0 && p.betti(0) == 0 && p.betti(1) == 1 && p.betti(2) == 0 &&
               p.betti(3) == 0 && !p.has_torsion();
    };
    bool torus_boundary = out.common.betti(-1) == 0 && out.common.betti(0) == 0 &&
                          out.common.betti(1) == 2 && out.common.betti(2) == 1 &&
                          !out.common.has_torsion() && out.common_euler == 0;
    out.pass = solid_torus(out.side_a) && solid_torus(out.side_b) && torus_boundary;
    out.detail = "A " + out.side_a.to_string() + ", B " + out.side_b.to_string() + ", A∩B " +
                 out.common.to_string() + ", χ(A∩B) = " + std::to_string(out.common_euler);
    return out;
}

}  // namespace spherekit
