#include "spherekit/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace spherekit {

Face VertexPermutation::apply(Face f) const {
    std::uint64_t bits = 0;
    f.for_each_vertex([&](VertexId v) {
        int img = map[static_cast<std::size_t>(v)];
        if (img < 0) throw InputError("permutation undefined on vertex " + std::to_string(v));
        bits |= std::uint64_t{1} << img;
    });
    return Face::from_bits(bits);
}

VertexPermutation VertexPermutation::inverse() const {
    VertexPermutation out;
    out.map.assign(map.size(), -1);
    for (std::size_t v = 0; v < map.size(); ++v)
        if (map[v] >= 0) out.map[static_cast<std::size_t>(map[v])] = static_cast<int>(v);
    return out;
}

VertexPermutation VertexPermutation::compose(const VertexPermutation& then) const {
    VertexPermutation out;
    out.map.assign(map.size(), -1);
    for (std::size_t v = 0; v < map.size(); ++v)
        if (map[v] >= 0) out.map[v] = then.map[static_cast<std::size_t>(map[v])];
    return out;
}

bool VertexPermutation::is_identity() const {
    for (std::size_t v = 0; v < map.size(); ++v)
        if (map[v] >= 0 && map[v] != static_cast<int>(v)) return false;
    return true;
}

std::string VertexPermutation::cycle_notation(const SimplicialComplex& K) const {
    std::string out;
    std::vector<bool> seen(map.size(), false);
    for (std::size_t v = 0; v < map.size(); ++v) {
        if (seen[v] || map[v] < 0 || map[v] == static_cast<int>(v)) continue;
        out += "(";
        std::size_t u = v;
        bool first = true;
        while (!seen[u]) {
            seen[u] = true;
            if (!first) out += " ";
            out += K.label(static_cast<VertexId>(u));
            first = false;
            u = static_cast<std::size_t>(map[u]);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

VertexPermutation VertexPermutation::from_cycles(const std::string& text,
                                                 const SimplicialComplex& K) {
    std::map<std::string, VertexId> by_label;
    K.vertex_mask().for_each_vertex([&](VertexId v) { by_label[K.label(v)] = v; });
    VertexPermutation out;
    out.map.assign(static_cast<std::size_t>(K.universe_size()), -1);
    K.vertex_mask().for_each_vertex([&](VertexId v) { out.map[static_cast<std::size_t>(v)] = v; });

    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '(') {
            if (!isspace(static_cast<unsigned char>(text[i])))
                throw InputError("bad cycle notation near '" + text.substr(i) + "'");
            ++i;
            continue;
        }
        std::size_t close = text.find(')', i);
        if (close == std::string::npos) throw InputError("unclosed cycle");
        std::istringstream cyc(text.substr(i + 1, close - i - 1));
        std::vector<VertexId> ids;
        std::string tok;
        while (std::getline(cyc, tok, ' ')) {
            // allow comma separators too
            std::istringstream inner(tok);
            std::string t2;
            while (std::getline(inner, t2, ',')) {
                if (t2.empty()) continue;
                auto it = by_label.find(t2);
                if (it == by_label.end()) throw InputError("unknown vertex label '" + t2 + "'");
                ids.push_back(it->second);
            }
        }
        for (std::size_t j = 0; j < ids.size(); ++j)
            out.map[static_cast<std::size_t>(ids[j])] = ids[(j + 1) % ids.size()];
        i = close + 1;
    }
    return out;
}

bool is_automorphism(const SimplicialComplex& K, const VertexPermutation& pi) {
    std::vector<Face> mapped;
    mapped.reserve(K.facets().size());
    for (Face f : K.facets()) mapped.push_back(pi.apply(f));
    std::sort(mapped.begin(), mapped.end(), lex_less);
    return mapped == K.facets();
}

// ---- Canonical labeling ----
//
// Partition refinement on the vertex/facet incidence structure, then
// individualization on the first non-singleton cell. The canonical form is
// the minimum relabeled facet list over all leaves; leaves tying with the
// minimum yield automorphisms, which in turn prune sibling branches
// (vertices in the same orbit produce identical subtrees).

namespace {

struct Labeling {
    std::vector<int> to_canonical;  // dense vertex index -> canonical position
};

struct CanonSearch {
    int n = 0;
    std::vector<Face> facets;                 // over dense ids 0..n-1
    std::vector<std::vector<int>> facets_of;  // vertex -> facet indices
    std::vector<int> initial_color;           // isomorphism-invariant seed

    std::vector<Face> best_image;
    std::vector<int> best_labeling;
    bool have_best = false;
    std::vector<std::vector<int>> automorphisms;  // dense-id permutations

    // Refine vertex colors to a stable partition. Facet colors are derived
    // from vertex colors each round; exact signature sort, no hashing.
    std::vector<int> refine(std::vector<int> color) const {
        auto distinct = [](const std::vector<int>& c) {
            std::vector<int> s = c;
            std::sort(s.begin(), s.end());
            return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
        };
        int cells = distinct(color);
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> fsig(facets.size());
            for (std::size_t fi = 0; fi < facets.size(); ++fi) {
                std::vector<int> sig;
                facets[fi].for_each_vertex([&](VertexId v) { sig.push_back(color[static_cast<std::size_t>(v)]); });
                std::sort(sig.begin(), sig.end());
                fsig[fi] = {std::move(sig), static_cast<int>(fi)};
            }
            std::vector<std::pair<std::vector<int>, int>> sorted_f = fsig;
            std::sort(sorted_f.begin(), sorted_f.end());
            std::vector<int> fcolor(facets.size());
            int fc = 0;
            for (std::size_t i = 0; i < sorted_f.size(); ++i) {
                if (i && sorted_f[i].first != sorted_f[i - 1].first) ++fc;
                fcolor[static_cast<std::size_t>(sorted_f[i].second)] = fc;
            }

            std::vector<std::pair<std::vector<int>, int>> vsig(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) {
                std::vector<int> sig{color[static_cast<std::size_t>(v)]};
                std::vector<int> inc;
                for (int fi : facets_of[static_cast<std::size_t>(v)])
                    inc.push_back(fcolor[static_cast<std::size_t>(fi)]);
                std::sort(inc.begin(), inc.end());
                sig.insert(sig.end(), inc.begin(), inc.end());
                vsig[static_cast<std::size_t>(v)] = {std::move(sig), v};
            }
            std::vector<std::pair<std::vector<int>, int>> sorted_v = vsig;
            std::sort(sorted_v.begin(), sorted_v.end());
            std::vector<int> next(static_cast<std::size_t>(n));
            int vc = 0;
            for (std::size_t i = 0; i < sorted_v.size(); ++i) {
                if (i && sorted_v[i].first != sorted_v[i - 1].first) ++vc;
                next[static_cast<std::size_t>(sorted_v[i].second)] = vc;
            }
            if (vc + 1 == cells) return next;
            cells = vc + 1;
            color = std::move(next);
        }
    }

    std::vector<Face> image_under(const std::vector<int>& lab) const {
        std::vector<Face> out;
        out.reserve(facets.size());
        for (Face f : facets) {
            std::uint64_t bits = 0;
            f.for_each_vertex([&](VertexId v) { bits |= std::uint64_t{1} << lab[static_cast<std::size_t>(v)]; });
            out.push_back(Face::from_bits(bits));
        }
        std::sort(out.begin(), out.end(), lex_less);
        return out;
    }

    void visit_leaf(const std::vector<int>& color) {
        std::vector<int> lab(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) lab[static_cast<std::size_t>(v)] = color[static_cast<std::size_t>(v)];
        std::vector<Face> image = image_under(lab);
        if (!have_best) {
            best_image = image;
            best_labeling = lab;
            have_best = true;
            return;
        }
        bool less = std::lexicographical_compare(image.begin(), image.end(), best_image.begin(),
                                                 best_image.end(), lex_less);
        if (less) {
            best_image = std::move(image);
            best_labeling = std::move(lab);
            automorphisms.clear();
            return;
        }
        if (image == best_image) {
            // gamma = best_labeling^{-1} ∘ lab is an automorphism.
            std::vector<int> inv_best(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) inv_best[static_cast<std::size_t>(best_labeling[static_cast<std::size_t>(v)])] = v;
            std::vector<int> gamma(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) gamma[static_cast<std::size_t>(v)] = inv_best[static_cast<std::size_t>(lab[static_cast<std::size_t>(v)])];
            bool identity = true;
            for (int v = 0; v < n; ++v)
                if (gamma[static_cast<std::size_t>(v)] != v) { identity = false; break; }
            if (!identity) automorphisms.push_back(std::move(gamma));
        }
    }

    void search(const std::vector<int>& color, const std::vector<int>& path) {
        // Find the first non-singleton cell.
        std::vector<int> cell_size(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) ++cell_size[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
        int target = -1;
        for (int v = 0; v < n; ++v) {
            int c = color[static_cast<std::size_t>(v)];
            if (cell_size[static_cast<std::size_t>(c)] > 1 && (target < 0 || c < target)) target = c;
        }
        if (target < 0) {
            visit_leaf(color);
            return;
        }
        std::vector<int> candidates;
        for (int v = 0; v < n; ++v)
            if (color[static_cast<std::size_t>(v)] == target) candidates.push_back(v);

        std::vector<int> tried;
        for (int v : candidates) {
            // Orbit pruning: skip v if a known automorphism fixing the path
            // maps an already-tried candidate to v.
            bool pruned = false;
            for (const auto& gamma : automorphisms) {
                bool fixes_path = true;
                for (int pv : path)
                    if (gamma[static_cast<std::size_t>(pv)] != pv) { fixes_path = false; break; }
                if (!fixes_path) continue;
                for (int u : tried)
                    if (gamma[static_cast<std::size_t>(u)] == v) { pruned = true; break; }
                if (pruned) break;
            }
            tried.push_back(v);
            if (pruned) continue;

            std::vector<int> next(static_cast<std::size_t>(n));
            for (int u = 0; u < n; ++u) next[static_cast<std::size_t>(u)] = 2 * color[static_cast<std::size_t>(u)];
            next[static_cast<std::size_t>(v)] += 1;
            std::vector<int> refined = refine(std::move(next));
            std::vector<int> next_path = path;
            next_path.push_back(v);
            search(refined, next_path);
        }
    }
};

std::uint64_t closure_order(int n, const std::vector<std::vector<int>>& gens) {
    std::set<std::vector<int>> group;
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    group.insert(id);
    std::vector<std::vector<int>> frontier{id};
    const std::size_t kCap = 2'000'000;
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : frontier)
            for (const auto& h : gens) {
                std::vector<int> gh(static_cast<std::size_t>(n));
                for (int v = 0; v < n; ++v) gh[static_cast<std::size_t>(v)] = h[static_cast<std::size_t>(g[static_cast<std::size_t>(v)])];
                if (group.insert(gh).second) next.push_back(std::move(gh));
            }
        if (group.size() > kCap)
            throw PreconditionError("automorphism group too large to enumerate");
        frontier = std::move(next);
    }
    return group.size();
}

}  // namespace

static CanonSearch prepare_search(const SimplicialComplex& K, const std::vector<int>& dense_of,
                                  int n, const std::vector<int>* vertex_tags) {
    CanonSearch s;
    s.n = n;
    for (Face f : K.facets()) {
        std::uint64_t bits = 0;
        f.for_each_vertex([&](VertexId v) { bits |= std::uint64_t{1} << dense_of[static_cast<std::size_t>(v)]; });
        s.facets.push_back(Face::from_bits(bits));
    }
    s.facets_of.assign(static_cast<std::size_t>(n), {});
    for (std::size_t fi = 0; fi < s.facets.size(); ++fi)
        s.facets[fi].for_each_vertex([&](VertexId v) { s.facets_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(fi)); });

    // Seed invariant: per-dimension incident face counts (plus externally
    // prescribed tags, e.g. colors for the color-preserving subgroup).
    SimplicialComplex dense = SimplicialComplex::from_facets(s.facets);
    int dim = dense.dimension();
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    if (vertex_tags)
        for (int v = 0; v < n; ++v) sig[static_cast<std::size_t>(v)].push_back((*vertex_tags)[static_cast<std::size_t>(v)]);
    for (int k = 1; k <= dim; ++k)
        for (Face f : dense.faces_of_dim(k))
            f.for_each_vertex([&](VertexId v) {
                auto& row = sig[static_cast<std::size_t>(v)];
                if (static_cast<int>(row.size()) < (vertex_tags ? dim + 1 : dim))
                    row.resize(static_cast<std::size_t>(vertex_tags ? dim + 1 : dim), 0);
                row[static_cast<std::size_t>((vertex_tags ? 1 : 0) + k - 1)] += 1;
            });
    std::vector<std::pair<std::vector<int>, int>> sorted(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) sorted[static_cast<std::size_t>(v)] = {sig[static_cast<std::size_t>(v)], v};
    std::sort(sorted.begin(), sorted.end());
    s.initial_color.assign(static_cast<std::size_t>(n), 0);
    int c = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i && sorted[i].first != sorted[i - 1].first) ++c;
        s.initial_color[static_cast<std::size_t>(sorted[i].second)] = c;
    }
    return s;
}

CanonicalForm canonical_form(const SimplicialComplex& K) {
    CanonicalForm out;
    out.relabeling.assign(static_cast<std::size_t>(K.universe_size()), -1);
    if (K.is_void() || K.is_empty_complex()) {
        out.facets = K.facets();
        return out;
    }
    std::vector<VertexId> verts = K.vertex_mask().vertices();
    int n = static_cast<int>(verts.size());
    std::vector<int> dense_of(static_cast<std::size_t>(K.universe_size()), -1);
    for (int i = 0; i < n; ++i) dense_of[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;

    CanonSearch s = prepare_search(K, dense_of, n, nullptr);
    s.search(s.refine(s.initial_color), {});

    out.facets = s.best_image;
    for (int i = 0; i < n; ++i)
        out.relabeling[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] =
            s.best_labeling[static_cast<std::size_t>(i)];
    return out;
}

GroupDescription automorphism_group(const SimplicialComplex& K, bool color_preserving) {
    GroupDescription out;
    if (K.is_void() || K.is_empty_complex()) return out;
    std::vector<VertexId> verts = K.vertex_mask().vertices();
    int n = static_cast<int>(verts.size());
    std::vector<int> dense_of(static_cast<std::size_t>(K.universe_size()), -1);
    for (int i = 0; i < n; ++i) dense_of[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;

    std::vector<int> tags;
    if (color_preserving) {
        const Coloring& kappa = K.coloring();
        tags.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            tags[static_cast<std::size_t>(i)] = kappa.color_of[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])];
    }
    CanonSearch s = prepare_search(K, dense_of, n, color_preserving ? &tags : nullptr);
    s.search(s.refine(s.initial_color), {});

    for (const auto& gamma : s.automorphisms) {
        VertexPermutation pi;
        pi.map.assign(static_cast<std::size_t>(K.universe_size()), -1);
        for (int i = 0; i < n; ++i)
            pi.map[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] =
                verts[static_cast<std::size_t>(gamma[static_cast<std::size_t>(i)])];
        out.generators.push_back(std::move(pi));
    }
    out.order = closure_order(n, s.automorphisms);

    // Orbits under the generators.
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& gamma : s.automorphisms)
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(gamma[static_cast<std::size_t>(v)]);
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
        }
    std::map<int, std::vector<VertexId>> orbit_map;
    for (int v = 0; v < n; ++v) orbit_map[find(v)].push_back(verts[static_cast<std::size_t>(v)]);
    for (auto& [root, members] : orbit_map) out.vertex_orbits.push_back(members);
    return out;
}

std::optional<VertexPermutation> are_isomorphic(const SimplicialComplex& K1,
                                                const SimplicialComplex& K2) {
    CanonicalForm c1 = canonical_form(K1);
    CanonicalForm c2 = canonical_form(K2);
    if (c1.facets != c2.facets) return std::nullopt;

    // v -> canonical -> K2 vertex
    std::vector<int> canon_to_v2(c2.relabeling.size(), -1);
    int max_pos = -1;
    for (std::size_t v = 0; v < c2.relabeling.size(); ++v)
        if (c2.relabeling[v] >= 0) {
            canon_to_v2[static_cast<std::size_t>(c2.relabeling[v])] = static_cast<int>(v);
            max_pos = std::max(max_pos, c2.relabeling[v]);
        }
    VertexPermutation pi;
    pi.map.assign(static_cast<std::size_t>(K1.universe_size()), -1);
    for (std::size_t v = 0; v < c1.relabeling.size(); ++v)
        if (c1.relabeling[v] >= 0)
            pi.map[v] = canon_to_v2[static_cast<std::size_t>(c1.relabeling[v])];
    return pi;
}

}  // namespace spherekit
