#include "spherekit/enumeration.hpp"

#include <algorithm>
#include <json.hpp>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "spherekit/verify.hpp"

namespace spherekit {

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::none: return "none";
        case SearchStatus::undecided: return "undecided";
    }
    return "?";
}

int EnumerationSpec::vertex_count() const {
    int n = 0;
    for (int s : color_sizes) n += s;
    return n;
}

Coloring EnumerationSpec::coloring() const {
    Coloring kappa;
    kappa.num_colors = num_colors();
    for (int c = 0; c < num_colors(); ++c)
        for (int i = 0; i < color_sizes[static_cast<std::size_t>(c)]; ++i)
            kappa.color_of.push_back(c);
    return kappa;
}

void EnumerationSpec::validate() const {
    if (num_colors() != dim + 1)
        throw InputError("spec needs dim+1 color classes, got " + std::to_string(num_colors()));
    for (int s : color_sizes)
        if (s < 2) throw InputError("color classes of a balanced sphere need >= 2 vertices");
    if (vertex_count() > Face::kMaxVertices) throw InputError("too many vertices");
    if (neighborly_k && (*neighborly_k < 1 || *neighborly_k > num_colors()))
        throw InputError("neighborliness parameter out of range");
    for (const auto& g : symmetry) {
        if (static_cast<int>(g.map.size()) != vertex_count())
            throw InputError("symmetry generator must map all spec vertices");
        std::vector<bool> hit(g.map.size(), false);
        for (int img : g.map) {
            if (img < 0 || img >= vertex_count() || hit[static_cast<std::size_t>(img)])
                throw InputError("symmetry generator is not a permutation");
            hit[static_cast<std::size_t>(img)] = true;
        }
    }
    if (target_homology && target_homology->betti(0) != 0)
        throw InputError("only connected homology targets are searchable");
}

// ---- spec JSON ----

using nlohmann::ordered_json;

static ordered_json profile_to_json_obj(const HomologyProfile& p) {
    ordered_json j;
    j["betti"] = ordered_json::array();
    for (int i = 0; i <= p.dim; ++i) j["betti"].push_back(p.betti(i));
    ordered_json tors = ordered_json::object();
    for (int i = 0; i <= p.dim; ++i) {
        if (p.torsion_at(i).empty()) continue;
        ordered_json list = ordered_json::array();
        for (const BigInt& t : p.torsion_at(i)) {
            if (t <= std::numeric_limits<long long>::max())
                list.push_back(t.convert_to<long long>());
            else
                list.push_back(t.str());
        }
        tors[std::to_string(i)] = list;
    }
    j["torsion"] = tors;
    j["coefficients"] = p.coeff.to_string();
    return j;
}

std::string profile_to_json(const HomologyProfile& p) { return profile_to_json_obj(p).dump(); }

static HomologyProfile profile_from_json_obj(const ordered_json& j) {
    HomologyProfile p;
    p.coeff = Coefficients::integers();
    auto betti = j.at("betti").get<std::vector<long long>>();
    p.dim = static_cast<int>(betti.size()) - 1;
    p.reduced_betti.assign(betti.size() + 1, 0);
    for (std::size_t i = 0; i < betti.size(); ++i) p.reduced_betti[i + 1] = betti[i];
    p.torsion.assign(betti.size() + 1, {});
    if (j.contains("torsion"))
        for (auto& [key, list] : j.at("torsion").items()) {
            int d = std::stoi(key);
            if (d < 0 || d > p.dim) throw InputError("torsion dimension out of range");
            for (const auto& t : list)
                p.torsion[static_cast<std::size_t>(d) + 1].push_back(
                    BigInt(t.is_string() ? t.get<std::string>() : std::to_string(t.get<long long>())));
        }
    return p;
}

HomologyProfile profile_from_json(const std::string& text) {
    return profile_from_json_obj(ordered_json::parse(text));
}

std::string EnumerationSpec::to_json() const {
    ordered_json j;
    j["dim"] = dim;
    j["color_sizes"] = color_sizes;
    if (max_edges) j["max_edges"] = *max_edges;
    if (neighborly_k) j["neighborly"] = *neighborly_k;
    if (!symmetry.empty()) {
        j["symmetry"] = ordered_json::array();
        for (const auto& g : symmetry) j["symmetry"].push_back(g.map);
    }
    if (target_homology) j["target_homology"] = profile_to_json_obj(*target_homology);
    return j.dump(2) + "\n";
}

EnumerationSpec EnumerationSpec::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("spec is not valid JSON: ") + e.what());
    }
    EnumerationSpec spec;
    spec.dim = j.at("dim").get<int>();
    spec.color_sizes = j.at("color_sizes").get<std::vector<int>>();
    if (j.contains("max_edges")) spec.max_edges = j["max_edges"].get<long long>();
    if (j.contains("neighborly")) spec.neighborly_k = j["neighborly"].get<int>();
    if (j.contains("symmetry"))
        for (const auto& g : j["symmetry"]) {
            VertexPermutation pi;
            pi.map = g.get<std::vector<int>>();
            spec.symmetry.push_back(std::move(pi));
        }
    if (j.contains("target_homology"))
        spec.target_homology = profile_from_json_obj(j["target_homology"]);
    spec.validate();
    return spec;
}

std::string EnumerationSpec::digest() const {
    std::string text = to_json();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---- labeled closed-surface enumeration (dimension 2) ----
//
// Grows a triangle set by always completing the lex-least open edge; a
// closed set whose least seed-vertex triangle is the seed is emitted exactly
// once. This yields every candidate that can be a homology 2-sphere
// (spheres contain no proper closed subsurface), and the caller filters
// with the real predicate.

namespace {

struct TriangleSpace {
    std::vector<Face> tris;          // lex-sorted rainbow triples
    std::vector<Face> edges;         // lex-sorted bicolored pairs
    std::vector<std::array<int, 3>> tri_edges;
    std::vector<std::vector<int>> tris_of_edge;

    explicit TriangleSpace(const std::vector<std::vector<VertexId>>& classes) {
        for (VertexId a : classes[0])
            for (VertexId b : classes[1])
                for (VertexId c : classes[2])
                    tris.push_back(Face::single(a) | Face::single(b) | Face::single(c));
        std::sort(tris.begin(), tris.end(), lex_less);
        std::map<Face, int> edge_index;
        for (Face t : tris) {
            auto vs = t.vertices();
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    Face e = Face::single(vs[static_cast<std::size_t>(i)]) |
                             Face::single(vs[static_cast<std::size_t>(j)]);
                    edge_index.emplace(e, 0);
                }
        }
        for (auto& [e, idx] : edge_index) {
            idx = static_cast<int>(edges.size());
            edges.push_back(e);
        }
        tris_of_edge.assign(edges.size(), {});
        for (std::size_t ti = 0; ti < tris.size(); ++ti) {
            auto vs = tris[ti].vertices();
            int k = 0;
            std::array<int, 3> te{};
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    Face e = Face::single(vs[static_cast<std::size_t>(i)]) |
                             Face::single(vs[static_cast<std::size_t>(j)]);
                    int ei = edge_index.at(e);
                    te[static_cast<std::size_t>(k++)] = ei;
                    tris_of_edge[static_cast<std::size_t>(ei)].push_back(static_cast<int>(ti));
                }
            tri_edges.push_back(te);
        }
    }
};

struct SurfaceEnumerator {
    const TriangleSpace& space;
    Face required;  // every emitted surface uses exactly these vertices
    std::vector<std::uint64_t> out;  // triangle-index bitmasks

    std::vector<int> edge_count;
    std::uint64_t chosen = 0;
    Face used;
    int seed = -1;
    VertexId v0 = -1;

    SurfaceEnumerator(const TriangleSpace& s, Face req) : space(s), required(req) {
        edge_count.assign(space.edges.size(), 0);
    }

    void run() {
        v0 = required.min_vertex();
        for (std::size_t t = 0; t < space.tris.size(); ++t) {
            if (!space.tris[t].contains(v0)) continue;
            if (!space.tris[t].subset_of(required)) continue;
            seed = static_cast<int>(t);
            add(static_cast<int>(t));
            dfs();
            remove(static_cast<int>(t));
        }
    }

    void add(int t) {
        chosen |= std::uint64_t{1} << t;
        used = used | space.tris[static_cast<std::size_t>(t)];
        for (int e : space.tri_edges[static_cast<std::size_t>(t)]) ++edge_count[static_cast<std::size_t>(e)];
    }
    void remove(int t) {
        chosen &= ~(std::uint64_t{1} << t);
        for (int e : space.tri_edges[static_cast<std::size_t>(t)]) --edge_count[static_cast<std::size_t>(e)];
        // `used` is rebuilt lazily: recompute from chosen.
        std::uint64_t bits = 0;
        for (std::uint64_t m = chosen; m; m &= m - 1)
            bits |= space.tris[static_cast<std::size_t>(std::countr_zero(m))].bits();
        used = Face::from_bits(bits);
    }

    void dfs() {
        int open = -1;
        for (std::size_t e = 0; e < space.edges.size(); ++e)
            if (edge_count[e] == 1) {
                open = static_cast<int>(e);
                break;
            }
        if (open < 0) {
            if (used == required) out.push_back(chosen);
            return;
        }
        for (int t : space.tris_of_edge[static_cast<std::size_t>(open)]) {
            if ((chosen >> t) & 1) continue;
            if (!space.tris[static_cast<std::size_t>(t)].subset_of(required)) continue;
            // Surfaces whose least v0-triangle precedes the seed were already
            // produced from that earlier seed.
            if (space.tris[static_cast<std::size_t>(t)].contains(v0) && t < seed) continue;
            bool feasible = true;
            for (int e : space.tri_edges[static_cast<std::size_t>(t)])
                if (edge_count[static_cast<std::size_t>(e)] >= 2) {
                    feasible = false;
                    break;
                }
            if (!feasible) continue;
            add(t);
            dfs();
            remove(t);
        }
    }
};

std::string default_label(int color, int index_in_class) {
    std::string l(1, static_cast<char>('a' + color));
    return l + std::to_string(index_in_class + 1);
}

std::vector<std::vector<VertexId>> class_layout(const EnumerationSpec& spec) {
    std::vector<std::vector<VertexId>> classes;
    int next = 0;
    for (int c = 0; c < spec.num_colors(); ++c) {
        std::vector<VertexId> cls;
        for (int i = 0; i < spec.color_sizes[static_cast<std::size_t>(c)]; ++i) cls.push_back(next++);
        classes.push_back(std::move(cls));
    }
    return classes;
}

SimplicialComplex make_spec_complex(const EnumerationSpec& spec, std::vector<Face> facets) {
    SimplicialComplex K = SimplicialComplex::from_facets(std::move(facets));
    Coloring kappa = spec.coloring();
    // Universe covers all spec vertices even if some id is unused upstream.
    std::vector<std::string> labels;
    auto classes = class_layout(spec);
    for (int c = 0; c < spec.num_colors(); ++c)
        for (std::size_t i = 0; i < classes[static_cast<std::size_t>(c)].size(); ++i)
            labels.push_back(default_label(c, static_cast<int>(i)));
    if (K.universe_size() > static_cast<int>(labels.size()))
        throw InputError("facet vertex outside the spec layout");
    labels.resize(static_cast<std::size_t>(std::max(K.universe_size(), 0)));
    kappa.color_of.resize(labels.size());
    K.set_labels(std::move(labels));
    K.set_coloring(std::move(kappa));
    return K;
}

bool profiles_match(const HomologyProfile& got, const HomologyProfile& want) {
    int top = std::max(got.dim, want.dim);
    for (int i = -1; i <= top; ++i) {
        if (got.betti(i) != want.betti(i)) return false;
        if (got.torsion_at(i) != want.torsion_at(i)) return false;
    }
    return true;
}

struct CensusBuilder {
    const EnumerationSpec& spec;
    bool require_sphere;
    Census census;
    std::set<std::vector<Face>> seen;

    /// Full predicate stack; generation-time pruning is never trusted.
    /// Isomorph rejection runs before the expensive homology checks, so each
    /// isomorphism class is verified exactly once.
    bool consider(const SimplicialComplex& K) {
        FaceVector fv = f_vector(K);
        if (spec.max_edges && fv.f_of(1) > *spec.max_edges) return false;
        if (!is_proper_coloring(K, K.coloring())) return false;
        for (int c = 0; c < spec.num_colors(); ++c) {
            Face cls = K.coloring().color_class(c) & K.vertex_mask();
            if (cls.size() != spec.color_sizes[static_cast<std::size_t>(c)]) return false;
        }

        CanonicalForm canon = canonical_form(K);
        if (!seen.insert(canon.facets).second) return false;

        if (spec.neighborly_k && !is_k_neighborly(K, K.coloring(), *spec.neighborly_k).pass)
            return false;
        if (require_sphere && !is_homology_sphere(K).pass) return false;
        HomologyProfile hom = homology(K);
        if (spec.target_homology && !profiles_match(hom, *spec.target_homology)) return false;
        for (const auto& g : spec.symmetry) {
            std::vector<Face> mapped;
            for (Face f : K.facets()) mapped.push_back(g.apply(f));
            std::sort(mapped.begin(), mapped.end(), lex_less);
            if (mapped != K.facets()) return false;
        }

        CensusEntry entry;
        entry.complex = K.relabeled(canon.relabeling);
        entry.fvec = fv;
        entry.hom = std::move(hom);
        entry.aut_order = automorphism_group(K).order;
        census.entries.push_back(std::move(entry));
        return true;
    }

    void finish(bool exhaustive, std::uint64_t nodes) {
        census.exhaustive = exhaustive;
        census.nodes_explored = nodes;
        if (!exhaustive)
            census.status = census.entries.empty() ? SearchStatus::undecided : SearchStatus::found;
        else
            census.status = census.entries.empty() ? SearchStatus::none : SearchStatus::found;
        std::sort(census.entries.begin(), census.entries.end(),
                  [](const CensusEntry& a, const CensusEntry& b) {
                      if (a.fvec.f_of(1) != b.fvec.f_of(1)) return a.fvec.f_of(1) < b.fvec.f_of(1);
                      return std::lexicographical_compare(a.complex.facets().begin(),
                                                          a.complex.facets().end(),
                                                          b.complex.facets().begin(),
                                                          b.complex.facets().end(), lex_less);
                  });
    }
};

}  // namespace

// ---- enumerate_balanced_spheres ----

static Census enumerate_dim2(const EnumerationSpec& spec, SearchOptions&) {
    auto classes = class_layout(spec);
    TriangleSpace space(classes);
    Face all = Face{};
    for (const auto& cls : classes)
        for (VertexId v : cls) all = all | Face::single(v);

    SurfaceEnumerator en(space, all);
    en.run();

    CensusBuilder builder{spec, /*require_sphere=*/true, {}, {}};
    for (std::uint64_t mask : en.out) {
        std::vector<Face> facets;
        for (std::uint64_t m = mask; m; m &= m - 1)
            facets.push_back(space.tris[static_cast<std::size_t>(std::countr_zero(m))]);
        builder.consider(make_spec_complex(spec, std::move(facets)));
    }
    builder.finish(true, static_cast<std::uint64_t>(en.out.size()));
    return builder.census;
}

// Star assembly over an apex class of size 2 or 3: every facet has exactly
// one apex vertex, so the complex is determined by the apex links, which are
// balanced 2-spheres on subsets of the base classes. Closedness of base
// triangles means each lies in exactly 0 or 2 links; with three apexes that
// pins L3 = L1 xor L2, with two it pins L2 = L1.
static Census enumerate_dim3_star(const EnumerationSpec& spec, SearchOptions&) {
    auto classes = class_layout(spec);
    int apex = -1;
    for (int c = spec.num_colors() - 1; c >= 0; --c)
        if (spec.color_sizes[static_cast<std::size_t>(c)] == 3 ||
            spec.color_sizes[static_cast<std::size_t>(c)] == 2) {
            apex = c;
            break;
        }
    if (apex < 0)
        throw InputError("dimension-3 enumeration needs a color class of size 2 or 3");
    std::vector<std::vector<VertexId>> base;
    for (int c = 0; c < spec.num_colors(); ++c)
        if (c != apex) base.push_back(classes[static_cast<std::size_t>(c)]);
    const std::vector<VertexId>& apexes = classes[static_cast<std::size_t>(apex)];

    TriangleSpace space(base);
    if (space.tris.size() > 64) throw InputError("base triangle space too large");

    // Catalog of labeled balanced 2-spheres on each admissible vertex subset.
    struct CatalogEntry {
        std::uint64_t mask;
        Face used;
    };
    std::vector<CatalogEntry> catalog;
    std::unordered_map<std::uint64_t, int> catalog_index;
    std::vector<std::vector<Face>> subsets_per_class(3);
    for (int ci = 0; ci < 3; ++ci) {
        int n = static_cast<int>(base[static_cast<std::size_t>(ci)].size());
        for (unsigned pick = 0; pick < (1u << n); ++pick) {
            if (std::popcount(pick) < 2) continue;
            Face s;
            for (int i = 0; i < n; ++i)
                if ((pick >> i) & 1) s = s | Face::single(base[static_cast<std::size_t>(ci)][static_cast<std::size_t>(i)]);
            subsets_per_class[static_cast<std::size_t>(ci)].push_back(s);
        }
    }
    for (Face s0 : subsets_per_class[0])
        for (Face s1 : subsets_per_class[1])
            for (Face s2 : subsets_per_class[2]) {
                Face req = s0 | s1 | s2;
                SurfaceEnumerator en(space, req);
                en.run();
                for (std::uint64_t mask : en.out) {
                    // The quick filters admit only genuine spheres here, but the
                    // final complexes are re-verified as a whole anyway.
                    if (catalog_index.emplace(mask, static_cast<int>(catalog.size())).second)
                        catalog.push_back({mask, req});
                }
            }

    Face all_base;
    for (const auto& cls : base)
        for (VertexId v : cls) all_base = all_base | Face::single(v);

    auto facets_from_links = [&](const std::vector<std::uint64_t>& links) {
        std::vector<Face> facets;
        for (std::size_t zi = 0; zi < links.size(); ++zi)
            for (std::uint64_t m = links[zi]; m; m &= m - 1)
                facets.push_back(space.tris[static_cast<std::size_t>(std::countr_zero(m))] |
                                 Face::single(apexes[zi]));
        return facets;
    };

    CensusBuilder builder{spec, /*require_sphere=*/true, {}, {}};
    std::uint64_t nodes = 0;
    if (apexes.size() == 2) {
        for (const auto& e : catalog) {
            ++nodes;
            if (e.used != all_base) continue;
            builder.consider(make_spec_complex(spec, facets_from_links({e.mask, e.mask})));
        }
    } else {
        for (std::size_t i = 0; i < catalog.size(); ++i)
            for (std::size_t j = i + 1; j < catalog.size(); ++j) {
                ++nodes;
                std::uint64_t l3 = catalog[i].mask ^ catalog[j].mask;
                if (l3 <= catalog[j].mask) continue;
                auto it = catalog_index.find(l3);
                if (it == catalog_index.end()) continue;
                if ((catalog[i].used | catalog[j].used | catalog[static_cast<std::size_t>(it->second)].used) != all_base)
                    continue;
                builder.consider(make_spec_complex(
                    spec, facets_from_links({catalog[i].mask, catalog[j].mask, l3})));
            }
    }
    builder.finish(true, nodes);
    return builder.census;
}

Census enumerate_balanced_spheres(const EnumerationSpec& spec, SearchOptions opts) {
    spec.validate();
    int max_class = *std::max_element(spec.color_sizes.begin(), spec.color_sizes.end());
    if (spec.num_colors() * max_class > 16)
        throw InputError("spec outside the supported regime (d * max class size > 16)");
    if (spec.dim == 2) return enumerate_dim2(spec, opts);
    if (spec.dim == 3) return enumerate_dim3_star(spec, opts);
    throw InputError("enumeration supports dimensions 2 and 3 only");
}

// ---- orbit_facets and search_symmetric ----

std::vector<std::vector<Face>> orbit_facets(const Coloring& kappa,
                                            const std::vector<VertexPermutation>& generators) {
    int d = kappa.num_colors;
    std::vector<std::vector<VertexId>> classes;
    for (int c = 0; c < d; ++c) classes.push_back(kappa.color_class(c).vertices());

    std::vector<Face> rainbow;
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    while (true) {
        Face f;
        for (int c = 0; c < d; ++c)
            f = f | Face::single(classes[static_cast<std::size_t>(c)][static_cast<std::size_t>(idx[static_cast<std::size_t>(c)])]);
        rainbow.push_back(f);
        int c = d - 1;
        while (c >= 0 && ++idx[static_cast<std::size_t>(c)] ==
                             static_cast<int>(classes[static_cast<std::size_t>(c)].size())) {
            idx[static_cast<std::size_t>(c)] = 0;
            --c;
        }
        if (c < 0) break;
    }
    std::sort(rainbow.begin(), rainbow.end(), lex_less);
    std::map<Face, int> pos;
    for (std::size_t i = 0; i < rainbow.size(); ++i) pos[rainbow[i]] = static_cast<int>(i);

    std::vector<int> orbit_of(rainbow.size(), -1);
    std::vector<std::vector<Face>> orbits;
    for (std::size_t i = 0; i < rainbow.size(); ++i) {
        if (orbit_of[i] >= 0) continue;
        int id = static_cast<int>(orbits.size());
        std::vector<Face> members{rainbow[i]};
        orbit_of[i] = id;
        for (std::size_t k = 0; k < members.size(); ++k)
            for (const auto& g : generators) {
                Face img = g.apply(members[k]);
                auto it = pos.find(img);
                if (it == pos.end())
                    throw InputError("group does not preserve rainbow facets");
                if (orbit_of[static_cast<std::size_t>(it->second)] < 0) {
                    orbit_of[static_cast<std::size_t>(it->second)] = id;
                    members.push_back(img);
                }
            }
        std::sort(members.begin(), members.end(), lex_less);
        orbits.push_back(std::move(members));
    }
    return orbits;
}

bool verify_census_entry(const EnumerationSpec& spec, const SimplicialComplex& K,
                         bool require_sphere) {
    // Cached entries are stored canonically, which is invariant under the
    // spec group only up to isomorphism; the literal invariance check is a
    // generation-time constraint, so it is dropped here.
    EnumerationSpec relabeled = spec;
    relabeled.symmetry.clear();
    CensusBuilder builder{relabeled, require_sphere, {}, {}};
    return builder.consider(K);
}

Census search_symmetric(const EnumerationSpec& spec, bool first_found, SearchOptions opts) {
    spec.validate();
    Coloring kappa = spec.coloring();
    int d = spec.num_colors();
    auto orbits = orbit_facets(kappa, spec.symmetry);
    int n_orbits = static_cast<int>(orbits.size());
    if (n_orbits > 512) throw InputError("orbit space too large");

    // Ridge bookkeeping: every (d-1)-subset of a candidate facet.
    std::map<Face, int> ridge_index;
    std::vector<Face> ridges;
    auto ridge_list = [&](Face f) {
        std::vector<int> out;
        f.for_each_vertex([&](VertexId v) {
            Face r = f - Face::single(v);
            auto [it, fresh] = ridge_index.emplace(r, static_cast<int>(ridges.size()));
            if (fresh) ridges.push_back(r);
            out.push_back(it->second);
        });
        return out;
    };
    std::vector<std::vector<std::pair<int, int>>> orbit_ridges(static_cast<std::size_t>(n_orbits));
    for (int o = 0; o < n_orbits; ++o) {
        std::map<int, int> contrib;
        for (Face f : orbits[static_cast<std::size_t>(o)])
            for (int r : ridge_list(f)) contrib[r] += 1;
        orbit_ridges[static_cast<std::size_t>(o)].assign(contrib.begin(), contrib.end());
    }
    std::vector<std::vector<int>> orbits_of_ridge(ridges.size());
    for (int o = 0; o < n_orbits; ++o)
        for (auto [r, c] : orbit_ridges[static_cast<std::size_t>(o)])
            orbits_of_ridge[static_cast<std::size_t>(r)].push_back(o);

    // Coverage targets: rainbow edges when 2-neighborliness is required,
    // otherwise plain vertices.
    bool need_edges = spec.neighborly_k && *spec.neighborly_k >= 2;
    std::vector<Face> targets;
    if (need_edges) {
        auto classes = class_layout(spec);
        for (int c1 = 0; c1 < d; ++c1)
            for (int c2 = c1 + 1; c2 < d; ++c2)
                for (VertexId a : classes[static_cast<std::size_t>(c1)])
                    for (VertexId b : classes[static_cast<std::size_t>(c2)])
                        targets.push_back(Face::single(a) | Face::single(b));
    } else {
        for (int v = 0; v < spec.vertex_count(); ++v) targets.push_back(Face::single(v));
    }
    std::sort(targets.begin(), targets.end(), lex_less);
    std::vector<std::vector<int>> orbits_of_target(targets.size());
    for (int o = 0; o < n_orbits; ++o)
        for (std::size_t t = 0; t < targets.size(); ++t)
            for (Face f : orbits[static_cast<std::size_t>(o)])
                if (targets[t].subset_of(f)) {
                    orbits_of_target[t].push_back(o);
                    break;
                }

    struct State {
        std::vector<std::uint8_t> ridge_count;
        std::vector<int> target_cover;
        std::vector<bool> chosen;
        std::vector<std::uint64_t> key;

        void toggle(int o, const std::vector<std::vector<std::pair<int, int>>>& orbit_ridges,
                    int delta) {
            for (auto [r, c] : orbit_ridges[static_cast<std::size_t>(o)])
                ridge_count[static_cast<std::size_t>(r)] =
                    static_cast<std::uint8_t>(ridge_count[static_cast<std::size_t>(r)] + delta * c);
            chosen[static_cast<std::size_t>(o)] = delta > 0;
            key[static_cast<std::size_t>(o) / 64] ^= std::uint64_t{1} << (o % 64);
        }
    };

    State st;
    st.ridge_count.assign(ridges.size(), 0);
    st.target_cover.assign(targets.size(), 0);
    st.chosen.assign(static_cast<std::size_t>(n_orbits), false);
    st.key.assign(static_cast<std::size_t>((n_orbits + 63) / 64), 0);

    // Target coverage counts, maintained incrementally.
    std::vector<std::vector<int>> targets_of_orbit(static_cast<std::size_t>(n_orbits));
    for (std::size_t t = 0; t < targets.size(); ++t)
        for (int o : orbits_of_target[t]) targets_of_orbit[static_cast<std::size_t>(o)].push_back(static_cast<int>(t));

    CensusBuilder builder{spec, /*require_sphere=*/false, {}, {}};
    struct KeyHash {
        std::size_t operator()(const std::vector<std::uint64_t>& key) const {
            std::size_t h = 0xcbf29ce484222325ull;
            for (std::uint64_t w : key) {
                h ^= w;
                h *= 0x100000001b3ull;
            }
            return h;
        }
    };
    std::unordered_set<std::vector<std::uint64_t>, KeyHash> memo;
    const std::size_t kMemoCap = 1u << 22;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    bool stop = false;

    std::function<void()> dfs = [&]() {
        if (stop) return;
        if (++nodes > opts.node_budget) {
            budget_hit = true;
            stop = true;
            return;
        }
        if (opts.progress && nodes % opts.progress_stride == 0) opts.progress(nodes);

        // Branch on the most constrained item: the open ridge (or uncovered
        // coverage target) with the fewest feasible completions. Zero-option
        // items fail immediately, one-option items become forced moves.
        auto feasible = [&](int o) {
            if (st.chosen[static_cast<std::size_t>(o)]) return false;
            for (auto [r, c] : orbit_ridges[static_cast<std::size_t>(o)])
                if (st.ridge_count[static_cast<std::size_t>(r)] + c > 2) return false;
            return true;
        };
        int open_ridge = -1, uncovered = -1;
        std::size_t best_options = SIZE_MAX;
        for (std::size_t r = 0; r < ridges.size() && best_options > 1; ++r) {
            if (st.ridge_count[r] != 1) continue;
            std::size_t options = 0;
            for (int o : orbits_of_ridge[r])
                if (feasible(o)) ++options;
            if (options < best_options) {
                best_options = options;
                open_ridge = static_cast<int>(r);
            }
        }
        if (open_ridge < 0) {
            for (std::size_t t = 0; t < targets.size() && best_options > 1; ++t) {
                if (st.target_cover[t] != 0) continue;
                std::size_t options = 0;
                for (int o : orbits_of_target[t])
                    if (feasible(o)) ++options;
                if (options < best_options) {
                    best_options = options;
                    uncovered = static_cast<int>(t);
                }
            }
        }

        if (open_ridge < 0 && uncovered < 0) {
            // Closed and fully covered: candidate complex.
            std::vector<Face> facets;
            for (int o = 0; o < n_orbits; ++o)
                if (st.chosen[static_cast<std::size_t>(o)])
                    for (Face f : orbits[static_cast<std::size_t>(o)]) facets.push_back(f);
            if (!facets.empty()) {
                if (builder.consider(make_spec_complex(spec, std::move(facets))) && first_found)
                    stop = true;
            }
            return;
        }

        const std::vector<int>& candidates =
            open_ridge >= 0 ? orbits_of_ridge[static_cast<std::size_t>(open_ridge)]
                            : orbits_of_target[static_cast<std::size_t>(uncovered)];
        for (int o : candidates) {
            if (!feasible(o)) continue;
            st.toggle(o, orbit_ridges, +1);
            for (int t : targets_of_orbit[static_cast<std::size_t>(o)]) ++st.target_cover[static_cast<std::size_t>(t)];
            if (memo.find(st.key) == memo.end()) {
                if (memo.size() < kMemoCap) memo.insert(st.key);
                dfs();
            }
            for (int t : targets_of_orbit[static_cast<std::size_t>(o)]) --st.target_cover[static_cast<std::size_t>(t)];
            st.toggle(o, orbit_ridges, -1);
            if (stop) return;
        }
    };

    dfs();
    bool exhaustive = !budget_hit && !(first_found && !builder.census.entries.empty());
    builder.finish(exhaustive, nodes);
    if (budget_hit && builder.census.entries.empty()) builder.census.status = SearchStatus::undecided;
    return builder.census;
}

}  // namespace spherekit
