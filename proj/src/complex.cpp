#include "spherekit/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace spherekit {

std::string to_string(Face f) {
    std::string out = "{";
    bool first = true;
    f.for_each_vertex([&](VertexId v) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    });
    out += "}";
    return out;
}

static std::vector<Face> keep_maximal(std::vector<Face> faces) {
    // Sort by descending size so a face can only be dominated by an earlier one.
    std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return lex_less(a, b);
    });
    std::vector<Face> maximal;
    for (Face f : faces) {
        bool dominated = false;
        for (Face m : maximal) {
            if (f.subset_of(m)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end(), lex_less);
    return maximal;
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<Face> maximal) {
    SimplicialComplex K;
    K.facets_ = std::move(maximal);
    std::uint64_t bits = 0;
    for (Face f : K.facets_) bits |= f.bits();
    K.vertex_mask_ = Face::from_bits(bits);
    K.universe_ = bits ? 64 - std::countl_zero(bits) : 0;
    return K;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> faces) {
    if (faces.empty())
        throw InputError("empty complex: from_facets requires at least one face");
    return from_maximal(keep_maximal(std::move(faces)));
}

SimplicialComplex SimplicialComplex::make_empty() {
    SimplicialComplex K;
    K.facets_ = {Face{}};
    return K;
}

SimplicialComplex SimplicialComplex::make_void() { return SimplicialComplex{}; }

int SimplicialComplex::dimension() const {
    if (is_void()) return -2;
    int d = -1;
    for (Face f : facets_) d = std::max(d, f.dim());
    return d;
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true;
    int d = facets_.front().dim();
    for (Face f : facets_)
        if (f.dim() != d) return false;
    return true;
}

bool SimplicialComplex::has_face(Face f) const {
    for (Face m : facets_)
        if (f.subset_of(m)) return true;
    return false;
}

void SimplicialComplex::build_face_cache() const {
    if (cache_built_) return;
    int dim = dimension();
    face_cache_.assign(static_cast<std::size_t>(std::max(dim + 2, 0)), {});
    if (!is_void()) {
        // Closure under inclusion, smallest complexes first so dedup is cheap.
        std::vector<std::uint64_t> seen;
        for (Face facet : facets_) {
            // Enumerate all subsets of the facet mask.
            std::uint64_t m = facet.bits();
            std::uint64_t sub = m;
            while (true) {
                seen.push_back(sub);
                if (sub == 0) break;
                sub = (sub - 1) & m;
            }
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        for (std::uint64_t bits : seen) {
            Face f = Face::from_bits(bits);
            face_cache_[static_cast<std::size_t>(f.dim() + 1)].push_back(f);
        }
        for (auto& level : face_cache_) std::sort(level.begin(), level.end(), lex_less);
    }
    cache_built_ = true;
}

const std::vector<Face>& SimplicialComplex::faces_of_dim(int k) const {
    static const std::vector<Face> kNone;
    build_face_cache();
    if (k < -1 || k + 1 >= static_cast<int>(face_cache_.size())) return kNone;
    return face_cache_[static_cast<std::size_t>(k + 1)];
}

long long SimplicialComplex::face_count(int k) const {
    return static_cast<long long>(faces_of_dim(k).size());
}

std::vector<Face> SimplicialComplex::all_faces() const {
    build_face_cache();
    std::vector<Face> out;
    for (const auto& level : face_cache_) out.insert(out.end(), level.begin(), level.end());
    return out;
}

std::vector<int> SimplicialComplex::facets_containing(Face f) const {
    std::vector<int> out;
    for (int i = 0; i < facet_count(); ++i)
        if (f.subset_of(facets_[static_cast<std::size_t>(i)])) out.push_back(i);
    return out;
}

void SimplicialComplex::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) < universe_)
        throw InputError("label array does not cover the vertex universe");
    labels_ = std::move(labels);
}

std::string SimplicialComplex::label(VertexId v) const {
    if (has_labels() && v < static_cast<int>(labels_.size()) && !labels_[static_cast<std::size_t>(v)].empty())
        return labels_[static_cast<std::size_t>(v)];
    return std::to_string(v);
}

const Coloring& SimplicialComplex::coloring() const {
    if (!coloring_) throw PreconditionError("complex carries no coloring");
    return *coloring_;
}

void SimplicialComplex::set_coloring(Coloring c) {
    if (static_cast<int>(c.color_of.size()) < universe_)
        throw InputError("coloring does not cover the vertex universe");
    coloring_ = std::move(c);
}

std::vector<int> SimplicialComplex::compact() {
    std::vector<int> old_to_new(static_cast<std::size_t>(universe_), -1);
    int next = 0;
    vertex_mask_.for_each_vertex([&](VertexId v) { old_to_new[static_cast<std::size_t>(v)] = next++; });
    *this = relabeled(old_to_new);
    return old_to_new;
}

SimplicialComplex SimplicialComplex::relabeled(const std::vector<int>& perm) const {
    std::vector<Face> mapped;
    mapped.reserve(facets_.size());
    for (Face f : facets_) {
        std::uint64_t bits = 0;
        f.for_each_vertex([&](VertexId v) {
            int nv = perm[static_cast<std::size_t>(v)];
            if (nv < 0 || nv >= Face::kMaxVertices)
                throw InputError("relabeling maps a vertex out of range");
            bits |= std::uint64_t{1} << nv;
        });
        if (Face::from_bits(bits).size() != f.size())
            throw InputError("relabeling is not injective on a facet");
        mapped.push_back(Face::from_bits(bits));
    }
    std::sort(mapped.begin(), mapped.end(), lex_less);
    SimplicialComplex out = from_maximal(std::move(mapped));
    out.name_ = name_;
    if (!labels_.empty()) {
        std::vector<std::string> labels(static_cast<std::size_t>(out.universe_));
        vertex_mask_.for_each_vertex([&](VertexId v) {
            labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
                labels_[static_cast<std::size_t>(v)];
        });
        out.labels_ = std::move(labels);
    }
    if (coloring_) {
        Coloring c;
        c.num_colors = coloring_->num_colors;
        c.color_of.assign(static_cast<std::size_t>(out.universe_), -1);
        vertex_mask_.for_each_vertex([&](VertexId v) {
            c.color_of[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
                coloring_->color_of[static_cast<std::size_t>(v)];
        });
        out.coloring_ = std::move(c);
    }
    return out;
}

SimplicialComplex subcomplex_from_faces(const SimplicialComplex& parent,
                                        std::vector<Face> faces) {
    SimplicialComplex out;
    if (!faces.empty()) out = SimplicialComplex::from_maximal(keep_maximal(std::move(faces)));
    out.universe_ = std::max(out.universe_, parent.universe_size());
    if (parent.has_labels()) out.labels_ = parent.labels();
    if (parent.has_coloring()) out.coloring_ = parent.coloring();
    return out;
}

// ---- Operations ----

SimplicialComplex link(const SimplicialComplex& K, Face sigma) {
    if (!K.has_face(sigma)) throw InputError("link: not a face of the complex");
    std::vector<Face> faces;
    for (Face f : K.facets())
        if (sigma.subset_of(f)) faces.push_back(f - sigma);
    return subcomplex_from_faces(K, std::move(faces));
}

SimplicialComplex star(const SimplicialComplex& K, Face sigma) {
    if (!K.has_face(sigma)) throw InputError("star: not a face of the complex");
    std::vector<Face> faces;
    for (Face f : K.facets())
        if (sigma.subset_of(f)) faces.push_back(f);
    return subcomplex_from_faces(K, std::move(faces));
}

SimplicialComplex deletion(const SimplicialComplex& K, Face W) {
    if (K.vertex_mask().subset_of(W) && !K.vertex_mask().empty())
        throw InputError("deletion removes every vertex");
    std::vector<Face> faces;
    for (Face f : K.facets()) faces.push_back(f - W);
    return subcomplex_from_faces(K, std::move(faces));
}

JoinResult join_complexes(const SimplicialComplex& K1, const SimplicialComplex& K2) {
    JoinResult result;
    result.relabeling.resize(static_cast<std::size_t>(K2.universe_size()));
    std::iota(result.relabeling.begin(), result.relabeling.end(), 0);

    bool collide = !(K1.vertex_mask() & K2.vertex_mask()).empty();
    int offset = 0;
    if (collide) {
        offset = K1.universe_size();  // max id + 1
        result.relabeled = true;
        for (auto& v : result.relabeling) v += offset;
    }
    SimplicialComplex second = collide ? K2.relabeled(result.relabeling) : K2;

    std::vector<Face> faces;
    for (Face a : K1.facets())
        for (Face b : second.facets()) faces.push_back(a | b);
    if (faces.empty())
        throw InputError("join of void complexes");
    SimplicialComplex out = SimplicialComplex::from_facets(std::move(faces));

    if (K1.has_labels() || K2.has_labels()) {
        std::vector<std::string> labels(static_cast<std::size_t>(out.universe_size()));
        for (int v = 0; v < K1.universe_size(); ++v)
            if (K1.has_vertex(v)) labels[static_cast<std::size_t>(v)] = K1.label(v);
        for (int v = 0; v < K2.universe_size(); ++v)
            if (K2.has_vertex(v)) {
                std::string l = K2.label(v);
                for (int u = 0; u < K1.universe_size(); ++u)
                    if (K1.has_vertex(u) && K1.label(u) == l) { l += "'"; break; }
                labels[static_cast<std::size_t>(v + offset)] = l;
            }
        out.set_labels(std::move(labels));
    }
    if (K1.has_coloring() && K2.has_coloring()) {
        const Coloring& c1 = K1.coloring();
        const Coloring& c2 = K2.coloring();
        Coloring c;
        c.num_colors = c1.num_colors + c2.num_colors;
        c.color_of.assign(static_cast<std::size_t>(out.universe_size()), -1);
        for (int v = 0; v < K1.universe_size(); ++v)
            if (K1.has_vertex(v)) c.color_of[static_cast<std::size_t>(v)] = c1.color_of[static_cast<std::size_t>(v)];
        for (int v = 0; v < K2.universe_size(); ++v)
            if (K2.has_vertex(v))
                c.color_of[static_cast<std::size_t>(v + offset)] =
                    c2.color_of[static_cast<std::size_t>(v)] + c1.num_colors;
        out.set_coloring(std::move(c));
    }
    result.complex = std::move(out);
    return result;
}

SimplicialComplex rank_selected(const SimplicialComplex& K, const Coloring& kappa,
                                unsigned color_subset) {
    if (kappa.num_colors > 0 && (color_subset >> kappa.num_colors) != 0)
        throw InputError("rank selection: color subset outside [d]");
    std::uint64_t keep = 0;
    K.vertex_mask().for_each_vertex([&](VertexId v) {
        int c = kappa.color_of[static_cast<std::size_t>(v)];
        if (c >= 0 && (color_subset >> c) & 1u) keep |= std::uint64_t{1} << v;
    });
    Face keep_mask = Face::from_bits(keep);
    std::vector<Face> faces;
    faces.push_back(Face{});
    for (Face f : K.facets()) faces.push_back(f & keep_mask);
    return subcomplex_from_faces(K, std::move(faces));
}

SimplicialComplex boundary_complex(const SimplicialComplex& K) {
    if (!K.is_pure())
        throw PreconditionError("boundary complex requires a pure complex");
    if (K.is_void() || K.is_empty_complex()) return SimplicialComplex::make_void();
    int d = K.dimension();
    std::vector<Face> boundary_ridges;
    for (Face r : K.faces_of_dim(d - 1)) {
        int count = static_cast<int>(K.facets_containing(r).size());
        if (count > 2)
            throw PreconditionError("not a pseudomanifold: ridge " + to_string(r) +
                                    " lies in " + std::to_string(count) + " facets");
        if (count == 1) boundary_ridges.push_back(r);
    }
    if (boundary_ridges.empty()) return SimplicialComplex::make_void();
    return subcomplex_from_faces(K, std::move(boundary_ridges));
}

int connected_component_count(const SimplicialComplex& K) {
    if (K.is_void() || K.is_empty_complex()) return 0;
    std::vector<VertexId> verts = K.vertex_mask().vertices();
    std::vector<int> parent(static_cast<std::size_t>(K.universe_size()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (Face f : K.facets()) {
        auto vs = f.vertices();
        for (std::size_t i = 1; i < vs.size(); ++i) {
            int a = find(vs[0]), b = find(vs[i]);
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
        }
    }
    int components = 0;
    for (VertexId v : verts)
        if (find(v) == v) ++components;
    return components;
}

bool is_connected(const SimplicialComplex& K) {
    return connected_component_count(K) == 1;
}

}  // namespace spherekit
