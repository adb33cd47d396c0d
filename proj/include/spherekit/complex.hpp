#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spherekit/face.hpp"

namespace spherekit {

/// Vertex -> color map. Colors are 0-based internally; the JSON interchange
/// format and all user-facing output use 1-based colors.
struct Coloring {
    int num_colors = 0;
    std::vector<int> color_of;  // indexed by vertex id; -1 where undefined

    int color(VertexId v) const { return color_of[static_cast<std::size_t>(v)]; }

    /// Mask of all vertices with the given color.
    Face color_class(int c) const {
        std::uint64_t bits = 0;
        for (std::size_t v = 0; v < color_of.size(); ++v)
            if (color_of[v] == c) bits |= std::uint64_t{1} << v;
        return Face::from_bits(bits);
    }

    std::vector<Face> classes() const {
        std::vector<Face> out;
        out.reserve(static_cast<std::size_t>(num_colors));
        for (int c = 0; c < num_colors; ++c) out.push_back(color_class(c));
        return out;
    }

    /// Color set of a face, as a bitmask over [d].
    unsigned color_set(Face f) const {
        unsigned s = 0;
        f.for_each_vertex([&](VertexId v) { s |= 1u << color_of[static_cast<std::size_t>(v)]; });
        return s;
    }
};

/// An immutable finite simplicial complex, stored by its inclusion-maximal
/// faces. Vertex ids live in a fixed universe [0, universe_size); every id
/// that occurs in a facet is a vertex of the complex.  Subcomplex operations
/// (link, deletion, rank selection) stay in the parent's id universe so that
/// faces of different subcomplexes remain directly comparable.
///
/// The empty complex {∅} (one empty facet) and the void complex (no faces at
/// all) are both representable and distinct.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds a complex from faces, keeping only the inclusion-maximal ones.
    /// Throws InputError on an empty list; pass make_empty() for {∅}.
    static SimplicialComplex from_facets(std::vector<Face> faces);

    /// The complex {∅}.
    static SimplicialComplex make_empty();
    /// The complex with no faces at all.
    static SimplicialComplex make_void();

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const {
        return facets_.size() == 1 && facets_[0].empty();
    }

    const std::vector<Face>& facets() const { return facets_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    /// -1 for {∅}; meaningless (-2 by convention) for the void complex.
    int dimension() const;
    bool is_pure() const;

    Face vertex_mask() const { return vertex_mask_; }
    int vertex_count() const { return vertex_mask_.size(); }
    int universe_size() const { return universe_; }

    bool has_face(Face f) const;
    bool has_vertex(VertexId v) const { return vertex_mask_.contains(v); }

    /// All faces of dimension k, lex-sorted. k = -1 yields {∅} when the
    /// complex is nonvoid.
    const std::vector<Face>& faces_of_dim(int k) const;
    /// Number of faces of dimension k.
    long long face_count(int k) const;
    /// Every face including ∅, grouped by dimension starting at -1.
    std::vector<Face> all_faces() const;

    /// Facet indices (into facets()) containing the given face.
    std::vector<int> facets_containing(Face f) const;

    // Optional metadata. Labels and colors are indexed by raw vertex id.
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    std::string label(VertexId v) const;

    bool has_coloring() const { return coloring_.has_value(); }
    const Coloring& coloring() const;
    void set_coloring(Coloring c);
    void clear_coloring() { coloring_.reset(); }

    /// Same facet set (metadata ignored).
    bool same_complex(const SimplicialComplex& other) const {
        return facets_ == other.facets_;
    }

    /// Re-indexes vertices densely to 0..n-1 in increasing id order,
    /// carrying labels and colors along. Returns old-id -> new-id.
    std::vector<int> compact();

    /// Applies a vertex permutation (old id -> new id) to facets, labels, colors.
    SimplicialComplex relabeled(const std::vector<int>& perm) const;

private:
    std::vector<Face> facets_;  // inclusion-maximal, lex-sorted
    Face vertex_mask_;
    int universe_ = 0;
    std::string name_;
    std::vector<std::string> labels_;
    std::optional<Coloring> coloring_;

    mutable std::vector<std::vector<Face>> face_cache_;  // [k+1] -> k-faces
    mutable bool cache_built_ = false;
    void build_face_cache() const;

    static SimplicialComplex from_maximal(std::vector<Face> maximal);
    friend SimplicialComplex subcomplex_from_faces(const SimplicialComplex&, std::vector<Face>);
};

/// Builds a subcomplex of `parent` from a set of faces (maximal ones kept),
/// inheriting universe, labels and coloring. An empty list yields the void
/// complex.
SimplicialComplex subcomplex_from_faces(const SimplicialComplex& parent,
                                        std::vector<Face> faces);

// ---- Face-level operations ----

/// lk(σ) = {τ − σ : σ ⊆ τ ∈ K}, in the parent id universe.
SimplicialComplex link(const SimplicialComplex& K, Face sigma);

/// st(σ) = {τ : σ ∪ τ ∈ K}.
SimplicialComplex star(const SimplicialComplex& K, Face sigma);

/// K \ W = {σ : σ ∩ W = ∅}. Throws InputError when W covers every vertex.
SimplicialComplex deletion(const SimplicialComplex& K, Face W);

struct JoinResult {
    SimplicialComplex complex;
    bool relabeled = false;
    /// Old K2 id -> new id (identity when no relabeling was needed).
    std::vector<int> relabeling;
};

/// Join K1 * K2. On id collision K2 is shifted by (max id of K1) + 1.
/// Colorings, when present on both sides, are concatenated.
JoinResult join_complexes(const SimplicialComplex& K1, const SimplicialComplex& K2);

/// Faces whose colors lie in S (S is a bitmask over colors 0..d-1).
SimplicialComplex rank_selected(const SimplicialComplex& K, const Coloring& kappa,
                                unsigned color_subset);

/// Subcomplex generated by the ridges lying in exactly one facet.
/// Returns the void complex when K is closed. Requires K pure with every
/// ridge in at most two facets.
SimplicialComplex boundary_complex(const SimplicialComplex& K);

/// 1-skeleton connectivity (isolated vertices count as components).
int connected_component_count(const SimplicialComplex& K);
bool is_connected(const SimplicialComplex& K);

}  // namespace spherekit
