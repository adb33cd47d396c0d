#include "spherekit/vectors.hpp"

namespace spherekit {

long long FaceVector::euler_characteristic() const {
    long long chi = 0;
    for (int i = 0; i <= dim; ++i) chi += (i % 2 == 0 ? 1 : -1) * f_of(i);
    return chi;
}

static long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

FaceVector f_vector(const SimplicialComplex& K) {
    FaceVector out;
    if (K.is_void()) return out;
    out.dim = K.dimension();
    int d = out.dim + 1;
    out.f.resize(static_cast<std::size_t>(d + 1));
    for (int i = -1; i <= out.dim; ++i)
        out.f[static_cast<std::size_t>(i + 1)] = K.face_count(i);
    // h_j = sum_i (-1)^(j-i) C(d-i, j-i) f_{i-1}
    out.h.assign(static_cast<std::size_t>(d + 1), 0);
    for (int j = 0; j <= d; ++j) {
        long long hj = 0;
        for (int i = 0; i <= j; ++i) {
            long long term = binomial(d - i, j - i) * out.f_of(i - 1);
            hj += ((j - i) % 2 == 0) ? term : -term;
        }
        out.h[static_cast<std::size_t>(j)] = hj;
    }
    return out;
}

bool is_proper_coloring(const SimplicialComplex& K, const Coloring& kappa) {
    if (static_cast<int>(kappa.color_of.size()) < K.universe_size()) return false;
    bool ok = true;
    K.vertex_mask().for_each_vertex([&](VertexId v) {
        int c = kappa.color_of[static_cast<std::size_t>(v)];
        if (c < 0 || c >= kappa.num_colors) ok = false;
    });
    if (!ok) return false;
    for (Face e : K.faces_of_dim(1)) {
        auto vs = e.vertices();
        if (kappa.color_of[static_cast<std::size_t>(vs[0])] ==
            kappa.color_of[static_cast<std::size_t>(vs[1])])
            return false;
    }
    return true;
}

FlagVector flag_vectors(const SimplicialComplex& K, const Coloring& kappa) {
    if (!is_proper_coloring(K, kappa))
        throw PreconditionError("flag vectors require a proper coloring");
    FlagVector out;
    out.num_colors = kappa.num_colors;
    std::size_t n_sets = std::size_t{1} << kappa.num_colors;
    out.f_by_set.assign(n_sets, 0);
    for (Face f : K.all_faces()) {
        unsigned S = kappa.color_set(f);
        // Proper coloring makes faces rainbow, so |S| = |f| and the count is
        // attributed to exactly one subset.
        out.f_by_set[S] += 1;
    }
    // h_S = sum_{T ⊆ S} (-1)^{|S|-|T|} f_T
    out.h_by_set.assign(n_sets, 0);
    for (unsigned S = 0; S < n_sets; ++S) {
        long long hS = 0;
        unsigned T = S;
        int sizeS = std::popcount(S);
        while (true) {
            long long term = out.f_by_set[T];
            hS += ((sizeS - std::popcount(T)) % 2 == 0) ? term : -term;
            if (T == 0) break;
            T = (T - 1) & S;
        }
        out.h_by_set[S] = hS;
    }
    return out;
}

}  // namespace spherekit
