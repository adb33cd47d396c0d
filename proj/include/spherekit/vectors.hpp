#pragma once

#include <vector>

#include "spherekit/complex.hpp"

namespace spherekit {

/// f- and h-vector of a complex. f(-1) = 1 for any nonvoid complex; the
/// h-vector is the standard binomial transform taken with d = dim + 1.
struct FaceVector {
    int dim = -2;
    std::vector<long long> f;  // f[i] = f_{i-1}, i = 0 .. dim+1
    std::vector<long long> h;  // h[i] = h_i,     i = 0 .. dim+1

    long long f_of(int i) const { return f[static_cast<std::size_t>(i + 1)]; }
    long long h_of(int i) const { return h[static_cast<std::size_t>(i)]; }

    /// Sum (-1)^i f_i over i >= 0.
    long long euler_characteristic() const;
};

FaceVector f_vector(const SimplicialComplex& K);

/// Flag f- and h-vectors, indexed by color subsets S of [d] as bitmasks.
struct FlagVector {
    int num_colors = 0;
    std::vector<long long> f_by_set;  // f_S, index = subset mask
    std::vector<long long> h_by_set;  // h_S

    long long f_of(unsigned S) const { return f_by_set[S]; }
    long long h_of(unsigned S) const { return h_by_set[S]; }
};

/// Requires kappa proper on the 1-skeleton of K.
FlagVector flag_vectors(const SimplicialComplex& K, const Coloring& kappa);

/// Whether kappa assigns distinct colors to the endpoints of every edge and
/// covers every vertex of K.
bool is_proper_coloring(const SimplicialComplex& K, const Coloring& kappa);

}  // namespace spherekit
