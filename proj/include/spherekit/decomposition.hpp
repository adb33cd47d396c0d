#pragma once

#include <vector>

#include "spherekit/search.hpp"
#include "spherekit/verify.hpp"

namespace spherekit {

/// Ordered cover of a pure complex: a sphere followed by balls, each ball
/// meeting the union of its predecessors exactly in its boundary.
/// Pieces are facet-index lists into the host complex.
struct EarDecomposition {
    std::vector<std::vector<int>> pieces;
};

/// Facet order where every facet after the first meets the preceding union
/// in a pure complex of codimension 1.
struct Shelling {
    std::vector<int> order;
};

/// Checks the three ear conditions literally; piece facets must exist in K.
PredicateReport validate_ear_decomposition(const SimplicialComplex& K,
                                           const EarDecomposition& candidate);

PredicateReport validate_shelling(const SimplicialComplex& K, const Shelling& candidate);

/// Exhaustive search with certified negatives. Initial spheres are drawn
/// from the mod-2 cycle space of the top boundary map (every closed
/// pseudomanifold subcomplex is such a cycle); ears are grown facet by
/// facet, forced along exposed ridges. `none` is only reported when the
/// space was fully explored within budget.
SearchResult<EarDecomposition> find_ear_decomposition(const SimplicialComplex& K,
                                                      SearchOptions opts = {});

/// Exhaustive backtracking over facet orders with memoized dead states.
SearchResult<Shelling> find_shelling(const SimplicialComplex& K, SearchOptions opts = {});

}  // namespace spherekit
