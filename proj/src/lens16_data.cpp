#include <vector>

namespace spherekit::detail {

// Facet certificate for the 16-vertex lens space triangulation, produced
// once by the symmetric orbit search and re-verified on every load.
// Vertex ids: u1..u4 = 0..3, v1..v4 = 4..7, w1..w4 = 8..11, z1..z4 = 12..15.
// The labeling is normalized so that the documented symmetries act by
// subscript patterns and the Heegaard split pairs z1,z2 against z3,z4.
std::vector<std::vector<int>> lens16_certificate() {
    return {
        {0, 4, 8, 12},
        {0, 4, 8, 13},
        {0, 4, 11, 12},
        {0, 4, 11, 13},
        {0, 5, 10, 12},
        {0, 5, 10, 14},
        {0, 5, 11, 12},
        {0, 5, 11, 14},
        {0, 6, 9, 13},
        {0, 6, 9, 15},
        {0, 6, 10, 14},
        {0, 6, 10, 15},
        {0, 6, 11, 13},
        {0, 6, 11, 14},
        {0, 7, 8, 12},
        {0, 7, 8, 13},
        {0, 7, 9, 13},
        {0, 7, 9, 15},
        {0, 7, 10, 12},
        {0, 7, 10, 15},
        {1, 4, 10, 13},
        {1, 4, 10, 15},
        {1, 4, 11, 13},
        {1, 4, 11, 15},
        {1, 5, 9, 12},
        {1, 5, 9, 13},
        {1, 5, 10, 12},
        {1, 5, 10, 13},
        {1, 6, 8, 12},
        {1, 6, 8, 14},
        {1, 6, 9, 12},
        {1, 6, 9, 13},
        {1, 6, 11, 13},
        {1, 6, 11, 14},
        {1, 7, 8, 12},
        {1, 7, 8, 14},
        {1, 7, 10, 12},
        {1, 7, 10, 15},
        {1, 7, 11, 14},
        {1, 7, 11, 15},
        {2, 4, 9, 12},
        {2, 4, 9, 14},
        {2, 4, 10, 14},
        {2, 4, 10, 15},
        {2, 4, 11, 12},
        {2, 4, 11, 15},
        {2, 5, 8, 13},
        {2, 5, 8, 15},
        {2, 5, 9, 12},
        {2, 5, 9, 13},
        {2, 5, 11, 12},
        {2, 5, 11, 15},
        {2, 6, 8, 14},
        {2, 6, 8, 15},
        {2, 6, 10, 14},
        {2, 6, 10, 15},
        {2, 7, 8, 13},
        {2, 7, 8, 14},
        {2, 7, 9, 13},
        {2, 7, 9, 14},
        {3, 4, 8, 12},
        {3, 4, 8, 13},
        {3, 4, 9, 12},
        {3, 4, 9, 14},
        {3, 4, 10, 13},
        {3, 4, 10, 14},
        {3, 5, 8, 13},
        {3, 5, 8, 15},
        {3, 5, 10, 13},
        {3, 5, 10, 14},
        {3, 5, 11, 14},
        {3, 5, 11, 15},
        {3, 6, 8, 12},
        {3, 6, 8, 15},
        {3, 6, 9, 12},
        {3, 6, 9, 15},
        {3, 7, 9, 14},
        {3, 7, 9, 15},
        {3, 7, 11, 14},
        {3, 7, 11, 15},
    };
}

}  // namespace spherekit::detail
