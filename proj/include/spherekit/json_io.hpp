#pragma once

#include <iosfwd>
#include <string>

#include "spherekit/complex.hpp"

namespace spherekit {

/// Interchange format:
///   {"name": ..., "vertices": [{"id":0, "label"?: "...", "color"?: 1}, ...],
///    "facets": [[0,1,2], ...]}
/// Vertex ids are dense from 0, facets are lex-sorted, colors are 1-based.
/// Serialization is byte-stable: two saves of equal complexes are identical.
std::string to_json_string(const SimplicialComplex& K);
void save_complex(const SimplicialComplex& K, std::ostream& out);
void save_complex_file(const SimplicialComplex& K, const std::string& path);

SimplicialComplex parse_complex(const std::string& json_text);
SimplicialComplex load_complex(std::istream& in);
SimplicialComplex load_complex_file(const std::string& path);

}  // namespace spherekit
