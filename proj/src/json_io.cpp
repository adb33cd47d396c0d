#include "spherekit/json_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace spherekit {

using nlohmann::ordered_json;

std::string to_json_string(const SimplicialComplex& K) {
    SimplicialComplex c = K;
    c.compact();

    ordered_json j;
    j["name"] = c.name();
    j["vertices"] = ordered_json::array();
    for (int v = 0; v < c.vertex_count(); ++v) {
        ordered_json jv;
        jv["id"] = v;
        if (c.has_labels() && !c.labels()[static_cast<std::size_t>(v)].empty())
            jv["label"] = c.labels()[static_cast<std::size_t>(v)];
        if (c.has_coloring()) {
            int col = c.coloring().color_of[static_cast<std::size_t>(v)];
            if (col >= 0) jv["color"] = col + 1;
        }
        j["vertices"].push_back(jv);
    }
    j["facets"] = ordered_json::array();
    for (Face f : c.facets()) j["facets"].push_back(f.vertices());
    return j.dump(2) + "\n";
}

void save_complex(const SimplicialComplex& K, std::ostream& out) {
    out << to_json_string(K);
}

void save_complex_file(const SimplicialComplex& K, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open for writing: " + path);
    save_complex(K, out);
}

SimplicialComplex parse_complex(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw InputError(std::string("complex file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("facets"))
        throw InputError("complex file must be an object with a 'facets' array");

    std::vector<Face> facets;
    for (const auto& jf : j["facets"]) {
        std::vector<VertexId> vs = jf.get<std::vector<VertexId>>();
        facets.push_back(Face::from_vertices(vs));
    }
    if (facets.empty()) throw InputError("complex file has no facets");
    SimplicialComplex K = SimplicialComplex::from_facets(std::move(facets));

    if (j.contains("name") && j["name"].is_string()) K.set_name(j["name"].get<std::string>());

    if (j.contains("vertices") && j["vertices"].is_array() && !j["vertices"].empty()) {
        int n = K.universe_size();
        std::vector<std::string> labels(static_cast<std::size_t>(n));
        std::vector<int> colors(static_cast<std::size_t>(n), -1);
        bool any_label = false, any_color = false;
        int max_color = 0;
        for (const auto& jv : j["vertices"]) {
            int id = jv.at("id").get<int>();
            if (id < 0 || id >= n)
                throw InputError("vertex id " + std::to_string(id) + " does not occur in any facet");
            if (jv.contains("label")) {
                labels[static_cast<std::size_t>(id)] = jv["label"].get<std::string>();
                any_label = true;
            }
            if (jv.contains("color")) {
                int c = jv["color"].get<int>();
                if (c < 1) throw InputError("colors are 1-based");
                colors[static_cast<std::size_t>(id)] = c - 1;
                max_color = std::max(max_color, c);
                any_color = true;
            }
        }
        if (any_label) K.set_labels(std::move(labels));
        if (any_color) {
            Coloring kappa;
            kappa.num_colors = max_color;
            kappa.color_of = std::move(colors);
            K.set_coloring(std::move(kappa));
        }
    }
    return K;
}

SimplicialComplex load_complex(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str());
}

SimplicialComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open: " + path);
    return load_complex(in);
}

}  // namespace spherekit
