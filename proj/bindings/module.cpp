// Python bindings for the core operations: complexes, face operations,
// homology, predicates, symmetry, decompositions, constructions, censuses.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spherekit/constructions.hpp"
#include "spherekit/decomposition.hpp"
#include "spherekit/enumeration.hpp"
#include "spherekit/json_io.hpp"
#include "spherekit/suite.hpp"
#include "spherekit/symmetry.hpp"
#include "spherekit/verify.hpp"

namespace py = pybind11;
using namespace spherekit;

namespace {

Face face_from_list(const std::vector<int>& vs) { return Face::from_vertices(vs); }

std::vector<std::vector<int>> facets_out(const SimplicialComplex& K) {
    std::vector<std::vector<int>> out;
    for (Face f : K.facets()) out.push_back(f.vertices());
    return out;
}

SimplicialComplex complex_from_facets(const std::vector<std::vector<int>>& facets) {
    std::vector<Face> fs;
    for (const auto& f : facets) fs.push_back(face_from_list(f));
    return SimplicialComplex::from_facets(std::move(fs));
}

Coefficients coeff_from(const py::object& c) {
    if (py::isinstance<py::int_>(c)) return Coefficients::mod(c.cast<long long>());
    std::string s = c.cast<std::string>();
    if (s == "integer") return Coefficients::integers();
    if (s == "rational") return Coefficients::rationals();
    return Coefficients::mod(std::stoll(s));
}

py::dict profile_out(const HomologyProfile& p) {
    py::dict d;
    py::list betti;
    for (int i = 0; i <= p.dim; ++i) betti.append(p.betti(i));
    d["betti"] = betti;
    py::dict torsion;
    for (int i = 0; i <= p.dim; ++i) {
        if (p.torsion_at(i).empty()) continue;
        py::list l;
        for (const BigInt& t : p.torsion_at(i)) l.append(py::int_(py::str(t.str())));
        torsion[py::str(std::to_string(i))] = l;
    }
    d["torsion"] = torsion;
    d["coefficients"] = p.coeff.to_string();
    d["reduced_betti_minus1"] = p.betti(-1);
    return d;
}

py::dict report_out(const PredicateReport& r, const SimplicialComplex& K) {
    py::dict d;
    d["pass"] = r.pass;
    if (r.witness) {
        py::list w;
        r.witness->for_each_vertex([&](VertexId v) { w.append(K.label(v)); });
        d["witness"] = w;
    }
    d["detail"] = r.detail;
    return d;
}

Coloring coloring_from(const SimplicialComplex& K, const py::object& obj) {
    if (obj.is_none()) return K.coloring();
    Coloring kappa;
    auto colors = obj.cast<std::vector<int>>();  // 1-based per vertex
    kappa.color_of.reserve(colors.size());
    for (int c : colors) {
        kappa.color_of.push_back(c - 1);
        kappa.num_colors = std::max(kappa.num_colors, c);
    }
    kappa.color_of.resize(static_cast<std::size_t>(K.universe_size()), -1);
    return kappa;
}

}  // namespace

PYBIND11_MODULE(_spherekit, m) {
    m.doc() = "balanced simplicial complexes: exact homology, recognition predicates, "
              "canonical forms, decompositions and isomorph-free censuses";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    py::class_<SimplicialComplex>(m, "Complex")
        .def_static("from_facets", &complex_from_facets, py::arg("facets"))
        .def_static("from_json", &parse_complex, py::arg("text"))
        .def("to_json", &to_json_string)
        .def_property_readonly("facets", &facets_out)
        .def_property_readonly("dimension", &SimplicialComplex::dimension)
        .def_property_readonly("vertex_count", &SimplicialComplex::vertex_count)
        .def_property_readonly("is_pure", &SimplicialComplex::is_pure)
        .def_property_readonly("name", &SimplicialComplex::name)
        .def_property_readonly("vertices",
                               [](const SimplicialComplex& K) { return K.vertex_mask().vertices(); })
        .def_property_readonly("colors",
                               [](const SimplicialComplex& K) -> py::object {
                                   if (!K.has_coloring()) return py::none();
                                   py::list out;
                                   for (int v = 0; v < K.universe_size(); ++v) {
                                       int c = K.coloring().color_of[static_cast<std::size_t>(v)];
                                       out.append(c < 0 ? py::object(py::none()) : py::object(py::int_(c + 1)));
                                   }
                                   return out;
                               })
        .def("label", [](const SimplicialComplex& K, VertexId v) { return K.label(v); })
        .def("f_vector",
             [](const SimplicialComplex& K) {
                 FaceVector f = f_vector(K);
                 return py::make_tuple(f.f, f.h);
             })
        .def("face_count", &SimplicialComplex::face_count, py::arg("dim"))
        .def("has_face",
             [](const SimplicialComplex& K, const std::vector<int>& f) {
                 return K.has_face(face_from_list(f));
             })
        .def("__repr__", [](const SimplicialComplex& K) {
            return "<Complex '" + K.name() + "' dim " + std::to_string(K.dimension()) + ", " +
                   std::to_string(K.vertex_count()) + " vertices, " +
                   std::to_string(K.facet_count()) + " facets>";
        });

    m.def("construct", &construct_by_name, py::arg("name"));
    m.def("construction_names", &construction_names);

    m.def("link", [](const SimplicialComplex& K, const std::vector<int>& f) {
        return link(K, face_from_list(f));
    });
    m.def("star", [](const SimplicialComplex& K, const std::vector<int>& f) {
        return star(K, face_from_list(f));
    });
    m.def("deletion", [](const SimplicialComplex& K, const std::vector<int>& vs) {
        return deletion(K, face_from_list(vs));
    });
    m.def("join", [](const SimplicialComplex& a, const SimplicialComplex& b) {
        return join_complexes(a, b).complex;
    });
    m.def("rank_selected", [](const SimplicialComplex& K, const std::vector<int>& colors) {
        unsigned mask = 0;
        for (int c : colors) mask |= 1u << (c - 1);
        return rank_selected(K, K.coloring(), mask);
    });
    m.def("boundary_complex",
          [](const SimplicialComplex& K) { return boundary_complex(K); });

    m.def(
        "homology",
        [](const SimplicialComplex& K, const py::object& coefficients) {
            return profile_out(homology(K, coeff_from(coefficients)));
        },
        py::arg("complex"), py::arg("coefficients") = "integer");

    m.def(
        "is_homology_sphere",
        [](const SimplicialComplex& K) { return report_out(is_homology_sphere(K), K); },
        py::arg("complex"));
    m.def(
        "is_homology_ball",
        [](const SimplicialComplex& K) { return report_out(is_homology_ball(K), K); },
        py::arg("complex"));
    m.def(
        "is_closed_manifold",
        [](const SimplicialComplex& K) { return report_out(is_closed_homology_manifold(K), K); },
        py::arg("complex"));
    m.def(
        "is_k_neighborly",
        [](const SimplicialComplex& K, int k, const py::object& colors) {
            return report_out(is_k_neighborly(K, coloring_from(K, colors), k), K);
        },
        py::arg("complex"), py::arg("k"), py::arg("colors") = py::none());
    m.def(
        "dehn_sommerville",
        [](const SimplicialComplex& K) {
            return report_out(dehn_sommerville_flag(K, K.coloring()), K);
        },
        py::arg("complex"));
    m.def(
        "find_proper_coloring",
        [](const SimplicialComplex& K, int d) -> py::object {
            auto kappa = find_proper_coloring(K, d);
            if (!kappa) return py::none();
            py::list out;
            for (int v = 0; v < K.universe_size(); ++v) {
                int c = kappa->color_of[static_cast<std::size_t>(v)];
                out.append(c < 0 ? py::object(py::none()) : py::object(py::int_(c + 1)));
            }
            return out;
        },
        py::arg("complex"), py::arg("colors"));

    m.def("canonical_form", [](const SimplicialComplex& K) {
        CanonicalForm c = canonical_form(K);
        std::vector<std::vector<int>> facets;
        for (Face f : c.facets) facets.push_back(f.vertices());
        return py::make_tuple(facets, c.relabeling);
    });
    m.def("automorphism_group", [](const SimplicialComplex& K, bool color_preserving) {
        GroupDescription g = automorphism_group(K, color_preserving);
        py::dict d;
        d["order"] = g.order;
        py::list gens;
        for (const auto& gen : g.generators) gens.append(gen.cycle_notation(K));
        d["generators"] = gens;
        d["vertex_orbits"] = g.vertex_orbits;
        return d;
    }, py::arg("complex"), py::arg("color_preserving") = false);
    m.def("are_isomorphic", [](const SimplicialComplex& a, const SimplicialComplex& b) -> py::object {
        auto iso = are_isomorphic(a, b);
        if (!iso) return py::none();
        return py::cast(iso->map);
    });

    m.def(
        "find_shelling",
        [](const SimplicialComplex& K, std::uint64_t budget) {
            SearchOptions opts;
            opts.node_budget = budget;
            auto r = find_shelling(K, opts);
            py::dict d;
            d["status"] = to_string(r.status);
            d["nodes_explored"] = r.nodes_explored;
            if (r.witness) d["order"] = r.witness->order;
            return d;
        },
        py::arg("complex"), py::arg("budget") = 10'000'000ull);
    m.def(
        "find_ear_decomposition",
        [](const SimplicialComplex& K, std::uint64_t budget) {
            SearchOptions opts;
            opts.node_budget = budget;
            auto r = find_ear_decomposition(K, opts);
            py::dict d;
            d["status"] = to_string(r.status);
            d["nodes_explored"] = r.nodes_explored;
            if (r.witness) d["pieces"] = r.witness->pieces;
            return d;
        },
        py::arg("complex"), py::arg("budget") = 10'000'000ull);

    m.def(
        "enumerate_balanced_spheres",
        [](const std::string& spec_json, std::uint64_t budget) {
            EnumerationSpec spec = EnumerationSpec::from_json(spec_json);
            SearchOptions opts;
            opts.node_budget = budget;
            Census c = enumerate_balanced_spheres(spec, opts);
            py::list entries;
            for (const auto& e : c.entries) {
                py::dict d;
                d["complex"] = e.complex;
                d["f"] = e.fvec.f;
                d["aut_order"] = e.aut_order;
                d["homology"] = profile_out(e.hom);
                entries.append(d);
            }
            py::dict out;
            out["entries"] = entries;
            out["exhaustive"] = c.exhaustive;
            out["status"] = to_string(c.status);
            return out;
        },
        py::arg("spec_json"), py::arg("budget") = 10'000'000ull);
}
