// Command-line front end: constructions, predicates, homology, symmetry,
// decompositions and censuses over the JSON complex format, wired for
// stdin/stdout pipelines.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 usage or input
// error, 3 undecided (budget exhausted).

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "spherekit/constructions.hpp"
#include "spherekit/decomposition.hpp"
#include "spherekit/enumeration.hpp"
#include "spherekit/json_io.hpp"
#include "spherekit/suite.hpp"
#include "spherekit/symmetry.hpp"
#include "spherekit/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace spherekit;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;
constexpr int kExitUndecided = 3;

std::string read_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") return read_stream(std::cin);
    std::ifstream f(path);
    if (!f) throw InputError("cannot open: " + path);
    return read_stream(f);
}

std::uint64_t fnv64(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string digest_of(const std::string& text) {
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv64(text)));
    return buf;
}

fs::path cache_dir() {
    if (const char* env = std::getenv("PAPER_KIT_CACHE")) return fs::path(env);
    if (const char* home = std::getenv("HOME"))
        return fs::path(home) / ".cache" / "spherekit";
    return fs::path(".spherekit-cache");
}

void write_output(const SimplicialComplex& K, const std::string& out_path) {
    if (out_path.empty() || out_path == "-")
        save_complex(K, std::cout);
    else
        save_complex_file(K, out_path);
}

struct Report {
    ordered_json j;
    bool any_fail = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Report(const std::string& command, const std::string& input_text) {
        j["command"] = command;
        j["input_digest"] = digest_of(input_text);
        j["checks"] = ordered_json::array();
        j["budget_used"] = 0;
    }

    void add(const std::string& name, const PredicateReport& r, const SimplicialComplex& K) {
        ordered_json chk;
        chk["name"] = name;
        chk["verdict"] = r.pass ? "pass" : "fail";
        if (!r.pass) any_fail = true;
        if (r.witness) {
            ordered_json w = ordered_json::array();
            r.witness->for_each_vertex([&](VertexId v) { w.push_back(K.label(v)); });
            chk["witness"] = w;
        }
        if (!r.detail.empty()) chk["detail"] = r.detail;
        j["checks"].push_back(chk);
    }

    void add_note(const std::string& name, const std::string& verdict, ordered_json extra = {}) {
        ordered_json chk;
        chk["name"] = name;
        chk["verdict"] = verdict;
        if (verdict == "fail") any_fail = true;
        if (!extra.is_null() && !extra.empty()) chk["data"] = extra;
        j["checks"].push_back(chk);
    }

    int finish(std::uint64_t budget_used = 0) {
        j["budget_used"] = budget_used;
        j["wall_ms"] = static_cast<long long>(
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count());
        std::cout << j.dump(2) << "\n";
        return any_fail ? kExitFail : kExitPass;
    }
};

VertexId vertex_by_name(const SimplicialComplex& K, const std::string& name) {
    VertexId found = -1;
    K.vertex_mask().for_each_vertex([&](VertexId v) {
        if (K.label(v) == name) found = v;
    });
    if (found < 0) throw InputError("unknown vertex '" + name + "'");
    return found;
}

ordered_json census_to_json(const EnumerationSpec& spec, const Census& census) {
    ordered_json j;
    j["spec"] = ordered_json::parse(spec.to_json());
    j["status"] = to_string(census.status);
    j["exhaustive"] = census.exhaustive;
    j["nodes_explored"] = census.nodes_explored;
    j["scope"] =
        "exhaustive within this spec only; larger regimes (15-vertex 4-spheres, "
        "18-vertex 5-spheres) are beyond enumeration scale and remain unverified here";
    j["entries"] = ordered_json::array();
    for (const auto& e : census.entries) {
        ordered_json je;
        je["facets"] = ordered_json::array();
        for (Face f : e.complex.facets()) je["facets"].push_back(f.vertices());
        je["colors"] = ordered_json::array();
        for (int v = 0; v < e.complex.universe_size(); ++v)
            je["colors"].push_back(e.complex.coloring().color_of[static_cast<std::size_t>(v)] + 1);
        je["f_vector"] = e.fvec.f;
        je["aut_order"] = e.aut_order;
        je["homology"] = ordered_json::parse(profile_to_json(e.hom));
        j["entries"].push_back(je);
    }
    return j;
}

Census census_from_json(const EnumerationSpec& spec, const ordered_json& j, bool require_sphere) {
    Census census;
    census.status = j.at("status") == "found"  ? SearchStatus::found
                    : j.at("status") == "none" ? SearchStatus::none
                                               : SearchStatus::undecided;
    census.exhaustive = j.value("exhaustive", false);
    census.nodes_explored = j.value("nodes_explored", std::uint64_t{0});
    for (const auto& je : j.at("entries")) {
        std::vector<Face> facets;
        for (const auto& jf : je.at("facets"))
            facets.push_back(Face::from_vertices(jf.get<std::vector<VertexId>>()));
        SimplicialComplex K = SimplicialComplex::from_facets(std::move(facets));
        Coloring kappa;
        kappa.num_colors = spec.num_colors();
        for (int c : je.at("colors").get<std::vector<int>>()) kappa.color_of.push_back(c - 1);
        kappa.color_of.resize(static_cast<std::size_t>(K.universe_size()), -1);
        K.set_coloring(kappa);
        if (!verify_census_entry(spec, K, require_sphere))
            throw InputError("cached census entry fails re-verification");
        CensusEntry entry;
        entry.fvec = f_vector(K);
        entry.aut_order = automorphism_group(K).order;
        entry.hom = homology(K);
        entry.complex = std::move(K);
        census.entries.push_back(std::move(entry));
    }
    return census;
}

void emit_census(const EnumerationSpec& spec, const Census& census, const std::string& out_dir) {
    ordered_json index = census_to_json(spec, census);
    if (out_dir.empty()) {
        std::cout << index.dump(2) << "\n";
        return;
    }
    fs::create_directories(out_dir);
    ordered_json light = index;
    light["entries"] = ordered_json::array();
    for (std::size_t i = 0; i < census.entries.size(); ++i) {
        const auto& e = census.entries[i];
        std::string file = "entry" + std::to_string(i) + ".json";
        SimplicialComplex K = e.complex;
        K.set_name("census-entry-" + std::to_string(i));
        save_complex_file(K, (fs::path(out_dir) / file).string());
        ordered_json je = index["entries"][i];
        je.erase("facets");
        je["file"] = file;
        light["entries"].push_back(je);
    }
    std::ofstream out(fs::path(out_dir) / "index.json");
    out << light.dump(2) << "\n";
    std::cout << "census with " << census.entries.size() << " entries written to " << out_dir
              << "\n";
}

int run_census_command(const std::string& spec_path, bool search_mode, bool first,
                       std::uint64_t budget, const std::string& out_dir, bool no_cache) {
    EnumerationSpec spec = EnumerationSpec::from_json(read_input(spec_path));
    bool require_sphere = !search_mode;
    std::string mode = search_mode ? (first ? "search-first" : "search") : "enumerate";
    fs::path cache_file = cache_dir() / ("census-" + spec.digest() + "-" + mode + ".json");

    if (!no_cache && fs::exists(cache_file)) {
        std::ifstream in(cache_file);
        Census census = census_from_json(spec, ordered_json::parse(read_stream(in)), require_sphere);
        std::cerr << "loaded census from " << cache_file << " (re-verified)\n";
        emit_census(spec, census, out_dir);
        return census.status == SearchStatus::undecided ? kExitUndecided : kExitPass;
    }

    SearchOptions opts;
    opts.node_budget = budget;
    fs::path progress_file = cache_dir() / ("progress-" + spec.digest() + ".json");
    opts.progress = [&](std::uint64_t nodes) {
        fs::create_directories(cache_dir());
        std::ofstream out(progress_file);
        out << "{\"nodes\": " << nodes << "}\n";
    };

    Census census = search_mode ? search_symmetric(spec, first, opts)
                                : enumerate_balanced_spheres(spec, opts);
    if (!no_cache && census.status != SearchStatus::undecided) {
        fs::create_directories(cache_dir());
        std::ofstream out(cache_file);
        out << census_to_json(spec, census).dump(2) << "\n";
    }
    std::error_code ec;
    fs::remove(progress_file, ec);
    emit_census(spec, census, out_dir);
    return census.status == SearchStatus::undecided ? kExitUndecided : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for balanced simplicial complexes: constructions, recognition "
                 "predicates, exact homology, symmetry, decompositions and censuses"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker parallelism (searches are deterministic regardless)");

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "write a named complex");
    std::string construct_name, out_path;
    cmd_construct->add_option("name", construct_name, "one of: " + [] {
                                  std::string all;
                                  for (const auto& n : construction_names()) {
                                      if (!all.empty()) all += ", ";
                                      all += n;
                                  }
                                  return all;
                              }())
        ->required();
    cmd_construct->add_option("-o,--output", out_path, "output file (default stdout)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run recognition predicates");
    std::string input_path;
    int balanced_d = 0, neighborly_k = 0;
    bool check_sphere = false, check_ball = false, check_manifold = false, check_ds = false;
    int link_profile_color = 0;
    std::string heegaard_arg, coeff_arg = "integer";
    cmd_verify->add_option("input", input_path, "complex file (default stdin)");
    cmd_verify->add_option("--balanced", balanced_d, "check d-colorability");
    cmd_verify->add_option("--neighborly", neighborly_k, "check balanced k-neighborliness");
    cmd_verify->add_flag("--sphere", check_sphere, "homology sphere check");
    cmd_verify->add_flag("--ball", check_ball, "homology ball check");
    cmd_verify->add_flag("--manifold", check_manifold, "closed homology manifold check");
    cmd_verify->add_flag("--dehn-sommerville", check_ds, "flag h-vector symmetry");
    cmd_verify->add_option("--link-profile", link_profile_color,
                           "link intersection profile of a color class (1-based)");
    cmd_verify->add_option("--heegaard", heegaard_arg, "a,b/c,d split by vertex labels");
    cmd_verify->add_option("--coefficients", coeff_arg, "integer | rational | prime p");

    // fvec
    auto* cmd_fvec = app.add_subcommand("fvec", "f-, h- and flag vectors");
    cmd_fvec->add_option("input", input_path, "complex file (default stdin)");

    // homology
    auto* cmd_hom = app.add_subcommand("homology", "reduced homology profile");
    cmd_hom->add_option("input", input_path, "complex file (default stdin)");
    cmd_hom->add_option("--coefficients", coeff_arg, "integer | rational | prime p");

    // aut
    auto* cmd_aut = app.add_subcommand("aut", "automorphism group");
    bool color_preserving = false;
    cmd_aut->add_option("input", input_path, "complex file (default stdin)");
    cmd_aut->add_flag("--color-preserving", color_preserving,
                      "restrict to coloring-stabilizing automorphisms");

    // ear / shell
    std::uint64_t budget = 10'000'000;
    auto* cmd_ear = app.add_subcommand("ear", "find an ear decomposition or certify none");
    cmd_ear->add_option("input", input_path, "complex file (default stdin)");
    cmd_ear->add_option("--budget", budget, "node budget");
    auto* cmd_shell = app.add_subcommand("shell", "find a shelling or certify none");
    cmd_shell->add_option("input", input_path, "complex file (default stdin)");
    cmd_shell->add_option("--budget", budget, "node budget");

    // enumerate / search
    auto* cmd_enum = app.add_subcommand("enumerate", "isomorph-free census of balanced spheres");
    std::string spec_path, out_dir;
    bool no_cache = false, first_found = false;
    cmd_enum->add_option("--spec", spec_path, "enumeration spec JSON")->required();
    cmd_enum->add_option("-o,--output", out_dir, "census output directory");
    cmd_enum->add_option("--budget", budget, "node budget");
    cmd_enum->add_flag("--no-cache", no_cache, "ignore the census cache");
    auto* cmd_search = app.add_subcommand("search", "symmetry-constrained facet-orbit search");
    cmd_search->add_option("--spec", spec_path, "enumeration spec JSON")->required();
    cmd_search->add_option("-o,--output", out_dir, "census output directory");
    cmd_search->add_option("--budget", budget, "node budget");
    cmd_search->add_flag("--first", first_found, "stop at the first verified complex");
    cmd_search->add_flag("--no-cache", no_cache, "ignore the census cache");

    // paper-suite
    auto* cmd_suite = app.add_subcommand("paper-suite", "run the full verification battery");
    bool no_fresh_lens = false;
    cmd_suite->add_option("--budget", budget, "node budget for searches");
    cmd_suite->add_flag("--certificate-only", no_fresh_lens,
                        "verify the packaged lens certificate instead of re-searching");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitError;  // --help exits 0, usage errors exit 2
    }
    (void)jobs;

    try {
        if (cmd_construct->parsed()) {
            write_output(construct_by_name(construct_name), out_path);
            return kExitPass;
        }

        if (cmd_verify->parsed()) {
            std::string text = read_input(input_path);
            SimplicialComplex K = parse_complex(text);
            Report report("verify", text);

            Coefficients coeff = Coefficients::integers();
            if (coeff_arg == "rational") coeff = Coefficients::rationals();
            else if (coeff_arg != "integer") coeff = Coefficients::mod(std::stoll(coeff_arg));

            if (balanced_d > 0) {
                auto kappa = find_proper_coloring(K, balanced_d);
                PredicateReport r = kappa ? PredicateReport::ok("proper coloring found")
                                          : PredicateReport::failed("graph is not " +
                                                                    std::to_string(balanced_d) +
                                                                    "-colorable");
                report.add("balanced-" + std::to_string(balanced_d), r, K);
                if (kappa && !K.has_coloring()) K.set_coloring(*kappa);
            }
            if (neighborly_k > 0)
                report.add("neighborly-" + std::to_string(neighborly_k),
                           is_k_neighborly(K, K.coloring(), neighborly_k), K);
            // Impurity is reported as a failed verdict (with the offending
            // facet as witness), not as an input error: the question asked
            // was "is this a sphere", and the answer is no.
            auto pure_or_fail = [&](auto&& predicate) -> PredicateReport {
                if (!K.is_pure()) {
                    Face low;
                    int top = K.dimension();
                    for (Face f : K.facets())
                        if (f.dim() < top) {
                            low = f;
                            break;
                        }
                    return PredicateReport::failed("complex is not pure", low);
                }
                return predicate();
            };
            if (check_sphere)
                report.add("sphere", pure_or_fail([&] { return is_homology_sphere(K, coeff); }), K);
            if (check_ball)
                report.add("ball", pure_or_fail([&] { return is_homology_ball(K, coeff); }), K);
            if (check_manifold)
                report.add("manifold",
                           pure_or_fail([&] { return is_closed_homology_manifold(K, coeff); }), K);
            if (check_ds) report.add("dehn-sommerville", dehn_sommerville_flag(K, K.coloring()), K);
            if (link_profile_color > 0) {
                Face cls = K.coloring().color_class(link_profile_color - 1) & K.vertex_mask();
                LinkIntersectionProfile prof = link_intersection_profile(K, cls);
                ordered_json data;
                data["vertices"] = ordered_json::array();
                for (VertexId v : prof.class_vertices) data["vertices"].push_back(K.label(v));
                data["pair_components"] = prof.pair_components;
                if (prof.triple_homology)
                    data["triple_homology"] =
                        ordered_json::parse(profile_to_json(*prof.triple_homology));
                report.add_note("link-profile", "pass", data);
            }
            if (!heegaard_arg.empty()) {
                auto slash = heegaard_arg.find('/');
                auto comma1 = heegaard_arg.find(',');
                auto comma2 = heegaard_arg.find(',', slash);
                if (slash == std::string::npos || comma1 == std::string::npos ||
                    comma2 == std::string::npos || comma1 > slash)
                    throw InputError("--heegaard expects a,b/c,d");
                VertexId a = vertex_by_name(K, heegaard_arg.substr(0, comma1));
                VertexId b = vertex_by_name(K, heegaard_arg.substr(comma1 + 1, slash - comma1 - 1));
                VertexId c = vertex_by_name(K, heegaard_arg.substr(slash + 1, comma2 - slash - 1));
                VertexId d = vertex_by_name(K, heegaard_arg.substr(comma2 + 1));
                HeegaardReport h = heegaard_profile(K, a, b, c, d);
                report.add_note("heegaard", h.pass ? "pass" : "fail",
                                ordered_json{{"detail", h.detail}});
            }
            return report.finish();
        }

        if (cmd_fvec->parsed()) {
            std::string text = read_input(input_path);
            SimplicialComplex K = parse_complex(text);
            FaceVector fv = f_vector(K);
            ordered_json j;
            j["f"] = fv.f;
            j["h"] = fv.h;
            if (K.has_coloring() && is_proper_coloring(K, K.coloring())) {
                FlagVector flags = flag_vectors(K, K.coloring());
                ordered_json jf = ordered_json::object(), jh = ordered_json::object();
                for (unsigned S = 0; S < (1u << flags.num_colors); ++S) {
                    std::string key;
                    for (int c = 0; c < flags.num_colors; ++c)
                        if ((S >> c) & 1) key += (key.empty() ? "" : ",") + std::to_string(c + 1);
                    if (key.empty()) key = "{}";
                    jf[key] = flags.f_of(S);
                    jh[key] = flags.h_of(S);
                }
                j["flag_f"] = jf;
                j["flag_h"] = jh;
            }
            std::cout << j.dump(2) << "\n";
            return kExitPass;
        }

        if (cmd_hom->parsed()) {
            std::string text = read_input(input_path);
            SimplicialComplex K = parse_complex(text);
            Coefficients coeff = Coefficients::integers();
            if (coeff_arg == "rational") coeff = Coefficients::rationals();
            else if (coeff_arg != "integer") coeff = Coefficients::mod(std::stoll(coeff_arg));
            std::cout << ordered_json::parse(profile_to_json(homology(K, coeff))).dump(2) << "\n";
            return kExitPass;
        }

        if (cmd_aut->parsed()) {
            std::string text = read_input(input_path);
            SimplicialComplex K = parse_complex(text);
            GroupDescription g = automorphism_group(K, color_preserving);
            ordered_json j;
            j["order"] = g.order;
            j["generators"] = ordered_json::array();
            for (const auto& gen : g.generators) j["generators"].push_back(gen.cycle_notation(K));
            j["vertex_orbits"] = ordered_json::array();
            for (const auto& orbit : g.vertex_orbits) {
                ordered_json jo = ordered_json::array();
                for (VertexId v : orbit) jo.push_back(K.label(v));
                j["vertex_orbits"].push_back(jo);
            }
            std::cout << j.dump(2) << "\n";
            return kExitPass;
        }

        if (cmd_ear->parsed() || cmd_shell->parsed()) {
            std::string text = read_input(input_path);
            SimplicialComplex K = parse_complex(text);
            SearchOptions opts;
            opts.node_budget = budget;
            ordered_json j;
            SearchStatus status;
            if (cmd_ear->parsed()) {
                auto r = find_ear_decomposition(K, opts);
                status = r.status;
                j["command"] = "ear";
                j["status"] = to_string(r.status);
                j["nodes_explored"] = r.nodes_explored;
                if (r.witness) {
                    j["pieces"] = ordered_json::array();
                    for (const auto& piece : r.witness->pieces) j["pieces"].push_back(piece);
                }
            } else {
                auto r = find_shelling(K, opts);
                status = r.status;
                j["command"] = "shell";
                j["status"] = to_string(r.status);
                j["nodes_explored"] = r.nodes_explored;
                if (r.witness) j["order"] = r.witness->order;
            }
            std::cout << j.dump(2) << "\n";
            return status == SearchStatus::undecided ? kExitUndecided : kExitPass;
        }

        if (cmd_enum->parsed()) return run_census_command(spec_path, false, false, budget, out_dir, no_cache);
        if (cmd_search->parsed())
            return run_census_command(spec_path, true, first_found, budget, out_dir, no_cache);

        if (cmd_suite->parsed()) {
            SuiteOptions opts;
            opts.decomposition_budget = budget;
            opts.search_budget = budget;
            opts.fresh_lens_search = !no_fresh_lens;
            auto results = run_paper_suite(opts, std::cout);
            int passed = 0;
            bool undecided = false;
            for (const auto& r : results) {
                passed += r.pass;
                undecided |= r.undecided;
            }
            std::cout << passed << "/" << results.size() << " criteria passed\n";
            if (all_passed(results)) return kExitPass;
            return undecided ? kExitUndecided : kExitFail;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitError;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
