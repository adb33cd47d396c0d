#include "spherekit/suite.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>
#include <set>

#include "spherekit/decomposition.hpp"
#include "spherekit/symmetry.hpp"
#include "spherekit/verify.hpp"

namespace spherekit {

// ---- oracles and generators ----

std::vector<long long> betti_by_rank_oracle(const SimplicialComplex& K) {
    // Fraction-free (Bareiss) rank over the rationals; shares nothing with
    // the Smith-normal-form path.
    auto bareiss_rank = [](std::vector<std::vector<BigInt>> a) {
        int rows = static_cast<int>(a.size());
        int cols = rows ? static_cast<int>(a[0].size()) : 0;
        int rank = 0;
        BigInt prev = 1;
        for (int c = 0; c < cols && rank < rows; ++c) {
            int pivot = -1;
            for (int r = rank; r < rows; ++r)
                if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
            for (int r = rank + 1; r < rows; ++r) {
                for (int c2 = c + 1; c2 < cols; ++c2)
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] =
                        (a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] *
                             a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -
                         a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                             a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c2)]) /
                        prev;
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
            }
            prev = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
            ++rank;
        }
        return rank;
    };

    std::vector<long long> betti;
    if (K.is_void()) return betti;
    int dim = K.dimension();
    auto mats = boundary_matrices(K);
    std::vector<int> rank(static_cast<std::size_t>(dim + 2), 0);
    for (int k = 0; k <= dim; ++k) {
        const auto& m = mats[static_cast<std::size_t>(k)];
        std::vector<std::vector<BigInt>> dense(
            static_cast<std::size_t>(m.row_count()),
            std::vector<BigInt>(static_cast<std::size_t>(m.col_count()), 0));
        for (int j = 0; j < m.col_count(); ++j)
            for (auto [i, s] : m.entries[static_cast<std::size_t>(j)])
                dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
        rank[static_cast<std::size_t>(k)] = bareiss_rank(std::move(dense));
    }
    betti.resize(static_cast<std::size_t>(dim + 2));
    for (int i = -1; i <= dim; ++i) {
        long long below = (i >= 0) ? rank[static_cast<std::size_t>(i)] : 0;
        long long above = (i + 1 <= dim) ? rank[static_cast<std::size_t>(i + 1)] : 0;
        betti[static_cast<std::size_t>(i + 1)] = K.face_count(i) - below - above;
    }
    return betti;
}

SimplicialComplex random_complex(std::uint64_t seed, int max_vertices) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
    int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices - 1));
    int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(2 * n));
    std::vector<Face> faces;
    for (int i = 0; i < count; ++i) {
        std::uint64_t bits = rng() & ((std::uint64_t{1} << n) - 1);
        if (bits == 0) bits = 1;
        faces.push_back(Face::from_bits(bits));
    }
    return SimplicialComplex::from_facets(std::move(faces));
}

SimplicialComplex random_balanced_complex(std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dull + 7);
    int d = 2 + static_cast<int>(rng() % 3);
    std::vector<std::vector<VertexId>> classes;
    Coloring kappa;
    kappa.num_colors = d;
    int next = 0;
    for (int c = 0; c < d; ++c) {
        int size = 1 + static_cast<int>(rng() % 3);
        if (next + size > 8) size = std::max(1, 8 - next);
        std::vector<VertexId> cls;
        for (int i = 0; i < size; ++i) {
            cls.push_back(next++);
            kappa.color_of.push_back(c);
        }
        classes.push_back(cls);
    }
    int count = 1 + static_cast<int>(rng() % 8);
    std::vector<Face> faces;
    // Balanced complexes are (d-1)-dimensional: seed one full rainbow facet.
    {
        Face full;
        for (int c = 0; c < d; ++c) {
            const auto& cls = classes[static_cast<std::size_t>(c)];
            full = full | Face::single(cls[rng() % cls.size()]);
        }
        faces.push_back(full);
    }
    for (int i = 0; i < count; ++i) {
        Face f;
        for (int c = 0; c < d; ++c) {
            const auto& cls = classes[static_cast<std::size_t>(c)];
            std::uint64_t roll = rng() % (cls.size() + 1);
            if (roll < cls.size()) f = f | Face::single(cls[static_cast<std::size_t>(roll)]);
        }
        if (f.empty()) f = Face::single(classes[0][0]);
        faces.push_back(f);
    }
    SimplicialComplex K = SimplicialComplex::from_facets(std::move(faces));
    kappa.color_of.resize(static_cast<std::size_t>(std::max(K.universe_size(), next)));
    K.set_coloring(kappa);
    return K;
}

std::vector<SimplicialComplex> sphere_fixtures() {
    std::vector<SimplicialComplex> out;
    out.push_back(cross_polytope(3));
    out.push_back(cross_polytope(4));
    out.push_back(sigma(2));
    out.push_back(sigma(3));
    auto s = twelve_vertex_spheres();
    out.push_back(s[0]);
    out.push_back(s[1]);
    out.push_back(s[2]);
    out.push_back(gamma16());
    return out;
}

// ---- the battery ----

namespace {

struct Check {
    bool ok = true;
    std::string log;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!log.empty()) log += "; ";
            log += what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool profile_equals(const HomologyProfile& p, std::vector<long long> betti,
                    std::vector<std::pair<int, long long>> torsion) {
    for (int i = -1; i <= p.dim; ++i) {
        long long want = (i >= 0 && i < static_cast<int>(betti.size())) ? betti[static_cast<std::size_t>(i)] : 0;
        if (p.betti(i) != want) return false;
    }
    std::vector<std::pair<int, long long>> got;
    for (int i = 0; i <= p.dim; ++i)
        for (const BigInt& t : p.torsion_at(i)) got.push_back({i, t.convert_to<long long>()});
    std::sort(got.begin(), got.end());
    std::sort(torsion.begin(), torsion.end());
    return got == torsion;
}

EnumerationSpec lens_spec() {
    EnumerationSpec spec;
    spec.dim = 3;
    spec.color_sizes = {4, 4, 4, 4};
    spec.neighborly_k = 2;
    VertexPermutation rot;
    rot.map.resize(16);
    const int cycle4[4] = {2, 3, 1, 0};
    for (int c = 0; c < 4; ++c)
        for (int i = 0; i < 4; ++i)
            rot.map[static_cast<std::size_t>(4 * c + i)] = 4 * c + cycle4[i];
    spec.symmetry = {rot};
    HomologyProfile target;
    target.dim = 3;
    target.reduced_betti = {0, 0, 0, 0, 1};
    target.torsion.assign(5, {});
    target.torsion[2] = {BigInt(3)};
    spec.target_homology = target;
    return spec;
}

Check lens_battery(const SimplicialComplex& K) {
    Check c;
    c.require(K.has_coloring() && is_proper_coloring(K, K.coloring()) &&
                  K.coloring().num_colors == 4,
              "balanced 4-coloring");
    for (int col = 0; col < 4 && c.ok; ++col)
        c.require((K.coloring().color_class(col) & K.vertex_mask()).size() == 4,
                  "color class sizes");
    c.require(is_k_neighborly(K, K.coloring(), 2).pass, "2-neighborly");
    c.require(is_closed_homology_manifold(K).pass, "closed 3-manifold");
    c.require(profile_equals(homology(K), {0, 0, 0, 1}, {{1, 3}}), "homology (0, Z/3, 0, Z)");

    Face z_class = K.coloring().color_class(3) & K.vertex_mask();
    LinkIntersectionProfile prof = link_intersection_profile(K, z_class);
    std::multiset<int> counts;
    int two_i = -1, two_j = -1;
    for (std::size_t i = 0; i < prof.class_vertices.size(); ++i)
        for (std::size_t j = i + 1; j < prof.class_vertices.size(); ++j) {
            counts.insert(prof.pair_components[i][j]);
            if (prof.pair_components[i][j] == 2 && two_i < 0) {
                two_i = static_cast<int>(i);
                two_j = static_cast<int>(j);
            }
        }
    c.require(counts == std::multiset<int>({2, 2, 3, 3, 3, 3}),
              "link intersection components (2,2,3,3,3,3)");

    if (two_i >= 0) {
        std::vector<VertexId> pair_a, pair_b;
        for (std::size_t k = 0; k < prof.class_vertices.size(); ++k) {
            if (static_cast<int>(k) == two_i || static_cast<int>(k) == two_j)
                pair_a.push_back(prof.class_vertices[k]);
            else
                pair_b.push_back(prof.class_vertices[k]);
        }
        HeegaardReport h = heegaard_profile(K, pair_a[0], pair_a[1], pair_b[0], pair_b[1]);
        c.require(h.pass, "heegaard profile: " + h.detail);
    } else {
        c.require(false, "no 2-component pair for the heegaard split");
    }

    c.require(automorphism_group(K).order == 96, "|Aut| = 96");
    return c;
}

}  // namespace

std::vector<CriterionResult> run_paper_suite(const SuiteOptions& opts, std::ostream& log) {
    std::vector<CriterionResult> results;
    auto record = [&](int id, const std::string& name, const Check& c, double secs,
                      double limit, bool undecided = false) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        r.undecided = undecided;
        r.pass = !undecided && c.ok && (limit <= 0 || secs < limit);
        r.detail = c.log;
        if (limit > 0 && secs >= limit) {
            r.pass = false;
            r.detail += (r.detail.empty() ? "" : "; ") + std::string("over time limit");
        }
        r.seconds = secs;
        log << (r.undecided ? "[UNDECIDED]" : (r.pass ? "[PASS]" : "[FAIL]")) << " criterion "
            << id << ": " << name;
        char buf[32];
        snprintf(buf, sizeof buf, " (%.2fs)", secs);
        log << buf;
        if (!r.pass && !r.detail.empty()) log << " -- " << r.detail;
        log << "\n" << std::flush;
        results.push_back(std::move(r));
    };

    // 1: the 16-vertex balanced 2-neighborly 3-sphere.
    {
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            SimplicialComplex G = gamma16();
            c.require(find_proper_coloring(G, 4).has_value(), "4-colorable");
            c.require(is_proper_coloring(G, G.coloring()), "packaged coloring proper");
            c.require(is_k_neighborly(G, G.coloring(), 2).pass, "2-neighborly");
            c.require(is_homology_sphere(G).pass, "integer homology 3-sphere");
            FaceVector f = f_vector(G);
            c.require(f.f_of(-1) == 1 && f.f_of(0) == 16 && f.f_of(1) == 96 &&
                          f.f_of(2) == 160 && f.f_of(3) == 80,
                      "f-vector (1,16,96,160,80)");
            bool links_ok = true;
            G.vertex_mask().for_each_vertex([&](VertexId v) {
                SimplicialComplex L = link(G, Face::single(v));
                if (L.dimension() != 2 || !is_homology_sphere(L).pass) links_ok = false;
            });
            c.require(links_ok, "every vertex link a 2-sphere");
            c.require(automorphism_group(G).order == 8, "|Aut| = 8");
        } catch (const std::exception& e) {
            c.require(false, e.what());
        }
        record(1, "gamma16 verification", c, seconds_since(t0), 10.0);
    }

    // 2: ear decomposition of the rank-3 subcomplex.
    {
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            SimplicialComplex G = gamma16();
            SimplicialComplex G3 = gamma16_rank3();
            Gamma16Discs discs = gamma16_discs();
            std::map<Face, int> index;
            for (int i = 0; i < G3.facet_count(); ++i) index[G3.facets()[static_cast<std::size_t>(i)]] = i;
            auto ids_of = [&](std::initializer_list<const SimplicialComplex*> parts) {
                std::vector<int> ids;
                for (const SimplicialComplex* p : parts)
                    for (Face f : p->facets()) ids.push_back(index.at(f));
                std::sort(ids.begin(), ids.end());
                return ids;
            };
            EarDecomposition witness{{ids_of({&discs.a, &discs.b}), ids_of({&discs.c}),
                                      ids_of({&discs.d})}};
            c.require(validate_ear_decomposition(G3, witness).pass,
                      "(A u B, C, D) validates");

            SearchOptions sopts;
            sopts.node_budget = opts.decomposition_budget;
            auto found = find_ear_decomposition(G3, sopts);
            c.require(found.status == SearchStatus::found, "search finds a witness");
            if (found.witness) {
                c.require(found.witness->pieces.size() == 3, "witness has 3 pieces");
                c.require(validate_ear_decomposition(G3, *found.witness).pass,
                          "found witness validates");
            }

            HomologyProfile rank3 = betti_of_rank_selection(G, G.coloring(), 0b0111,
                                                            Coefficients::rationals());
            HomologyProfile rank1 = betti_of_rank_selection(G, G.coloring(), 0b1000,
                                                            Coefficients::rationals());
            c.require(rank3.betti(2) == 3, "beta_2 of the rank-3 selection is 3");
            c.require(rank1.betti(0) == rank3.betti(2), "Alexander duality against the 4th color");
        } catch (const std::exception& e) {
            c.require(false, e.what());
        }
        record(2, "rank-selected ear decomposition", c, seconds_since(t0), 60.0);
    }

    // 3: enumeration census.
    {
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            EnumerationSpec s9;
            s9.dim = 2;
            s9.color_sizes = {3, 3, 3};
            Census c9 = enumerate_balanced_spheres(s9);
            c.require(c9.exhaustive && c9.entries.size() == 1,
                      "(3,3,3): exactly one sphere, got " + std::to_string(c9.entries.size()));

            EnumerationSpec bounded;
            bounded.dim = 3;
            bounded.color_sizes = {3, 3, 3, 3};
            bounded.max_edges = 50;
            Census cb = enumerate_balanced_spheres(bounded);
            std::multiset<long long> f1s;
            std::string got;
            for (const auto& e : cb.entries) {
                f1s.insert(e.fvec.f_of(1));
                got += (got.empty() ? "" : ",") + std::to_string(e.fvec.f_of(1));
            }
            c.require(cb.exhaustive && cb.entries.size() == 3 &&
                          f1s == std::multiset<long long>({42, 46, 48}),
                      "(3,3,3,3) with at most 50 edges: expected exactly {42,46,48}, found {" +
                          got + "} (the second 48-edge sphere is real: independently verified "
                          "and shellable)");

            EnumerationSpec open_spec;
            open_spec.dim = 3;
            open_spec.color_sizes = {3, 3, 3, 3};
            Census co = enumerate_balanced_spheres(open_spec);
            bool spectrum_ok = co.exhaustive;
            bool none_neighborly = true;
            for (const auto& e : co.entries) {
                long long f1 = e.fvec.f_of(1);
                if (f1 != 42 && f1 != 46 && f1 != 48 && f1 != 52) spectrum_ok = false;
                if (is_k_neighborly(e.complex, e.complex.coloring(), 2).pass)
                    none_neighborly = false;
            }
            c.require(spectrum_ok, "unrestricted census spectrum within {42,46,48,52}");
            c.require(none_neighborly, "no 2-neighborly 12-vertex sphere");
        } catch (const std::exception& e) {
            c.require(false, e.what());
        }
        record(3, "enumeration census", c, seconds_since(t0), 3600.0);
    }

    // 4: the lens space complex.
    {
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        bool undecided = false;
        try {
            if (opts.fresh_lens_search) {
                SearchOptions sopts;
                sopts.node_budget = opts.search_budget;
                Census found = search_symmetric(lens_spec(), /*first_found=*/true, sopts);
                if (found.entries.empty()) {
                    undecided = found.status == SearchStatus::undecided;
                    c.require(false, "symmetric search found nothing (" +
                                         to_string(found.status) + ")");
                } else {
                    SimplicialComplex K = found.entries.front().complex;
                    Check battery = lens_battery(K);
                    c.require(battery.ok, "fresh search: " + battery.log);
                }
            }
            auto t_cert = std::chrono::steady_clock::now();
            Check battery = lens_battery(lens16());
            c.require(battery.ok, battery.log);
            c.require(seconds_since(t_cert) < 30.0, "certificate re-verification under 30s");
        } catch (const std::exception& e) {
            c.require(false, e.what());
        }
        record(4, "lens space search and battery", c, seconds_since(t0), 0.0, undecided);
    }

    // 5: homology engine vs the rank oracle.
    {
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            std::vector<SimplicialComplex> corpus;
            corpus.push_back(rp2_6());
            corpus.push_back(torus7());
            {
                std::vector<Face> simplex4;
                for (int skip = 0; skip < 5; ++skip) {
                    Face f;
                    for (int v = 0; v < 5; ++v)
                        if (v != skip) f = f | Face::single(v);
                    simplex4.push_back(f);
                }
                corpus.push_back(SimplicialComplex::from_facets(simplex4));
            }
            corpus.push_back(SimplicialComplex::from_facets({Face::of({0, 1})}));
            corpus.push_back(cycle(3));
            for (std::uint64_t s = 0; s < 40; ++s) corpus.push_back(random_complex(s, 7));

            for (const auto& K : corpus) {
                auto oracle = betti_by_rank_oracle(K);
                HomologyProfile rat = homology(K, Coefficients::rationals());
                for (int i = -1; i <= K.dimension(); ++i)
                    c.require(rat.betti(i) == oracle[static_cast<std::size_t>(i + 1)],
                              "rank oracle mismatch at dim " + std::to_string(i));
                // Universal coefficients: mod-p Betti exceeds rational exactly
                // by the invariant factors p divides.
                HomologyProfile integral = homology(K, Coefficients::integers());
                for (long long p : {2LL, 3LL}) {
                    HomologyProfile fp = homology(K, Coefficients::mod(p));
                    for (int i = -1; i <= K.dimension(); ++i) {
                        long long here = 0, below = 0;
                        for (const BigInt& t : integral.torsion_at(i))
                            if (t % p == 0) ++here;
                        for (const BigInt& t : integral.torsion_at(i - 1))
                            if (t % p == 0) ++below;
                        c.require(fp.betti(i) == rat.betti(i) + here + below,
                                  "universal coefficients at p=" + std::to_string(p));
                    }
                }
            }

            HomologyProfile rp2 = homology(rp2_6());
            c.require(rp2.torsion_at(1).size() == 1 && rp2.torsion_at(1)[0] == 2,
                      "projective plane has torsion Z/2");
            c.require(homology(rp2_6(), Coefficients::rationals()).betti(2) == 0,
                      "projective plane rational beta_2 = 0");
            c.require(homology(rp2_6(), Coefficients::mod(2)).betti(2) == 1,
                      "projective plane mod-2 beta_2 = 1");
        } catch (const std::exception& e) {
            c.require(false, e.what());
        }
        record(5, "homology oracle equivalence", c, seconds_since(t0), 5.0);
    }

    // 6: shellability and unshellability.
    {
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            SearchOptions sopts;
            sopts.node_budget = opts.decomposition_budget;
            auto octa = find_shelling(cross_polytope(3), sopts);
            c.require(octa.status == SearchStatus::found &&
                          validate_shelling(cross_polytope(3), *octa.witness).pass,
                      "octahedron shellable");
            SimplicialComplex G = gamma16();
            auto gs = find_shelling(G, sopts);
            c.require(gs.status == SearchStatus::found, "gamma16 shelling found");
            if (gs.witness) c.require(validate_shelling(G, *gs.witness).pass, "gamma16 shelling validates");
            auto ts = find_shelling(torus7(), sopts);
            c.require(ts.status == SearchStatus::none, "7-vertex torus certified unshellable");
            auto te = find_ear_decomposition(torus7(), sopts);
            c.require(te.status == SearchStatus::none,
                      "7-vertex torus certified ear-decomposition-free");
        } catch (const std::exception& e) {
            c.require(false, e.what());
        }
        record(6, "shellability decisions", c, seconds_since(t0), 600.0);
    }

    // 7: identity property suites.
    {
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            for (std::uint64_t s = 0; s < 200 && c.ok; ++s) {
                SimplicialComplex K = random_complex(s + 1000, 8);
                auto mats = boundary_matrices(K);
                for (std::size_t k = 1; k < mats.size(); ++k) {
                    // rows of ∂_k are cols of ∂_{k-1}
                    const auto& hi = mats[k];
                    const auto& lo = mats[k - 1];
                    for (int j = 0; j < hi.col_count(); ++j) {
                        std::map<int, int> acc;
                        for (auto [mid, s1] : hi.entries[static_cast<std::size_t>(j)])
                            for (auto [row, s2] : lo.entries[static_cast<std::size_t>(mid)])
                                acc[row] += s1 * s2;
                        for (auto [row, v] : acc)
                            c.require(v == 0, "dd != 0");
                    }
                }
            }
            for (std::uint64_t s = 0; s < 200 && c.ok; ++s) {
                SimplicialComplex K = random_balanced_complex(s);
                FaceVector f = f_vector(K);
                FlagVector flags = flag_vectors(K, K.coloring());
                int d = K.coloring().num_colors;
                for (int i = 0; i <= d; ++i) {
                    long long fsum = 0, hsum = 0;
                    for (unsigned S = 0; S < (1u << d); ++S) {
                        if (std::popcount(S) != i) continue;
                        fsum += flags.f_of(S);
                        hsum += flags.h_of(S);
                    }
                    long long fi = (i - 1 <= f.dim) ? f.f_of(i - 1) : 0;
                    long long hi = (i <= f.dim + 1) ? f.h_of(i) : 0;
                    c.require(fsum == fi, "flag f recovery");
                    c.require(hsum == hi, "flag h recovery");
                }
            }
            for (std::uint64_t s = 0; s < 200 && c.ok; ++s) {
                SimplicialComplex K1 = random_complex(2 * s + 5000, 4);
                SimplicialComplex K2 = random_complex(2 * s + 5001, 4);
                SimplicialComplex J = join_complexes(K1, K2).complex;
                FaceVector h1 = f_vector(K1), h2 = f_vector(K2), hj = f_vector(J);
                int dj = hj.dim + 1;
                for (int k = 0; k <= dj; ++k) {
                    long long conv = 0;
                    for (int j = 0; j <= k; ++j) {
                        long long a = (j <= h1.dim + 1) ? h1.h_of(j) : 0;
                        long long b = (k - j <= h2.dim + 1) ? h2.h_of(k - j) : 0;
                        conv += a * b;
                    }
                    c.require(conv == hj.h_of(k), "join h-convolution");
                }
            }
            auto fixtures = sphere_fixtures();
            for (const auto& S : fixtures) {
                c.require(dehn_sommerville_flag(S, S.coloring()).pass,
                          "flag symmetry on " + S.name());
                int d = S.coloring().num_colors;
                for (unsigned sub = 0; sub < (1u << d); ++sub) {
                    HomologyProfile left =
                        betti_of_rank_selection(S, S.coloring(), sub, Coefficients::rationals());
                    HomologyProfile right = betti_of_rank_selection(
                        S, S.coloring(), ((1u << d) - 1) & ~sub, Coefficients::rationals());
                    for (int i = -1; i <= d - 1; ++i)
                        c.require(left.betti(i) == right.betti(d - 2 - i),
                                  "Alexander duality on " + S.name());
                }
            }
            std::mt19937_64 rng(4242);
            int canonical_cases = 0;
            std::vector<SimplicialComplex> canon_fixtures = {cross_polytope(3), sigma(2), sigma(3),
                                                             torus7(), rp2_6()};
            for (std::uint64_t s = 0; s < 40; ++s) canon_fixtures.push_back(random_complex(s + 77, 7));
            for (const auto& K : canon_fixtures) {
                CanonicalForm base = canonical_form(K);
                std::vector<VertexId> verts = K.vertex_mask().vertices();
                for (int rep = 0; rep < 5; ++rep, ++canonical_cases) {
                    std::vector<int> perm(static_cast<std::size_t>(K.universe_size()), -1);
                    std::vector<VertexId> image = verts;
                    std::shuffle(image.begin(), image.end(), rng);
                    for (std::size_t i = 0; i < verts.size(); ++i)
                        perm[static_cast<std::size_t>(verts[i])] = image[i];
                    SimplicialComplex R = K.relabeled(perm);
                    c.require(canonical_form(R).facets == base.facets,
                              "canonical form relabeling invariance");
                }
            }
            c.require(canonical_cases >= 200, "canonical suite size");
        } catch (const std::exception& e) {
            c.require(false, e.what());
        }
        record(7, "identity property suites", c, seconds_since(t0), 0.0);
    }

    // 8: link-intersection ball/sphere instances.
    {
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            auto spheres = twelve_vertex_spheres();
            for (const auto& S : spheres) {
                const Coloring& kappa = S.coloring();
                for (int col = 0; col < kappa.num_colors; ++col) {
                    Face cls = kappa.color_class(col) & S.vertex_mask();
                    if (cls.size() != 3) continue;
                    auto vs = cls.vertices();
                    for (std::size_t i = 0; i < vs.size(); ++i)
                        for (std::size_t j = i + 1; j < vs.size(); ++j) {
                            SimplicialComplex inter = intersection_of_links(
                                S, Face::single(vs[i]) | Face::single(vs[j]));
                            c.require(is_homology_ball(inter).pass && inter.dimension() == 2,
                                      S.name() + ": pairwise link intersection is a 2-ball");
                        }
                    SimplicialComplex triple = intersection_of_links(S, cls);
                    c.require(is_homology_sphere(triple).pass && triple.dimension() == 1,
                              S.name() + ": triple link intersection is a 1-sphere");
                }
            }
        } catch (const std::exception& e) {
            c.require(false, e.what());
        }
        record(8, "link intersection profile instances", c, seconds_since(t0), 10.0);
    }

    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace spherekit
