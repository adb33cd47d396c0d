#include "spherekit/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace spherekit {

namespace {

SimplicialComplex piece_complex(const SimplicialComplex& K, const std::vector<int>& facet_ids) {
    std::vector<Face> faces;
    for (int i : facet_ids) {
        if (i < 0 || i >= K.facet_count())
            throw InputError("piece references facet index " + std::to_string(i));
        faces.push_back(K.facets()[static_cast<std::size_t>(i)]);
    }
    return subcomplex_from_faces(K, std::move(faces));
}

}  // namespace

PredicateReport validate_ear_decomposition(const SimplicialComplex& K,
                                           const EarDecomposition& candidate) {
    if (candidate.pieces.empty()) return PredicateReport::failed("no pieces");
    if (!K.is_pure()) throw PreconditionError("ear decompositions live in pure complexes");
    int d1 = K.dimension();

    std::vector<bool> used(static_cast<std::size_t>(K.facet_count()), false);
    SimplicialComplex accumulated;
    for (std::size_t j = 0; j < candidate.pieces.size(); ++j) {
        const auto& ids = candidate.pieces[j];
        if (ids.empty()) return PredicateReport::failed("piece " + std::to_string(j) + " is empty");
        SimplicialComplex piece = piece_complex(K, ids);
        if (piece.dimension() != d1 || !piece.is_pure())
            return PredicateReport::failed("piece " + std::to_string(j) +
                                           " is not pure of the host dimension");
        for (int i : ids) {
            if (used[static_cast<std::size_t>(i)])
                return PredicateReport::failed("facet " + std::to_string(i) +
                                               " occurs in two pieces");
            used[static_cast<std::size_t>(i)] = true;
        }
        if (j == 0) {
            PredicateReport r = is_homology_sphere(piece);
            if (!r.pass)
                return PredicateReport::failed("initial complex is not a homology sphere: " +
                                               r.detail, r.witness);
            accumulated = piece;
            continue;
        }
        PredicateReport r = is_homology_ball(piece);
        if (!r.pass)
            return PredicateReport::failed("piece " + std::to_string(j) +
                                           " is not a homology ball: " + r.detail, r.witness);
        SimplicialComplex boundary = homological_boundary(piece);
        SimplicialComplex inter = intersect_complexes(piece, accumulated);
        if (!(inter.facets() == boundary.facets()))
            return PredicateReport::failed("piece " + std::to_string(j) +
                                           " does not meet the union exactly in its boundary");
        accumulated = union_complexes(accumulated, piece);
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i])
            return PredicateReport::failed("facet " + std::to_string(i) + " is uncovered",
                                           K.facets()[i]);
    return PredicateReport::ok(std::to_string(candidate.pieces.size()) + " pieces");
}

PredicateReport validate_shelling(const SimplicialComplex& K, const Shelling& candidate) {
    if (!K.is_pure()) throw PreconditionError("shellings live in pure complexes");
    int n = K.facet_count();
    if (static_cast<int>(candidate.order.size()) != n)
        return PredicateReport::failed("order covers " + std::to_string(candidate.order.size()) +
                                       " of " + std::to_string(n) + " facets");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i : candidate.order) {
        if (i < 0 || i >= n || seen[static_cast<std::size_t>(i)])
            return PredicateReport::failed("order is not a permutation of facets");
        seen[static_cast<std::size_t>(i)] = true;
    }
    int d = K.dimension() + 1;
    for (std::size_t j = 1; j < candidate.order.size(); ++j) {
        Face F = K.facets()[static_cast<std::size_t>(candidate.order[j])];
        // Maximal faces of F ∩ (union of previous facets) must all be ridges.
        std::vector<Face> inters;
        for (std::size_t i = 0; i < j; ++i)
            inters.push_back(F & K.facets()[static_cast<std::size_t>(candidate.order[i])]);
        std::sort(inters.begin(), inters.end(),
                  [](Face a, Face b) { return a.size() > b.size(); });
        std::vector<Face> maximal;
        for (Face f : inters) {
            bool dominated = false;
            for (Face m : maximal)
                if (f.subset_of(m)) {
                    dominated = true;
                    break;
                }
            if (!dominated) maximal.push_back(f);
        }
        if (maximal.empty() || (maximal.size() == 1 && maximal[0].empty()))
            return PredicateReport::failed("facet " + std::to_string(candidate.order[j]) +
                                           " attaches to nothing", F);
        for (Face m : maximal)
            if (m.size() != d - 1)
                return PredicateReport::failed(
                    "facet " + std::to_string(candidate.order[j]) +
                    " meets the union in a face of size " + std::to_string(m.size()), F);
    }
    return PredicateReport::ok("shelling of " + std::to_string(n) + " facets");
}

// ---- search machinery ----

namespace {

struct FacetKey {
    std::vector<std::uint64_t> words;
    bool operator==(const FacetKey&) const = default;
};
struct FacetKeyHash {
    std::size_t operator()(const FacetKey& k) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (std::uint64_t w : k.words) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

struct FacetSet {
    std::vector<std::uint64_t> words;

    explicit FacetSet(int n) : words(static_cast<std::size_t>((n + 63) / 64), 0) {}
    bool test(int i) const { return (words[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1; }
    void set(int i) { words[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(int i) { words[static_cast<std::size_t>(i) / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    int count() const {
        int c = 0;
        for (std::uint64_t w : words) c += std::popcount(w);
        return c;
    }
    FacetKey key() const { return {words}; }
};

// Shared facet/ridge incidence tables.
struct Incidence {
    const SimplicialComplex& K;
    int n;
    std::vector<Face> ridges;
    std::map<Face, int> ridge_index;
    std::vector<std::vector<int>> facet_ridges;   // facet -> ridge ids
    std::vector<std::vector<int>> ridge_facets;   // ridge -> facet ids

    explicit Incidence(const SimplicialComplex& k) : K(k), n(k.facet_count()) {
        facet_ridges.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            Face f = K.facets()[static_cast<std::size_t>(i)];
            f.for_each_vertex([&](VertexId v) {
                Face r = f - Face::single(v);
                auto [it, fresh] = ridge_index.emplace(r, static_cast<int>(ridges.size()));
                if (fresh) {
                    ridges.push_back(r);
                    ridge_facets.push_back({});
                }
                facet_ridges[static_cast<std::size_t>(i)].push_back(it->second);
                ridge_facets[static_cast<std::size_t>(it->second)].push_back(i);
            });
        }
    }
};

// Kernel basis of the top boundary map over GF(2); supports of kernel
// vectors are exactly the closed subcomplex candidates.
std::vector<FacetSet> cycle_space_basis(const Incidence& inc) {
    int rows = static_cast<int>(inc.ridges.size());
    int cols = inc.n;
    std::vector<std::vector<std::uint64_t>> m(static_cast<std::size_t>(rows));
    int wpc = (cols + 63) / 64;
    for (auto& row : m) row.assign(static_cast<std::size_t>(wpc), 0);
    for (int j = 0; j < cols; ++j)
        for (int r : inc.facet_ridges[static_cast<std::size_t>(j)])
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j) / 64] ^= std::uint64_t{1} << (j % 64);

    std::vector<int> pivot_of_col(static_cast<std::size_t>(cols), -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if ((m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) / 64] >> (c % 64)) & 1) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[static_cast<std::size_t>(pr)], m[static_cast<std::size_t>(rank)]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            if ((m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) / 64] >> (c % 64)) & 1)
                for (int w = 0; w < wpc; ++w)
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(w)] ^=
                        m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(w)];
        }
        pivot_of_col[static_cast<std::size_t>(c)] = rank;
        ++rank;
    }
    std::vector<FacetSet> basis;
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[static_cast<std::size_t>(c)] >= 0) continue;
        FacetSet vec(cols);
        vec.set(c);
        for (int c2 = 0; c2 < cols; ++c2) {
            int pr = pivot_of_col[static_cast<std::size_t>(c2)];
            if (pr >= 0 && ((m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(c) / 64] >> (c % 64)) & 1))
                vec.set(c2);
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

struct EarSearch {
    const SimplicialComplex& K;
    const Incidence inc;
    SearchOptions opts;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    std::unordered_set<FacetKey, FacetKeyHash> dead_states;
    std::vector<std::vector<int>> pieces;
    bool done = false;

    explicit EarSearch(const SimplicialComplex& k, SearchOptions o) : K(k), inc(k), opts(o) {}

    bool tick() {
        if (++nodes > opts.node_budget) {
            budget_hit = true;
            return false;
        }
        if (opts.progress && nodes % opts.progress_stride == 0) opts.progress(nodes);
        return true;
    }

    // Faces of the complex spanned by the used facets, as a hash set.
    std::unordered_set<Face> face_closure(const FacetSet& used) const {
        std::unordered_set<Face> faces;
        for (int i = 0; i < inc.n; ++i) {
            if (!used.test(i)) continue;
            std::uint64_t mbits = K.facets()[static_cast<std::size_t>(i)].bits();
            std::uint64_t sub = mbits;
            while (true) {
                faces.insert(Face::from_bits(sub));
                if (sub == 0) break;
                sub = (sub - 1) & mbits;
            }
        }
        return faces;
    }

    bool try_ear(const FacetSet& used, const std::unordered_set<Face>& used_faces,
                 const std::vector<int>& ear) {
        // Exact ear conditions against the current union.
        SimplicialComplex piece = piece_complex(K, ear);
        if (!is_homology_ball(piece).pass) return false;
        SimplicialComplex boundary = homological_boundary(piece);
        std::vector<Face> common;
        for (Face f : piece.all_faces())
            if (used_faces.count(f)) common.push_back(f);
        SimplicialComplex inter = subcomplex_from_faces(K, std::move(common));
        return inter.facets() == boundary.facets();
    }

    // Enumerates candidate ears in the complement of `used`: connected facet
    // sets grown by completing exposed ridges that are not yet faces of the
    // union, seeded at their minimal facet. Recurses into extend() on
    // success.
    void grow_ears(FacetSet& used, const std::unordered_set<Face>& used_faces) {
        std::vector<int> remaining;
        for (int i = 0; i < inc.n; ++i)
            if (!used.test(i)) remaining.push_back(i);

        for (int seed : remaining) {
            if (done || budget_hit) return;
            std::vector<int> ear{seed};
            std::vector<int> ridge_load(inc.ridges.size(), 0);
            for (int r : inc.facet_ridges[static_cast<std::size_t>(seed)]) ridge_load[static_cast<std::size_t>(r)] = 1;
            grow(used, used_faces, ear, ridge_load, seed);
        }
    }

    void grow(FacetSet& used, const std::unordered_set<Face>& used_faces, std::vector<int>& ear,
              std::vector<int>& ridge_load, int seed) {
        if (done || budget_hit || !tick()) return;
        // Exposed ridge that is not a face of the union: must be completed.
        int open = -1;
        for (std::size_t r = 0; r < inc.ridges.size(); ++r)
            if (ridge_load[r] == 1 && !used_faces.count(inc.ridges[r])) {
                open = static_cast<int>(r);
                break;
            }
        if (open < 0) {
            if (try_ear(used, used_faces, ear)) {
                for (int i : ear) used.set(i);
                pieces.push_back(ear);
                extend(used);
                if (!done) {
                    pieces.pop_back();
                    for (int i : ear) used.reset(i);
                }
            }
            return;
        }
        for (int cand : inc.ridge_facets[static_cast<std::size_t>(open)]) {
            if (cand <= seed || used.test(cand)) continue;
            if (std::find(ear.begin(), ear.end(), cand) != ear.end()) continue;
            bool overload = false;
            for (int r : inc.facet_ridges[static_cast<std::size_t>(cand)])
                if (ridge_load[static_cast<std::size_t>(r)] >= 2) {
                    overload = true;
                    break;
                }
            if (overload) continue;
            ear.push_back(cand);
            for (int r : inc.facet_ridges[static_cast<std::size_t>(cand)]) ++ridge_load[static_cast<std::size_t>(r)];
            grow(used, used_faces, ear, ridge_load, seed);
            for (int r : inc.facet_ridges[static_cast<std::size_t>(cand)]) --ridge_load[static_cast<std::size_t>(r)];
            ear.pop_back();
            if (done || budget_hit) return;
        }
    }

    void extend(FacetSet& used) {
        if (done || budget_hit || !tick()) return;
        if (used.count() == inc.n) {
            done = true;
            return;
        }
        FacetKey key = used.key();
        if (dead_states.count(key)) return;
        std::unordered_set<Face> used_faces = face_closure(used);
        grow_ears(used, used_faces);
        if (!done && !budget_hit && dead_states.size() < (1u << 22)) dead_states.insert(key);
    }
};

}  // namespace

SearchResult<EarDecomposition> find_ear_decomposition(const SimplicialComplex& K,
                                                      SearchOptions opts) {
    SearchResult<EarDecomposition> result;
    if (!K.is_pure()) throw PreconditionError("ear decomposition needs a pure complex");
    if (K.is_void() || K.is_empty_complex() || K.dimension() < 1)
        throw PreconditionError("ear decomposition needs dimension >= 1");

    EarSearch search(K, opts);

    // Candidate initial spheres: supports of nonzero vectors in the mod-2
    // cycle space of the top boundary map, smallest support first.
    std::vector<FacetSet> basis = cycle_space_basis(search.inc);
    if (basis.size() > 24) {
        // 2^k candidate cycles is out of reach; report honestly.
        result.status = SearchStatus::undecided;
        return result;
    }
    std::vector<FacetSet> candidates;
    int words = (K.facet_count() + 63) / 64;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << basis.size()); ++pick) {
        FacetSet vec(K.facet_count());
        for (std::size_t b = 0; b < basis.size(); ++b)
            if ((pick >> b) & 1)
                for (int w = 0; w < words; ++w)
                    vec.words[static_cast<std::size_t>(w)] ^= basis[b].words[static_cast<std::size_t>(w)];
        candidates.push_back(std::move(vec));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const FacetSet& a, const FacetSet& b) { return a.count() < b.count(); });

    for (FacetSet& initial : candidates) {
        if (search.done || search.budget_hit) break;
        if (!search.tick()) break;
        std::vector<int> ids;
        for (int i = 0; i < K.facet_count(); ++i)
            if (initial.test(i)) ids.push_back(i);
        SimplicialComplex piece = piece_complex(K, ids);
        if (!is_homology_sphere(piece).pass) continue;
        search.pieces.push_back(ids);
        search.extend(initial);
        if (!search.done) search.pieces.pop_back();
    }

    result.nodes_explored = search.nodes;
    if (search.done) {
        result.status = SearchStatus::found;
        result.witness = EarDecomposition{search.pieces};
    } else if (search.budget_hit) {
        result.status = SearchStatus::undecided;
    } else {
        result.status = SearchStatus::none;
    }
    return result;
}

SearchResult<Shelling> find_shelling(const SimplicialComplex& K, SearchOptions opts) {
    SearchResult<Shelling> result;
    if (!K.is_pure()) throw PreconditionError("shelling needs a pure complex");
    if (K.is_void() || K.is_empty_complex())
        throw PreconditionError("shelling needs a nonempty complex");
    int n = K.facet_count();
    int d = K.dimension() + 1;

    Incidence inc(K);
    std::unordered_set<FacetKey, FacetKeyHash> dead;
    FacetSet used(n);
    std::vector<int> order;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    bool found = false;

    // Ridge-degree bookkeeping lets the attachment test run on ridges only.
    auto attaches_purely = [&](int f) {
        // Maximal intersections with the union must all be ridges of f.
        std::vector<Face> inters;
        Face F = K.facets()[static_cast<std::size_t>(f)];
        for (int i : order) {
            Face g = F & K.facets()[static_cast<std::size_t>(i)];
            inters.push_back(g);
        }
        std::sort(inters.begin(), inters.end(), [](Face a, Face b) { return a.size() > b.size(); });
        bool any = false;
        std::vector<Face> maximal;
        for (Face g : inters) {
            bool dominated = false;
            for (Face m : maximal)
                if (g.subset_of(m)) {
                    dominated = true;
                    break;
                }
            if (dominated) continue;
            maximal.push_back(g);
            if (g.size() != d - 1) return false;
            any = true;
        }
        return any;
    };

    std::function<bool()> dfs = [&]() -> bool {
        if (++nodes > opts.node_budget) {
            budget_hit = true;
            return false;
        }
        if (opts.progress && nodes % opts.progress_stride == 0) opts.progress(nodes);
        if (static_cast<int>(order.size()) == n) return true;
        FacetKey key = used.key();
        if (dead.count(key)) return false;

        std::vector<std::pair<int, int>> candidates;  // (-shared ridges, facet)
        for (int f = 0; f < n; ++f) {
            if (used.test(f)) continue;
            if (order.empty()) {
                candidates.push_back({0, f});
                continue;
            }
            if (!attaches_purely(f)) continue;
            int shared = 0;
            for (int r : inc.facet_ridges[static_cast<std::size_t>(f)])
                for (int g : inc.ridge_facets[static_cast<std::size_t>(r)])
                    if (g != f && used.test(g)) {
                        ++shared;
                        break;
                    }
            candidates.push_back({-shared, f});
        }
        std::sort(candidates.begin(), candidates.end());
        for (auto [neg, f] : candidates) {
            used.set(f);
            order.push_back(f);
            if (dfs()) return true;
            order.pop_back();
            used.reset(f);
            if (budget_hit) return false;
        }
        if (dead.size() < (1u << 22)) dead.insert(key);
        return false;
    };

    found = dfs();
    result.nodes_explored = nodes;
    if (found) {
        result.status = SearchStatus::found;
        result.witness = Shelling{order};
    } else if (budget_hit) {
        result.status = SearchStatus::undecided;
    } else {
        result.status = SearchStatus::none;
    }
    return result;
}

}  // namespace spherekit
