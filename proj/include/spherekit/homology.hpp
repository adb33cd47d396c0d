#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "spherekit/complex.hpp"

namespace spherekit {

using BigInt = boost::multiprecision::cpp_int;

struct Coefficients {
    enum class Kind { integer, rational, mod_p };
    Kind kind = Kind::integer;
    long long p = 0;

    static Coefficients integers() { return {Kind::integer, 0}; }
    static Coefficients rationals() { return {Kind::rational, 0}; }
    static Coefficients mod(long long p) { return {Kind::mod_p, p}; }

    bool operator==(const Coefficients&) const = default;
    std::string to_string() const;
};

/// Signed boundary map ∂_k from k-chains to (k-1)-chains. k = 0 is the
/// augmentation onto the empty face. Rows and columns are lex-sorted faces.
struct ChainBoundaryMatrix {
    int k = 0;
    std::vector<Face> rows;  // (k-1)-faces
    std::vector<Face> cols;  // k-faces
    /// Per column: (row index, ±1) with the sorted-vertex sign rule.
    std::vector<std::vector<std::pair<int, int>>> entries;

    int row_count() const { return static_cast<int>(rows.size()); }
    int col_count() const { return static_cast<int>(cols.size()); }
};

/// Matrices ∂_0 .. ∂_dim (∂_0 = augmentation). Empty for the void complex.
std::vector<ChainBoundaryMatrix> boundary_matrices(const SimplicialComplex& K);

/// Reduced homology by dimension, from -1 up to dim(K).
struct HomologyProfile {
    Coefficients coeff;
    int dim = -2;  // top dimension covered
    std::vector<long long> reduced_betti;        // index i  <->  β̃_{i-1}
    std::vector<std::vector<BigInt>> torsion;    // index i  <->  torsion of H̃_{i-1}

    long long betti(int i) const {
        int idx = i + 1;
        if (idx < 0 || idx >= static_cast<int>(reduced_betti.size())) return 0;
        return reduced_betti[static_cast<std::size_t>(idx)];
    }
    const std::vector<BigInt>& torsion_at(int i) const {
        static const std::vector<BigInt> kNone;
        int idx = i + 1;
        if (idx < 0 || idx >= static_cast<int>(torsion.size())) return kNone;
        return torsion[static_cast<std::size_t>(idx)];
    }
    bool has_torsion() const {
        for (const auto& t : torsion)
            if (!t.empty()) return true;
        return false;
    }
    /// β̃_m = 1, all other β̃ = 0, no torsion. m = -1 matches the complex {∅}.
    bool is_sphere_profile(int m) const;
    /// All reduced Betti numbers zero, no torsion.
    bool is_trivial() const;

    std::string to_string() const;
};

/// Reduced simplicial homology. Integer mode reports torsion invariant
/// factors; rational and mod-p modes report Betti numbers only.
HomologyProfile homology(const SimplicialComplex& K,
                         Coefficients coeff = Coefficients::integers());

/// homology(rank_selected(K, kappa, S), coeff).
HomologyProfile betti_of_rank_selection(const SimplicialComplex& K, const Coloring& kappa,
                                        unsigned color_subset,
                                        Coefficients coeff = Coefficients::integers());

/// {"betti":[...], "torsion":{"1":["3"]}, "coefficients":"integer"} — the CLI
/// report schema; betti starts at dimension 0.
std::string profile_to_json(const HomologyProfile& p);
HomologyProfile profile_from_json(const std::string& text);

// Exact linear algebra used by the homology computation.
struct SmithResult {
    int rank = 0;
    std::vector<BigInt> invariant_factors;  // nonzero, divisibility chain
};
SmithResult smith_normal_form(std::vector<std::vector<BigInt>> m);
int rank_mod_p(const ChainBoundaryMatrix& m, long long p);

}  // namespace spherekit
