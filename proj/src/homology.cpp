#include "spherekit/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "spherekit/vectors.hpp"

namespace spherekit {

std::string Coefficients::to_string() const {
    switch (kind) {
        case Kind::integer: return "integer";
        case Kind::rational: return "rational";
        case Kind::mod_p: return std::to_string(p);
    }
    return "?";
}

std::vector<ChainBoundaryMatrix> boundary_matrices(const SimplicialComplex& K) {
    std::vector<ChainBoundaryMatrix> out;
    if (K.is_void()) return out;
    int dim = K.dimension();
    for (int k = 0; k <= dim; ++k) {
        ChainBoundaryMatrix m;
        m.k = k;
        m.rows = K.faces_of_dim(k - 1);
        m.cols = K.faces_of_dim(k);
        std::unordered_map<Face, int> row_index;
        row_index.reserve(m.rows.size());
        for (int i = 0; i < m.row_count(); ++i) row_index[m.rows[static_cast<std::size_t>(i)]] = i;
        m.entries.resize(m.cols.size());
        for (int j = 0; j < m.col_count(); ++j) {
            Face c = m.cols[static_cast<std::size_t>(j)];
            auto vs = c.vertices();
            for (std::size_t i = 0; i < vs.size(); ++i) {
                Face r = c - Face::single(vs[i]);
                int sign = (i % 2 == 0) ? 1 : -1;
                m.entries[static_cast<std::size_t>(j)].push_back({row_index.at(r), sign});
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

// ---- Smith normal form ----
//
// Pivot on ±1 entries while any exist (pure integer row/column elimination,
// no coefficient growth), then finish the remaining block with the classic
// gcd-reduction. Boundary matrices are nearly totally unimodular, so the
// second phase almost never sees more than a handful of entries.

namespace {

struct DenseMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<BigInt>> a;
};

void eliminate_with_pivot(DenseMatrix& m, int pr, int pc, std::vector<bool>& row_done,
                          std::vector<bool>& col_done) {
    const BigInt pivot = m.a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(pc)];
    for (int i = 0; i < m.rows; ++i) {
        if (i == pr || row_done[static_cast<std::size_t>(i)]) continue;
        BigInt& e = m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)];
        if (e == 0) continue;
        BigInt q = e / pivot;
        if (q != 0)
            for (int j = 0; j < m.cols; ++j) {
                if (col_done[static_cast<std::size_t>(j)]) continue;
                m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    q * m.a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(j)];
            }
    }
    for (int j = 0; j < m.cols; ++j) {
        if (j == pc || col_done[static_cast<std::size_t>(j)]) continue;
        BigInt& e = m.a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(j)];
        if (e == 0) continue;
        BigInt q = e / pivot;
        if (q != 0)
            for (int i = 0; i < m.rows; ++i) {
                if (row_done[static_cast<std::size_t>(i)]) continue;
                m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    q * m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)];
            }
    }
}

}  // namespace

SmithResult smith_normal_form(std::vector<std::vector<BigInt>> input) {
    DenseMatrix m;
    m.rows = static_cast<int>(input.size());
    m.cols = m.rows ? static_cast<int>(input[0].size()) : 0;
    m.a = std::move(input);

    SmithResult result;
    if (m.rows == 0 || m.cols == 0) return result;

    std::vector<bool> row_done(static_cast<std::size_t>(m.rows), false);
    std::vector<bool> col_done(static_cast<std::size_t>(m.cols), false);
    std::vector<BigInt> diagonal;

    // Phase 1: unit pivots.
    while (true) {
        int pr = -1, pc = -1;
        for (int i = 0; i < m.rows && pr < 0; ++i) {
            if (row_done[static_cast<std::size_t>(i)]) continue;
            for (int j = 0; j < m.cols; ++j) {
                if (col_done[static_cast<std::size_t>(j)]) continue;
                const BigInt& e = m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (e == 1 || e == -1) {
                    pr = i;
                    pc = j;
                    break;
                }
            }
        }
        if (pr < 0) break;
        eliminate_with_pivot(m, pr, pc, row_done, col_done);
        diagonal.push_back(1);
        row_done[static_cast<std::size_t>(pr)] = true;
        col_done[static_cast<std::size_t>(pc)] = true;
    }

    // Phase 2: gcd reduction on whatever is left.
    while (true) {
        int pr = -1, pc = -1;
        BigInt best = 0;
        for (int i = 0; i < m.rows; ++i) {
            if (row_done[static_cast<std::size_t>(i)]) continue;
            for (int j = 0; j < m.cols; ++j) {
                if (col_done[static_cast<std::size_t>(j)]) continue;
                const BigInt& e = m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (e != 0 && (best == 0 || abs(e) < best)) {
                    best = abs(e);
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr < 0) break;
        // Reduce until the pivot divides its whole row and column.
        bool clean = false;
        while (!clean) {
            clean = true;
            const BigInt pivot = m.a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(pc)];
            for (int i = 0; i < m.rows && clean; ++i) {
                if (row_done[static_cast<std::size_t>(i)] || i == pr) continue;
                BigInt& e = m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)];
                if (e == 0) continue;
                BigInt q = e / pivot;
                for (int j = 0; j < m.cols; ++j) {
                    if (col_done[static_cast<std::size_t>(j)]) continue;
                    m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                        q * m.a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(j)];
                }
                if (e != 0) {
                    // Remainder is smaller than the pivot; swap roles and restart.
                    std::swap(m.a[static_cast<std::size_t>(i)], m.a[static_cast<std::size_t>(pr)]);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int j = 0; j < m.cols && clean; ++j) {
                if (col_done[static_cast<std::size_t>(j)] || j == pc) continue;
                BigInt& e = m.a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(j)];
                if (e == 0) continue;
                BigInt q = e / pivot;
                for (int i = 0; i < m.rows; ++i) {
                    if (row_done[static_cast<std::size_t>(i)]) continue;
                    m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                        q * m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)];
                }
                if (e != 0) {
                    for (int i = 0; i < m.rows; ++i)
                        std::swap(m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                  m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)]);
                    clean = false;
                }
            }
        }
        eliminate_with_pivot(m, pr, pc, row_done, col_done);
        diagonal.push_back(abs(m.a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(pc)]));
        row_done[static_cast<std::size_t>(pr)] = true;
        col_done[static_cast<std::size_t>(pc)] = true;
    }

    // Fix up divisibility: d_i | d_j for i < j.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < diagonal.size(); ++i)
            for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
                if (diagonal[j] % diagonal[i] == 0) continue;
                BigInt g = gcd(diagonal[i], diagonal[j]);
                diagonal[j] = diagonal[i] / g * diagonal[j];
                diagonal[i] = g;
                changed = true;
            }
    }
    std::sort(diagonal.begin(), diagonal.end());
    result.rank = static_cast<int>(diagonal.size());
    result.invariant_factors = std::move(diagonal);
    return result;
}

int rank_mod_p(const ChainBoundaryMatrix& m, long long p) {
    if (p < 2) throw InputError("field characteristic must be a prime >= 2");
    int rows = m.row_count(), cols = m.col_count();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<long long>> a(static_cast<std::size_t>(rows),
                                          std::vector<long long>(static_cast<std::size_t>(cols), 0));
    for (int j = 0; j < cols; ++j)
        for (auto [i, s] : m.entries[static_cast<std::size_t>(j)])
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ((s % p) + p) % p;

    auto inv_mod = [&](long long x) {
        long long r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };

    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
        long long inv = inv_mod(a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)]);
        for (int j = col; j < cols; ++j)
            a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            long long factor = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int j = col; j < cols; ++j) {
                long long& e = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                e = ((e - factor * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)]) % p + p) % p;
            }
        }
        ++rank;
    }
    return rank;
}

static std::vector<std::vector<BigInt>> to_dense(const ChainBoundaryMatrix& m) {
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(m.row_count()),
                                       std::vector<BigInt>(static_cast<std::size_t>(m.col_count()), 0));
    for (int j = 0; j < m.col_count(); ++j)
        for (auto [i, s] : m.entries[static_cast<std::size_t>(j)])
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
    return a;
}

bool HomologyProfile::is_sphere_profile(int m) const {
    for (int i = -1; i <= dim; ++i) {
        if (betti(i) != (i == m ? 1 : 0)) return false;
        if (!torsion_at(i).empty()) return false;
    }
    return m <= dim;
}

bool HomologyProfile::is_trivial() const {
    for (int i = -1; i <= dim; ++i)
        if (betti(i) != 0 || !torsion_at(i).empty()) return false;
    return true;
}

std::string HomologyProfile::to_string() const {
    std::string s = "(";
    for (int i = 0; i <= dim; ++i) {
        if (i) s += ", ";
        s += std::to_string(betti(i));
        for (const BigInt& t : torsion_at(i)) s += "+Z/" + t.str();
    }
    s += ")";
    return s;
}

HomologyProfile homology(const SimplicialComplex& K, Coefficients coeff) {
    HomologyProfile out;
    out.coeff = coeff;
    if (K.is_void()) return out;
    out.dim = K.dimension();
    auto mats = boundary_matrices(K);

    int levels = out.dim + 2;  // dimensions -1 .. dim
    std::vector<int> rank(static_cast<std::size_t>(levels + 1), 0);  // rank[k] = rank ∂_k, k = 0..dim
    std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(levels + 1));
    for (int k = 0; k <= out.dim; ++k) {
        if (coeff.kind == Coefficients::Kind::mod_p) {
            rank[static_cast<std::size_t>(k)] = rank_mod_p(mats[static_cast<std::size_t>(k)], coeff.p);
        } else {
            SmithResult s = smith_normal_form(to_dense(mats[static_cast<std::size_t>(k)]));
            rank[static_cast<std::size_t>(k)] = s.rank;
            factors[static_cast<std::size_t>(k)] = std::move(s.invariant_factors);
        }
    }

    out.reduced_betti.assign(static_cast<std::size_t>(levels), 0);
    out.torsion.assign(static_cast<std::size_t>(levels), {});
    for (int i = -1; i <= out.dim; ++i) {
        long long faces = K.face_count(i);
        long long below = (i >= 0) ? rank[static_cast<std::size_t>(i)] : 0;  // rank ∂_i
        long long above = (i + 1 <= out.dim) ? rank[static_cast<std::size_t>(i + 1)] : 0;
        out.reduced_betti[static_cast<std::size_t>(i + 1)] = faces - below - above;
        if (coeff.kind == Coefficients::Kind::integer && i + 1 <= out.dim) {
            for (const BigInt& d : factors[static_cast<std::size_t>(i + 1)])
                if (d > 1) out.torsion[static_cast<std::size_t>(i + 1)].push_back(d);
        }
    }
    return out;
}

HomologyProfile betti_of_rank_selection(const SimplicialComplex& K, const Coloring& kappa,
                                        unsigned color_subset, Coefficients coeff) {
    if (!is_proper_coloring(K, kappa))
        throw PreconditionError("rank selection homology requires a proper coloring");
    return homology(rank_selected(K, kappa, color_subset), coeff);
}

}  // namespace spherekit
