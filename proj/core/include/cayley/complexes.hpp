#ifndef CAYLEY_COMPLEXES_HPP
#define CAYLEY_COMPLEXES_HPP

#include <functional>
#include <vector>

#include "cayley/hilbert.hpp"
#include "cayley/linalg.hpp"

namespace cayley {

/// Matrix of polynomials, row-major.
template <class F>
struct PolyMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Polynomial<F>> entries;

    static PolyMatrix zero(const RingPtr<F>& ring, std::size_t r, std::size_t c) {
        PolyMatrix m;
        m.rows = r;
        m.cols = c;
        m.entries.assign(r * c, Polynomial<F>::zero(ring));
        return m;
    }
    Polynomial<F>& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Polynomial<F>& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    PolyMatrix mul(const PolyMatrix& o, const RingPtr<F>& ring) const {
        if (cols != o.rows) throw Error("matrix shape mismatch");
        PolyMatrix r = zero(ring, rows, o.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < o.cols; ++j) {
                Polynomial<F> acc = Polynomial<F>::zero(ring);
                for (std::size_t k = 0; k < cols; ++k) acc = acc + at(i, k) * o.at(k, j);
                r.at(i, j) = std::move(acc);
            }
        return r;
    }
    bool is_zero() const {
        for (const auto& e : entries)
            if (!e.is_zero()) return false;
        return true;
    }
    bool operator==(const PolyMatrix& o) const {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }
};

/// Complex of graded free modules M_L -> ... -> M_1 -> M_0 with
/// polynomial-matrix differentials. modules[i] lists the twists of the
/// direct summands of M_i (rank = list length); differential(i) maps
/// position i to position i-1. Construction checks shapes and the
/// homogeneity forced by the twists; d^2 = 0 is a separate predicate.
template <class F>
class FreeComplex {
public:
    FreeComplex(RingPtr<F> ring, std::vector<std::vector<int>> twists,
                std::vector<PolyMatrix<F>> differentials)
        : ring_(std::move(ring)), twists_(std::move(twists)), d_(std::move(differentials)) {
        if (!twists_.empty() && d_.size() + 1 != twists_.size())
            throw Error("differential count must be module count minus one");
        for (std::size_t i = 1; i < twists_.size(); ++i) {
            const auto& m = d_[i - 1];
            if (m.rows != twists_[i - 1].size() || m.cols != twists_[i].size())
                throw Error("differential shape mismatch at position " + std::to_string(i));
            for (std::size_t r = 0; r < m.rows; ++r)
                for (std::size_t c = 0; c < m.cols; ++c) {
                    const auto& e = m.at(r, c);
                    if (e.is_zero()) continue;
                    long forced = twists_[i - 1][r] - twists_[i][c];
                    if (!e.is_homogeneous() || e.degree() != forced)
                        throw Error("entry not homogeneous of forced degree at d_" +
                                    std::to_string(i) + "(" + std::to_string(r) + "," +
                                    std::to_string(c) + "): " + e.str());
                }
        }
    }

    static FreeComplex empty(RingPtr<F> ring) { return FreeComplex(std::move(ring), {}, {}); }

    const RingPtr<F>& ring() const { return ring_; }
    std::size_t positions() const { return twists_.size(); }
    std::size_t rank(std::size_t i) const { return twists_[i].size(); }
    const std::vector<int>& twists(std::size_t i) const { return twists_[i]; }
    /// d_i : M_i -> M_{i-1}, 1 <= i < positions()
    const PolyMatrix<F>& differential(std::size_t i) const {
        if (i == 0 || i >= twists_.size()) throw Error("differential index out of range");
        return d_[i - 1];
    }

private:
    RingPtr<F> ring_;
    std::vector<std::vector<int>> twists_;
    std::vector<PolyMatrix<F>> d_;
};

/// True iff every consecutive product of differentials vanishes.
template <class F>
bool is_complex(const FreeComplex<F>& c) {
    for (std::size_t i = 2; i < c.positions(); ++i)
        if (!c.differential(i - 1).mul(c.differential(i), c.ring()).is_zero()) return false;
    return true;
}

/// Koszul complex of homogeneous generators, exterior powers ordered by
/// descending-lexicographic index subsets. The contraction differential
/// sends e_{i1<...<ik} to sum_j (-1)^{j+1} f_{ij} e_{...without ij...};
/// for (x1,x2,x3) this gives the matrices
///   [x1 -x2 x3]^T, rows (x2,x1,0),(-x3,0,x1),(0,-x3,-x2), [x3 x2 x1].
template <class F>
FreeComplex<F> koszul_complex(const std::vector<Polynomial<F>>& gens,
                              std::vector<int> twists = {}) {
    if (gens.empty()) throw Error("koszul complex needs at least one generator");
    RingPtr<F> ring = gens[0].ring();
    for (const auto& g : gens) {
        if (!same_ring(ring, g.ring())) throw Error("ring mismatch");
        if (g.is_zero() || !g.is_homogeneous())
            throw Error("koszul generators must be nonzero homogeneous: " + g.str());
    }
    std::size_t r = gens.size();
    if (twists.empty())
        for (const auto& g : gens) twists.push_back(static_cast<int>(g.degree()));
    if (twists.size() != r) throw Error("twist count mismatch");

    // subsets of {0..r-1} of size k, descending lexicographic
    auto subsets = [&](std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur;
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (cur.size() == k) {
                out.push_back(cur);
                return;
            }
            for (std::size_t v = start; v < r; ++v) {
                cur.push_back(v);
                rec(v + 1);
                cur.pop_back();
            }
        };
        rec(0);
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    };

    std::vector<std::vector<int>> module_twists(r + 1);
    std::vector<std::vector<std::vector<std::size_t>>> bases(r + 1);
    for (std::size_t k = 0; k <= r; ++k) {
        bases[k] = subsets(k);
        for (const auto& s : bases[k]) {
            int tw = 0;
            for (std::size_t v : s) tw -= twists[v];
            module_twists[k].push_back(tw);
        }
    }

    std::vector<PolyMatrix<F>> diffs;
    for (std::size_t k = 1; k <= r; ++k) {
        PolyMatrix<F> d = PolyMatrix<F>::zero(ring, bases[k - 1].size(), bases[k].size());
        for (std::size_t c = 0; c < bases[k].size(); ++c) {
            const auto& src = bases[k][c];
            for (std::size_t j = 0; j < src.size(); ++j) {
                std::vector<std::size_t> tgt;
                for (std::size_t t = 0; t < src.size(); ++t)
                    if (t != j) tgt.push_back(src[t]);
                auto it = std::find(bases[k - 1].begin(), bases[k - 1].end(), tgt);
                std::size_t row = static_cast<std::size_t>(it - bases[k - 1].begin());
                Polynomial<F> entry = gens[src[j]];
                if (j % 2 == 1) entry = -entry;
                d.at(row, c) = d.at(row, c) + entry;
            }
        }
        diffs.push_back(std::move(d));
    }
    return FreeComplex<F>(ring, std::move(module_twists), std::move(diffs));
}

/// Monomials of a given weighted degree.
template <class F>
std::vector<Monomial> monomials_of_degree(const RingPtr<F>& ring, long degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    Monomial cur(ring->nvars());
    std::function<void(std::size_t, long)> rec = [&](std::size_t v, long rem) {
        if (v == ring->nvars()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        long w = ring->weights()[v];
        for (long e = 0; e * w <= rem; ++e) {
            cur[v] = static_cast<int>(e);
            rec(v + 1, rem - e * w);
        }
        cur[v] = 0;
    };
    rec(0, degree);
    return out;
}

namespace homdetail {

/// The degree-d piece of d_i as a scalar matrix over the field.
template <class F>
DenseMatrix<F> graded_piece(const FreeComplex<F>& c, std::size_t i, long degree,
                            const std::vector<std::vector<Monomial>>& src_bases,
                            const std::vector<std::vector<Monomial>>& tgt_bases) {
    const auto& ring = c.ring();
    const F& k = ring->field();
    std::size_t rows = 0, cols = 0;
    for (const auto& b : tgt_bases) rows += b.size();
    for (const auto& b : src_bases) cols += b.size();
    DenseMatrix<F> m(rows, cols, k.zero());
    const auto& d = c.differential(i);
    std::vector<std::size_t> row_off(tgt_bases.size() + 1, 0);
    for (std::size_t r = 0; r < tgt_bases.size(); ++r)
        row_off[r + 1] = row_off[r] + tgt_bases[r].size();
    std::vector<std::size_t> col_off(src_bases.size() + 1, 0);
    for (std::size_t s = 0; s < src_bases.size(); ++s)
        col_off[s + 1] = col_off[s] + src_bases[s].size();
    for (std::size_t r = 0; r < d.rows; ++r)
        for (std::size_t s = 0; s < d.cols; ++s) {
            const auto& e = d.at(r, s);
            if (e.is_zero()) continue;
            // multiplication by e: S_{deg+tw_src} -> S_{deg+tw_tgt}
            for (std::size_t b = 0; b < src_bases[s].size(); ++b) {
                Polynomial<F> img =
                    e * Polynomial<F>::term(ring, src_bases[s][b], k.one());
                for (const auto& t : img.terms()) {
                    auto it = std::find(tgt_bases[r].begin(), tgt_bases[r].end(), t.mono);
                    if (it == tgt_bases[r].end()) throw Error("graded piece misalignment");
                    std::size_t row = row_off[r] +
                                      static_cast<std::size_t>(it - tgt_bases[r].begin());
                    m.at(row, col_off[s] + b) = k.add(m.at(row, col_off[s] + b), t.coeff);
                }
            }
        }
    return m;
}

template <class F>
std::vector<std::vector<Monomial>> position_bases(const FreeComplex<F>& c, std::size_t i,
                                                  long degree) {
    std::vector<std::vector<Monomial>> bases;
    for (int tw : c.twists(i)) bases.push_back(monomials_of_degree(c.ring(), degree + tw));
    return bases;
}

} // namespace homdetail

/// dim_k H_position(C)_degree by exact linear algebra on graded pieces.
template <class F>
std::size_t homology_dimension(const FreeComplex<F>& c, std::size_t position, long degree) {
    if (position >= c.positions()) throw Error("position out of range");
    const F& k = c.ring()->field();
    auto here = homdetail::position_bases(c, position, degree);
    std::size_t dim_here = 0;
    for (const auto& b : here) dim_here += b.size();

    std::size_t rank_out = 0;
    if (position >= 1) {
        auto below = homdetail::position_bases(c, position - 1, degree);
        auto m = homdetail::graded_piece(c, position, degree, here, below);
        rank_out = matrix_rank_field(m, k);
    }
    std::size_t rank_in = 0;
    if (position + 1 < c.positions()) {
        auto above = homdetail::position_bases(c, position + 1, degree);
        auto m = homdetail::graded_piece(c, position + 1, degree, above, here);
        rank_in = matrix_rank_field(m, k);
    }
    return dim_here - rank_out - rank_in;
}

/// Chain map f : source -> target, one matrix per position.
template <class F>
struct ChainMap {
    FreeComplex<F> source;
    FreeComplex<F> target;
    std::vector<PolyMatrix<F>> maps; // maps[i] : source M_i -> target M_i
};

/// True iff every square commutes: d^target srcmap = tgtmap d^source.
template <class F>
bool check_chain_map(const ChainMap<F>& m) {
    if (m.source.positions() != m.target.positions() ||
        m.maps.size() != m.source.positions())
        throw Error("chain map shape mismatch");
    for (std::size_t i = 0; i < m.maps.size(); ++i)
        if (m.maps[i].rows != m.target.rank(i) || m.maps[i].cols != m.source.rank(i))
            throw Error("chain map shape mismatch at position " + std::to_string(i));
    const auto& ring = m.source.ring();
    for (std::size_t i = 1; i < m.source.positions(); ++i) {
        auto lhs = m.target.differential(i).mul(m.maps[i], ring);
        auto rhs = m.maps[i - 1].mul(m.source.differential(i), ring);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

template <class F>
ChainMap<F> compose(const ChainMap<F>& second, const ChainMap<F>& first) {
    if (second.source.positions() != first.target.positions())
        throw Error("chain map composition shape mismatch");
    std::vector<PolyMatrix<F>> maps;
    for (std::size_t i = 0; i < first.maps.size(); ++i)
        maps.push_back(second.maps[i].mul(first.maps[i], first.source.ring()));
    return {first.source, second.target, std::move(maps)};
}

/// Regular-sequence test on a Cohen-Macaulay graded quotient: the
/// projective dimension must drop by exactly the number of forms
/// (codimension criterion).
template <class F>
bool is_regular_sequence(const std::vector<Polynomial<F>>& gens, const Ideal<F>& ambient) {
    if (gens.empty()) return true;
    for (const auto& g : gens) {
        if (g.is_zero()) return false;
        if (!g.is_homogeneous()) throw Error("non-homogeneous generator: " + g.str());
        if (g.is_constant()) return false; // units cannot be regular on a graded quotient
    }
    auto before = hilbert_data(ambient);
    std::vector<Polynomial<F>> all = ambient.gens();
    for (const auto& g : gens) all.push_back(g);
    auto after = hilbert_data(Ideal<F>(gens[0].ring(), std::move(all)));
    return after.proj_dim == before.proj_dim - static_cast<int>(gens.size());
}

} // namespace cayley

#endif
