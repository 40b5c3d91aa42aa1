#ifndef CAYLEY_LINALG_HPP
#define CAYLEY_LINALG_HPP

#include <optional>
#include <vector>

#include "cayley/polynomial.hpp"

namespace cayley {

/// Row-major dense matrix over a coefficient field.
template <class F>
struct DenseMatrix {
    using Elem = typename F::Elem;
    std::size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c, Elem fill)
        : rows(r), cols(c), a(r * c, fill) {}

    Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Elem& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Exact rank by Gaussian elimination over the field.
template <class F>
std::size_t rank_gauss(DenseMatrix<F> m, const F& k) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && k.is_zero(m.at(pivot, col))) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != rank)
            for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        auto inv = k.inv(m.at(rank, col));
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            if (k.is_zero(m.at(r, col))) continue;
            auto f = k.mul(m.at(r, col), inv);
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) = k.sub(m.at(r, c), k.mul(f, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

/// Fraction-free rank over the rationals: rows are scaled to integers and
/// eliminated by Bareiss, so no rational arithmetic happens in the loop.
inline std::size_t rank_fraction_free(const DenseMatrix<Rationals>& m) {
    std::size_t rows = m.rows, cols = m.cols;
    std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class scale = 1;
        for (std::size_t c = 0; c < cols; ++c)
            scale = lcm(scale, m.at(r, c).get_den());
        for (std::size_t c = 0; c < cols; ++c) {
            mpq_class v = m.at(r, c) * scale;
            z[r][c] = v.get_num();
        }
    }
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && z[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) std::swap(z[pivot], z[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                mpz_class t = z[rank][col] * z[r][c] - z[r][col] * z[rank][c];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                z[r][c] = q;
            }
            z[r][col] = 0;
        }
        prev = z[rank][col];
        ++rank;
    }
    return rank;
}

template <class F>
std::size_t matrix_rank_field(const DenseMatrix<F>& m, const F& k) {
    return rank_gauss(m, k);
}
inline std::size_t matrix_rank_field(const DenseMatrix<Rationals>& m, const Rationals&) {
    return rank_fraction_free(m);
}

/// Rank of a matrix of constant polynomials. Throws on non-constant entries.
template <class F>
std::size_t matrix_rank(const std::vector<std::vector<Polynomial<F>>>& mat) {
    if (mat.empty()) return 0;
    const auto ring = mat[0][0].ring();
    const F& k = ring->field();
    DenseMatrix<F> m(mat.size(), mat[0].size(), k.zero());
    for (std::size_t r = 0; r < mat.size(); ++r) {
        if (mat[r].size() != m.cols) throw Error("ragged matrix");
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (!mat[r][c].is_constant())
                throw Error("non-constant entry at (" + std::to_string(r) + "," +
                            std::to_string(c) + "): " + mat[r][c].str());
            m.at(r, c) = mat[r][c].constant_value();
        }
    }
    return matrix_rank_field(m, k);
}

/// Incremental echelon basis that reports linear dependencies: feeding a
/// vector either extends the basis (returns nullopt) or returns the
/// coefficients expressing it in terms of the vectors fed before it.
/// Invariant: rows_[i] = sum_j history_[i][j] * input_j, pivot entry 1.
template <class F>
class DependencyFinder {
public:
    using Elem = typename F::Elem;

    DependencyFinder(std::size_t dim, const F& k) : dim_(dim), k_(k) {}

    std::optional<std::vector<Elem>> add(std::vector<Elem> v) {
        if (v.size() != dim_) throw Error("vector dimension mismatch");
        std::vector<Elem> combo(count_, k_.zero());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Elem f = v[pivots_[i]];
            if (k_.is_zero(f)) continue;
            for (std::size_t c = 0; c < dim_; ++c)
                v[c] = k_.sub(v[c], k_.mul(f, rows_[i][c]));
            for (std::size_t j = 0; j < history_[i].size(); ++j)
                combo[j] = k_.add(combo[j], k_.mul(f, history_[i][j]));
        }
        std::size_t pivot = dim_;
        for (std::size_t c = 0; c < dim_; ++c)
            if (!k_.is_zero(v[c])) { pivot = c; break; }
        if (pivot == dim_) {
            ++count_;
            return combo; // v = sum combo[j] * input_j
        }
        // new echelon row: inv * (v_orig - sum combo_j input_j)
        Elem inv = k_.inv(v[pivot]);
        for (std::size_t c = 0; c < dim_; ++c) v[c] = k_.mul(v[c], inv);
        std::vector<Elem> h(count_ + 1, k_.zero());
        for (std::size_t j = 0; j < count_; ++j) h[j] = k_.neg(k_.mul(inv, combo[j]));
        h[count_] = inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
        history_.push_back(std::move(h));
        ++count_;
        return std::nullopt;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t dim_;
    F k_;
    std::size_t count_ = 0;                  // vectors fed so far
    std::vector<std::vector<Elem>> rows_;    // echelon rows, pivot-normalized
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<Elem>> history_;
};

} // namespace cayley

#endif
