#ifndef CAYLEY_GRASSMANN_HPP
#define CAYLEY_GRASSMANN_HPP

#include <map>
#include <set>

#include "cayley/ideal.hpp"

namespace cayley {

/// Plücker coordinate setup for G_{d,m}: one variable p_I per sorted
/// d-tuple I of {1..m}, tuples enumerated in ascending lexicographic
/// order (which is also the ring's variable order). Supports d in {2,3}
/// with single-digit indices.
template <class F>
class GrassmannContext {
public:
    GrassmannContext(int d, int m, F field) : d_(d), m_(m) {
        if (d < 2 || d >= m) throw Error("require 2 <= d < m");
        if (m > 9) throw Error("indices above 9 are not supported");
        std::vector<int> cur;
        build_tuples(cur, 1);
        std::vector<std::string> names;
        names.reserve(tuples_.size());
        for (const auto& t : tuples_) {
            std::string n = "p";
            for (int i : t) n += static_cast<char>('0' + i);
            names.push_back(std::move(n));
        }
        ring_ = PolyRing<F>::make(std::move(names), std::move(field));
        for (std::size_t i = 0; i < tuples_.size(); ++i) index_.emplace(tuples_[i], i);
    }

    int d() const { return d_; }
    int m() const { return m_; }
    /// relative dimension d(m-d)
    int n() const { return d_ * (m_ - d_); }
    /// ambient projective dimension: variable count minus one
    int N() const { return static_cast<int>(ring_->nvars()) - 1; }
    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<std::vector<int>>& tuples() const { return tuples_; }

    std::size_t tuple_index(const std::vector<int>& sorted_tuple) const {
        auto it = index_.find(sorted_tuple);
        if (it == index_.end()) throw Error("no such index tuple");
        return it->second;
    }

    Polynomial<F> var(const std::vector<int>& sorted_tuple) const {
        return Polynomial<F>::variable(ring_, tuple_index(sorted_tuple));
    }

    /// p with arbitrary index order: sorts, tracks the permutation sign,
    /// vanishes on repeated indices. Returns (sign, index) with sign 0
    /// for the zero case.
    std::pair<int, std::size_t> signed_index(std::vector<int> tuple) const {
        int sign = 1;
        for (std::size_t i = 0; i < tuple.size(); ++i)
            for (std::size_t j = i + 1; j < tuple.size(); ++j) {
                if (tuple[i] == tuple[j]) return {0, 0};
                if (tuple[i] > tuple[j]) {
                    std::swap(tuple[i], tuple[j]);
                    sign = -sign;
                }
            }
        return {sign, tuple_index(tuple)};
    }

private:
    void build_tuples(std::vector<int>& cur, int next) {
        if (static_cast<int>(cur.size()) == d_) {
            tuples_.push_back(cur);
            return;
        }
        for (int v = next; v <= m_; ++v) {
            cur.push_back(v);
            build_tuples(cur, v + 1);
            cur.pop_back();
        }
    }

    int d_, m_;
    RingPtr<F> ring_;
    std::vector<std::vector<int>> tuples_;
    std::map<std::vector<int>, std::size_t> index_;
};

/// Plücker ideal of the embedding G_{d,m} -> P^N. For d=2 the three-term
/// quadrics p_ij p_kl - p_ik p_jl + p_il p_jk over all i<j<k<l; for d=3
/// the quadratic shuffle relations, deduplicated and made monic.
template <class F>
Ideal<F> pluecker_ideal(const GrassmannContext<F>& ctx) {
    const auto& ring = ctx.ring();
    const F& k = ring->field();
    std::vector<Polynomial<F>> gens;
    if (ctx.d() == 2) {
        int m = ctx.m();
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                for (int kk = j + 1; kk <= m; ++kk)
                    for (int l = kk + 1; l <= m; ++l) {
                        auto q = ctx.var({i, j}) * ctx.var({kk, l}) -
                                 ctx.var({i, kk}) * ctx.var({j, l}) +
                                 ctx.var({i, l}) * ctx.var({j, kk});
                        gens.push_back(std::move(q));
                    }
    } else if (ctx.d() == 3) {
        int m = ctx.m();
        // shuffle relations: for a 2-tuple a and 4-tuple b,
        //   sum_r (-1)^r [a, b_r] [b \ b_r] = 0
        std::vector<std::vector<int>> twos, fours;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) twos.push_back({i, j});
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                for (int kk = j + 1; kk <= m; ++kk)
                    for (int l = kk + 1; l <= m; ++l) fours.push_back({i, j, kk, l});
        std::set<std::string> seen;
        for (const auto& a : twos)
            for (const auto& b : fours) {
                Polynomial<F> rel = Polynomial<F>::zero(ring);
                for (std::size_t r = 0; r < b.size(); ++r) {
                    auto [sgn1, idx1] = ctx.signed_index({a[0], a[1], b[r]});
                    if (sgn1 == 0) continue;
                    std::vector<int> rest;
                    for (std::size_t t = 0; t < b.size(); ++t)
                        if (t != r) rest.push_back(b[t]);
                    auto term = Polynomial<F>::variable(ring, idx1) *
                                Polynomial<F>::variable(ring, ctx.tuple_index(rest));
                    int sgn = sgn1 * ((r % 2 == 0) ? 1 : -1);
                    rel = (sgn > 0) ? rel + term : rel - term;
                }
                if (rel.is_zero()) continue;
                rel = rel.scaled(k.inv(rel.leading_term().coeff));
                if (seen.insert(rel.str()).second) gens.push_back(std::move(rel));
            }
        std::sort(gens.begin(), gens.end(),
                  [](const Polynomial<F>& x, const Polynomial<F>& y) { return x.str() < y.str(); });
    } else {
        throw Error("pluecker ideal implemented for d in {2,3} only");
    }
    return Ideal<F>(ring, std::move(gens));
}

/// l_s: the sum of all Plücker variables whose index tuple sums to s.
template <class F>
Polynomial<F> hyperplane_form(const GrassmannContext<F>& ctx, int s) {
    int lo = ctx.d() * (ctx.d() + 1) / 2;
    int hi = 0;
    for (int i = ctx.m() - ctx.d() + 1; i <= ctx.m(); ++i) hi += i;
    if (s < lo || s > hi)
        throw Error("index sum " + std::to_string(s) + " out of range [" +
                     std::to_string(lo) + "," + std::to_string(hi) + "]");
    Polynomial<F> acc = Polynomial<F>::zero(ctx.ring());
    for (std::size_t i = 0; i < ctx.tuples().size(); ++i) {
        int sum = 0;
        for (int v : ctx.tuples()[i]) sum += v;
        if (sum == s) acc = acc + Polynomial<F>::variable(ctx.ring(), i);
    }
    return acc;
}

/// The linear forms cutting V: l_3 .. l_{2m-1} with l_{m+1} omitted (d=2).
template <class F>
Ideal<F> v_ideal(const GrassmannContext<F>& ctx) {
    if (ctx.d() != 2) throw Error("V is defined for d = 2 only");
    std::vector<Polynomial<F>> gens;
    for (int s = 3; s <= 2 * ctx.m() - 1; ++s) {
        if (s == ctx.m() + 1) continue;
        gens.push_back(hyperplane_form(ctx, s));
    }
    return Ideal<F>(ctx.ring(), std::move(gens));
}

enum class SchubertVariant { standard, opposite, richardson };

/// Schubert/opposite-Schubert/Richardson ideals in G_{2,m}. The standard
/// ideal adds every p_ab with (a,b) not componentwise <= (i,j); the
/// opposite one is its image under the index reversal a -> m+1-a.
template <class F>
Ideal<F> schubert_ideal(const GrassmannContext<F>& ctx, int i, int j, SchubertVariant variant) {
    if (ctx.d() != 2) throw Error("schubert ideals implemented for d = 2 only");
    if (!(1 <= i && i < j && j <= ctx.m())) throw Error("invalid schubert pair");
    int m = ctx.m();
    auto standard_cut = [&](int a, int b) { return !(a <= i && b <= j); };
    auto opposite_cut = [&](int a, int b) {
        int ra = m + 1 - b, rb = m + 1 - a;
        return !(ra <= i && rb <= j);
    };
    std::vector<Polynomial<F>> gens = pluecker_ideal(ctx).gens();
    for (std::size_t t = 0; t < ctx.tuples().size(); ++t) {
        int a = ctx.tuples()[t][0], b = ctx.tuples()[t][1];
        bool cut = false;
        switch (variant) {
        case SchubertVariant::standard: cut = standard_cut(a, b); break;
        case SchubertVariant::opposite: cut = opposite_cut(a, b); break;
        case SchubertVariant::richardson: cut = standard_cut(a, b) || opposite_cut(a, b); break;
        }
        if (cut) gens.push_back(Polynomial<F>::variable(ctx.ring(), t));
    }
    return Ideal<F>(ctx.ring(), std::move(gens));
}

/// Chart ring and ideal of X ∩ V in the chart p_{1,m} = 1: variables
/// q_ab for every pair except (1,m); generators are the dehomogenized
/// Plücker relations together with the dehomogenized V forms.
template <class F>
struct AffineChart {
    RingPtr<F> ring;                  // q variables
    Ideal<F> ideal;                   // the ideal 𝔞
    std::vector<std::string> q_names; // aligned with the p-tuples minus (1,m)
};

template <class F>
AffineChart<F> affine_chart_ideal(const GrassmannContext<F>& ctx) {
    if (ctx.d() != 2) throw Error("affine chart implemented for d = 2 only");
    const auto& ring = ctx.ring();
    const F& k = ring->field();
    std::vector<int> unit_tuple = {1, ctx.m()};
    std::size_t unit_idx = ctx.tuple_index(unit_tuple);
    std::vector<std::string> qnames;
    for (std::size_t t = 0; t < ctx.tuples().size(); ++t) {
        if (t == unit_idx) continue;
        std::string n = "q";
        for (int v : ctx.tuples()[t]) n += static_cast<char>('0' + v);
        qnames.push_back(std::move(n));
    }
    auto chart = PolyRing<F>::make(qnames, k);
    std::map<std::string, Polynomial<F>> assign;
    std::size_t qi = 0;
    for (std::size_t t = 0; t < ctx.tuples().size(); ++t) {
        if (t == unit_idx) {
            assign.emplace(ring->var_name(t), Polynomial<F>::constant(chart, k.one()));
        } else {
            assign.emplace(ring->var_name(t), Polynomial<F>::variable(chart, qi++));
        }
    }
    std::vector<Polynomial<F>> gens;
    for (const auto& g : pluecker_ideal(ctx).gens()) {
        auto img = substitute(g, assign, chart);
        if (!img.is_zero()) gens.push_back(std::move(img));
    }
    for (const auto& g : v_ideal(ctx).gens()) {
        auto img = substitute(g, assign, chart);
        if (!img.is_zero()) gens.push_back(std::move(img));
    }
    return {chart, Ideal<F>(chart, std::move(gens)), qnames};
}

/// The complement automorphism of G_{2,4}: p_ij -> p_kl with
/// {i,j,k,l} = {1,2,3,4}.
template <class F>
Polynomial<F> tau_apply(const GrassmannContext<F>& ctx, const Polynomial<F>& p) {
    if (ctx.d() != 2 || ctx.m() != 4) throw Error("tau is defined for G_{2,4} only");
    std::map<std::string, Polynomial<F>> assign;
    for (std::size_t t = 0; t < ctx.tuples().size(); ++t) {
        std::vector<int> comp;
        for (int v = 1; v <= 4; ++v)
            if (v != ctx.tuples()[t][0] && v != ctx.tuples()[t][1]) comp.push_back(v);
        assign.emplace(ctx.ring()->var_name(t), ctx.var(comp));
    }
    return substitute(p, assign, ctx.ring());
}

/// The ten linear forms l_6..l_15 on G_{3,6}.
template <class F>
std::vector<Polynomial<F>> g36_forms(const GrassmannContext<F>& ctx) {
    if (ctx.d() != 3 || ctx.m() != 6) throw Error("these forms are defined for G_{3,6} only");
    std::vector<Polynomial<F>> forms;
    for (int s = 6; s <= 15; ++s) forms.push_back(hyperplane_form(ctx, s));
    return forms;
}

/// Plücker vector of a d x m matrix: the maximal minor per index tuple.
/// Used by the minor-vanishing tests.
template <class F>
std::vector<typename F::Elem> minor_vector(const GrassmannContext<F>& ctx,
                                           const std::vector<std::vector<typename F::Elem>>& mat) {
    const F& k = ctx.ring()->field();
    int d = ctx.d();
    if (static_cast<int>(mat.size()) != d) throw Error("matrix must have d rows");
    std::vector<typename F::Elem> out;
    out.reserve(ctx.tuples().size());
    for (const auto& t : ctx.tuples()) {
        if (d == 2) {
            auto det = k.sub(k.mul(mat[0][t[0] - 1], mat[1][t[1] - 1]),
                             k.mul(mat[0][t[1] - 1], mat[1][t[0] - 1]));
            out.push_back(det);
        } else {
            // 3x3 Laplace
            auto m00 = mat[0][t[0] - 1], m01 = mat[0][t[1] - 1], m02 = mat[0][t[2] - 1];
            auto m10 = mat[1][t[0] - 1], m11 = mat[1][t[1] - 1], m12 = mat[1][t[2] - 1];
            auto m20 = mat[2][t[0] - 1], m21 = mat[2][t[1] - 1], m22 = mat[2][t[2] - 1];
            auto det = k.sub(k.mul(m00, k.sub(k.mul(m11, m22), k.mul(m12, m21))),
                             k.mul(m01, k.sub(k.mul(m10, m22), k.mul(m12, m20))));
            det = k.add(det, k.mul(m02, k.sub(k.mul(m10, m21), k.mul(m11, m20))));
            out.push_back(det);
        }
    }
    return out;
}

} // namespace cayley

#endif
