#ifndef CAYLEY_GROEBNER_HPP
#define CAYLEY_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "cayley/polynomial.hpp"

namespace cayley {

/// Reduced Groebner basis: elements are monic, auto-reduced, sorted by
/// ascending leading monomial under `order`. Unique per (ideal, order).
template <class F>
struct GroebnerBasis {
    RingPtr<F> ring;
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<Polynomial<F>> elements;

    bool is_unit_ideal() const {
        return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
    }
};

namespace gbdetail {

template <class F>
using Terms = std::vector<Term<F>>;

template <class F>
Terms<F> sorted_terms(const Polynomial<F>& p, const MonomialOrder& ord,
                      const std::vector<int>& w) {
    Terms<F> t = p.terms();
    std::sort(t.begin(), t.end(), [&](const Term<F>& a, const Term<F>& b) {
        return ord.compare(a.mono, b.mono, w) > 0;
    });
    return t;
}

/// a - c * m * b, both inputs sorted descending under ord.
template <class F>
Terms<F> sub_scaled(const Terms<F>& a, const typename F::Elem& c, const Monomial& m,
                    const Terms<F>& b, const MonomialOrder& ord, const std::vector<int>& w,
                    const F& k) {
    Terms<F> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Monomial bm = b[j].mono * m;
        int cp = ord.compare(a[i].mono, bm, w);
        if (cp > 0) {
            r.push_back(a[i++]);
        } else if (cp < 0) {
            r.push_back({std::move(bm), k.neg(k.mul(c, b[j].coeff))});
            ++j;
        } else {
            auto s = k.sub(a[i].coeff, k.mul(c, b[j].coeff));
            if (!k.is_zero(s)) r.push_back({a[i].mono, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j)
        r.push_back({b[j].mono * m, k.neg(k.mul(c, b[j].coeff))});
    return r;
}

template <class F>
struct BasisEntry {
    Terms<F> t; // monic, sorted descending under the active order
    long sugar = 0;
    const Monomial& lm() const { return t[0].mono; }
};

/// Full normal form with sugar tracking.
template <class F>
std::pair<Terms<F>, long> reduce_full(Terms<F> h, long sugar,
                                      const std::vector<BasisEntry<F>>& basis,
                                      const MonomialOrder& ord, const std::vector<int>& w,
                                      const F& k) {
    Terms<F> remainder;
    std::size_t head = 0;
    while (head < h.size()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (!g.lm().divides(h[head].mono)) continue;
            Monomial m = h[head].mono.divide(g.lm());
            sugar = std::max(sugar, g.sugar + m.weighted_degree(w));
            Terms<F> tail(h.begin() + static_cast<std::ptrdiff_t>(head), h.end());
            h = sub_scaled(tail, h[head].coeff, m, g.t, ord, w, k);
            head = 0;
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(h[head]);
            ++head;
        }
    }
    return {std::move(remainder), sugar};
}

} // namespace gbdetail

/// Remainder of p on division by `basis` under `order`: no term of the
/// result is divisible by any basis leading monomial, and p - result lies
/// in the ideal generated by the basis.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& p, const std::vector<Polynomial<F>>& basis,
                          const MonomialOrder& order = MonomialOrder::grevlex()) {
    const auto& ring = p.ring();
    const auto& w = ring->weights();
    const F& k = ring->field();
    std::vector<gbdetail::BasisEntry<F>> b;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        if (!same_ring(ring, g.ring())) throw Error("ring mismatch");
        auto t = gbdetail::sorted_terms(g, order, w);
        // scale to monic so the reduction step is a plain multiply
        auto inv = k.inv(t[0].coeff);
        for (auto& tm : t) tm.coeff = k.mul(tm.coeff, inv);
        b.push_back({std::move(t), 0});
    }
    auto h = gbdetail::sorted_terms(p, order, w);
    auto [r, sugar] = gbdetail::reduce_full(std::move(h), 0, b, order, w, k);
    (void)sugar;
    return Polynomial<F>::from_terms(ring, std::move(r));
}

/// Buchberger with sugar pair selection and the Gebauer-Moeller criteria.
/// Returns the unique reduced Groebner basis. Deterministic: pair
/// processing depends only on the input generators and the order.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens,
                            const MonomialOrder& order = MonomialOrder::grevlex()) {
    using namespace gbdetail;
    if (gens.empty()) return {nullptr, order, {}};
    RingPtr<F> ring;
    for (const auto& g : gens)
        if (!g.is_zero()) { ring = g.ring(); break; }
    if (!ring) return {gens[0].ring(), order, {}};
    const auto& w = ring->weights();
    const F& k = ring->field();

    std::vector<BasisEntry<F>> basis;
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        long sugar;
    };
    std::vector<Pair> pairs;

    auto pair_sugar = [&](std::size_t i, std::size_t j, const Monomial& l) {
        long si = basis[i].sugar + l.divide(basis[i].lm()).weighted_degree(w);
        long sj = basis[j].sugar + l.divide(basis[j].lm()).weighted_degree(w);
        return std::max(si, sj);
    };

    // Gebauer-Moeller update on appending basis element t
    auto update_pairs = [&](std::size_t t) {
        std::vector<Pair> fresh;
        for (std::size_t i = 0; i < t; ++i) {
            Monomial l = basis[i].lm().lcm(basis[t].lm());
            fresh.push_back({i, t, std::move(l), 0});
        }
        // M criterion: drop (i,t) if lcm(j,t) strictly divides lcm(i,t)
        std::vector<bool> keep(fresh.size(), true);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || !keep[a] || !keep[b]) continue;
                if (fresh[b].lcm.divides(fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm) {
                    keep[a] = false;
                }
            }
        // F criterion: one pair per lcm value (keep smallest i)
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = a + 1; b < fresh.size(); ++b) {
                if (!keep[a] || !keep[b]) continue;
                if (fresh[a].lcm == fresh[b].lcm) keep[b] = false;
            }
        // T (coprimality) criterion
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (!keep[a]) continue;
            if (basis[fresh[a].i].lm().coprime(basis[t].lm())) keep[a] = false;
        }
        // B criterion on surviving old pairs
        std::vector<Pair> updated;
        for (auto& p : pairs) {
            bool drop = basis[t].lm().divides(p.lcm) &&
                        basis[p.i].lm().lcm(basis[t].lm()) != p.lcm &&
                        basis[p.j].lm().lcm(basis[t].lm()) != p.lcm;
            if (!drop) updated.push_back(std::move(p));
        }
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (!keep[a]) continue;
            fresh[a].sugar = pair_sugar(fresh[a].i, fresh[a].j, fresh[a].lcm);
            updated.push_back(std::move(fresh[a]));
        }
        pairs = std::move(updated);
    };

    auto append_basis = [&](Terms<F> t, long sugar) {
        auto inv = k.inv(t[0].coeff);
        for (auto& tm : t) tm.coeff = k.mul(tm.coeff, inv);
        basis.push_back({std::move(t), sugar});
        update_pairs(basis.size() - 1);
    };

    // seed with nonzero generators, in input order
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!same_ring(ring, g.ring())) throw Error("ring mismatch");
        auto t = sorted_terms(g, order, w);
        long sugar = g.degree();
        append_basis(std::move(t), sugar);
    }

    while (!pairs.empty()) {
        // sugar selection; ties by ascending lcm, then indices
        std::size_t best = 0;
        for (std::size_t a = 1; a < pairs.size(); ++a) {
            const Pair& x = pairs[a];
            const Pair& y = pairs[best];
            int c;
            if (x.sugar != y.sugar)
                c = x.sugar < y.sugar ? -1 : 1;
            else if ((c = order.compare(x.lcm, y.lcm, w)) == 0)
                c = (x.i != y.i) ? (x.i < y.i ? -1 : 1) : (x.j < y.j ? -1 : (x.j > y.j ? 1 : 0));
            if (c < 0) best = a;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        const auto& gi = basis[p.i];
        const auto& gj = basis[p.j];
        Monomial mi = p.lcm.divide(gi.lm());
        Monomial mj = p.lcm.divide(gj.lm());
        // both monic: s = mi*gi - mj*gj
        Terms<F> scaled;
        scaled.reserve(gi.t.size());
        for (const auto& t : gi.t) scaled.push_back({t.mono * mi, t.coeff});
        Terms<F> s = sub_scaled(scaled, k.one(), mj, gj.t, order, w, k);
        if (s.empty()) continue;
        auto [r, sugar] = reduce_full(std::move(s), p.sugar, basis, order, w, k);
        if (!r.empty()) append_basis(std::move(r), sugar);
    }

    // minimalize: drop entries whose lm is divisible by another kept lm
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int c = order.compare(basis[a].lm(), basis[b].lm(), w);
        return c != 0 ? c < 0 : a < b;
    });
    std::vector<std::size_t> kept;
    for (std::size_t i : idx) {
        bool divisible = false;
        for (std::size_t kpt : kept)
            if (basis[kpt].lm().divides(basis[i].lm())) { divisible = true; break; }
        if (!divisible) kept.push_back(i);
    }

    // inter-reduce tails
    std::vector<Polynomial<F>> out;
    std::vector<BasisEntry<F>> minimal;
    for (std::size_t i : kept) minimal.push_back(basis[i]);
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<BasisEntry<F>> others;
        for (std::size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.push_back(minimal[b]);
        auto [r, sugar] = reduce_full(minimal[a].t, minimal[a].sugar, others, order, w, k);
        (void)sugar;
        auto inv = k.inv(r[0].coeff);
        for (auto& tm : r) tm.coeff = k.mul(tm.coeff, inv);
        out.push_back(Polynomial<F>::from_terms(ring, r));
        minimal[a].t = std::move(r);
    }
    return {ring, order, std::move(out)};
}

/// Ideal membership through a grevlex basis.
template <class F>
bool ideal_member(const Polynomial<F>& p, const std::vector<Polynomial<F>>& gens) {
    if (p.is_zero()) return true;
    auto gb = buchberger(gens, MonomialOrder::grevlex());
    return normal_form(p, gb.elements, gb.order).is_zero();
}

template <class F>
bool ideal_member(const Polynomial<F>& p, const GroebnerBasis<F>& gb) {
    if (p.is_zero()) return true;
    return normal_form(p, gb.elements, gb.order).is_zero();
}

/// S-polynomial (used by tests asserting the Buchberger criterion).
template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g,
                           const MonomialOrder& order = MonomialOrder::grevlex()) {
    if (f.is_zero() || g.is_zero()) throw Error("s-polynomial of zero");
    const auto& ring = f.ring();
    const auto& w = ring->weights();
    const F& k = ring->field();
    auto ft = gbdetail::sorted_terms(f, order, w);
    auto gt = gbdetail::sorted_terms(g, order, w);
    Monomial l = ft[0].mono.lcm(gt[0].mono);
    Monomial mf = l.divide(ft[0].mono);
    Monomial mg = l.divide(gt[0].mono);
    gbdetail::Terms<F> scaled;
    auto inv = k.inv(ft[0].coeff);
    for (const auto& t : ft) scaled.push_back({t.mono * mf, k.mul(inv, t.coeff)});
    auto s = gbdetail::sub_scaled(scaled, k.inv(gt[0].coeff), mg, gt, order, w, k);
    return Polynomial<F>::from_terms(ring, std::move(s));
}

} // namespace cayley

#endif
