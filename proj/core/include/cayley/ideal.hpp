#ifndef CAYLEY_IDEAL_HPP
#define CAYLEY_IDEAL_HPP

#include <map>
#include <mutex>
#include <set>

#include "cayley/groebner.hpp"
#include "cayley/parse.hpp"

namespace cayley {

/// Ideal in a polynomial ring. Immutable; Groebner bases are computed on
/// demand and cached per order (the cache is shared across copies and
/// guarded by a mutex, so ideals can be used from concurrent tasks).
template <class F>
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens)
        : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
        gens_.reserve(gens.size());
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            if (!same_ring(ring_, g.ring())) throw Error("ring mismatch");
            gens_.push_back(std::move(g));
        }
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Polynomial<F>>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    const GroebnerBasis<F>& groebner(const MonomialOrder& order = MonomialOrder::grevlex()) const {
        auto key = std::make_pair(static_cast<int>(order.kind()), order.elim_count());
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->bases.find(key);
        if (it == cache_->bases.end()) {
            auto gb = buchberger(gens_, order);
            if (!gb.ring) gb.ring = ring_;
            it = cache_->bases.emplace(key, std::move(gb)).first;
        }
        return it->second;
    }

    bool contains(const Polynomial<F>& p) const {
        if (p.is_zero()) return true;
        if (gens_.empty()) return false;
        return ideal_member(p, groebner());
    }

    bool is_unit_ideal() const {
        return !gens_.empty() && groebner().is_unit_ideal();
    }

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::pair<int, int>, GroebnerBasis<F>> bases;
    };

    RingPtr<F> ring_;
    std::vector<Polynomial<F>> gens_;
    std::shared_ptr<Cache> cache_;
};

/// Equality of ideals through their unique reduced bases.
template <class F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b) {
    if (!same_ring(a.ring(), b.ring())) return false;
    return a.groebner().elements == b.groebner().elements;
}

// --- ring plumbing ------------------------------------------------------

/// Move a polynomial to another ring along an index map (src var i ->
/// target var index_map[i]). Pure exponent relabelling.
template <class F>
Polynomial<F> transport(const Polynomial<F>& p, const RingPtr<F>& target,
                        const std::vector<std::size_t>& index_map) {
    std::vector<Term<F>> ts;
    ts.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < index_map.size(); ++i) {
            if (t.mono[i] == 0) continue;
            m[index_map[i]] = t.mono[i];
        }
        ts.push_back({std::move(m), t.coeff});
    }
    return Polynomial<F>::from_terms(target, std::move(ts));
}

/// A variable name not used by the ring.
template <class F>
std::string fresh_var_name(const PolyRing<F>& ring, const std::string& stem = "t") {
    if (!ring.index_of(stem)) return stem;
    for (int i = 0;; ++i) {
        std::string name = stem + std::to_string(i);
        if (!ring.index_of(name)) return name;
    }
}

// --- ideal operations ----------------------------------------------------

/// A ∩ B, by eliminating a fresh scalar t from t·A + (1-t)·B.
template <class F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b) {
    const auto& ring = a.ring();
    if (!same_ring(ring, b.ring())) throw Error("ring mismatch");
    if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal<F>(ring, {});

    std::string tname = fresh_var_name(*ring);
    std::vector<std::string> vars = {tname};
    std::vector<int> weights = {1};
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        vars.push_back(ring->var_name(i));
        weights.push_back(ring->weights()[i]);
    }
    auto ext = PolyRing<F>::make(vars, ring->field(), weights);
    std::vector<std::size_t> up(ring->nvars());
    for (std::size_t i = 0; i < up.size(); ++i) up[i] = i + 1;

    auto t = Polynomial<F>::variable(ext, std::size_t{0});
    auto one = Polynomial<F>::constant(ext, ext->field().one());
    std::vector<Polynomial<F>> gens;
    for (const auto& g : a.gens()) gens.push_back(t * transport(g, ext, up));
    for (const auto& g : b.gens()) gens.push_back((one - t) * transport(g, ext, up));

    auto gb = buchberger(gens, MonomialOrder::block(1));
    std::vector<std::size_t> down(ext->nvars(), 0);
    for (std::size_t i = 1; i < ext->nvars(); ++i) down[i] = i - 1;
    std::vector<Polynomial<F>> kept;
    for (const auto& g : gb.elements)
        if (!g.depends_on(0)) kept.push_back(transport(g, ring, down));
    return Ideal<F>(ring, std::move(kept));
}

/// Exact division q = g / f; throws if f does not divide g.
template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& g, const Polynomial<F>& f) {
    if (f.is_zero()) throw Error("division by the zero polynomial");
    const auto& ring = g.ring();
    const F& k = ring->field();
    Polynomial<F> rest = g;
    Polynomial<F> q = Polynomial<F>::zero(ring);
    while (!rest.is_zero()) {
        const auto& lt = rest.leading_term();
        const auto& lf = f.leading_term();
        if (!lf.mono.divides(lt.mono)) throw Error("inexact polynomial division");
        auto c = k.div(lt.coeff, lf.coeff);
        Monomial m = lt.mono.divide(lf.mono);
        q = q + Polynomial<F>::term(ring, m, c);
        rest = rest.add_scaled(k.neg(c), m, f);
    }
    return q;
}

/// I : f = (I ∩ (f)) / f.
template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& ideal, const Polynomial<F>& f) {
    if (f.is_zero()) throw Error("quotient by zero polynomial");
    const auto& ring = ideal.ring();
    if (!same_ring(ring, f.ring())) throw Error("ring mismatch");
    if (f.is_constant()) return ideal; // unit
    Ideal<F> principal(ring, {f});
    Ideal<F> inter = intersect(ideal, principal);
    std::vector<Polynomial<F>> quot;
    for (const auto& g : inter.gens()) quot.push_back(divide_exact(g, f));
    return Ideal<F>(ring, std::move(quot));
}

/// I : f^∞ by the quotient-stabilization loop.
template <class F>
Ideal<F> saturate_by_element(const Ideal<F>& ideal, const Polynomial<F>& f) {
    Ideal<F> cur = ideal;
    for (;;) {
        Ideal<F> next = ideal_quotient(cur, f);
        if (ideal_equal(cur, next)) return cur;
        cur = std::move(next);
    }
}

/// I : J^∞ = intersection over generators g of J of I : g^∞.
template <class F>
Ideal<F> saturate(const Ideal<F>& ideal, const Ideal<F>& by) {
    if (!same_ring(ideal.ring(), by.ring())) throw Error("ring mismatch");
    if (by.is_zero_ideal()) return ideal;
    bool first = true;
    Ideal<F> acc;
    for (const auto& g : by.gens()) {
        if (g.is_constant()) return ideal; // unit: I : (1)^∞ = I
        Ideal<F> s = saturate_by_element(ideal, g);
        acc = first ? std::move(s) : intersect(acc, s);
        first = false;
    }
    return acc;
}

/// The irrelevant ideal (all variables).
template <class F>
Ideal<F> irrelevant_ideal(const RingPtr<F>& ring) {
    std::vector<Polynomial<F>> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        vars.push_back(Polynomial<F>::variable(ring, i));
    return Ideal<F>(ring, std::move(vars));
}

/// I ∩ k[vars \ drop], as generators of the elimination ideal inside the
/// original ring. Uses a block order with the dropped variables leading.
template <class F>
Ideal<F> eliminate(const Ideal<F>& ideal, const std::set<std::string>& drop) {
    const auto& ring = ideal.ring();
    for (const auto& name : drop)
        if (!ring->index_of(name)) throw Error("unknown variable " + name);
    std::vector<std::size_t> dropped, kept;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        if (drop.count(ring->var_name(i)))
            dropped.push_back(i);
        else
            kept.push_back(i);
    }
    // permuted ring: dropped block first
    std::vector<std::string> vars;
    std::vector<int> weights;
    std::vector<std::size_t> to_perm(ring->nvars());
    std::size_t pos = 0;
    for (std::size_t i : dropped) {
        vars.push_back(ring->var_name(i));
        weights.push_back(ring->weights()[i]);
        to_perm[i] = pos++;
    }
    for (std::size_t i : kept) {
        vars.push_back(ring->var_name(i));
        weights.push_back(ring->weights()[i]);
        to_perm[i] = pos++;
    }
    auto perm = PolyRing<F>::make(vars, ring->field(), weights);
    std::vector<Polynomial<F>> pgens;
    for (const auto& g : ideal.gens()) pgens.push_back(transport(g, perm, to_perm));
    auto gb = buchberger(pgens, MonomialOrder::block(static_cast<int>(dropped.size())));

    std::vector<std::size_t> back(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) back[to_perm[i]] = i;
    std::vector<Polynomial<F>> out;
    for (const auto& g : gb.elements) {
        bool touches = false;
        for (std::size_t d = 0; d < dropped.size() && !touches; ++d) touches = g.depends_on(d);
        if (!touches) out.push_back(transport(g, ring, back));
    }
    return Ideal<F>(ring, std::move(out));
}

/// Image of I under var -> value substitution, in the sub-ring without
/// those variables (used for charts and for linear-form elimination).
template <class F>
Ideal<F> substitute_vars(const Ideal<F>& ideal,
                         const std::map<std::string, typename F::Elem>& values) {
    const auto& ring = ideal.ring();
    std::vector<std::string> vars;
    std::vector<int> weights;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        if (values.count(ring->var_name(i))) continue;
        vars.push_back(ring->var_name(i));
        weights.push_back(ring->weights()[i]);
    }
    auto target = PolyRing<F>::make(vars, ring->field(), weights);
    std::map<std::string, Polynomial<F>> assign;
    for (const auto& [name, value] : values)
        assign.emplace(name, Polynomial<F>::constant(target, value));
    std::vector<Polynomial<F>> out;
    for (const auto& g : ideal.gens()) {
        auto img = substitute(g, assign, target);
        if (!img.is_zero()) out.push_back(std::move(img));
    }
    return Ideal<F>(target, std::move(out));
}

/// Repeatedly solve degree-1 generators for their last ring variable and
/// substitute, shrinking the ring. Returns the reduced ideal together with
/// the eliminated (variable, expression) pairs in elimination order.
template <class F>
struct LinearElimination {
    Ideal<F> ideal;
    std::vector<std::pair<std::string, Polynomial<F>>> solved; // var = expr (in the ring current at that step)
};

template <class F>
LinearElimination<F> eliminate_linear_forms(const Ideal<F>& input) {
    LinearElimination<F> result{input, {}};
    for (;;) {
        const auto& ring = result.ideal.ring();
        const F& k = ring->field();
        // find a linear generator
        const Polynomial<F>* linear = nullptr;
        for (const auto& g : result.ideal.gens())
            if (g.degree() == 1 && g.is_homogeneous()) { linear = &g; break; }
        if (!linear) return result;
        // its lexicographically last variable (= last ring variable present)
        std::size_t var = ring->nvars();
        for (std::size_t i = ring->nvars(); i-- > 0;) {
            if (linear->depends_on(i)) { var = i; break; }
        }
        if (var == ring->nvars()) return result; // defensive; cannot happen
        // solve: var = -(rest)/coeff
        typename F::Elem coeff = k.zero();
        Polynomial<F> rest = Polynomial<F>::zero(ring);
        for (const auto& t : linear->terms()) {
            if (t.mono[var] == 1 && t.mono.total_degree() == 1)
                coeff = t.coeff;
            else
                rest = rest + Polynomial<F>::term(ring, t.mono, t.coeff);
        }
        std::vector<std::string> vars;
        std::vector<int> weights;
        for (std::size_t i = 0; i < ring->nvars(); ++i) {
            if (i == var) continue;
            vars.push_back(ring->var_name(i));
            weights.push_back(ring->weights()[i]);
        }
        auto target = PolyRing<F>::make(vars, k, weights);
        auto expr = substitute(rest.scaled(k.neg(k.inv(coeff))),
                               std::map<std::string, Polynomial<F>>{}, target);
        std::map<std::string, Polynomial<F>> assign{{ring->var_name(var), expr}};
        std::vector<Polynomial<F>> out;
        for (const auto& g : result.ideal.gens()) {
            auto img = substitute(g, assign, target);
            if (!img.is_zero()) out.push_back(std::move(img));
        }
        result.solved.emplace_back(ring->var_name(var), expr);
        result.ideal = Ideal<F>(target, std::move(out));
    }
}

} // namespace cayley

#endif
