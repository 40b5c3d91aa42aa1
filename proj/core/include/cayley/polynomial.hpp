#ifndef CAYLEY_POLYNOMIAL_HPP
#define CAYLEY_POLYNOMIAL_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cayley/ring.hpp"

namespace cayley {

template <class F>
struct Term {
    Monomial mono;
    typename F::Elem coeff;
};

/// Exact multivariate polynomial. Terms are kept sorted in descending
/// grevlex (the ring's canonical order) with no zero coefficients, so
/// equal polynomials have identical representations.
template <class F>
class Polynomial {
public:
    using Elem = typename F::Elem;

    Polynomial() = default;
    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr<F> ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr<F> ring, Elem c) {
        Polynomial p(ring);
        if (!ring->field().is_zero(c)) p.terms_.push_back({Monomial(ring->nvars()), std::move(c)});
        return p;
    }

    static Polynomial variable(RingPtr<F> ring, std::size_t i) {
        Polynomial p(ring);
        Monomial m(ring->nvars());
        m[i] = 1;
        p.terms_.push_back({std::move(m), ring->field().one()});
        return p;
    }

    static Polynomial variable(RingPtr<F> ring, const std::string& name) {
        auto i = ring->index_of(name);
        if (!i) throw Error("unknown variable " + name);
        return variable(ring, *i);
    }

    static Polynomial term(RingPtr<F> ring, Monomial m, Elem c) {
        Polynomial p(ring);
        if (m.nvars() != ring->nvars()) throw Error("monomial arity mismatch");
        if (!ring->field().is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    /// Build from an arbitrary term list (merged and normalized).
    static Polynomial from_terms(RingPtr<F> ring, std::vector<Term<F>> ts) {
        Polynomial p(ring);
        std::sort(ts.begin(), ts.end(), [&](const Term<F>& a, const Term<F>& b) {
            return ring->canonical_compare(a.mono, b.mono) > 0;
        });
        const F& k = ring->field();
        for (auto& t : ts) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coeff = k.add(p.terms_.back().coeff, t.coeff);
                if (k.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
            } else if (!k.is_zero(t.coeff)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Term<F>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }
    Elem constant_value() const {
        if (terms_.empty()) return ring_->field().zero();
        if (!is_constant()) throw Error("non-constant polynomial");
        return terms_[0].coeff;
    }

    /// Weighted total degree; -1 for the zero polynomial.
    long degree() const {
        long d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.weighted_degree(ring_->weights()));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        long d = terms_[0].mono.weighted_degree(ring_->weights());
        for (const auto& t : terms_)
            if (t.mono.weighted_degree(ring_->weights()) != d) return false;
        return true;
    }

    bool depends_on(std::size_t var) const {
        for (const auto& t : terms_)
            if (t.mono[var] > 0) return true;
        return false;
    }

    /// Leading term in the canonical (grevlex) order.
    const Term<F>& leading_term() const {
        if (terms_.empty()) throw Error("zero polynomial has no leading term");
        return terms_[0];
    }

    /// Terms re-sorted descending under an arbitrary order.
    std::vector<Term<F>> sorted_terms(const MonomialOrder& order) const {
        std::vector<Term<F>> ts = terms_;
        const auto& w = ring_->weights();
        std::sort(ts.begin(), ts.end(), [&](const Term<F>& a, const Term<F>& b) {
            return order.compare(a.mono, b.mono, w) > 0;
        });
        return ts;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        check_ring(o);
        Polynomial r(ring_);
        const F& k = ring_->field();
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = ring_->canonical_compare(terms_[i].mono, o.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                Elem s = k.add(terms_[i].coeff, o.terms_[j].coeff);
                if (!k.is_zero(s)) r.terms_.push_back({terms_[i].mono, std::move(s)});
                ++i; ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    /// this + c * m * g, the basic reduction step.
    Polynomial add_scaled(const Elem& c, const Monomial& m, const Polynomial& g) const {
        check_ring(g);
        Polynomial scaled(ring_);
        const F& k = ring_->field();
        if (!k.is_zero(c)) {
            scaled.terms_.reserve(g.terms_.size());
            for (const auto& t : g.terms_) {
                Elem nc = k.mul(c, t.coeff);
                if (!k.is_zero(nc)) scaled.terms_.push_back({t.mono * m, std::move(nc)});
            }
        }
        return *this + scaled;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_ring(o);
        // accumulate into a map keyed by canonical order
        const F& k = ring_->field();
        auto cmp = [this](const Monomial& a, const Monomial& b) {
            return ring_->canonical_compare(a, b) > 0;
        };
        std::map<Monomial, Elem, decltype(cmp)> acc(cmp);
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                Monomial m = a.mono * b.mono;
                Elem c = k.mul(a.coeff, b.coeff);
                auto it = acc.find(m);
                if (it == acc.end()) {
                    if (!k.is_zero(c)) acc.emplace(std::move(m), std::move(c));
                } else {
                    it->second = k.add(it->second, c);
                    if (k.is_zero(it->second)) acc.erase(it);
                }
            }
        Polynomial r(ring_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc) r.terms_.push_back({m, c});
        return r;
    }

    Polynomial scaled(const Elem& c) const {
        Polynomial r(ring_);
        const F& k = ring_->field();
        if (k.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, k.mul(c, t.coeff)});
        return r;
    }

    Polynomial monic() const {
        if (terms_.empty()) return *this;
        return scaled(ring_->field().inv(terms_[0].coeff));
    }

    Polynomial pow(unsigned n) const {
        Polynomial r = constant(ring_, ring_->field().one());
        Polynomial b = *this;
        while (n) {
            if (n & 1) r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        const F& k = ring_->field();
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || !k.eq(terms_[i].coeff, o.terms_[i].coeff))
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Formal partial derivative with respect to a variable.
    Polynomial derivative(std::size_t var) const {
        Polynomial r(ring_);
        const F& k = ring_->field();
        std::vector<Term<F>> ts;
        for (const auto& t : terms_) {
            int e = t.mono[var];
            if (e == 0) continue;
            Elem c = k.mul(t.coeff, k.from_int(e));
            if (k.is_zero(c)) continue;
            Monomial m = t.mono;
            m[var] = e - 1;
            ts.push_back({std::move(m), std::move(c)});
        }
        return from_terms(ring_, std::move(ts));
    }

    Polynomial derivative(const std::string& var) const {
        auto i = ring_->index_of(var);
        if (!i) throw Error("unknown variable " + var);
        return derivative(*i);
    }

    /// Evaluate at a point (one field element per ring variable).
    Elem evaluate(const std::vector<Elem>& point) const {
        if (point.size() != ring_->nvars()) throw Error("point arity mismatch");
        const F& k = ring_->field();
        Elem acc = k.zero();
        for (const auto& t : terms_) {
            Elem v = t.coeff;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (int e = 0; e < t.mono[i]; ++e) v = k.mul(v, point[i]);
            acc = k.add(acc, v);
        }
        return acc;
    }

    std::string str() const;

private:
    void check_ring(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_)) throw Error("ring mismatch");
    }

    RingPtr<F> ring_;
    std::vector<Term<F>> terms_;
};

/// Ring homomorphism determined by a variable assignment. Variables absent
/// from the map go to the target ring's variable of the same name.
template <class F>
Polynomial<F> substitute(const Polynomial<F>& p,
                         const std::map<std::string, Polynomial<F>>& assignment,
                         RingPtr<F> target = nullptr) {
    if (!target) {
        if (!assignment.empty())
            target = assignment.begin()->second.ring();
        else
            target = p.ring();
    }
    for (const auto& [name, q] : assignment)
        if (!same_ring(q.ring(), target)) throw Error("assignment rings differ");

    const auto& src = *p.ring();
    std::vector<Polynomial<F>> images(src.nvars());
    std::vector<bool> have(src.nvars(), false);
    for (std::size_t i = 0; i < src.nvars(); ++i) {
        auto it = assignment.find(src.var_name(i));
        if (it != assignment.end()) {
            images[i] = it->second;
            have[i] = true;
        } else if (auto j = target->index_of(src.var_name(i))) {
            images[i] = Polynomial<F>::variable(target, *j);
            have[i] = true;
        }
    }

    const F& k = target->field();
    // per-variable power cache
    std::vector<std::vector<Polynomial<F>>> powers(src.nvars());
    auto power = [&](std::size_t i, int e) -> const Polynomial<F>& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial<F>::constant(target, k.one()));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
        return cache[static_cast<std::size_t>(e)];
    };

    Polynomial<F> acc = Polynomial<F>::zero(target);
    for (const auto& t : p.terms()) {
        Polynomial<F> prod = Polynomial<F>::constant(target, t.coeff);
        for (std::size_t i = 0; i < src.nvars(); ++i) {
            int e = t.mono[i];
            if (e == 0) continue;
            if (!have[i])
                throw Error("unassigned variable " + src.var_name(i));
            prod = prod * power(i, e);
        }
        acc = acc + prod;
    }
    return acc;
}

/// Jacobian matrix: entry (i, j) is d gens[i] / d vars[j].
template <class F>
std::vector<std::vector<Polynomial<F>>> jacobian(const std::vector<Polynomial<F>>& gens,
                                                 const std::vector<std::string>& vars) {
    std::vector<std::vector<Polynomial<F>>> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        std::vector<Polynomial<F>> row;
        row.reserve(vars.size());
        for (const auto& v : vars) row.push_back(g.derivative(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace cayley

#endif
