#ifndef CAYLEY_ZERO_DIM_HPP
#define CAYLEY_ZERO_DIM_HPP

#include <optional>
#include <set>

#include "cayley/hilbert.hpp"
#include "cayley/linalg.hpp"
#include "cayley/univariate.hpp"

namespace cayley {

/// Monomials outside the leading-term ideal, ascending; nullopt when the
/// quotient is infinite-dimensional. The empty list is the unit ideal.
template <class F>
std::optional<std::vector<Monomial>> quotient_basis(const GroebnerBasis<F>& gb) {
    const auto& ring = gb.ring;
    std::size_t n = ring->nvars();
    std::vector<Monomial> lts;
    for (const auto& g : gb.elements) {
        if (g.is_constant()) return std::vector<Monomial>{}; // unit ideal
        lts.push_back(g.leading_term().mono);
    }
    // zero-dimensionality: a pure power of every variable must lead
    for (std::size_t v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& m : lts) {
            bool pure = m[v] > 0;
            for (std::size_t u = 0; u < n && pure; ++u)
                if (u != v && m[u] > 0) pure = false;
            if (pure) { found = true; break; }
        }
        if (!found) return std::nullopt;
    }
    std::set<std::vector<int>> seen;
    std::vector<Monomial> basis;
    std::vector<Monomial> queue{Monomial(n)};
    seen.insert(queue[0].exponents());
    while (!queue.empty()) {
        Monomial m = queue.back();
        queue.pop_back();
        bool in_lt = false;
        for (const auto& l : lts)
            if (l.divides(m)) { in_lt = true; break; }
        if (in_lt) continue;
        basis.push_back(m);
        for (std::size_t v = 0; v < n; ++v) {
            Monomial next = m;
            next[v] += 1;
            if (seen.insert(next.exponents()).second) queue.push_back(std::move(next));
        }
    }
    std::sort(basis.begin(), basis.end(), [&](const Monomial& a, const Monomial& b) {
        return ring->canonical_compare(a, b) < 0;
    });
    return basis;
}

/// Vector-space dimension of ring/I for a zero-dimensional affine ideal.
template <class F>
std::size_t vector_space_dimension(const Ideal<F>& ideal) {
    auto qb = quotient_basis(ideal.groebner());
    if (!qb) throw Error("ideal not zero-dimensional");
    return qb->size();
}

template <class F>
struct Point {
    std::vector<typename F::Elem> coords; // aligned with ring variables
};

template <class F>
std::string point_str(const RingPtr<F>& ring, const Point<F>& pt) {
    std::string s = "[";
    for (std::size_t i = 0; i < pt.coords.size(); ++i) {
        if (i) s += ", ";
        s += ring->var_name(i) + "=" + ring->field().str(pt.coords[i]);
    }
    return s + "]";
}

template <class F>
struct PointEnumeration {
    bool complete = true;
    std::vector<Point<F>> points;
    std::string note; // set when not complete
};

/// Minimal polynomial of a variable in ring/I (zero-dimensional), via
/// normal-form powers and exact linear algebra on the quotient basis.
template <class F>
UPoly<F> minimal_polynomial(const Ideal<F>& ideal, std::size_t var) {
    const auto& ring = ideal.ring();
    const F& k = ring->field();
    const auto& gb = ideal.groebner();
    auto qb = quotient_basis(gb);
    if (!qb) throw Error("ideal not zero-dimensional");
    if (qb->empty()) throw Error("unit ideal has no minimal polynomials");
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < qb->size(); ++i) index.emplace((*qb)[i].exponents(), i);
    auto coords = [&](const Polynomial<F>& p) {
        std::vector<typename F::Elem> v(qb->size(), k.zero());
        for (const auto& t : p.terms()) {
            auto it = index.find(t.mono.exponents());
            if (it == index.end()) throw Error("normal form left the quotient basis");
            v[it->second] = t.coeff;
        }
        return v;
    };
    DependencyFinder<F> dep(qb->size(), k);
    Polynomial<F> x = Polynomial<F>::variable(ring, var);
    Polynomial<F> power = Polynomial<F>::constant(ring, k.one());
    for (std::size_t j = 0;; ++j) {
        if (j > qb->size() + 1) throw Error("minimal polynomial search overran the quotient");
        auto dependency = dep.add(coords(power));
        if (dependency) {
            UPoly<F> m;
            m.c.reserve(j + 1);
            for (const auto& c : *dependency) m.c.push_back(k.neg(c));
            m.c.push_back(k.one());
            m.normalize(k);
            return m;
        }
        power = normal_form(power * x, gb.elements, gb.order);
    }
}

template <class F>
Polynomial<F> upoly_to_polynomial(const UPoly<F>& u, const RingPtr<F>& ring, std::size_t var) {
    std::vector<Term<F>> ts;
    for (std::size_t i = 0; i < u.c.size(); ++i) {
        if (ring->field().is_zero(u.c[i])) continue;
        Monomial m(ring->nvars());
        m[var] = static_cast<int>(i);
        ts.push_back({std::move(m), u.c[i]});
    }
    return Polynomial<F>::from_terms(ring, std::move(ts));
}

/// Radical of a zero-dimensional affine ideal: adjoin the squarefree part
/// of each variable's minimal polynomial (Seidenberg). Returns the input
/// object unchanged when it is already radical by this test.
template <class F>
Ideal<F> zero_dim_radical(const Ideal<F>& ideal) {
    const auto& ring = ideal.ring();
    const F& k = ring->field();
    if (ideal.is_unit_ideal()) return ideal;
    auto qb = quotient_basis(ideal.groebner());
    if (!qb) throw Error("ideal not zero-dimensional");
    std::vector<Polynomial<F>> extra;
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
        auto m = minimal_polynomial(ideal, v);
        auto s = squarefree_part(m, k);
        if (s.c != m.c) extra.push_back(upoly_to_polynomial(s, ring, v));
    }
    if (extra.empty()) return ideal;
    std::vector<Polynomial<F>> gens = ideal.gens();
    for (auto& e : extra) gens.push_back(std::move(e));
    return Ideal<F>(ring, std::move(gens));
}

namespace pointsdetail {

inline std::optional<std::vector<std::uint64_t>> field_roots(const UPoly<PrimeField>& f,
                                                             const PrimeField& k) {
    return upoly_roots(f, k);
}
inline std::optional<std::vector<mpq_class>> field_roots(const UPoly<Rationals>& f,
                                                         const Rationals& k) {
    return upoly_roots(f, k);
}

template <class F>
void enumerate_rec(const Ideal<F>& ideal, std::vector<typename F::Elem>& suffix,
                   PointEnumeration<F>& out) {
    const auto& ring = ideal.ring();
    const F& k = ring->field();
    std::size_t n = ring->nvars();
    if (n == 0) {
        for (const auto& g : ideal.gens())
            if (!g.is_zero()) return; // no point
        Point<F> p;
        p.coords.assign(suffix.rbegin(), suffix.rend());
        out.points.push_back(std::move(p));
        return;
    }
    const auto& gb = ideal.groebner();
    if (gb.is_unit_ideal()) return;
    if (!quotient_basis(gb)) throw Error("ideal not zero-dimensional");

    // the elimination ideal in the last variable is principal
    std::set<std::string> drop;
    for (std::size_t i = 0; i + 1 < n; ++i) drop.insert(ring->var_name(i));
    auto elim = eliminate(ideal, drop);
    if (elim.gens().size() != 1)
        throw Error("unexpected elimination ideal shape");
    UPoly<F> univ;
    for (const auto& t : elim.gens()[0].terms()) {
        std::size_t d = static_cast<std::size_t>(t.mono[n - 1]);
        if (univ.c.size() <= d) univ.c.resize(d + 1, k.zero());
        univ.c[d] = t.coeff;
    }
    univ.normalize(k);
    auto roots = field_roots(univ, k);
    if (!roots) {
        out.complete = false;
        out.note = "points not enumerable";
        return;
    }
    for (const auto& a : *roots) {
        auto restricted = substitute_vars(ideal, {{ring->var_name(n - 1), a}});
        suffix.push_back(a);
        enumerate_rec(restricted, suffix, out);
        suffix.pop_back();
    }
}

} // namespace pointsdetail

/// All rational points of V(I) for a zero-dimensional affine ideal:
/// complete over prime fields; over the rationals `complete` is false when
/// root extraction exceeds its factoring budget.
template <class F>
PointEnumeration<F> variety_points(const Ideal<F>& ideal) {
    PointEnumeration<F> out;
    std::vector<typename F::Elem> suffix;
    pointsdetail::enumerate_rec(ideal, suffix, out);
    std::sort(out.points.begin(), out.points.end(),
              [](const Point<F>& a, const Point<F>& b) { return a.coords < b.coords; });
    return out;
}

/// Length of the local ring at a point of a zero-dimensional scheme: the
/// primary component at the point is cut out by two saturations, then
/// measured as a vector-space dimension.
template <class F>
std::size_t local_multiplicity(const Ideal<F>& ideal, const Point<F>& pt) {
    const auto& ring = ideal.ring();
    const F& k = ring->field();
    if (pt.coords.size() != ring->nvars()) throw Error("point arity mismatch");
    for (const auto& g : ideal.gens())
        if (!k.is_zero(g.evaluate(pt.coords)))
            throw Error("point not on the variety: " + g.str() + " at " + point_str(ring, pt));
    // translate the point to the origin
    std::map<std::string, Polynomial<F>> shift;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        shift.emplace(ring->var_name(i),
                      Polynomial<F>::variable(ring, i) +
                          Polynomial<F>::constant(ring, pt.coords[i]));
    std::vector<Polynomial<F>> translated;
    for (const auto& g : ideal.gens()) translated.push_back(substitute(g, shift, ring));
    Ideal<F> local(ring, std::move(translated));
    Ideal<F> others = saturate(local, irrelevant_ideal(ring));
    Ideal<F> primary = others.is_unit_ideal() ? local : saturate(local, others);
    return vector_space_dimension(primary);
}

// --- projective helpers --------------------------------------------------

template <class F>
struct ProjectivePoint {
    std::size_t chart;     // index of the first nonzero coordinate (scaled to 1)
    Point<F> coords;       // full homogeneous coordinate vector
};

/// Chart of I at var = 1 with all earlier variables set to 0; the strata
/// over all charts partition the points of Proj(S/I) by first nonzero
/// coordinate.
template <class F>
Ideal<F> stratum_ideal(const Ideal<F>& ideal, std::size_t chart) {
    const auto& ring = ideal.ring();
    const F& k = ring->field();
    std::map<std::string, typename F::Elem> values;
    for (std::size_t j = 0; j < chart; ++j) values.emplace(ring->var_name(j), k.zero());
    values.emplace(ring->var_name(chart), k.one());
    return substitute_vars(ideal, values);
}

/// Rational points of Proj(S/I), I homogeneous with zero-dimensional
/// projective support.
template <class F>
std::pair<bool, std::vector<ProjectivePoint<F>>> projective_points(const Ideal<F>& ideal) {
    const auto& ring = ideal.ring();
    const F& k = ring->field();
    bool complete = true;
    std::vector<ProjectivePoint<F>> out;
    for (std::size_t chart = 0; chart < ring->nvars(); ++chart) {
        auto c = stratum_ideal(ideal, chart);
        if (!c.gens().empty() && c.is_unit_ideal()) continue;
        auto pts = variety_points(c);
        if (!pts.complete) complete = false;
        for (const auto& p : pts.points) {
            Point<F> full;
            full.coords.assign(ring->nvars(), k.zero());
            full.coords[chart] = k.one();
            for (std::size_t j = 0; j < p.coords.size(); ++j)
                full.coords[chart + 1 + j] = p.coords[j];
            out.push_back({chart, std::move(full)});
        }
    }
    return {complete, out};
}

/// Multiplicity of a projective point, measured in the affine chart of its
/// leading coordinate (without the stratum cuts).
template <class F>
std::size_t projective_point_multiplicity(const Ideal<F>& ideal, const ProjectivePoint<F>& pt) {
    const auto& ring = ideal.ring();
    auto chart_ideal =
        substitute_vars(ideal, {{ring->var_name(pt.chart), ring->field().one()}});
    Point<F> affine;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        if (i != pt.chart) affine.coords.push_back(pt.coords.coords[i]);
    return local_multiplicity(chart_ideal, affine);
}

/// Degree of the reduced scheme underlying Proj(S/I): the sum over strata
/// of the radical's vector-space dimension (counts non-rational points by
/// their residue degree).
template <class F>
long projective_radical_degree(const Ideal<F>& ideal) {
    const auto& ring = ideal.ring();
    long total = 0;
    for (std::size_t chart = 0; chart < ring->nvars(); ++chart) {
        auto c = stratum_ideal(ideal, chart);
        if (!c.gens().empty() && c.is_unit_ideal()) continue;
        auto rad = zero_dim_radical(c);
        total += static_cast<long>(vector_space_dimension(rad));
    }
    return total;
}

} // namespace cayley

#endif
