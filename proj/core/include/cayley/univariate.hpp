#ifndef CAYLEY_UNIVARIATE_HPP
#define CAYLEY_UNIVARIATE_HPP

#include <optional>
#include <vector>

#include "cayley/field.hpp"

namespace cayley {

/// Dense univariate polynomial, coefficients ascending by degree.
template <class F>
struct UPoly {
    using Elem = typename F::Elem;
    std::vector<Elem> c;

    void normalize(const F& k) {
        while (!c.empty() && k.is_zero(c.back())) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

template <class F>
UPoly<F> upoly_monic(UPoly<F> f, const F& k) {
    if (f.is_zero()) return f;
    auto inv = k.inv(f.c.back());
    for (auto& x : f.c) x = k.mul(x, inv);
    return f;
}

template <class F>
UPoly<F> upoly_derivative(const UPoly<F>& f, const F& k) {
    UPoly<F> d;
    for (std::size_t i = 1; i < f.c.size(); ++i)
        d.c.push_back(k.mul(f.c[i], k.from_int(static_cast<long>(i))));
    d.normalize(k);
    return d;
}

/// Remainder of f by monic-scaled g.
template <class F>
UPoly<F> upoly_rem(UPoly<F> f, const UPoly<F>& g, const F& k) {
    if (g.is_zero()) throw DomainError("division by zero polynomial");
    auto lead_inv = k.inv(g.c.back());
    while (!f.is_zero() && f.degree() >= g.degree()) {
        auto q = k.mul(f.c.back(), lead_inv);
        std::size_t shift = static_cast<std::size_t>(f.degree() - g.degree());
        for (std::size_t i = 0; i < g.c.size(); ++i)
            f.c[i + shift] = k.sub(f.c[i + shift], k.mul(q, g.c[i]));
        f.normalize(k);
    }
    return f;
}

template <class F>
UPoly<F> upoly_divide_exact(UPoly<F> f, const UPoly<F>& g, const F& k) {
    if (g.is_zero()) throw DomainError("division by zero polynomial");
    UPoly<F> q;
    if (f.degree() < g.degree()) {
        if (!f.is_zero()) throw Error("inexact univariate division");
        return q;
    }
    q.c.assign(static_cast<std::size_t>(f.degree() - g.degree()) + 1, k.zero());
    auto lead_inv = k.inv(g.c.back());
    while (!f.is_zero() && f.degree() >= g.degree()) {
        auto qc = k.mul(f.c.back(), lead_inv);
        std::size_t shift = static_cast<std::size_t>(f.degree() - g.degree());
        q.c[shift] = qc;
        for (std::size_t i = 0; i < g.c.size(); ++i)
            f.c[i + shift] = k.sub(f.c[i + shift], k.mul(qc, g.c[i]));
        f.normalize(k);
    }
    if (!f.is_zero()) throw Error("inexact univariate division");
    return q;
}

/// Monic gcd by Euclid.
template <class F>
UPoly<F> upoly_gcd(UPoly<F> a, UPoly<F> b, const F& k) {
    while (!b.is_zero()) {
        auto r = upoly_rem(a, b, k);
        a = std::move(b);
        b = std::move(r);
    }
    return upoly_monic(std::move(a), k);
}

/// p-th root of f when all exponents are multiples of p (F_p is perfect,
/// so coefficients are their own p-th roots).
inline UPoly<PrimeField> upoly_pth_root(const UPoly<PrimeField>& f, const PrimeField& k) {
    std::size_t p = static_cast<std::size_t>(k.modulus());
    UPoly<PrimeField> r;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (i % p == 0)
            r.c.push_back(f.c[i]);
        else if (!k.is_zero(f.c[i]))
            throw Error("not a p-th power");
    }
    r.normalize(k);
    return r;
}

/// Product of the distinct irreducible factors (monic). Handles the
/// inseparable case over F_p by exponent-division p-th roots.
template <class F>
UPoly<F> squarefree_part(UPoly<F> f, const F& k) {
    f = upoly_monic(std::move(f), k);
    if (f.degree() <= 0) return f;
    auto d = upoly_derivative(f, k);
    if (d.is_zero()) {
        if constexpr (std::is_same_v<F, PrimeField>) {
            return squarefree_part(upoly_pth_root(f, k), k);
        } else {
            throw Error("zero derivative in characteristic 0");
        }
    }
    auto g = upoly_gcd(f, d, k);
    if (g.degree() <= 0) return f; // already squarefree
    auto w = upoly_divide_exact(f, g, k); // distinct factors of non-p multiplicity
    // strip w's factors out of g; what is left is a p-th power
    auto h = g;
    for (;;) {
        auto u = upoly_gcd(h, w, k);
        if (u.degree() <= 0) break;
        h = upoly_divide_exact(h, u, k);
    }
    if (h.degree() <= 0) return upoly_monic(std::move(w), k);
    if constexpr (std::is_same_v<F, PrimeField>) {
        auto rest = squarefree_part(upoly_pth_root(h, k), k);
        // lcm(w, rest): factors can overlap only if an irreducible divides both
        auto overlap = upoly_gcd(w, rest, k);
        UPoly<F> prod;
        {
            // multiply w * (rest / overlap)
            auto reduced = upoly_divide_exact(rest, overlap, k);
            prod.c.assign(static_cast<std::size_t>(w.degree() + reduced.degree()) + 1, k.zero());
            for (std::size_t i = 0; i < w.c.size(); ++i)
                for (std::size_t j = 0; j < reduced.c.size(); ++j)
                    prod.c[i + j] = k.add(prod.c[i + j], k.mul(w.c[i], reduced.c[j]));
            prod.normalize(k);
        }
        return upoly_monic(std::move(prod), k);
    } else {
        throw Error("unreachable: p-th power over the rationals");
    }
}

/// All roots in F_p, ascending, by scanning the field.
inline std::vector<std::uint64_t> upoly_roots(const UPoly<PrimeField>& f, const PrimeField& k) {
    std::vector<std::uint64_t> roots;
    if (f.is_zero()) throw Error("roots of the zero polynomial");
    for (std::uint64_t a = 0; a < k.modulus(); ++a) {
        std::uint64_t acc = 0;
        for (std::size_t i = f.c.size(); i-- > 0;) acc = k.add(k.mul(acc, a), f.c[i]);
        if (acc == 0) roots.push_back(a);
    }
    return roots;
}

/// Divisors of |n| by trial division; nullopt if n exceeds the budget.
inline std::optional<std::vector<mpz_class>> small_divisors(mpz_class n,
                                                            unsigned long budget = 1u << 20) {
    n = abs(n);
    if (n == 0) return std::nullopt;
    std::vector<std::pair<mpz_class, int>> factors;
    mpz_class d = 2;
    unsigned long steps = 0;
    while (n > 1) {
        if (++steps > budget) return std::nullopt;
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            int e = 0;
            while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
                n /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
        if (d * d > n && n > 1) {
            factors.emplace_back(n, 1);
            break;
        }
        d += (d == 2 ? 1 : 2);
    }
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        std::size_t count = divs.size();
        mpz_class pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
        }
        if (divs.size() > 100000) return std::nullopt;
    }
    return divs;
}

/// All rational roots, ascending; nullopt when the integer factoring
/// budget is exceeded (callers report "points not enumerable").
inline std::optional<std::vector<mpq_class>> upoly_roots(const UPoly<Rationals>& f,
                                                         const Rationals& k) {
    if (f.is_zero()) throw Error("roots of the zero polynomial");
    // clear denominators to a primitive integer polynomial
    mpz_class scale = 1;
    for (const auto& c : f.c) scale = lcm(scale, c.get_den());
    std::vector<mpz_class> z;
    for (const auto& c : f.c) z.push_back(mpq_class(c * scale).get_num());
    std::vector<mpq_class> roots;
    // factor out x^k
    std::size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low == z.size()) throw Error("roots of the zero polynomial");
    if (low > 0) roots.push_back(0);
    std::vector<mpz_class> g(z.begin() + static_cast<std::ptrdiff_t>(low), z.end());
    if (g.size() <= 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    auto nums = small_divisors(g.front());
    auto dens = small_divisors(g.back());
    if (!nums || !dens) return std::nullopt;
    auto eval_zero = [&](const mpq_class& x) {
        mpq_class acc = 0;
        for (std::size_t i = g.size(); i-- > 0;) acc = acc * x + g[i];
        return sgn(acc) == 0;
    };
    for (const auto& a : *nums)
        for (const auto& b : *dens) {
            mpq_class cand(a, b);
            cand.canonicalize();
            if (eval_zero(cand)) roots.push_back(cand);
            cand = -cand;
            if (eval_zero(cand)) roots.push_back(cand);
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    (void)k;
    return roots;
}

} // namespace cayley

#endif
