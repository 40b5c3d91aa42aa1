#ifndef CAYLEY_TEST_UTIL_HPP
#define CAYLEY_TEST_UTIL_HPP

#include <random>

#include "cayley/ideal.hpp"

namespace cayley_test {

using namespace cayley;

// deterministic randomness only
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline mpq_class random_rational(std::mt19937_64& g, int span = 10) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, span);
    mpq_class q(num(g), den(g));
    q.canonicalize();
    return q;
}

template <class F>
typename F::Elem random_elem(const F& k, std::mt19937_64& g);

inline mpq_class random_elem(const Rationals&, std::mt19937_64& g) {
    return random_rational(g);
}
inline std::uint64_t random_elem(const PrimeField& k, std::mt19937_64& g) {
    std::uniform_int_distribution<std::uint64_t> d(0, k.modulus() - 1);
    return d(g);
}

template <class F>
Polynomial<F> random_poly(const RingPtr<F>& ring, std::mt19937_64& g, int max_deg, int terms,
                          bool homogeneous = false) {
    std::uniform_int_distribution<int> deg_dist(homogeneous ? max_deg : 0, max_deg);
    std::vector<Term<F>> ts;
    for (int t = 0; t < terms; ++t) {
        int degree = deg_dist(g);
        Monomial m(ring->nvars());
        for (int d = 0; d < degree; ++d) {
            std::uniform_int_distribution<std::size_t> var(0, ring->nvars() - 1);
            m[var(g)] += 1;
        }
        auto c = random_elem(ring->field(), g);
        if (!ring->field().is_zero(c)) ts.push_back({std::move(m), std::move(c)});
    }
    return Polynomial<F>::from_terms(ring, std::move(ts));
}

inline Monomial random_monomial(std::size_t nvars, std::mt19937_64& g, int max_deg) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    Monomial m(nvars);
    int degree = deg_dist(g);
    for (int d = 0; d < degree; ++d) {
        std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
        m[var(g)] += 1;
    }
    return m;
}

} // namespace cayley_test

#endif
