#ifndef CAYLEY_HILBERT_HPP
#define CAYLEY_HILBERT_HPP

#include <vector>

#include <gmpxx.h>

#include "cayley/ideal.hpp"

namespace cayley {

/// Hilbert series data of a homogeneous ideal I in S = k[x_0..x_n]:
/// HS(S/I) = numerator(t) / (1-t)^nvars. proj_dim is the Krull dimension
/// of the graded quotient minus one (pole order minus one); degree is the
/// normalized numerator evaluated at 1. For the unit ideal proj_dim = -1
/// and degree = 0.
struct HilbertData {
    std::vector<mpz_class> numerator; // ascending coefficients
    int proj_dim = -1;
    long degree = 0;
};

/// Numerator of HS(S/I) for a monomial ideal given by (not necessarily
/// minimal) generators. Standard grading.
std::vector<mpz_class> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

/// Derive proj_dim/degree from a numerator over (1-t)^nvars.
HilbertData hilbert_from_numerator(std::vector<mpz_class> numerator, std::size_t nvars);

template <class F>
HilbertData hilbert_data(const Ideal<F>& ideal) {
    const auto& ring = ideal.ring();
    for (int w : ring->weights())
        if (w != 1) throw Error("hilbert data requires the standard grading");
    for (const auto& g : ideal.gens())
        if (!g.is_homogeneous())
            throw Error("non-homogeneous generator: " + g.str());
    const auto& gb = ideal.groebner();
    std::vector<Monomial> lt;
    lt.reserve(gb.elements.size());
    for (const auto& g : gb.elements) lt.push_back(g.leading_term().mono);
    return hilbert_from_numerator(hilbert_numerator(std::move(lt), ring->nvars()),
                                  ring->nvars());
}

} // namespace cayley

#endif
