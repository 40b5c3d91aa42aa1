#ifndef CAYLEY_IDEAL_IO_HPP
#define CAYLEY_IDEAL_IO_HPP

#include <string>
#include <vector>

#include "cayley/ideal.hpp"

namespace cayley {

/// Ideal file format: `#` comments, a header line
///   ring: VARS over Q|Fp
/// (variables separated by spaces or commas), then one polynomial per
/// line in the expression grammar.
struct IdealFileData {
    std::vector<std::string> vars;
    bool rationals = true;
    std::uint64_t prime = 0; // when !rationals
    std::vector<std::string> polys;
};

IdealFileData parse_ideal_file(const std::string& text);

template <class F>
std::pair<RingPtr<F>, std::vector<Polynomial<F>>> materialize_ideal_file(const IdealFileData& data,
                                                                         F field) {
    auto ring = PolyRing<F>::make(data.vars, std::move(field));
    std::vector<Polynomial<F>> polys;
    polys.reserve(data.polys.size());
    for (const auto& line : data.polys) polys.push_back(parse_poly<F>(line, ring));
    return {ring, std::move(polys)};
}

template <class F>
std::string field_token(const F&);
inline std::string field_token(const Rationals&) { return "Q"; }
inline std::string field_token(const PrimeField& k) { return "F" + std::to_string(k.modulus()); }

template <class F>
std::string write_ideal_file(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& polys) {
    std::string out = "ring:";
    for (const auto& v : ring->vars()) out += " " + v;
    out += " over " + field_token(ring->field()) + "\n";
    for (const auto& p : polys) out += p.str() + "\n";
    return out;
}

} // namespace cayley

#endif
