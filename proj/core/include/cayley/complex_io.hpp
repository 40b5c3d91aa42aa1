#ifndef CAYLEY_COMPLEX_IO_HPP
#define CAYLEY_COMPLEX_IO_HPP

#include <json.hpp>

#include "cayley/complexes.hpp"
#include "cayley/ideal_io.hpp"

namespace cayley {

/// Complex files: JSON with per-module ranks and twists, and differentials
/// as matrices of polynomial strings in the expression grammar.
template <class F>
nlohmann::ordered_json complex_to_json(const FreeComplex<F>& c) {
    nlohmann::ordered_json j;
    j["ring"]["vars"] = c.ring()->vars();
    j["ring"]["over"] = field_token(c.ring()->field());
    j["modules"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < c.positions(); ++i) {
        nlohmann::ordered_json m;
        m["rank"] = c.rank(i);
        m["twists"] = c.twists(i);
        j["modules"].push_back(std::move(m));
    }
    j["differentials"] = nlohmann::ordered_json::array();
    for (std::size_t i = 1; i < c.positions(); ++i) {
        const auto& d = c.differential(i);
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t r = 0; r < d.rows; ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (std::size_t col = 0; col < d.cols; ++col) row.push_back(d.at(r, col).str());
            rows.push_back(std::move(row));
        }
        j["differentials"].push_back(std::move(rows));
    }
    return j;
}

template <class F>
FreeComplex<F> complex_from_json(const nlohmann::json& j, F field) {
    std::vector<std::string> vars = j.at("ring").at("vars").get<std::vector<std::string>>();
    auto ring = PolyRing<F>::make(vars, std::move(field));
    std::vector<std::vector<int>> twists;
    for (const auto& m : j.at("modules")) {
        auto t = m.at("twists").get<std::vector<int>>();
        if (m.contains("rank") && m.at("rank").get<std::size_t>() != t.size())
            throw Error("module rank does not match its twist list");
        twists.push_back(std::move(t));
    }
    std::vector<PolyMatrix<F>> diffs;
    for (std::size_t i = 0; i + 1 < twists.size(); ++i) {
        const auto& rows = j.at("differentials").at(i);
        PolyMatrix<F> d =
            PolyMatrix<F>::zero(ring, twists[i].size(), twists[i + 1].size());
        if (rows.size() != d.rows) throw Error("differential row count mismatch");
        for (std::size_t r = 0; r < d.rows; ++r) {
            if (rows.at(r).size() != d.cols) throw Error("differential column count mismatch");
            for (std::size_t c = 0; c < d.cols; ++c)
                d.at(r, c) = parse_poly<F>(rows.at(r).at(c).get<std::string>(), ring);
        }
        diffs.push_back(std::move(d));
    }
    return FreeComplex<F>(ring, std::move(twists), std::move(diffs));
}

} // namespace cayley

#endif
