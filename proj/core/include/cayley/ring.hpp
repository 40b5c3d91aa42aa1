#ifndef CAYLEY_RING_HPP
#define CAYLEY_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/field.hpp"
#include "cayley/monomial.hpp"

namespace cayley {

/// Polynomial ring: an ordered list of named variables over a coefficient
/// field, with a positive weight per variable (all 1 unless stated).
/// Rings are immutable and shared by pointer; equality is structural.
template <class F>
class PolyRing {
public:
    using Field = F;

    static std::shared_ptr<const PolyRing<F>> make(std::vector<std::string> vars, F field,
                                                   std::vector<int> weights = {}) {
        if (weights.empty()) weights.assign(vars.size(), 1);
        return std::shared_ptr<const PolyRing<F>>(
            new PolyRing<F>(std::move(vars), std::move(field), std::move(weights)));
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& weights() const { return weights_; }
    std::size_t nvars() const { return vars_.size(); }
    const F& field() const { return field_; }

    const std::string& var_name(std::size_t i) const { return vars_[i]; }
    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }

    bool same(const PolyRing<F>& o) const {
        return vars_ == o.vars_ && weights_ == o.weights_ && field_ == o.field_;
    }

    /// Canonical term order used for storage and printing.
    int canonical_compare(const Monomial& a, const Monomial& b) const {
        return MonomialOrder::grevlex().compare(a, b, weights_);
    }

private:
    PolyRing(std::vector<std::string> vars, F field, std::vector<int> weights)
        : vars_(std::move(vars)), weights_(std::move(weights)), field_(std::move(field)) {
        if (vars_.size() != weights_.size()) throw Error("weights/variables length mismatch");
        for (int w : weights_)
            if (w <= 0) throw Error("variable weights must be positive");
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j]) throw Error("duplicate variable name " + vars_[i]);
    }

    std::vector<std::string> vars_;
    std::vector<int> weights_;
    F field_;
};

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
    return a == b || (a && b && a->same(*b));
}

} // namespace cayley

#endif
