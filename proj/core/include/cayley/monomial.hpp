#ifndef CAYLEY_MONOMIAL_HPP
#define CAYLEY_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cayley/error.hpp"

namespace cayley {

/// Exponent vector aligned with the variables of a ring.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
        for (int x : e_)
            if (x < 0) throw Error("negative exponent");
    }

    std::size_t nvars() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
    }

    long weighted_degree(const std::vector<int>& weights) const {
        long d = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) d += static_cast<long>(e_[i]) * weights[i];
        return d;
    }
    long total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0L); }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    /// this / o; requires o.divides(*this)
    Monomial divide(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= o.e_[i];
            if (r.e_[i] < 0) throw Error("inexact monomial division");
        }
        return r;
    }
    Monomial lcm(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(r.e_[i], o.e_[i]);
        return r;
    }
    Monomial gcd(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::min(r.e_[i], o.e_[i]);
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    bool operator<(const Monomial& o) const { return e_ < o.e_; } // container order only

private:
    std::vector<int> e_;
};

/// Term orders: grevlex (default), lex, and a two-block elimination order
/// whose first block is the leading `elim` ring variables (grevlex within
/// each block). All three are multiplicative well-orders with 1 minimal.
class MonomialOrder {
public:
    enum class Kind { grevlex, lex, block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    static MonomialOrder block(int elim_count) { return MonomialOrder(Kind::block, elim_count); }

    Kind kind() const { return kind_; }
    int elim_count() const { return elim_; }

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b, const std::vector<int>& weights) const {
        switch (kind_) {
        case Kind::lex:
            for (std::size_t i = 0; i < a.nvars(); ++i)
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            return 0;
        case Kind::grevlex:
            return grevlex_range(a, b, weights, 0, a.nvars());
        case Kind::block: {
            std::size_t k = static_cast<std::size_t>(elim_);
            int c = grevlex_range(a, b, weights, 0, std::min(k, a.nvars()));
            if (c != 0) return c;
            return grevlex_range(a, b, weights, std::min(k, a.nvars()), a.nvars());
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b, const std::vector<int>& weights) const {
        return compare(a, b, weights) < 0;
    }

    std::string name() const {
        switch (kind_) {
        case Kind::grevlex: return "grevlex";
        case Kind::lex: return "lex";
        case Kind::block: return "block(" + std::to_string(elim_) + ")";
        }
        return "?";
    }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && elim_ == o.elim_;
    }

private:
    MonomialOrder(Kind k, int e) : kind_(k), elim_(e) {}

    static int grevlex_range(const Monomial& a, const Monomial& b,
                             const std::vector<int>& weights, std::size_t lo, std::size_t hi) {
        long da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += static_cast<long>(a[i]) * weights[i];
            db += static_cast<long>(b[i]) * weights[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }

    Kind kind_;
    int elim_;
};

} // namespace cayley

#endif
