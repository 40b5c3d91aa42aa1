#ifndef CAYLEY_FIELD_HPP
#define CAYLEY_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cayley/error.hpp"

namespace cayley {

// Coefficient domains. Everything is exact: rationals are GMP mpq, prime
// field elements are reduced representatives in [0, p). A field object is
// cheap to copy and carries whatever runtime state the arithmetic needs
// (the modulus, for prime fields).

class Rationals {
public:
    using Elem = mpq_class;

    static constexpr std::uint64_t characteristic() { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw DomainError("division by zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    Elem from_int(long n) const { return Elem(n); }
    Elem from_fraction(const mpz_class& num, const mpz_class& den) const {
        if (sgn(den) == 0) throw DomainError("zero denominator");
        Elem q(num, den);
        q.canonicalize();
        return q;
    }

    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return a.get_str(); }

    bool operator==(const Rationals&) const { return true; }
};

class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
        if (p >= (1ull << 31)) throw DomainError("modulus too large");
    }

    std::uint64_t characteristic() const { return p_; }
    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("division by zero");
        // extended Euclid
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t; t = new_t; new_t = tmp;
            tmp = r - q * new_r; r = new_r; new_r = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_int(long n) const {
        long long m = n % static_cast<long long>(p_);
        if (m < 0) m += static_cast<long long>(p_);
        return static_cast<Elem>(m);
    }
    Elem from_mpz(const mpz_class& n) const {
        mpz_class m = n % static_cast<unsigned long>(p_);
        if (sgn(m) < 0) m += static_cast<unsigned long>(p_);
        return m.get_ui();
    }
    Elem from_fraction(const mpz_class& num, const mpz_class& den) const {
        Elem d = from_mpz(den);
        if (d == 0)
            throw DomainError("denominator not invertible modulo " + std::to_string(p_));
        return mul(from_mpz(num), inv(d));
    }

    bool eq(Elem a, Elem b) const { return a == b; }
    std::string str(Elem a) const { return std::to_string(a); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint64_t p_;
};

} // namespace cayley

#endif
