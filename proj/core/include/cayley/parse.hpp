#ifndef CAYLEY_PARSE_HPP
#define CAYLEY_PARSE_HPP

#include <cctype>
#include <string>

#include "cayley/polynomial.hpp"

namespace cayley {

// --- printing ---------------------------------------------------------
//
// Deterministic form: terms in descending grevlex, `*` between factors,
// `^` for exponents, rational coefficients as a/b. Output re-parses to
// the same polynomial.

inline bool coeff_is_negative(const Rationals&, const mpq_class& c) { return sgn(c) < 0; }
inline bool coeff_is_negative(const PrimeField&, std::uint64_t) { return false; }
inline std::string coeff_abs_str(const Rationals& k, const mpq_class& c) {
    return k.str(sgn(c) < 0 ? mpq_class(-c) : c);
}
inline std::string coeff_abs_str(const PrimeField& k, std::uint64_t c) { return k.str(c); }
inline bool coeff_abs_is_one(const Rationals&, const mpq_class& c) { return c == 1 || c == -1; }
inline bool coeff_abs_is_one(const PrimeField&, std::uint64_t c) { return c == 1; }

template <class F>
std::string Polynomial<F>::str() const {
    if (terms_.empty()) return "0";
    const F& k = ring_->field();
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        bool neg = coeff_is_negative(k, t.coeff);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            int e = t.mono[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->var_name(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out << coeff_abs_str(k, t.coeff);
        } else if (coeff_abs_is_one(k, t.coeff)) {
            out << mono;
        } else {
            out << coeff_abs_str(k, t.coeff) << "*" << mono;
        }
    }
    return out.str();
}

// --- parsing ----------------------------------------------------------
//
// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*
//          term := factor ('*' factor)*
//          factor := atom ['^' nat]
//          atom := nat ['/' nat] | var | '(' expr ')'
// Variables match [A-Za-z][A-Za-z0-9]*; `*` is mandatory between factors;
// whitespace is insignificant.

template <class F>
class PolyParser {
public:
    PolyParser(std::string text, RingPtr<F> ring)
        : text_(std::move(text)), ring_(std::move(ring)) {}

    Polynomial<F> parse() {
        pos_ = 0;
        Polynomial<F> p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Polynomial<F> expr() {
        bool neg = false;
        skip_ws();
        if (peek() == '+' || peek() == '-') neg = (text_[pos_++] == '-');
        Polynomial<F> acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Polynomial<F> t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    Polynomial<F> term() {
        Polynomial<F> acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial<F> factor() {
        Polynomial<F> base = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            mpz_class n = natural();
            if (n < 0 || n > 4096) fail_at("exponent out of range", at);
            return base.pow(static_cast<unsigned>(n.get_ui()));
        }
        return base;
    }

    Polynomial<F> atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial<F> p = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = natural();
            mpz_class den = 1;
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t at = pos_;
                den = natural();
                if (den == 0) fail_at("zero denominator", at);
            }
            typename F::Elem e;
            try {
                e = ring_->field().from_fraction(num, den);
            } catch (const DomainError& err) {
                fail(err.what());
            }
            return Polynomial<F>::constant(ring_, e);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::string name;
            while (pos_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[pos_])))
                name += text_[pos_++];
            auto idx = ring_->index_of(name);
            if (!idx) fail_at("unknown variable " + name, at);
            return Polynomial<F>::variable(ring_, *idx);
        }
        if (pos_ >= text_.size()) fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
        return Polynomial<F>(); // unreachable
    }

    mpz_class natural() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected number");
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return mpz_class(digits);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
        throw ParseError(msg, at);
    }

    std::string text_;
    RingPtr<F> ring_;
    std::size_t pos_ = 0;
};

template <class F>
Polynomial<F> parse_poly(const std::string& text, RingPtr<F> ring) {
    return PolyParser<F>(text, std::move(ring)).parse();
}

} // namespace cayley

#endif
