#include <doctest.h>

#include "cayley/grassmann.hpp"
#include "cayley/linalg.hpp"
#include "test_util.hpp"

using namespace cayley;
using cayley_test::random_poly;
using cayley_test::rng;

namespace {
auto QR3() { return PolyRing<Rationals>::make({"x", "y", "z"}, Rationals{}); }
}

TEST_CASE("parse: three-term quadric") {
    GrassmannContext<Rationals> ctx(2, 4, Rationals{});
    auto p = parse_poly<Rationals>("p12*p34 - p13*p24 + p14*p23", ctx.ring());
    CHECK(p.term_count() == 3);
    CHECK(p.is_homogeneous());
    CHECK(p.degree() == 2);
    CHECK(p == pluecker_ideal(ctx).gens()[0]);
}

TEST_CASE("parse: zero and round trips") {
    auto R = QR3();
    CHECK(parse_poly<Rationals>("0", R).is_zero());
    auto p = parse_poly<Rationals>("x^2 + 2*x + 1", R);
    CHECK(parse_poly<Rationals>(p.str(), R) == p);
    // rational coefficients and parentheses
    auto q = parse_poly<Rationals>("1/2*x - (y + 2/3)*z^2", R);
    CHECK(parse_poly<Rationals>(q.str(), R) == q);
}

TEST_CASE("parse: errors carry positions") {
    auto R = QR3();
    CHECK_THROWS_AS(parse_poly<Rationals>("x + ", R), ParseError);
    CHECK_THROWS_AS(parse_poly<Rationals>("x ^ y", R), ParseError);
    CHECK_THROWS_AS(parse_poly<Rationals>("w + 1", R), ParseError); // unknown variable
    CHECK_THROWS_AS(parse_poly<Rationals>("1/0", R), ParseError);
    try {
        parse_poly<Rationals>("x + w", R);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    // coefficient not in the domain: 1/2 over F_2
    auto F2 = PolyRing<PrimeField>::make({"x"}, PrimeField(2));
    CHECK_THROWS_AS(parse_poly<PrimeField>("1/2*x", F2), ParseError);
}

TEST_CASE("parse/print round trip on random polynomials") {
    auto R = QR3();
    auto g = rng(11);
    for (int i = 0; i < 100; ++i) {
        auto p = random_poly(R, g, 4, 6);
        CHECK(parse_poly<Rationals>(p.str(), R) == p);
    }
    auto F7 = PolyRing<PrimeField>::make({"x", "y", "z"}, PrimeField(7));
    for (int i = 0; i < 100; ++i) {
        auto p = random_poly(F7, g, 4, 6);
        CHECK(parse_poly<PrimeField>(p.str(), F7) == p);
    }
}

TEST_CASE("multiplication basics") {
    auto R = QR3();
    auto P = [&](const char* s) { return parse_poly<Rationals>(s, R); };
    CHECK(P("(x+y)*(x-y)") == P("x^2 - y^2"));
    CHECK((P("x+y") * P("0")).is_zero());
    CHECK(P("x+y") * P("x-y") == P("x^2") - P("y^2"));
    auto F2 = PolyRing<PrimeField>::make({"x"}, PrimeField(2));
    CHECK(parse_poly<PrimeField>("(x+1)^2", F2) == parse_poly<PrimeField>("x^2+1", F2));
}

TEST_CASE("ring axioms on random triples") {
    auto R = QR3();
    auto g = rng(12);
    for (int i = 0; i < 50; ++i) {
        auto a = random_poly(R, g, 3, 4);
        auto b = random_poly(R, g, 3, 4);
        auto c = random_poly(R, g, 3, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("ring mismatch is an error") {
    auto R = QR3();
    auto S = PolyRing<Rationals>::make({"u", "v"}, Rationals{});
    auto a = parse_poly<Rationals>("x", R);
    auto b = parse_poly<Rationals>("u", S);
    CHECK_THROWS_AS(a * b, Error);
}

TEST_CASE("substitute") {
    GrassmannContext<Rationals> ctx(2, 4, Rationals{});
    auto ring = ctx.ring();
    auto l5 = hyperplane_form(ctx, 5);
    CHECK(l5 == parse_poly<Rationals>("p14 + p23", ring));
    std::map<std::string, Polynomial<Rationals>> a;
    a.emplace("p14", Polynomial<Rationals>::constant(ring, mpq_class(1)));
    a.emplace("p23", Polynomial<Rationals>::constant(ring, mpq_class(0)));
    CHECK(substitute(l5, a) == Polynomial<Rationals>::constant(ring, mpq_class(1)));
    // identity assignment
    auto q = pluecker_ideal(ctx).gens()[0];
    CHECK(substitute(q, {}) == q);
}

TEST_CASE("substitute: Pluecker quadric vanishes on minors over F7") {
    // oracle: evaluate the six 2x2 minors of random 2x4 matrices
    PrimeField k(7);
    GrassmannContext<PrimeField> ctx(2, 4, k);
    auto quadric = pluecker_ideal(ctx).gens()[0];
    auto g = rng(13);
    int nonzero_samples = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::vector<std::uint64_t>> mat(2, std::vector<std::uint64_t>(4));
        for (auto& row : mat)
            for (auto& e : row) e = cayley_test::random_elem(k, g);
        auto minors = minor_vector(ctx, mat);
        bool allzero = true;
        for (auto v : minors) allzero = allzero && v == 0;
        if (!allzero) ++nonzero_samples;
        CHECK(quadric.evaluate(minors) == 0);
    }
    CHECK(nonzero_samples > 50); // the samples are not degenerate
}

TEST_CASE("partial derivatives") {
    auto R = QR3();
    auto P = [&](const char* s) { return parse_poly<Rationals>(s, R); };
    CHECK(P("x^2*y").derivative("x") == P("2*x*y"));
    CHECK(P("5").derivative("x").is_zero());
    auto F3 = PolyRing<PrimeField>::make({"x"}, PrimeField(3));
    CHECK(parse_poly<PrimeField>("x^3", F3).derivative("x").is_zero());
}

TEST_CASE("Leibniz rule on random pairs") {
    auto R = QR3();
    auto g = rng(14);
    for (int i = 0; i < 50; ++i) {
        auto a = random_poly(R, g, 3, 4);
        auto b = random_poly(R, g, 3, 4);
        for (std::size_t v = 0; v < 3; ++v)
            CHECK((a * b).derivative(v) == a * b.derivative(v) + b * a.derivative(v));
    }
}

TEST_CASE("jacobian") {
    auto R = PolyRing<Rationals>::make({"q12", "q13", "q23", "q24", "q34"}, Rationals{});
    auto gen = parse_poly<Rationals>("q23 - q12*q34 + q13*q24", R);
    auto jac = jacobian<Rationals>({gen}, R->vars());
    REQUIRE(jac.size() == 1);
    std::vector<mpq_class> origin(5, 0);
    std::vector<mpq_class> expected = {0, 0, 1, 0, 0}; // oracle: hand differentiation
    for (std::size_t j = 0; j < 5; ++j) CHECK(jac[0][j].evaluate(origin) == expected[j]);

    CHECK(jacobian<Rationals>({}, R->vars()).empty());

    // l3 = p12 and l4 = p13 give constant single-entry rows
    GrassmannContext<Rationals> ctx(2, 4, Rationals{});
    auto rows = jacobian<Rationals>({hyperplane_form(ctx, 3), hyperplane_form(ctx, 4)},
                                    ctx.ring()->vars());
    int ones = 0;
    for (const auto& row : rows)
        for (const auto& e : row) {
            if (e.is_zero()) continue;
            CHECK(e == Polynomial<Rationals>::constant(ctx.ring(), mpq_class(1)));
            ++ones;
        }
    CHECK(ones == 2);
}

TEST_CASE("matrix rank") {
    auto R = QR3();
    auto one = Polynomial<Rationals>::constant(R, mpq_class(1));
    auto zero = Polynomial<Rationals>::zero(R);
    std::vector<std::vector<Polynomial<Rationals>>> id3 = {
        {one, zero, zero}, {zero, one, zero}, {zero, zero, one}};
    CHECK(matrix_rank(id3) == 3);
    std::vector<std::vector<Polynomial<Rationals>>> z = {{zero, zero}, {zero, zero}};
    CHECK(matrix_rank(z) == 0);
    std::vector<std::vector<Polynomial<Rationals>>> bad = {
        {parse_poly<Rationals>("x", R)}};
    CHECK_THROWS_AS(matrix_rank(bad), Error);
}

TEST_CASE("matrix rank: chart jacobian at the origin has rank 5") {
    GrassmannContext<Rationals> ctx(2, 4, Rationals{});
    auto chart = affine_chart_ideal(ctx);
    auto jac = jacobian(chart.ideal.gens(), chart.ring->vars());
    std::vector<mpq_class> origin(chart.ring->nvars(), 0);
    std::vector<std::vector<Polynomial<Rationals>>> at_origin;
    for (const auto& row : jac) {
        std::vector<Polynomial<Rationals>> r;
        for (const auto& e : row)
            r.push_back(Polynomial<Rationals>::constant(chart.ring, e.evaluate(origin)));
        at_origin.push_back(std::move(r));
    }
    CHECK(matrix_rank(at_origin) == 5); // N = C(4,2). - 1
}

TEST_CASE("monomial orders: exhaustive checks in 3 variables up to degree 4") {
    auto R = QR3();
    const auto& w = R->weights();
    // all monomials of degree <= 4
    std::vector<Monomial> monos;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b)
            for (int c = 0; a + b + c <= 4; ++c) monos.push_back(Monomial({a, b, c}));
    REQUIRE(monos.size() == 35);
    Monomial one(3);
    for (auto order :
         {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(1)}) {
        for (const auto& a : monos) {
            CHECK(order.compare(a, a, w) == 0);
            if (!(a == one)) CHECK(order.compare(one, a, w) < 0); // 1 is minimal
            for (const auto& b : monos) {
                int ab = order.compare(a, b, w);
                CHECK(ab == -order.compare(b, a, w)); // totality + antisymmetry
                for (const auto& c : monos) {
                    // multiplicativity: a < b implies ac < bc
                    if (ab < 0) CHECK(order.compare(a * c, b * c, w) < 0);
                }
            }
        }
    }
}

TEST_CASE("prime field arithmetic") {
    PrimeField k(7);
    CHECK(k.inv(3) == 5);
    CHECK(k.from_int(-1) == 6);
    CHECK(k.from_fraction(mpz_class(1), mpz_class(2)) == 4);
    CHECK_THROWS_AS(PrimeField(6), DomainError);
    CHECK_THROWS_AS(k.from_fraction(mpz_class(1), mpz_class(7)), DomainError);
}

TEST_CASE("weighted homogeneity") {
    auto R = PolyRing<Rationals>::make({"x", "y"}, Rationals{}, {1, 2});
    auto p = parse_poly<Rationals>("x^2 + y", R);
    CHECK(p.is_homogeneous());
    CHECK(p.degree() == 2);
}
