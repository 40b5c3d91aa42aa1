#include <doctest.h>

#include "cayley/complexes.hpp"
#include "cayley/grassmann.hpp"
#include "cayley/zero_dim.hpp"
#include "test_util.hpp"

using namespace cayley;
using cayley_test::random_poly;
using cayley_test::rng;

namespace {
auto QR2() { return PolyRing<Rationals>::make({"x", "y"}, Rationals{}); }
auto P(const char* s, const RingPtr<Rationals>& R) { return parse_poly<Rationals>(s, R); }
}

TEST_CASE("normal form: hand-checked reductions") {
    auto R = QR2();
    // oracle: x^2 y -> y*y in two steps under lex x > y
    auto nf = normal_form<Rationals>(P("x^2*y", R), {P("x^2 - y", R)}, MonomialOrder::lex());
    CHECK(nf == P("y^2", R));
    auto g = P("x^2 + y - 1", R);
    CHECK(normal_form<Rationals>(g, {g}).is_zero());
    auto p = P("x^3 - y", R);
    CHECK(normal_form<Rationals>(p, {}) == p);
}

TEST_CASE("normal form leaves no divisible terms") {
    auto R = QR2();
    auto g = rng(21);
    for (int i = 0; i < 40; ++i) {
        auto p = random_poly(R, g, 4, 5);
        auto b1 = random_poly(R, g, 2, 3);
        auto b2 = random_poly(R, g, 3, 3);
        std::vector<Polynomial<Rationals>> basis;
        if (!b1.is_zero()) basis.push_back(b1);
        if (!b2.is_zero()) basis.push_back(b2);
        auto nf = normal_form(p, basis);
        for (const auto& t : nf.terms())
            for (const auto& b : basis)
                CHECK(!b.leading_term().mono.divides(t.mono));
    }
}

TEST_CASE("buchberger: hand-checked bases") {
    auto R = QR2();
    SUBCASE("lex elimination pair") {
        auto gb = buchberger<Rationals>({P("x^2 - y", R), P("y", R)}, MonomialOrder::lex());
        REQUIRE(gb.elements.size() == 2);
        CHECK(gb.elements[0] == P("y", R));
        CHECK(gb.elements[1] == P("x^2", R));
    }
    SUBCASE("unit ideal") {
        auto gb = buchberger<Rationals>({P("1", R)});
        REQUIRE(gb.elements.size() == 1);
        CHECK(gb.elements[0] == P("1", R));
    }
    SUBCASE("single Pluecker quadric is its own basis") {
        GrassmannContext<Rationals> ctx(2, 4, Rationals{});
        auto q = pluecker_ideal(ctx).gens()[0];
        auto gb = buchberger<Rationals>({q.scaled(mpq_class(3))});
        REQUIRE(gb.elements.size() == 1);
        CHECK(gb.elements[0] == q.monic());
    }
    SUBCASE("empty input") {
        CHECK(buchberger<Rationals>({}).elements.empty());
    }
}

TEST_CASE("buchberger: frozen cross-checked bases (grevlex)") {
    auto R = QR2();
    SUBCASE("circle and hyperbola") {
        auto gb = buchberger<Rationals>({P("x^2 + y^2 - 1", R), P("x*y - 1", R)});
        std::vector<Polynomial<Rationals>> expected = {P("x*y - 1", R), P("x^2 + y^2 - 1", R),
                                                       P("y^3 + x - y", R)};
        REQUIRE(gb.elements.size() == expected.size());
        for (const auto& e : expected)
            CHECK(std::find(gb.elements.begin(), gb.elements.end(), e) != gb.elements.end());
    }
    SUBCASE("x^2 - y and x^3 - x") {
        auto gb = buchberger<Rationals>({P("x^2 - y", R), P("x^3 - x", R)});
        std::vector<Polynomial<Rationals>> expected = {P("y^2 - y", R), P("x*y - x", R),
                                                       P("x^2 - y", R)};
        REQUIRE(gb.elements.size() == expected.size());
        for (const auto& e : expected)
            CHECK(std::find(gb.elements.begin(), gb.elements.end(), e) != gb.elements.end());
    }
    SUBCASE("symmetric functions in three variables") {
        auto R3 = PolyRing<Rationals>::make({"x", "y", "z"}, Rationals{});
        auto gb = buchberger<Rationals>(
            {P("x + y + z", R3), P("x*y + y*z + z*x", R3), P("x*y*z - 1", R3)});
        std::vector<Polynomial<Rationals>> expected = {
            P("x + y + z", R3), P("y^2 + y*z + z^2", R3), P("z^3 - 1", R3)};
        REQUIRE(gb.elements.size() == expected.size());
        for (const auto& e : expected)
            CHECK(std::find(gb.elements.begin(), gb.elements.end(), e) != gb.elements.end());
    }
}

TEST_CASE("ideal membership") {
    auto R = QR2();
    CHECK(ideal_member(P("1", R), std::vector<Polynomial<Rationals>>{P("x", R), P("x + 1", R)}));
    CHECK(!ideal_member(P("x", R), std::vector<Polynomial<Rationals>>{P("x^2", R)}));
    // every generator of the G_{2,4} chart ideal lies in the chart maximal ideal
    GrassmannContext<Rationals> ctx(2, 4, Rationals{});
    auto chart = affine_chart_ideal(ctx);
    auto maximal = irrelevant_ideal(chart.ring);
    for (const auto& g : chart.ideal.gens()) CHECK(maximal.contains(g));
}

TEST_CASE("reduced basis is independent of generator order and duplicates") {
    auto R = QR2();
    auto g = rng(22);
    for (int i = 0; i < 30; ++i) {
        auto f1 = random_poly(R, g, 3, 3);
        auto f2 = random_poly(R, g, 3, 3);
        auto f3 = random_poly(R, g, 2, 2);
        std::vector<Polynomial<Rationals>> gens{f1, f2, f3};
        auto base = buchberger(gens).elements;
        std::vector<Polynomial<Rationals>> shuffled{f3, f1, f2, f1};
        CHECK(buchberger(shuffled).elements == base);
        std::vector<Polynomial<Rationals>> reversed{f3, f2, f1};
        CHECK(buchberger(reversed).elements == base);
    }
}

TEST_CASE("every S-polynomial of a computed basis reduces to zero") {
    auto R = QR2();
    auto g = rng(23);
    for (int i = 0; i < 20; ++i) {
        auto f1 = random_poly(R, g, 3, 3);
        auto f2 = random_poly(R, g, 3, 3);
        if (f1.is_zero() || f2.is_zero()) continue;
        auto gb = buchberger<Rationals>({f1, f2});
        for (std::size_t a = 0; a < gb.elements.size(); ++a)
            for (std::size_t b = a + 1; b < gb.elements.size(); ++b) {
                auto s = s_polynomial(gb.elements[a], gb.elements[b]);
                CHECK(normal_form(s, gb.elements).is_zero());
            }
    }
}

TEST_CASE("membership agrees with linear algebra on graded pieces") {
    // brute-force oracle: p (homogeneous of degree D) lies in the ideal of
    // homogeneous gens iff it is a combination of monomial multiples of the
    // generators in degree D
    auto R = PolyRing<Rationals>::make({"x", "y", "z", "w"}, Rationals{});
    const Rationals k;
    auto g = rng(24);
    for (int trial = 0; trial < 15; ++trial) {
        auto f1 = random_poly(R, g, 2, 3, true);
        auto f2 = random_poly(R, g, 3, 3, true);
        if (f1.is_zero() || f2.is_zero()) continue;
        std::vector<Polynomial<Rationals>> gens{f1, f2};
        for (long d = 1; d <= 5; ++d) {
            auto p = random_poly(R, g, static_cast<int>(d), 4, true);
            if (p.is_zero() || p.degree() != d) continue;

            // oracle
            auto degree_basis = monomials_of_degree(R, d);
            std::map<std::vector<int>, std::size_t> index;
            for (std::size_t i = 0; i < degree_basis.size(); ++i)
                index.emplace(degree_basis[i].exponents(), i);
            auto coords = [&](const Polynomial<Rationals>& q) {
                std::vector<mpq_class> v(degree_basis.size(), 0);
                for (const auto& t : q.terms()) v[index.at(t.mono.exponents())] = t.coeff;
                return v;
            };
            DependencyFinder<Rationals> span(degree_basis.size(), k);
            for (const auto& gen : gens) {
                long gd = gen.degree();
                if (gd > d) continue;
                for (const auto& m : monomials_of_degree(R, d - gd)) {
                    auto prod = gen * Polynomial<Rationals>::term(R, m, mpq_class(1));
                    span.add(coords(prod));
                }
            }
            bool oracle = span.add(coords(p)).has_value();
            CHECK(ideal_member(p, gens) == oracle);
        }
    }
}

TEST_CASE("groebner over prime fields") {
    auto F5 = PolyRing<PrimeField>::make({"x", "y"}, PrimeField(5));
    auto f1 = parse_poly<PrimeField>("x^2 + y^2 + 4", F5);
    auto f2 = parse_poly<PrimeField>("x*y + 4", F5);
    auto gb = buchberger<PrimeField>({f1, f2});
    for (const auto& e : gb.elements) {
        CHECK(e.leading_term().coeff == 1);
        CHECK(normal_form(f1, gb.elements).is_zero());
        CHECK(normal_form(f2, gb.elements).is_zero());
    }
}
