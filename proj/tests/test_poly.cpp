#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "izeta/poly.hpp"

using namespace izeta;

namespace {

BivariatePoly P(const std::string& s) { return parse_polynomial(s); }

// Small deterministic generator for property tests.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

BivariatePoly random_poly(Rng& rng, int max_deg, int terms) {
    BivariatePoly p;
    for (int i = 0; i < terms; ++i) {
        int a = rng.range(0, max_deg), b = rng.range(0, max_deg);
        int c = rng.range(-4, 4);
        p = p + BivariatePoly::monomial(a, b, Rational(c));
    }
    return p;
}

}  // namespace

TEST_CASE("parser basics") {
    CHECK(P("x^3*y") == BivariatePoly::monomial(3, 1, Rational(1)));
    CHECK(P("x^6+y^4") == BivariatePoly::monomial(6, 0, Rational(1)) +
                              BivariatePoly::monomial(0, 4, Rational(1)));
    CHECK(P("(x+y)^2") == P("x^2+2*x*y+y^2"));
    CHECK(P("1/2*x - 3") == BivariatePoly::monomial(1, 0, Rational(1, 2)) - BivariatePoly(Rational(3)));
    CHECK(P(" x ^ 2 * y ") == P("x^2*y"));
    CHECK(P("-x^3+y^2") == P("y^2") - P("x^3"));
}

TEST_CASE("parser rejects bad input") {
    CHECK_THROWS_AS(P("x+"), ParseError);
    CHECK_THROWS_AS(P("z"), ParseError);
    CHECK_THROWS_AS(P("x^"), ParseError);
    CHECK_THROWS_AS(P("(x"), ParseError);
    CHECK_THROWS_AS(P("x y"), ParseError);
    CHECK_THROWS_AS(P("1/0"), ParseError);
    CHECK_THROWS_AS(P("x^99999999999"), ParseError);
}

TEST_CASE("parse/serialize round-trip") {
    Rng rng(7);
    for (int i = 0; i < 40; ++i) {
        BivariatePoly p = random_poly(rng, 6, 5);
        CHECK(P(p.to_string()) == p);
    }
    CHECK(P("x^6+y^4").to_string() == "x^6+y^4");
    CHECK(P("x^3*y").to_string() == "x^3*y");
}

TEST_CASE("order at origin") {
    CHECK(P("x^3*y").order_at_origin() == 4);
    CHECK(P("x^6+y^4").order_at_origin() == 4);
    CHECK(P("3").order_at_origin() == 0);
    CHECK_THROWS_AS(P("0").order_at_origin(), InputError);
    Rng rng(11);
    for (int i = 0; i < 30; ++i) {
        BivariatePoly p = random_poly(rng, 4, 4);
        BivariatePoly q = random_poly(rng, 4, 4);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK((p * q).order_at_origin() == p.order_at_origin() + q.order_at_origin());
    }
}

TEST_CASE("gcd examples") {
    CHECK(gcd_bivariate(P("x^2*y"), P("x*y^2")) == P("x*y"));
    CHECK(gcd_bivariate(P("x^3*y"), P("x^6+y^4")) == P("1"));
    CHECK(gcd_bivariate(P("2*x^2+2*x*y"), P("0")) == P("x^2+x*y"));
    CHECK(gcd_bivariate(P("0"), P("-3*y")) == P("y"));
    CHECK_THROWS_AS(gcd_bivariate(P("0"), P("0")), InputError);
}

TEST_CASE("gcd property: gcd(p*r, q*r) = r*gcd(p, q) up to normalization") {
    Rng rng(23);
    int done = 0;
    for (int i = 0; done < 25 && i < 200; ++i) {
        BivariatePoly p = random_poly(rng, 3, 3);
        BivariatePoly q = random_poly(rng, 3, 3);
        BivariatePoly r = random_poly(rng, 2, 2);
        if (p.is_zero() || q.is_zero() || r.is_zero()) continue;
        BivariatePoly lhs = gcd_bivariate(p * r, q * r);
        BivariatePoly rhs = (gcd_bivariate(p, q) * r).normalized();
        CHECK(lhs == rhs);
        ++done;
    }
    CHECK(done == 25);
}

TEST_CASE("squarefree decomposition") {
    SUBCASE("visible structure") {
        auto d = squarefree_decompose(P("x*(y^2-x^3)^2"));
        REQUIRE(d.factors.size() == 2);
        CHECK(d.factors[0].factor == P("x"));
        CHECK(d.factors[0].exponent == 1);
        CHECK(d.factors[1].factor == P("y^2-x^3"));
        CHECK(d.factors[1].exponent == 2);
    }
    SUBCASE("monomial") {
        auto d = squarefree_decompose(P("x^2*y^3"));
        REQUIRE(d.factors.size() == 2);
        CHECK(d.factors[0].factor == P("x"));
        CHECK(d.factors[0].exponent == 2);
        CHECK(d.factors[1].factor == P("y"));
        CHECK(d.factors[1].exponent == 3);
    }
    SUBCASE("already squarefree") {
        // Oracle: gcd with both partial derivatives is constant.
        BivariatePoly p = P("x^6+y^4");
        CHECK(gcd_bivariate(gcd_bivariate(p, p.derivative_x()), p.derivative_y()) == P("1"));
        auto d = squarefree_decompose(p);
        REQUIRE(d.factors.size() == 1);
        CHECK(d.factors[0].factor == P("x^6+y^4"));
        CHECK(d.factors[0].exponent == 1);
    }
    SUBCASE("constant input rejected") {
        CHECK_THROWS_AS(squarefree_decompose(P("5")), InputError);
    }
}

TEST_CASE("squarefree recomposition property") {
    Rng rng(41);
    int done = 0;
    for (int i = 0; done < 20 && i < 300; ++i) {
        BivariatePoly a = random_poly(rng, 2, 2);
        BivariatePoly b = random_poly(rng, 2, 2);
        if (a.is_constant() || b.is_constant()) continue;
        BivariatePoly p = a * b * b;
        if (p.is_zero() || p.is_constant()) continue;
        auto d = squarefree_decompose(p);
        BivariatePoly back(d.unit);
        for (auto& f : d.factors) {
            for (int k = 1; k < f.exponent; ++k)
                CHECK(gcd_bivariate(f.factor, f.factor.derivative_x() + f.factor.derivative_y())
                          .total_degree() >= 0);
            back = back * f.factor.pow(f.exponent);
        }
        CHECK(back == p);
        for (std::size_t u = 0; u + 1 < d.factors.size(); ++u)
            CHECK(d.factors[u].exponent < d.factors[u + 1].exponent);
        ++done;
    }
    CHECK(done == 20);
}

TEST_CASE("resultant convention") {
    UnivariatePoly v = UnivariatePoly::variable();
    CHECK(resultant(v * v - UnivariatePoly(Rational(1)), v - UnivariatePoly(Rational(1))) == 0);
    CHECK(resultant(v - UnivariatePoly(Rational(2)), v - UnivariatePoly(Rational(5))) == 3);
    CHECK(resultant(v, UnivariatePoly(Rational(1))) == 1);
    CHECK_THROWS_AS(resultant(UnivariatePoly(), UnivariatePoly()), InputError);
    // Res(p, q) = lc(q)^deg p * prod p over roots of q.
    UnivariatePoly q = (v - UnivariatePoly(Rational(1))) * (v - UnivariatePoly(Rational(3)));
    UnivariatePoly p = v * v + UnivariatePoly(Rational(1));
    CHECK(resultant(p, q) == p.eval(Rational(1)) * p.eval(Rational(3)));
}

TEST_CASE("lifted resultant matches evaluation") {
    // p(v, w) = w^2 - v, q(v, w) = w - v: Res_w = v^2 - v.
    std::vector<UnivariatePoly> p{-UnivariatePoly::variable(), UnivariatePoly(Rational(0)),
                                  UnivariatePoly(Rational(1))};
    std::vector<UnivariatePoly> q{-UnivariatePoly::variable(), UnivariatePoly(Rational(1))};
    UnivariatePoly r = resultant_lifted(p, q);
    UnivariatePoly expect = UnivariatePoly::variable() * UnivariatePoly::variable() -
                            UnivariatePoly::variable();
    CHECK(r == expect);
}

TEST_CASE("univariate rational roots") {
    UnivariatePoly v = UnivariatePoly::variable();
    UnivariatePoly p = (v - UnivariatePoly(Rational(1, 2))) * (v + UnivariatePoly(Rational(3))) *
                       (v * v - UnivariatePoly(Rational(2)));
    auto rr = rational_roots(p * p);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.roots[0] == Rational(-3));
    CHECK(rr.roots[1] == Rational(1, 2));
    CHECK(rr.nonrational_cofactor.degree() == 2);
}

TEST_CASE("exact bivariate division") {
    BivariatePoly p = P("x^2-y^2"), d = P("x+y");
    auto q = p.divide_exact(d);
    REQUIRE(q.has_value());
    CHECK(*q == P("x-y"));
    CHECK(!P("x^2+y").divide_exact(P("x+y")).has_value());
}
