#include <doctest.h>

#include "polygauss/random.hpp"
#include "support/testutil.hpp"

using namespace polygauss;
using namespace testutil;

TEST_CASE("ring grammar") {
    RingPtr ex1 = R("GF(2)[s,t]/(s^2, s*t, t^2)");
    CHECK(ex1->field().modulus() == 2);
    CHECK(ex1->is_quotient());
    CHECK(!ex1->claimed_domain());

    RingPtr free_ring = R("QQ[x,y]");
    CHECK(free_ring->field().kind() == Field::Kind::Rationals);
    CHECK(free_ring->base_vars() == std::vector<std::string>{"x", "y"});

    RingPtr ex2 = R("QQ[a,b,c]/(a^2 - b^2*c) domain");
    CHECK(ex2->claimed_domain());

    CHECK_NOTHROW(R("QQ[]"));
    CHECK_NOTHROW(R("  GF( 5 ) [ p , q ] / ( p^2 + q ) domain "));
}

TEST_CASE("ring grammar rejections") {
    CHECK_THROWS_AS(R("ZZ[x]"), ParseError);        // unknown field
    CHECK_THROWS_AS(R("GF(4)[x]"), ParseError);     // not prime
    CHECK_THROWS_AS(R("QQ[x,x]"), ParseError);      // duplicate
    CHECK_THROWS_AS(R("QQ[X]"), ParseError);        // reserved
    CHECK_THROWS_AS(R("QQ[x] trailing"), ParseError);
    CHECK_THROWS_AS(R("QQ[x]/(X)"), ParseError);    // X inside the defining ideal
    CHECK_THROWS_AS(R("QQ[x"), ParseError);

    try {
        parse_ring("QQ[x,\ny,zz,4]");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 1);
    }
}

TEST_CASE("polynomial grammar") {
    RingPtr r = R("QQ[x,y]");
    CHECK(P("0", r).is_zero());
    Polynomial p = P("1/2*x^2*y - 3", r);
    CHECK(p.terms().size() == 2);
    CHECK(P("2x", r) == P("2*x", r));            // implicit multiplication
    CHECK(P("x y", r) == P("x*y", r));
    CHECK(P("-x + - y", r) == -P("x + y", r));

    RingPtr gf7 = R("GF(7)[x]");
    CHECK(P("1/2*x", gf7) == P("4*x", gf7));     // 2^{-1} = 4 in GF(7)

    CHECK_THROWS_AS(P("w + 1", r), ParseError);  // unknown variable
    CHECK_THROWS_AS(P("x +", r), ParseError);
    CHECK_THROWS_AS(P("1/0", r), ParseError);
    CHECK_THROWS_AS(P("x ^ y", r), ParseError);
    CHECK_THROWS_AS(P("x $ y", r), ParseError);
}

TEST_CASE("canonical printing is X-degree major") {
    RingPtr r = R("QQ[s,t]");
    CHECK(P("s + t*X", r).to_string() == "t*X + s");
    CHECK(P("1 + X + X^2", r).to_string() == "X^2 + X + 1");
    CHECK(P("-s - 1/2*t*X", r).to_string() == "-1/2*t*X - s");
    CHECK(P("s^2*t + s*t^2", r).to_string() == "s^2*t + s*t^2");
    CHECK(Polynomial::zero(r->full_ctx()).to_string() == "0");
}

TEST_CASE("print/parse round trip on random polynomials") {
    std::vector<RingPtr> rings = {R("QQ[x,y]"), R("GF(2)[s,t]"), R("GF(7)[a,b,c]"),
                                  R("QQ[s,t]/(s*t)"), R("QQ[]")};
    Rng rng(61);
    for (const RingPtr& ring : rings) {
        RandomPolyParams params{3, 3, 6, 9};
        for (int i = 0; i < 500; ++i) {
            Polynomial f = random_polynomial(rng, ring, params);
            CHECK(parse_poly(f.to_string(), ring) == f);
        }
    }
}

TEST_CASE("ideal and witness-point lists") {
    RingPtr r = R("QQ[x,y]");
    auto gens = parse_poly_list_base("x^2, x*y - 1", r);
    REQUIRE(gens.size() == 2);
    CHECK(gens[1] == PB("x*y - 1", r));
    CHECK_THROWS_AS(parse_poly_list_base("x, y*X", r), ParseError);
}
