#include <catch2/catch_amalgamated.hpp>

#include <hilbertforge/io.hpp>

using namespace hilbertforge;

TEST_CASE("parsing the two-line ideal format") {
    auto in = parse_ideal_input("ring: x, y\nideal: x^2, x*y");
    REQUIRE(in.variables == std::vector<std::string>{"x", "y"});
    REQUIRE(in.ideal.generators() == std::vector<ExponentVector>{{1, 1}, {2, 0}});

    // semicolons work as statement separators, whitespace is free-form
    auto in2 = parse_ideal_input("ring:x,y,z;  ideal:  x ^ 2 * y , y*z^2,x*z");
    REQUIRE(in2.variables.size() == 3);
    REQUIRE(in2.ideal.num_generators() == 3);
    REQUIRE(in2.ideal.contains({2, 1, 0}));

    // declaration order fixes coordinates
    auto in3 = parse_ideal_input("ring: b, a\nideal: a^3");
    REQUIRE(in3.ideal.generators() == std::vector<ExponentVector>{{0, 3}});

    // repeated factors multiply
    auto in4 = parse_ideal_input("ring: x\nideal: x*x*x");
    REQUIRE(in4.ideal.generators() == std::vector<ExponentVector>{{3}});

    // the unit ideal and the zero ideal
    REQUIRE(parse_ideal_input("ring: x, y\nideal: 1").ideal.is_unit());
    REQUIRE(parse_ideal_input("ring: x, y\nideal:").ideal.is_zero());

    // longer identifiers
    auto in5 = parse_ideal_input("ring: u1, u2\nideal: u1^2*u2");
    REQUIRE(in5.ideal.generators() == std::vector<ExponentVector>{{2, 1}});
}

TEST_CASE("parse errors carry the line and token") {
    REQUIRE_THROWS_AS(parse_ideal_input(""), ParseError);
    REQUIRE_THROWS_AS(parse_ideal_input("ideal: x"), ParseError);
    REQUIRE_THROWS_AS(parse_ideal_input("ring: x\nring: y"), ParseError);
    REQUIRE_THROWS_AS(parse_ideal_input("ring: x, x\nideal: x"), ParseError);
    REQUIRE_THROWS_AS(parse_ideal_input("ring: x\nideal: y"), ParseError);
    REQUIRE_THROWS_AS(parse_ideal_input("ring: x\nideal: x^0"), ParseError);
    REQUIRE_THROWS_AS(parse_ideal_input("ring: x\nideal: x^"), ParseError);
    REQUIRE_THROWS_AS(parse_ideal_input("ring: x\nideal: x,"), ParseError);
    REQUIRE_THROWS_AS(parse_ideal_input("ring: x\nideal: x\nextra: z"), ParseError);
    REQUIRE_THROWS_AS(parse_ideal_input("ring: 2x\nideal: x"), ParseError);

    try {
        parse_ideal_input("ring: x, y\nideal: x^2, w*y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.line() == 2);
        REQUIRE(e.token() == "w");
        REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
        REQUIRE(std::string(e.what()).find("'w'") != std::string::npos);
    }
}

TEST_CASE("rational wire format") {
    REQUIRE(to_string(Rat(3, 4)) == "3/4");
    REQUIRE(to_string(Rat(-6)) == "-6");
    REQUIRE(to_string(Rat(0)) == "0");
    REQUIRE(parse_rational("2/4") == Rat(1, 2));
    REQUIRE(parse_rational("-7") == Rat(-7));
    REQUIRE_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("monomial rendering") {
    REQUIRE(monomial_to_string({2, 1}, {"x", "y"}) == "x^2*y");
    REQUIRE(monomial_to_string({0, 0}, {"x", "y"}) == "1");
    REQUIRE(monomial_to_string({0, 3, 1}, {"x", "y", "z"}) == "y^3*z");
}

TEST_CASE("series serialization") {
    auto hs = quotient_series(MonomialIdeal::make(2, {{2, 0}, {1, 1}}));
    REQUIRE(to_json(hs).dump() == R"({"n":2,"shift":0,"numerator":[1,0,-2,1]})");
    auto ideal = ideal_series(MonomialIdeal::make(2, {{1, 0}, {0, 1}}).power(2));
    REQUIRE(to_json(ideal).dump() == R"({"n":2,"shift":2,"numerator":[3,-2]})");
}

TEST_CASE("polynomial serialization") {
    auto P = hilbert_polynomial(HilbertSeries::free_module(2), 0);
    REQUIRE(to_json(P).dump() == R"({"i":0,"d":2,"e":["1","0"]})");
}

TEST_CASE("h-vector serialization") {
    auto m2 = ideal_series(MonomialIdeal::make(2, {{1, 0}, {0, 1}}).power(2));
    REQUIRE(to_json(m2.h_vector()).dump() == R"({"offset":2,"h":[3,-2]})");
}

TEST_CASE("shift multiset serialization") {
    BigradedAlgebra B(2, 2, {1, 2});
    auto dec = strand_decomposition(B, {0, 0}, 2);
    REQUIRE(to_json(dec).dump() == R"({"shifts":{"2":1,"3":1,"4":1}})");
}

TEST_CASE("scan serialization") {
    auto scan = scan_power_coefficients(MonomialIdeal::make(2, {{1, 0}, {0, 1}}), 1, 2, 6);
    auto fit = newton_fit(scan);
    BoundContext ctx;
    ctx.nu = 2;
    ctx.iterate = 1;
    ctx.j = 2;
    fit.verdicts = verify_degree_bounds(fit, ctx);
    auto j = to_json(scan, fit);
    REQUIRE(j["i"] == 1);
    REQUIRE(j["j"] == 2);
    REQUIRE(j["k"].size() == 6);
    REQUIRE(j["e"][2] == "-6");
    REQUIRE(j["dim"][0] == 2);
    REQUIRE(j["fit"]["coeffs"].size() == 3);
    REQUIRE(j["fit"]["stable_from"] == 1);
    REQUIRE(j["fit"]["verdicts"][0]["bound"] == "nu+j-1");
    REQUIRE(j["fit"]["verdicts"][0]["pass"] == true);
    REQUIRE_FALSE(j.contains("truncated"));

    // unstable fits serialize distinctly
    KPolynomial unstable;
    unstable.window = 3;
    REQUIRE(to_json(unstable).dump() == R"({"unstable":true,"window":3})");
}

TEST_CASE("betti serialization") {
    auto bt = betti_table(MonomialIdeal::make(2, {{1, 0}, {0, 1}}), 2);
    REQUIRE(to_json(bt).dump() == R"({"k":2,"rows":{"0":{"2":3},"1":{"3":2}}})");
    REQUIRE(betti_to_csv(bt) == "l,t,beta\n0,2,3\n1,3,2\n");
}

TEST_CASE("scan csv") {
    auto scan = scan_power_coefficients(MonomialIdeal::make(2, {{1, 0}, {0, 1}}), 1, 2, 3);
    REQUIRE(scan_to_csv(scan) == "k,e,dim\n1,-1,2\n2,-3,2\n3,-6,2\n");
}
