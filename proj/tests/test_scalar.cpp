#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jordanian/error.hpp"
#include "jordanian/expression.hpp"
#include "jordanian/parameters.hpp"
#include "support.hpp"

using namespace jordanian;
using jordanian::test::S;

TEST_CASE("symbols order h, s, then by name") {
  CHECK(sym_h() < sym_s());
  CHECK(sym_s() < Symbol("eta"));
  CHECK(Symbol("lambda") < Symbol("mu"));
  CHECK(Symbol("mu") == Symbol("mu"));
  CHECK(is_deformation_parameter(sym_h()));
  CHECK_FALSE(is_deformation_parameter(Symbol("lambda")));
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial h(sym_h());
  const Polynomial s(sym_s());
  CHECK((h + s) * (h - s) == h * h - s * s);
  CHECK((h + s).pow(2) == h * h + Polynomial(2) * h * s + s * s);
  CHECK((h - h).is_zero());
  CHECK(Polynomial(3).is_constant());
  CHECK((h * h * s).total_degree() == 3);
  CHECK((h * h * s).degree_in(sym_h()) == 2);
  CHECK(exact_quotient(h * h - s * s, h + s) == h - s);
  CHECK_THROWS_AS(exact_quotient(h * h + s, h + s), InexactDivision);
}

TEST_CASE("polynomial gcd") {
  const Polynomial h(sym_h());
  const Polynomial s(sym_s());
  const Polynomial l(Symbol("lambda"));
  const Polynomial g = h + l * s;
  CHECK(gcd(g * (h - s), g * (h + Polynomial(2) * s)) == g);
  CHECK(gcd(h, s).is_one());
  CHECK(gcd(Polynomial(), h - s) == h - s);
  CHECK(gcd((h - s).pow(3), (h - s).pow(2) * (h + s)) == (h - s).pow(2));
}

TEST_CASE("rational functions are reduced") {
  const Scalar x = S("(h^2 - s^2)/(h + s)");
  CHECK(x == S("h - s"));
  CHECK(x.is_polynomial());
  CHECK(S("1/(2*h)") * S("2*h") == Scalar(1));
  CHECK(S("h/s") + S("s/h") == S("(h^2 + s^2)/(h*s)"));
  CHECK(S("(h + s)/(h - s)").substitute({{sym_h(), Scalar(3)}, {sym_s(), Scalar(1)}}) == Scalar(2));
  CHECK_THROWS_AS(S("1/(h - h)"), Error);
  CHECK_THROWS_AS(S("h") / Scalar(), DivisionByZero);
  CHECK(S("h^-2") * S("h^2") == Scalar(1));
}

TEST_CASE("parse and format") {
  CHECK(format_scalar(S("h + lambda*s")) == "h + lambda*s");
  CHECK(format_scalar(S("-(h + mu*s)")) == "-h - mu*s");
  CHECK(format_scalar(S("(h+mu*s)^2/(2*h)")) == "(1/2*h^2 + h*mu*s + 1/2*mu^2*s^2)/h");
  CHECK(format_scalar(S("3/6")) == "1/2");
  CHECK(format_scalar(Scalar()) == "0");
  CHECK(format_scalar(S("lambda*s"), ScalarStyle::latex) == "\\lambda s");
  CHECK(latex_symbol("mu") == "\\mu");
  CHECK(latex_symbol("x") == "x");
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(S("h +"), ParseError);
  CHECK_THROWS_AS(S("(h"), ParseError);
  CHECK_THROWS_AS(S("h $ s"), ParseError);
  try {
    S("h + * s");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  SymbolContext closed{"lambda"};
  CHECK_NOTHROW(parse_scalar("h + lambda*s", closed));
  CHECK_THROWS_AS(parse_scalar("h + mu*s", closed), ParseError);
}

TEST_CASE("colour f") {
  const Colour l = colour("lambda");
  const Colour m = colour("mu");
  CHECK(colour_f(l, m) == S("h^2 - lambda*mu*s^2 - h*s*(lambda - mu)"));
  CHECK(colour_f(l, l) == S("(h - lambda*s)*(h + lambda*s)"));
  Deformation p;
  CHECK(p.plus(l) * p.minus(l) == colour_f(l, l));
}
