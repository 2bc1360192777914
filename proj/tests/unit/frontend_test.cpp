#include "doctest.h"

#include "fixtures.hpp"
#include "ore/frontend/format.hpp"
#include "ore/frontend/parser.hpp"
#include "ore/frontend/session.hpp"

using namespace ore;
using fixtures::Vars;

TEST_CASE("parse expressions") {
  Vars a(zoo::weyl(1));
  Element x = a.v(0), d = a.v(1);
  auto e = parseExpression("dx*x", *a.A);
  CHECK(e.kind == Expr::Kind::Product);
  CHECK(e.args.at(0).kind == Expr::Kind::Variable);
  CHECK(e.args.at(0).index == 1);
  CHECK(parseElement("dx*x", a.A) == x * d + a.c(1));

  auto p = parseExpression("(x+3)^2", *a.A);
  CHECK(p.kind == Expr::Kind::Power);
  CHECK(p.exponent == 2);
  CHECK(p.args.at(0).kind == Expr::Kind::Group);
  CHECK(parseElement("-x^2", a.A) == -(x * x));
  CHECK(parseElement("x/2 - 1/3", a.A) == x.scaled(Coeff(Rational(1, 2))) - Element::constant(a.A, Coeff(Rational(1, 3))));

  try {
    parseExpression("x*(", *a.A);
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.position() == 3);
  }
  CHECK_THROWS_AS(parseExpression("x^-1", *a.A), ParseError);
  CHECK_THROWS_AS(parseExpression("(x", *a.A), ParseError);
  CHECK_THROWS_AS(parseExpression("y", *a.A), ParseError);
  CHECK_THROWS_AS(parseExpression("x dx", *a.A), ParseError);
}

TEST_CASE("format elements and fractions") {
  Vars a(zoo::weyl(1));
  Element x = a.v(0), d = a.v(1);
  CHECK(formatElement(d * x) == "x*dx+1");
  CHECK(formatElement(Element(a.A)) == "0");
  auto S = OreSet::monoidal(a.A, {x + a.c(3)});
  CHECK(formatFraction(Fraction::fromLeft(S, x + a.c(3), d)) == "[x+3, dx, _, _]");

  Vars q(fixtures::qshift2());
  Coeff qq = Coeff::parameter(0, 1);
  CHECK(formatElement(q.v(0).pow(2).scaled(qq * qq + Coeff(1)) - q.c(1)) == "(q^2+1)*x^2-1");
}

TEST_CASE("session commands") {
  Session s;
  auto run = [&](const char* line) {
    auto out = s.execute(line);
    REQUIRE(out.size() == 1);
    return renderPlain(out[0]);
  };
  CHECK(s.execute("# comment").empty());
  CHECK(s.execute("algebra A vars=x,dx weyl=x:dx").empty());
  CHECK(s.execute("oreset S monoidal x").empty());
  CHECK(run("ore(x, dx)") == "[3] ore: s~=x^2 r~=x*dx-1 m=2 J={x*dx+2, x^2}");
  CHECK(s.execute("let f = [x, dx, _, _]").empty());
  CHECK(run("eq(f, f)") == "[5] eq: true");
  CHECK(run("print dx*x") == "[6] dx*x: x*dx+1");
  CHECK(run("print f") == "[7] f: [x, dx, _, _]");
  CHECK(run("let g = [dx, 1, _, _]") == "error[8] InvalidArgument: the denominator is not an element of S");
  CHECK(run("print g").rfind("error[9] UndefinedName", 0) == 0);
  CHECK(s.commandCount() == 9);
}

TEST_CASE("algebra definitions with relations") {
  Session s;
  CHECK(s.execute("algebra Q vars=x,Qx params=q rel=\"Qx*x=q*x*Qx\"").empty());
  auto out = s.execute("print Qx*x");
  REQUIRE(out.size() == 1);
  CHECK(out[0].value == "q*x*Qx");
  out = s.execute("algebra B vars=x,s rel=\"x*s=s*x\"");
  REQUIRE(out.size() == 1);
  CHECK(out[0].label == "InvalidPresentation");
  out = s.execute("algebra C vars=x,y,z rel=\"y*x=x*y+x^3\"");
  REQUIRE(out.size() == 1);
  CHECK(out[0].label == "InvalidPresentation");
}
