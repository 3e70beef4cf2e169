#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "sasaki/expression.hpp"

using namespace sasaki;

TEST_CASE("constant subexpressions fold at parse time") {
  const FieldExpression e = FieldExpression::parse("1/sqrt(2)");
  CHECK(e.print() == "0.7071067811865475");
  CHECK(e.eval(0.3, 0.4, 2).value() ==
        doctest::Approx(0.7071067811865476).epsilon(1e-15));
  CHECK(e.eval(0.3, 0.4, 2).d(1, 0) == 0.0);
}

TEST_CASE("the round-family factor evaluates with correct jets") {
  const FieldExpression e = FieldExpression::parse("0.5*sqrt(2)*(1+u^2+v^2)");
  const Jet2d j = e.eval(0.5, -1.0, 2);
  const double c = 0.5 * std::sqrt(2.0);
  CHECK(j.value() == doctest::Approx(c * 2.25));
  CHECK(j.d(1, 0) == doctest::Approx(c * 1.0));
  CHECK(j.d(0, 1) == doctest::Approx(c * -2.0));
  CHECK(j.d(2, 0) == doctest::Approx(c * 2.0));
  CHECK(j.d(1, 1) == doctest::Approx(0.0));
}

TEST_CASE("syntax errors carry byte offsets") {
  CHECK_THROWS_WITH_AS(FieldExpression::parse("1+*u"),
                       "unexpected character '*' (at offset 2)", ParseError);
  try {
    FieldExpression::parse("1+*u");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(FieldExpression::parse("sin(u"), ParseError);
  CHECK_THROWS_AS(FieldExpression::parse("(u+v"), ParseError);
  CHECK_THROWS_AS(FieldExpression::parse(""), ParseError);
  CHECK_THROWS_AS(FieldExpression::parse("u+"), ParseError);

  try {
    FieldExpression::parse("2*w+1");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);  // unknown identifier 'w'
  }
}

TEST_CASE("precedence and associativity") {
  CHECK(FieldExpression::parse("2^3^2").eval(0, 0, 0).value() ==
        doctest::Approx(512.0));  // right-associative
  CHECK(FieldExpression::parse("-2^2").eval(0, 0, 0).value() ==
        doctest::Approx(-4.0));  // ^ binds above unary minus
  CHECK(FieldExpression::parse("2^-2").eval(0, 0, 0).value() ==
        doctest::Approx(0.25));
  CHECK(FieldExpression::parse("1-2-3").eval(0, 0, 0).value() ==
        doctest::Approx(-4.0));
  CHECK(FieldExpression::parse("12/4/3").eval(0, 0, 0).value() ==
        doctest::Approx(1.0));
  CHECK(FieldExpression::parse("1+2*3").eval(0, 0, 0).value() ==
        doctest::Approx(7.0));
  CHECK(FieldExpression::parse("u - -v").eval(2.0, 3.0, 0).value() ==
        doctest::Approx(5.0));
}

TEST_CASE("whitespace insensitivity") {
  const FieldExpression a = FieldExpression::parse("  1 +  u *v ");
  const FieldExpression b = FieldExpression::parse("1+u*v");
  CHECK(a == b);
  CHECK(a.print() == b.print());
}

TEST_CASE("print/parse round trips") {
  const char* cases[] = {
      "u",
      "u+v",
      "u*v+1",
      "sin(u)*cos(v)",
      "u^2+v^2",
      "-u^2",
      "(u+v)*(u-v)",
      "sqrt(u^2+v^2+1)",
      "atanh(u*0.5)",
      "abs(u)/(v+2)",
      "exp(-(u^2))",
      "u^-2",
      "tanh(sinh(cosh(v)))",
      "ln(u+3)+atan(v)",
      "tan(u*0.1)",
  };
  for (const char* s : cases) {
    CAPTURE(s);
    const FieldExpression e = FieldExpression::parse(s);
    const std::string printed = e.print();
    const FieldExpression back = FieldExpression::parse(printed);
    CHECK(back == e);                   // parse . print = identity on trees
    CHECK(back.print() == printed);     // print . parse = identity on canon
  }
}

TEST_CASE("random expression trees survive the round trip") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> pick(0, 9);
  std::uniform_real_distribution<double> num(0.1, 4.0);

  // build random source strings from a tiny grammar, then canonicalize
  std::function<std::string(int)> gen = [&](int depth) -> std::string {
    if (depth <= 0) {
      switch (pick(rng) % 3) {
        case 0:
          return "u";
        case 1:
          return "v";
        default: {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.3f", num(rng));
          return buf;
        }
      }
    }
    switch (pick(rng)) {
      case 0:
        return "(" + gen(depth - 1) + "+" + gen(depth - 1) + ")";
      case 1:
        return "(" + gen(depth - 1) + "-" + gen(depth - 1) + ")";
      case 2:
        return gen(depth - 1) + "*" + gen(depth - 1);
      case 3:
        return "(" + gen(depth - 1) + ")/(" + gen(depth - 1) + "+9)";
      case 4:
        return "sin(" + gen(depth - 1) + ")";
      case 5:
        return "cos(" + gen(depth - 1) + ")";
      case 6:
        return "exp(" + gen(depth - 1) + "*0.1)";
      case 7:
        return "-" + gen(depth - 1);
      case 8:
        return "(" + gen(depth - 1) + ")^2";
      default:
        return "sqrt(" + gen(depth - 1) + "^2+1)";
    }
  };

  for (int k = 0; k < 200; ++k) {
    const std::string src = gen(3);
    CAPTURE(src);
    const FieldExpression e = FieldExpression::parse(src);
    const std::string canon = e.print();
    const FieldExpression back = FieldExpression::parse(canon);
    CHECK(back == e);
    CHECK(back.print() == canon);
    // evaluation agrees between original and canonical form
    const double a = e.eval(0.37, -0.81, 0).value();
    const double b = back.eval(0.37, -0.81, 0).value();
    CHECK(a == doctest::Approx(b).epsilon(1e-15));
  }
}

TEST_CASE("evaluation-time domain violations carry source locations") {
  const FieldExpression div = FieldExpression::parse("1/(u-v)");
  CHECK_THROWS_AS(div.eval(0.5, 0.5, 1), ParseError);
  try {
    div.eval(0.5, 0.5, 1);
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);  // the '/' operator
  }

  CHECK_THROWS_AS(FieldExpression::parse("ln(u)").eval(-1.0, 0.0, 1), ParseError);
  CHECK_THROWS_AS(FieldExpression::parse("atanh(u)").eval(1.5, 0.0, 1),
                  ParseError);
  CHECK_THROWS_AS(FieldExpression::parse("sqrt(u)").eval(-2.0, 0.0, 1),
                  ParseError);
  // a folded constant that would throw is deferred, then raised at eval
  const FieldExpression deferred = FieldExpression::parse("atanh(2)+u");
  CHECK_THROWS_AS(deferred.eval(0.0, 0.0, 0), ParseError);
}

TEST_CASE("variable exponents go through exp(ln)") {
  const FieldExpression e = FieldExpression::parse("2^u");
  CHECK(e.eval(3.0, 0.0, 1).value() == doctest::Approx(8.0));
  CHECK(e.eval(3.0, 0.0, 1).d(1, 0) == doctest::Approx(8.0 * std::log(2.0)));
  // negative base with a variable exponent is rejected
  CHECK_THROWS_AS(FieldExpression::parse("(u-2)^v").eval(1.0, 0.5, 1), ParseError);
}

TEST_CASE("field adapter evaluates through ScalarJetField") {
  const ScalarJetField f = parse_field_expression("sin(u)*cos(v)");
  const Jet2d j = f.eval(0.3, 0.4, 2);
  CHECK(j.value() == doctest::Approx(std::sin(0.3) * std::cos(0.4)));
  CHECK(j.d(1, 0) == doctest::Approx(std::cos(0.3) * std::cos(0.4)));
}
