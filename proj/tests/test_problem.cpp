#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "splitegh/errors.hpp"
#include "splitegh/problem.hpp"

using namespace splitegh;

namespace {

const Field Q = Field::rationals();

int error_column(const char* text, int n) {
  try {
    parse_polynomial(text, n, Q);
  } catch (const ParseError& e) {
    return e.column();
  }
  return -1;
}

}  // namespace

TEST_CASE("polynomial grammar") {
  auto f = parse_polynomial("x1^2 + x1*x2 + x1*x3", 3, Q);
  CHECK(f.num_terms() == 3);
  CHECK(f.to_string() == "x1^2 + x1*x2 + x1*x3");
  CHECK(parse_polynomial("  -3/6*x2 *x1+x3^2- 2 * x3^2 ", 3, Q).to_string() == "-1/2*x1*x2 - x3^2");
  CHECK(parse_polynomial("x1*x1", 2, Q).to_string() == "x1^2");
  CHECK(parse_polynomial("3", 2, Q).to_string() == "3");
  CHECK(parse_polynomial("x1 - x1", 2, Q).is_zero());
  CHECK(parse_polynomial("1/2*x1", 1, Field::prime(7)).to_string() == "-3*x1");

  auto fs = parse_factored("(x1)*(x1+x2+x3)", 3, Q);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].to_string() == "x1");
  CHECK(fs[1].to_string() == "x1 + x2 + x3");
}

TEST_CASE("syntax errors carry positions") {
  CHECK(error_column("x1^2 +", 2) == 6);
  CHECK(error_column("x1 + x3", 2) == 6);
  CHECK(error_column("x1 ** x2", 2) == 5);
  CHECK(error_column("x1 x2", 2) == 4);
  CHECK(error_column("1/0*x1", 2) == 1);
  CHECK_THROWS_AS(parse_factored("(x1)*(x1^2)", 2, Q), ParseError);
  CHECK_THROWS_AS(parse_factored("(x1)*(0)", 2, Q), ParseError);
  CHECK_THROWS_AS(parse_factored("(x1", 2, Q), ParseError);
}

TEST_CASE("problem files") {
  const char* text =
      "# comment\n"
      "vars: 3\n"
      "field: prime 32003\n"
      "powers: 2,2,2\n"
      "ideal:\n"
      "  x1*x2 + x2^2   # trailing comment\n"
      "\n"
      "sequence:\n"
      "(x1)*(x1 + x2)\n"
      "(x2)*(x2)\n"
      "(x3)*(x3 - x1)\n";
  auto p = parse_problem(text);
  CHECK(p.num_vars == 3);
  CHECK(p.field == Field::prime(32003));
  CHECK(p.powers == std::vector<int>{2, 2, 2});
  REQUIRE(p.ideal.size() == 1);
  CHECK(p.sequence.size() == 3);
  CHECK(parse_problem(serialize_problem(p)) == p);

  auto line_of = [](const char* t) {
    try {
      parse_problem(t);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("vars: 2\nideal:\nx1^2 +\n") == 3);
  CHECK(line_of("vars: 2\nideal:\nx1^2 + x2\n") == 3);
  CHECK(line_of("vars: 2\nsequence:\n(x1)*(x2^2)\n") == 3);
  CHECK(line_of("ideal:\nx1\n") == 1);
  CHECK(line_of("vars: 2\nfield: prime 8\n") == 2);
  CHECK(line_of("vars: 2\ncolour: red\n") == 2);
  CHECK(line_of("vars: 2\npowers: 2\n") == 1);
}

TEST_CASE("serialization round trip on random problems") {
  std::mt19937 rng(77);
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + k % 3;
    ProblemFile p;
    p.num_vars = n;
    p.field = k % 2 ? Field::rationals() : Field::prime(101);
    for (int g = 0; g < 3; ++g) {
      Polynomial f(n, p.field);
      for (const auto& m : enumerate_monomials(n, 2))
        if (rng() % 2) f.add_term(m, Scalar(p.field, mpq_class(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3))));
      if (!f.is_zero()) p.ideal.push_back(f);
    }
    auto seq = gen::quadratic_sequence(rng, n, p.field);
    for (int i = 1; i <= n; ++i) p.sequence.push_back(seq.split().factors(i));
    if (k % 3 == 0) p.powers = std::vector<int>(static_cast<std::size_t>(n), 2);
    CHECK(parse_problem(serialize_problem(p)) == p);
  }
}
