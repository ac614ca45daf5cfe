#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "splitegh/egh.hpp"
#include "splitegh/errors.hpp"
#include "splitegh/problem.hpp"

using namespace splitegh;

namespace {

const Field Q = Field::rationals();

ProblemFile load(const std::string& name) {
  std::ifstream in(std::string(SPLITEGH_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

EghInput input_of(const ProblemFile& p) {
  IdealPresentation I(p.num_vars, p.field, p.ideal);
  for (const auto& fs : p.sequence) I.add_generator(product(fs, p.num_vars, p.field));
  return EghInput(I, SplitSequence(p.num_vars, p.field, p.sequence));
}

std::vector<std::string> names(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

}  // namespace

TEST_CASE("input validation") {
  auto seq = QuadraticSplitSequence(Matrix{{Scalar(Q, 1L), Scalar(Q, 1L)}, {Scalar(Q, -1L), Scalar(Q, 1L)}});
  IdealPresentation missing(2, Q);
  missing.add_generator(seq.generator(1));
  CHECK_THROWS_AS(EghInput(missing, seq.split()), ArgumentError);
  SplitSequence bad(2, Q, {{parse_polynomial("x1", 2, Q), parse_polynomial("x2", 2, Q)},
                           {parse_polynomial("x2", 2, Q), parse_polynomial("x1", 2, Q)}});
  CHECK_THROWS_AS(EghInput(bad.ideal(), bad), ArgumentError);
  CHECK(EghInput(seq.ideal(), seq.split()).truncation() == 3);
}

TEST_CASE("the sequence alone gives the pure powers") {
  std::mt19937 rng(1);
  for (int n = 2; n <= 4; ++n) {
    auto seq = gen::quadratic_sequence(rng, n);
    auto result = egh_construct(EghInput(seq.ideal(), seq.split()));
    std::vector<std::string> squares;
    for (int i = 1; i <= n; ++i) squares.push_back(Monomial::power(n, i, 2).to_string());
    CHECK(names(result.generators()) == squares);
    CHECK(result.report.ok);
  }
}

TEST_CASE("five-variable example") {
  auto input = input_of(load("five_vars.prob"));
  CHECK(hilbert_function(input.ideal(), 4).to_string() == "1,5,8,3,0");
  DegreeStep step;
  auto k = theorem21_degree_step(input, 2, {}, &step);
  REQUIRE(step.slices.size() == 2);
  CHECK(step.factor_order == std::vector<std::string>{"x5", "-x1 - x2 - x3 - x4 + x5"});
  CHECK(step.slices[0].hilbert.to_string() == "1,4,4,1");
  CHECK(step.slices[1].hilbert.to_string() == "1,4,2");
  CHECK(k.hilbert().truncated(3).to_string() == "1,5,8,3");

  auto result = egh_construct(input);
  CHECK(result.report.ok);
  CHECK(result.hilbert.to_string() == "1,5,8,3,0,0,0");
  CHECK(names(result.generators()) == std::vector<std::string>{"x1^2", "x1*x2", "x1*x3", "x2^2", "x3^2", "x4^2", "x5^2",
                                                               "x1*x4*x5", "x2*x3*x4"});
  CHECK(result.powers == std::vector<int>{2, 2, 2, 2, 2});
}

TEST_CASE("ordering of factors") {
  auto input = input_of(load("six_vars.prob"));
  auto p = input.sequence().ideal();
  const auto& qs = input.sequence().factors(6);
  auto seq_tower = ideal_tower(p, 5);
  auto tower = step_ideal(seq_tower, ideal_tower(input.ideal(), 5), 2);
  std::vector<std::size_t> dims;
  auto order = order_factors(tower, qs, 2, &dims);
  REQUIRE(order.size() == 3);
  // chain maxima, recomputed by trying every factor in every position
  auto brute = [&](const IdealTower& t, const std::vector<Polynomial>& rest, int d) {
    std::size_t best = 0;
    for (const auto& q : rest) best = std::max(best, intersect_dim(*t.component(d), principal_component(q, d)));
    return best;
  };
  CHECK(dims[0] == brute(tower, qs, 2));
  CHECK(dims[0] == intersect_dim(*tower.component(2), principal_component(order[0], 2)));
  std::vector<Polynomial> single{qs[0]};
  CHECK(order_factors(tower, single, 2).size() == 1);
}

TEST_CASE("six-variable example") {
  auto input = input_of(load("six_vars.prob"));
  CHECK(hilbert_function(input.ideal(), 5).to_string() == "1,6,14,13,2,0");
  auto result = egh_construct(input);
  CHECK(result.report.ok);
  CHECK(result.hilbert.truncated(5).to_string() == "1,6,14,13,2,0");
  CHECK(result.powers == std::vector<int>{2, 2, 2, 2, 2, 3});
  for (const auto& step : result.steps) {
    // telescoping over the slices
    for (int t = 0; t <= step.j_hilbert.truncation(); ++t) {
      std::uint64_t sum = 0;
      for (const auto& s : step.slices) sum += t - s.index <= s.hilbert.truncation() ? s.hilbert[t - s.index] : 0;
      CHECK(step.j_hilbert[t] == sum);
    }
    CHECK(step.k_at_d == step.input_at_d);
    CHECK(step.k_at_next >= step.input_at_next);
  }
  CHECK(kk_bound_check(result.hilbert).ok);
}

TEST_CASE("factor swaps leave slice functions alone") {
  auto input = input_of(load("six_vars.prob"));
  std::vector<std::string> hs;
  CHECK(lemma20_check(input.sequence(), 0, &hs));
  REQUIRE(hs.size() == 3);
  CHECK(hs[0] == hs[1]);
  CHECK(lemma20_check(input.sequence(), 1));
  CHECK(lemma20_check(input.sequence(), 2));

  std::mt19937 rng(5);
  for (int k = 0; k < 8; ++k) {
    const int n = 2 + k % 3;
    auto quad = gen::quadratic_sequence(rng, n);
    auto factors = std::vector<std::vector<Polynomial>>();
    for (int i = 1; i < n; ++i) factors.push_back(quad.split().factors(i));
    // last form: three random linear factors
    factors.push_back({gen::random_form(rng, n, 1, Q, 2), gen::random_form(rng, n, 1, Q, 2), gen::random_form(rng, n, 1, Q, 2)});
    SplitSequence seq(n, Q, factors);
    if (!is_regular_general(seq)) continue;
    for (int j = 0; j <= 2; ++j) CHECK(lemma20_check(seq, j));
  }
}

TEST_CASE("verifier flags tampering") {
  auto input = input_of(load("five_vars.prob"));
  auto result = egh_construct(input);
  auto tampered = result;
  CHECK(tampered.output.erase(Monomial({0, 1, 1, 1, 0})));
  auto report = verify(input, tampered);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.hilbert_equal);
  CHECK(report.first_divergence == 3);

  auto no_power = result;
  CHECK(no_power.output.erase(Monomial({0, 0, 0, 0, 2})));
  auto r2 = verify(input, no_power);
  CHECK_FALSE(r2.contains_powers);
  CHECK(r2.missing_powers == std::vector<std::string>{"x5^2"});
}

TEST_CASE("random inputs with and without recursion") {
  std::mt19937 rng(2024);
  for (int k = 0; k < 12; ++k) {
    const int n = 2 + k % 3;
    auto input = gen::random_egh_input(rng, n);
    EghOptions flat;
    flat.recurse = false;
    auto a = egh_construct(input);
    auto b = egh_construct(input, flat);
    CHECK(a.report.ok);
    CHECK(b.report.ok);
    CHECK(a.output == b.output);
    CHECK(a.hilbert.values() == oracle::hilbert(n, input.ideal().generators(), input.truncation()));
  }
}

TEST_CASE("threads do not change the result") {
  auto input = input_of(load("five_vars.prob"));
  EghOptions two;
  two.threads = 2;
  CHECK(egh_construct(input, two).output == egh_construct(input).output);
}

TEST_CASE("split sequences with higher degrees") {
  std::mt19937 rng(99);
  int ran = 0;
  for (int k = 0; k < 20 && ran < 5; ++k) {
    const int n = 2 + k % 2;
    std::vector<std::vector<Polynomial>> factors;
    for (int i = 1; i <= n; ++i) {
      std::vector<Polynomial> f;
      const int deg = i == n ? 3 : 2;
      for (int j = 0; j < deg; ++j) f.push_back(gen::random_form(rng, n, 1, Q, 2));
      factors.push_back(f);
    }
    SplitSequence seq(n, Q, factors);
    if (!is_regular_general(seq)) continue;
    ++ran;
    auto I = seq.ideal();
    I.add_generator(gen::random_form(rng, n, 2, Q, 2));
    EghInput input(I, seq);
    auto result = egh_construct(input);
    CHECK(result.report.ok);
    CHECK(result.hilbert.values() == oracle::hilbert(n, I.generators(), input.truncation()));
  }
  CHECK(ran == 5);
}
