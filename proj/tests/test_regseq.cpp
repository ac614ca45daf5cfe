#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "splitegh/errors.hpp"
#include "splitegh/problem.hpp"
#include "splitegh/regseq.hpp"

using namespace splitegh;

namespace {

const Field Q = Field::rationals();

Polynomial poly(const char* text, int n) { return parse_polynomial(text, n, Q); }

Matrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m;
  for (auto r : rows) {
    Row row;
    for (long v : r) row.emplace_back(Q, v);
    m.push_back(row);
  }
  return m;
}

Matrix identity(int n) {
  Matrix m(static_cast<std::size_t>(n), Row(static_cast<std::size_t>(n), Scalar(Q, 0L)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Scalar(Q, 1L);
  return m;
}

// rows i: -1 left of the diagonal, 1 on and right of it
Matrix staircase(int n) {
  Matrix m;
  for (int i = 0; i < n; ++i) {
    Row row;
    for (int j = 0; j < n; ++j) row.emplace_back(Q, j < i ? -1L : 1L);
    m.push_back(row);
  }
  return m;
}

GradedBasis s1(const Polynomial& g) {
  return multiply_space(GradedBasis::span(g.num_vars(), *g.homogeneous_degree(), g.field(), std::vector{g}));
}

}  // namespace

TEST_CASE("minors test") {
  CHECK(is_regular_minors(identity(4)).regular);
  CHECK(is_regular_minors(staircase(3)).regular);
  CHECK(is_regular_minors(staircase(5)).regular);
  Matrix a = staircase(3);
  a[0][0] = Scalar(Q, 0L);
  auto res = is_regular_minors(a);
  CHECK_FALSE(res.regular);
  CHECK(res.failing_subset == std::vector<int>{1});
  // 2x2 minor on {1,2} vanishes, every diagonal entry is fine
  auto b = is_regular_minors(matrix({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
  CHECK(b.failing_subset == std::vector<int>{1, 2});
  CHECK_THROWS_AS(QuadraticSplitSequence::verified(a), ArgumentError);
  CHECK_THROWS_AS(QuadraticSplitSequence(matrix({{1, 1}})), ArgumentError);
}

TEST_CASE("quadratic sequence generators") {
  QuadraticSplitSequence seq(staircase(3));
  CHECK(seq.generator(1).to_string() == "x1^2 + x1*x2 + x1*x3");
  CHECK(seq.linear_form(2).to_string() == "-x1 + x2 + x3");
  CHECK(seq.split().degrees() == std::vector<int>{2, 2, 2});
  CHECK(seq.split().quadratic_shape()->matrix() == seq.matrix());
}

TEST_CASE("general regularity") {
  std::vector<std::vector<Polynomial>> powers;
  for (int i = 1; i <= 3; ++i) powers.push_back(std::vector<Polynomial>(static_cast<std::size_t>(i + 1), Polynomial::variable(3, i, Q)));
  SplitSequence pp(3, Q, powers);
  CHECK(is_regular_general(pp));
  CHECK(pp.socle_bound() == 6);

  SplitSequence bad(2, Q, {{poly("x1", 2), poly("x2", 2)}, {poly("x2", 2), poly("x1", 2)}});
  CHECK_FALSE(is_regular_general(bad));

  std::vector<std::vector<Polynomial>> ex42;
  for (int i = 1; i <= 5; ++i) {
    Polynomial l(6, Q);
    for (int j = 1; j <= 6; ++j) l.add_term(Monomial::variable(6, j), Scalar(Q, j < i ? -1L : 1L));
    ex42.push_back({Polynomial::variable(6, i, Q), l});
  }
  ex42.push_back({poly("x6", 6), poly("x6", 6), poly("-x1 - x2 - x3 - x4 - x5 + x6", 6)});
  SplitSequence seq42(6, Q, ex42);
  CHECK(is_regular_general(seq42));
  CHECK(seq42.degrees() == std::vector<int>{2, 2, 2, 2, 2, 3});
  CHECK_FALSE(seq42.quadratic_shape());

  CHECK_THROWS_AS(SplitSequence(2, Q, {{poly("x1", 2)}, {poly("x2", 2), poly("x2", 2)}}), ArgumentError);
  CHECK_THROWS_AS(SplitSequence(2, Q, {{poly("x1", 2), poly("x1", 2), poly("x1", 2)}, {poly("x2", 2), poly("x2", 2)}}),
                  ArgumentError);
  CHECK_THROWS_AS(SplitSequence(2, Q, {{poly("x1^2", 2), poly("x1", 2)}, {poly("x2", 2), poly("x2", 2)}}),
                  ArgumentError);
  auto sorted = SplitSequence::sorted(2, Q, {{poly("x1", 2), poly("x1", 2), poly("x1", 2)}, {poly("x2", 2), poly("x2", 2)}});
  CHECK(sorted.degrees() == std::vector<int>{2, 3});
}

TEST_CASE("square-free reduction of the three-variable example") {
  QuadraticSplitSequence seq(staircase(3));
  CHECK(squarefree_reduce(poly("x1^2", 3), seq) == poly("-x1*x2 - x1*x3", 3));
  CHECK(squarefree_reduce(poly("x1^3 + x1^2*x2", 3), seq) == poly("x1*x2*x3", 3));
  CHECK(squarefree_reduce(poly("x1*x2 - 2*x2*x3", 3), seq) == poly("x1*x2 - 2*x2*x3", 3));
  CHECK(squarefree_reduce(poly("x1^4", 3), seq).is_zero());
  CHECK(squarefree_reduce(seq.generator(2), seq).is_zero());
  CHECK_THROWS_AS(squarefree_reduce(poly("x1^2", 3) + poly("x2", 3), seq), ArgumentError);
}

TEST_CASE("square-free reduction properties") {
  std::mt19937 rng(31);
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + k % 4;
    auto seq = gen::quadratic_sequence(rng, n);
    const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    auto g1 = gen::random_form(rng, n, d), g2 = gen::random_form(rng, n, d);
    auto h1 = squarefree_reduce(g1, seq), h2 = squarefree_reduce(g2, seq);
    for (const auto& [m, c] : h1.terms()) CHECK(m.is_squarefree());
    CHECK(ideal_component_direct(seq.ideal(), d).contains(g1 - h1));
    CHECK(squarefree_reduce(h1, seq) == h1);
    CHECK(squarefree_reduce(g1 + g2, seq) == h1 + h2);
  }
}

TEST_CASE("square-free monomials are a basis modulo P") {
  std::mt19937 rng(2);
  for (int k = 0; k < 10; ++k) {
    const int n = 2 + k % 4;
    auto seq = gen::quadratic_sequence(rng, n);
    for (int d = 1; d <= n; ++d) {
      auto sf = enumerate_monomials(n, d, MonomialFilter::squarefree());
      auto span = monomial_span(n, d, Q, sf);
      auto pd = ideal_component(seq.ideal(), d);
      CHECK(intersect_dim(pd, span) == 0);
      CHECK(sum_spaces(pd, span).is_full());
    }
  }
}

TEST_CASE("S_1 growth formula") {
  CHECK(s1_growth_formula(3, 2, {}) == 9);
  std::vector<Monomial> one{Monomial({1, 1, 0})};
  CHECK(s1_growth_formula(3, 2, one) == 10);
  std::vector<Monomial> two{Monomial({1, 1, 0, 0}), Monomial({1, 0, 1, 0})};
  CHECK(s1_growth_formula(4, 2, two) == 19);
  std::vector<Monomial> gap{Monomial({1, 0, 1, 0})};
  CHECK_THROWS_AS(s1_growth_formula(4, 2, gap), ArgumentError);
  CHECK_THROWS_AS(s1_growth_formula(4, 1, {}), ArgumentError);

  // brute force for every initial segment
  std::mt19937 rng(6);
  for (int n = 2; n <= 5; ++n) {
    auto seq = gen::quadratic_sequence(rng, n);
    for (int d = 2; d <= n; ++d) {
      auto sf = enumerate_monomials(n, d, MonomialFilter::squarefree());
      for (std::size_t t = 0; t <= sf.size(); ++t) {
        std::span<const Monomial> ws(sf.data(), t);
        auto space = sum_spaces(ideal_component(seq.ideal(), d), monomial_span(n, d, Q, ws));
        CHECK(multiply_space(space).dim() == s1_growth_formula(n, d, ws));
      }
    }
  }
}

TEST_CASE("intersections with S_1 of a square-free monomial") {
  std::mt19937 rng(14);
  for (int k = 0; k < 12; ++k) {
    const int n = 2 + k % 4;
    auto seq = gen::quadratic_sequence(rng, n);
    for (int d = 1; d < n; ++d) {
      auto sf = enumerate_monomials(n, d, MonomialFilter::squarefree());
      for (const auto& w : sf) {
        std::vector<Monomial> others;
        for (const auto& m : sf)
          if (!(m == w) && rng() % 2) others.push_back(m);
        auto dims = s1_intersection_dims(seq, w, others);
        CHECK(dims.with_ideal == static_cast<std::size_t>(d));
        CHECK(dims.with_sum == dims.with_ideal + dims.with_span);
      }
    }
  }
  QuadraticSplitSequence seq(staircase(3));
  Monomial w({1, 1, 0});
  std::vector<Monomial> dup{w};
  CHECK_THROWS_AS(s1_intersection_dims(seq, w, dup), ArgumentError);
}

TEST_CASE("S_1 of a form outside P meets P in at most its degree") {
  std::mt19937 rng(17);
  int tested = 0;
  for (int k = 0; k < 40; ++k) {
    const int n = 2 + k % 4;
    auto seq = gen::quadratic_sequence(rng, n);
    const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    auto g = gen::random_form(rng, n, d);
    auto pd = ideal_component(seq.ideal(), d);
    if (pd.contains(g)) continue;
    ++tested;
    CHECK(intersect_dim(s1(g), ideal_component(seq.ideal(), d + 1)) <= static_cast<std::size_t>(d));
  }
  CHECK(tested > 20);
}

TEST_CASE("pure squares and quadratic sequences share a Hilbert function") {
  std::mt19937 rng(23);
  for (int k = 0; k < 20; ++k) {
    const int n = 2 + k % 4;
    auto seq = gen::quadratic_sequence(rng, n);
    auto h = hilbert_function(seq.ideal(), n + 1);
    for (int t = 0; t <= n + 1; ++t) CHECK(h[t] == oracle::pure_power_count(std::vector<int>(n, 2), t));
  }
}
