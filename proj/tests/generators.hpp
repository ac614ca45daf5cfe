#pragma once

// Seeded random inputs shared by the unit tests and the acceptance runner.

#include <random>
#include <vector>

#include "splitegh/egh.hpp"
#include "splitegh/regseq.hpp"

namespace gen {

using namespace splitegh;

inline int nonzero_entry(std::mt19937& rng) {
  int v = std::uniform_int_distribution<int>(1, 6)(rng);
  return v <= 3 ? v : 3 - v;  // 1..3, -1..-3
}

/// Entries from {-3..3} minus 0, rejected until every principal minor is
/// nonzero.
inline QuadraticSplitSequence quadratic_sequence(std::mt19937& rng, int n, Field field = Field::rationals()) {
  for (;;) {
    Matrix a(static_cast<std::size_t>(n));
    for (auto& row : a)
      for (int j = 0; j < n; ++j) row.emplace_back(field, nonzero_entry(rng));
    if (is_regular_minors(a).regular) return QuadraticSplitSequence::verified(std::move(a));
  }
}

inline Polynomial random_form(std::mt19937& rng, int n, int d, Field field = Field::rationals(), int terms = 4) {
  const auto basis = monomial_basis(n, d);
  std::uniform_int_distribution<std::size_t> pick(0, basis->size() - 1);
  for (;;) {
    Polynomial f(n, field);
    for (int k = 0; k < terms; ++k) f.add_term((*basis)[pick(rng)], Scalar(field, nonzero_entry(rng)));
    if (!f.is_zero()) return f;
  }
}

inline std::vector<Monomial> random_squarefree_set(std::mt19937& rng, int n, int d) {
  auto all = enumerate_monomials(n, d, MonomialFilter::squarefree());
  std::vector<Monomial> out;
  for (const auto& m : all)
    if (std::bernoulli_distribution(0.4)(rng)) out.push_back(m);
  return out;
}

/// A quadratic split sequence plus up to three extra generators of degree <= 3.
inline EghInput random_egh_input(std::mt19937& rng, int n) {
  const auto seq = quadratic_sequence(rng, n);
  IdealPresentation ideal = seq.ideal();
  const int extra = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int k = 0; k < extra; ++k) {
    const int d = std::uniform_int_distribution<int>(1, 3)(rng);
    ideal.add_generator(random_form(rng, n, d, seq.field(), d == 1 ? 2 : 3));
  }
  return EghInput(ideal, seq.split());
}

}  // namespace gen
