#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "splitegh/graded.hpp"

namespace splitegh {

class SplitSequence;

/// f_i = x_i * l_i with l_i = sum_j A[i][j] x_j.
class QuadraticSplitSequence {
 public:
  /// Throws ArgumentError unless A is square with entries from one field.
  explicit QuadraticSplitSequence(Matrix a);
  /// Like the constructor, but also runs the minors test and throws
  /// ArgumentError naming the failing subset when it does not pass.
  static QuadraticSplitSequence verified(Matrix a);

  int num_vars() const noexcept { return static_cast<int>(a_.size()); }
  Field field() const noexcept { return field_; }
  const Matrix& matrix() const noexcept { return a_; }
  bool is_verified() const noexcept { return verified_; }

  Polynomial linear_form(int i) const;  // l_i, 1-based
  Polynomial generator(int i) const;    // f_i
  IdealPresentation ideal() const;      // P
  IdealPresentation pure_squares() const;
  SplitSequence split() const;

 private:
  Matrix a_;
  Field field_;
  bool verified_ = false;
};

struct MinorsResult {
  bool regular = true;
  std::vector<int> failing_subset;  // 1-based, empty when regular
};

/// Every principal minor det A[i_1..i_r] is checked; the reported subset is
/// the first failing one in lexicographic order of index sequences.
/// Exponential in n.
MinorsResult is_regular_minors(const Matrix& a);

/// f_1, ..., f_n given as products of nonzero linear forms, with degrees
/// 2 <= a_1 <= ... <= a_n.
class SplitSequence {
 public:
  /// Throws ArgumentError for non-linear or zero factors, fewer than two
  /// factors per form, or degrees out of order.
  SplitSequence(int n, Field field, std::vector<std::vector<Polynomial>> factors);
  /// Same, after a stable sort of the forms by degree.
  static SplitSequence sorted(int n, Field field, std::vector<std::vector<Polynomial>> factors);

  int num_vars() const noexcept { return n_; }
  Field field() const noexcept { return field_; }
  int size() const noexcept { return static_cast<int>(factors_.size()); }
  const std::vector<Polynomial>& factors(int i) const { return factors_.at(static_cast<std::size_t>(i - 1)); }
  const Polynomial& generator(int i) const { return generators_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  int degree(int i) const { return static_cast<int>(factors(i).size()); }
  std::vector<int> degrees() const;
  /// sum (a_i - 1)
  int socle_bound() const;
  IdealPresentation ideal() const;
  /// The A matrix when every form is x_i times a linear form.
  std::optional<QuadraticSplitSequence> quadratic_shape() const;

 private:
  int n_;
  Field field_;
  std::vector<std::vector<Polynomial>> factors_;
  std::vector<Polynomial> generators_;
};

/// n forms in n variables: regular iff the quotient vanishes one degree past
/// the socle bound. False when the number of forms differs from n.
bool is_regular_general(const SplitSequence& seq);

/// The unique combination h of square-free monomials with g - h in P.
/// Requires g homogeneous and the sequence regular (checked by minors when
/// the sequence is not already verified). Degrees above n give 0.
Polynomial squarefree_reduce(const Polynomial& g, const QuadraticSplitSequence& seq);

/// C(d+n, d+1) - C(n, d+1) + sum (n - m(w)) for ws an initial lex segment
/// of the square-free monomials of degree d, 2 <= d <= n.
std::uint64_t s1_growth_formula(int n, int d, std::span<const Monomial> ws);

/// Dimensions around S_1(w) for square-free w and distinct square-free ws of
/// the same degree, none equal to w.
struct S1IntersectionDims {
  std::size_t with_sum = 0;    // S_1(w) against P_{d+1} + S_1(ws)
  std::size_t with_ideal = 0;  // S_1(w) against P_{d+1}
  std::size_t with_span = 0;   // S_1(w) against S_1(ws)
};
S1IntersectionDims s1_intersection_dims(const QuadraticSplitSequence& seq, const Monomial& w,
                                        std::span<const Monomial> ws);

/// span of the given monomials in their common degree d.
GradedBasis monomial_span(int n, int d, Field field, std::span<const Monomial> ms);

}  // namespace splitegh
