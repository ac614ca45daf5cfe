#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "splitegh/linalg.hpp"
#include "splitegh/polynomial.hpp"

namespace splitegh {

/// A subspace of S_d (polynomials of degree d in n variables), stored as the
/// canonical reduced row-echelon matrix over the descending-lex monomial
/// basis. Two subspaces are equal iff their matrices are equal.
///
/// The whole space S_d is kept as a flag; its identity matrix is only built
/// if someone asks for the rows.
class GradedBasis {
 public:
  GradedBasis(int n, int degree, Field field);  // zero subspace

  static GradedBasis zero(int n, int degree, Field field) { return GradedBasis(n, degree, field); }
  static GradedBasis full(int n, int degree, Field field);
  static GradedBasis span(int n, int degree, Field field, std::span<const Polynomial> polys);

  int num_vars() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  Field field() const noexcept { return field_; }

  std::size_t dim() const noexcept { return full_ ? ambient_dim_ : echelon_.rank(); }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t codim() const noexcept { return ambient_dim_ - dim(); }
  bool is_full() const noexcept { return full_; }
  bool is_zero() const noexcept { return dim() == 0; }

  /// Canonical RREF rows.
  const Matrix& rows() const;
  std::vector<Polynomial> basis() const;

  bool contains(const Polynomial& f) const;
  bool contains_row(const Row& r) const;
  /// Reduction of f modulo the subspace (pivot columns eliminated).
  Polynomial normal_form(const Polynomial& f) const;
  void reduce_row(Row& r) const;

  /// Adds a vector; returns true if the dimension grew.
  bool insert(Row r);
  bool insert(const Polynomial& f);

  friend bool operator==(const GradedBasis& a, const GradedBasis& b);

 private:
  void mark_full_if_needed();

  int n_;
  int degree_;
  Field field_;
  std::size_t ambient_dim_;
  bool full_ = false;
  Echelon echelon_;
};

/// Coordinates of a homogeneous polynomial of degree d (or zero).
Row to_row(const Polynomial& f, int d);
Polynomial from_row(int n, int d, Field field, const Row& r);

GradedBasis sum_spaces(const GradedBasis& u, const GradedBasis& v);
std::size_t intersect_dim(const GradedBasis& u, const GradedBasis& v);
/// S_1 V in degree d+1.
GradedBasis multiply_space(const GradedBasis& v);
/// f V in degree d + deg f, for homogeneous nonzero f.
GradedBasis multiply_space(const GradedBasis& v, const Polynomial& f);
/// <q>_d = q S_{d - deg q}; the zero space when d < deg q.
GradedBasis principal_component(const Polynomial& q, int d);

/// H(0), ..., H(D). Once a value is zero every later value is zero.
class HilbertFunction {
 public:
  HilbertFunction() = default;
  /// Throws ArgumentError when a zero is followed by a nonzero value.
  explicit HilbertFunction(std::vector<std::uint64_t> values);

  int truncation() const noexcept { return static_cast<int>(values_.size()) - 1; }
  /// Zero for t < 0 by convention; throws for t beyond the truncation.
  std::uint64_t operator[](int t) const;
  /// Like operator[] but zero beyond the truncation as well; only valid when
  /// the stored tail already vanished.
  std::uint64_t at_or_zero(int t) const;
  const std::vector<std::uint64_t>& values() const noexcept { return values_; }
  bool vanishes_at_end() const { return !values_.empty() && values_.back() == 0; }
  HilbertFunction truncated(int degree) const;

  /// "1,5,8,3,0"
  std::string to_string() const;
  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;

 private:
  std::vector<std::uint64_t> values_;
};

/// A finite list of homogeneous generators in a fixed ring.
class IdealPresentation {
 public:
  IdealPresentation(int n, Field field) : n_(n), field_(field) {}
  IdealPresentation(int n, Field field, std::vector<Polynomial> generators);

  int num_vars() const noexcept { return n_; }
  Field field() const noexcept { return field_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  /// Throws ArgumentError for zero or non-homogeneous polynomials.
  void add_generator(Polynomial g);

 private:
  int n_;
  Field field_;
  std::vector<Polynomial> generators_;
};

/// The graded components of an ideal in degrees 0..top(). When the top
/// component is the whole space, every higher component is too and the tower
/// describes the ideal completely ("saturated").
class IdealTower {
 public:
  IdealTower(int n, Field field, std::vector<std::shared_ptr<const GradedBasis>> components);

  int num_vars() const noexcept { return n_; }
  Field field() const noexcept { return field_; }
  int top() const noexcept { return static_cast<int>(components_.size()) - 1; }
  bool saturated() const noexcept { return !components_.empty() && components_.back()->is_full(); }

  /// Zero space for d < 0; full space above a saturated top; throws
  /// ArgumentError for degrees the tower does not know.
  std::shared_ptr<const GradedBasis> component(int d) const;
  bool knows(int d) const noexcept { return d <= top() || saturated(); }

  HilbertFunction hilbert(int max_degree) const;

  /// Minimal generators read off degree by degree: in each degree, a basis of
  /// a complement of S_1 * (previous component).
  IdealPresentation presentation() const;

 private:
  int n_;
  Field field_;
  std::vector<std::shared_ptr<const GradedBasis>> components_;
};

/// Components 0..max_degree, stopping early once a component is full.
IdealTower ideal_tower(const IdealPresentation& ideal, int max_degree);

/// (C : q) as a tower, for a nonzero linear form q. Known through
/// top(C) - 1, or everywhere if C is saturated.
IdealTower colon_tower(const IdealTower& c, const Polynomial& q);
/// C + <q> as a tower, for a nonzero homogeneous q.
IdealTower add_principal_tower(const IdealTower& c, const Polynomial& q);

/// I_d: span of m g over generators g of degree e <= d and monomials m of
/// degree d - e.
GradedBasis ideal_component(const IdealPresentation& ideal, int d);
/// Same subspace as ideal_component, computed from scratch as the span of all
/// products m g without the degree-by-degree recursion. Used by verifiers.
GradedBasis ideal_component_direct(const IdealPresentation& ideal, int d);

HilbertFunction hilbert_function(const IdealPresentation& ideal, int max_degree);

/// { f in S_d : f q_1 ... q_j in I_{d+j} }. Throws ArgumentError when a q is
/// zero or not linear.
GradedBasis colon_component(const IdealPresentation& ideal, std::span<const Polynomial> qs, int d);

IdealPresentation add_principal(const IdealPresentation& ideal, const Polynomial& q);

/// The substitution used by quotient_by_linear: which variable is eliminated
/// and what it is replaced with.
struct LinearQuotientMap {
  int n = 0;
  int pivot = 0;                   // eliminated variable (1-based)
  std::vector<Scalar> replacement;  // x_pivot = sum_j replacement[j-1] x_j, zero at pivot

  /// Image in k[x_j : j != pivot] renamed to x_1..x_{n-1}, order kept.
  Polynomial apply(const Polynomial& f) const;
};

/// Pivots on the last variable with a nonzero coefficient in q. Throws
/// ArgumentError if q is zero or not linear.
LinearQuotientMap linear_quotient_map(const Polynomial& q);

/// The image of I in S/<q>, identified with a polynomial ring in n-1
/// variables. Requires q in I for the Hilbert functions to agree.
IdealPresentation quotient_by_linear(const IdealPresentation& ideal, const Polynomial& q);

}  // namespace splitegh
