#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "splitegh/monomial.hpp"
#include "splitegh/scalar.hpp"

namespace splitegh {

/// A polynomial in n variables over a Field. Terms are kept in descending
/// lex order and no stored coefficient is zero.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, LexGreater>;

  Polynomial(int n, Field field) : n_(n), field_(field) {}
  Polynomial(const Monomial& m, const Scalar& c);

  static Polynomial variable(int n, int i, Field field);
  /// sum_j coeffs[j] * x_{j+1}
  static Polynomial linear(std::span<const Scalar> coeffs);

  int num_vars() const noexcept { return n_; }
  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  Scalar coefficient(const Monomial& m) const;

  /// The common degree of all terms; nullopt for non-homogeneous or zero.
  std::optional<int> homogeneous_degree() const;
  bool is_linear_form() const { return homogeneous_degree() == 1; }
  /// Coefficients of a linear form, index i-1 holding the x_i coefficient.
  std::vector<Scalar> linear_coefficients() const;

  void add_term(const Monomial& m, const Scalar& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Monomial& m) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// "x1^2 + x1*x2 - 3/2*x3"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& other) const;

  int n_;
  Field field_;
  TermMap terms_;
};

Polynomial product(std::span<const Polynomial> factors, int n, Field field);

/// Substitutes x_i -> sum_j change[i-1][j-1] x_j. Throws ArgumentError if the
/// matrix is singular (exact determinant) or the wrong size.
Polynomial apply_linear_change(const Polynomial& f, const std::vector<std::vector<Scalar>>& change);

}  // namespace splitegh
