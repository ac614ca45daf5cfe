#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace splitegh {

/// x_1^{e_1} ... x_n^{e_n}. Variables are 1-based in the public interface;
/// x1 is the lex-largest variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int n) { return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  static Monomial variable(int n, int i);
  static Monomial power(int n, int i, int e);

  int num_vars() const noexcept { return static_cast<int>(exps_.size()); }
  int degree() const noexcept { return degree_; }
  int exponent(int i) const { return exps_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const int> exponents() const noexcept { return exps_; }

  bool is_squarefree() const noexcept;
  /// Indices j with x_j | u.
  std::vector<int> support() const;
  /// Largest j with x_j | u, or 0 for the constant monomial.
  int max_variable() const noexcept;

  bool divides(const Monomial& other) const;
  Monomial times_variable(int i) const;
  /// Throws ArgumentError if x_i does not divide the monomial.
  Monomial divided_by_variable(int i) const;
  /// Product with the variables appended; used to lift into a larger ring.
  Monomial with_extra_variable(int exponent) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  /// "1", "x1", "x1^2*x3".
  std::string to_string() const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Degree first, then the first differing exponent decides (larger exponent
/// means lex-larger). Throws DimensionError on mismatched variable counts.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

/// Strict weak ordering that sorts lex-largest first.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Which degree-d monomials enumerate_monomials returns.
class MonomialFilter {
 public:
  enum class Kind { all, squarefree, outside_powers };

  static MonomialFilter all() { return MonomialFilter(Kind::all, {}); }
  static MonomialFilter squarefree() { return MonomialFilter(Kind::squarefree, {}); }
  /// Monomials not divisible by any x_i^{powers[i-1]}.
  static MonomialFilter outside_powers(std::vector<int> powers) {
    return MonomialFilter(Kind::outside_powers, std::move(powers));
  }

  Kind kind() const noexcept { return kind_; }
  const std::vector<int>& powers() const noexcept { return powers_; }
  bool accepts(const Monomial& m) const;

 private:
  MonomialFilter(Kind k, std::vector<int> p) : kind_(k), powers_(std::move(p)) {}
  Kind kind_;
  std::vector<int> powers_;
};

/// All degree-d monomials in n variables passing the filter, strictly
/// descending in lex order.
std::vector<Monomial> enumerate_monomials(int n, int d, const MonomialFilter& filter = MonomialFilter::all());

/// Shared, cached descending-lex list of all degree-d monomials in n
/// variables. This is the column order of every GradedBasis.
std::shared_ptr<const std::vector<Monomial>> monomial_basis(int n, int d);

/// Position of m in monomial_basis(m.num_vars(), m.degree()).
std::size_t monomial_rank(const Monomial& m);

/// C(n+d-1, d); zero for d < 0.
std::uint64_t count_monomials(int n, int d);

}  // namespace splitegh
