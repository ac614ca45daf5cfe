#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splitegh/graded.hpp"
#include "splitegh/monomial.hpp"

namespace splitegh {

/// A monomial ideal known through a truncation degree, stored degree by
/// degree as descending-lex monomial lists.
class MonomialIdeal {
 public:
  MonomialIdeal(int n, int truncation);
  /// Every multiple of a generator up to the truncation degree.
  static MonomialIdeal generated_by(int n, int truncation, const std::vector<Monomial>& generators);

  int num_vars() const noexcept { return n_; }
  int truncation() const noexcept { return static_cast<int>(components_.size()) - 1; }
  /// Throws ArgumentError beyond the truncation.
  bool contains(const Monomial& m) const;
  const std::vector<Monomial>& component(int d) const;

  /// Adds m to degree deg(m); does not close up.
  void insert(const Monomial& m);
  /// Removes m from its degree; returns false if it was absent.
  bool erase(const Monomial& m);

  HilbertFunction hilbert() const;
  /// Monomials not divisible by a member of the previous degree.
  std::vector<Monomial> minimal_generators() const;
  /// First degree d with x_i m outside the ideal for some m in degree d.
  std::optional<int> closure_failure() const;
  IdealPresentation presentation(Field field) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_;
  std::vector<std::vector<Monomial>> components_;
};

/// Pure powers plus, in each degree, an initial lex segment of the monomials
/// outside the pure powers.
class LppIdeal {
 public:
  /// Validates the segments and the ideal property; throws
  /// NotRealizableError if S_1 (M_d + L_d) is not inside M_{d+1} + L_{d+1}.
  LppIdeal(std::vector<int> powers, std::vector<std::size_t> segment_sizes);

  int num_vars() const noexcept { return static_cast<int>(powers_.size()); }
  const std::vector<int>& powers() const noexcept { return powers_; }
  int truncation() const noexcept { return static_cast<int>(segments_.size()) - 1; }
  const std::vector<Monomial>& segment(int d) const;
  std::size_t segment_size(int d) const { return segment(d).size(); }

  HilbertFunction hilbert() const;
  /// Degreewise contents through the truncation.
  MonomialIdeal to_monomial_ideal() const;
  /// Pure powers followed by the minimal segment monomials, each group in
  /// descending lex order.
  std::vector<Monomial> generators() const;

 private:
  std::vector<int> powers_;
  std::vector<std::vector<Monomial>> segments_;
};

/// The t lex-largest degree-d monomials outside <x_i^{a_i}>.
std::vector<Monomial> lexsegment(int n, const std::vector<int>& powers, int d, std::size_t t);

/// The LPP ideal with the given Hilbert function through its truncation;
/// H(0) = 0 gives the whole ring.
/// Throws NotRealizableError when no such ideal exists.
LppIdeal lpp_realize(const HilbertFunction& h, const std::vector<int>& powers);

struct KkResult {
  bool ok = true;
  int degree = 0;             // d of the first violation
  std::uint64_t value = 0;    // H(d+1)
  std::uint64_t bound = 0;    // H(d)^(d)
  std::string to_string() const;
};

/// H(d+1) <= H(d)^(d) for 1 <= d < truncation.
KkResult kk_bound_check(const HilbertFunction& h);

/// The ideal of squares plus square-free lex segments with Hilbert function
/// h in n variables.
LppIdeal squarefree_kk_ideal(const HilbertFunction& h, int n);

/// Whether a monomial ideal is powers-lex-plus-powers through its truncation:
/// contains every x_i^{a_i} of degree within range and is an initial segment
/// outside them in each degree.
bool is_lex_plus_powers(const MonomialIdeal& ideal, const std::vector<int>& powers);

}  // namespace splitegh
