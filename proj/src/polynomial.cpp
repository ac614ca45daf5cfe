#include "splitegh/polynomial.hpp"

#include "splitegh/errors.hpp"
#include "splitegh/linalg.hpp"

namespace splitegh {

Polynomial::Polynomial(const Monomial& m, const Scalar& c) : n_(m.num_vars()), field_(c.field()) {
  add_term(m, c);
}

Polynomial Polynomial::variable(int n, int i, Field field) {
  return Polynomial(Monomial::variable(n, i), Scalar::one(field));
}

Polynomial Polynomial::linear(std::span<const Scalar> coeffs) {
  if (coeffs.empty()) throw ArgumentError("linear form needs at least one coefficient");
  const int n = static_cast<int>(coeffs.size());
  Polynomial out(n, coeffs.front().field());
  for (int i = 1; i <= n; ++i) out.add_term(Monomial::variable(n, i), coeffs[static_cast<std::size_t>(i - 1)]);
  return out;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  // descending lex sorts by degree first
  const int top = terms_.begin()->first.degree();
  if (terms_.rbegin()->first.degree() != top) return std::nullopt;
  return top;
}

std::vector<Scalar> Polynomial::linear_coefficients() const {
  if (!is_linear_form()) throw ArgumentError("expected a nonzero linear form, got " + to_string());
  std::vector<Scalar> out(static_cast<std::size_t>(n_), Scalar::zero(field_));
  for (const auto& [m, c] : terms_) out[static_cast<std::size_t>(m.max_variable() - 1)] = c;
  return out;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.num_vars() != n_) throw DimensionError("term " + m.to_string() + " does not belong to a ring in " +
                                               std::to_string(n_) + " variables");
  if (!(c.field() == field_)) throw DimensionError("coefficient from a different field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (n_ != other.n_ || !(field_ == other.field_))
    throw DimensionError("polynomials from different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const { return scaled(-Scalar::one(field_)); }

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial out(n_, field_);
  if (c.is_zero()) return out;
  for (const auto& [m, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, a * c);
  return out;
}

Polynomial Polynomial::times(const Monomial& m) const {
  Polynomial out(n_, field_);
  // multiplying by a fixed monomial preserves lex order
  for (const auto& [u, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), u * m, a);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.n_, a.field_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.n_ == b.n_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    if (m.degree() == 0) {
      s += coeff;
    } else {
      if (coeff != "1") s += coeff + "*";
      s += m.to_string();
    }
  }
  return s;
}

Polynomial product(std::span<const Polynomial> factors, int n, Field field) {
  Polynomial out(Monomial::one(n), Scalar::one(field));
  for (const auto& f : factors) out = out * f;
  return out;
}

Polynomial apply_linear_change(const Polynomial& f, const std::vector<std::vector<Scalar>>& change) {
  const int n = f.num_vars();
  if (change.size() != static_cast<std::size_t>(n))
    throw ArgumentError("change of coordinates must be " + std::to_string(n) + "x" + std::to_string(n));
  if (determinant(f.field(), change).is_zero()) throw ArgumentError("change of coordinates is singular");

  std::vector<Polynomial> images;
  images.reserve(change.size());
  for (const auto& row : change) images.push_back(Polynomial::linear(row));

  Polynomial out(n, f.field());
  for (const auto& [m, c] : f.terms()) {
    Polynomial term(Monomial::one(n), c);
    for (int i = 1; i <= n; ++i)
      for (int e = 0; e < m.exponent(i); ++e) term = term * images[static_cast<std::size_t>(i - 1)];
    out += term;
  }
  return out;
}

}  // namespace splitegh
