#include "splitegh/regseq.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "splitegh/errors.hpp"
#include "splitegh/macaulay.hpp"

namespace splitegh {

namespace {

std::string subset_string(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

Matrix principal_submatrix(const Matrix& a, const std::vector<int>& idx) {
  Matrix sub;
  for (int i : idx) {
    Row r;
    for (int j : idx) r.push_back(a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
    sub.push_back(std::move(r));
  }
  return sub;
}

}  // namespace

// ------------------------------------------------------ QuadraticSplitSequence

QuadraticSplitSequence::QuadraticSplitSequence(Matrix a) : a_(std::move(a)) {
  if (a_.empty()) throw ArgumentError("matrix must have at least one row");
  field_ = a_.front().empty() ? Field::rationals() : a_.front().front().field();
  for (const Row& r : a_) {
    if (r.size() != a_.size()) throw ArgumentError("matrix must be square");
    for (const Scalar& c : r)
      if (!(c.field() == field_)) throw ArgumentError("matrix entries from different fields");
  }
}

QuadraticSplitSequence QuadraticSplitSequence::verified(Matrix a) {
  QuadraticSplitSequence seq(std::move(a));
  MinorsResult res = is_regular_minors(seq.a_);
  if (!res.regular)
    throw ArgumentError("principal minor on " + subset_string(res.failing_subset) + " vanishes; not a regular sequence");
  seq.verified_ = true;
  return seq;
}

Polynomial QuadraticSplitSequence::linear_form(int i) const {
  return Polynomial::linear(a_.at(static_cast<std::size_t>(i - 1)));
}

Polynomial QuadraticSplitSequence::generator(int i) const {
  return Polynomial::variable(num_vars(), i, field_) * linear_form(i);
}

IdealPresentation QuadraticSplitSequence::ideal() const {
  IdealPresentation p(num_vars(), field_);
  for (int i = 1; i <= num_vars(); ++i) p.add_generator(generator(i));
  return p;
}

IdealPresentation QuadraticSplitSequence::pure_squares() const {
  IdealPresentation m(num_vars(), field_);
  for (int i = 1; i <= num_vars(); ++i) m.add_generator(Polynomial(Monomial::power(num_vars(), i, 2), Scalar::one(field_)));
  return m;
}

SplitSequence QuadraticSplitSequence::split() const {
  std::vector<std::vector<Polynomial>> factors;
  for (int i = 1; i <= num_vars(); ++i)
    factors.push_back({Polynomial::variable(num_vars(), i, field_), linear_form(i)});
  return SplitSequence(num_vars(), field_, std::move(factors));
}

MinorsResult is_regular_minors(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  for (const Row& r : a)
    if (r.size() != a.size()) throw ArgumentError("matrix must be square");
  if (n == 0) return {};
  const Field field = a.front().front().field();

  // depth-first over increasing index sequences visits them in lex order
  MinorsResult out;
  std::vector<int> idx;
  std::function<bool(int)> visit = [&](int next) {
    for (int i = next; i <= n; ++i) {
      idx.push_back(i);
      if (determinant(field, principal_submatrix(a, idx)).is_zero()) {
        out.regular = false;
        out.failing_subset = idx;
        return false;
      }
      if (!visit(i + 1)) return false;
      idx.pop_back();
    }
    return true;
  };
  visit(1);
  return out;
}

// --------------------------------------------------------------- SplitSequence

SplitSequence::SplitSequence(int n, Field field, std::vector<std::vector<Polynomial>> factors)
    : n_(n), field_(field), factors_(std::move(factors)) {
  if (n < 1) throw ArgumentError("a sequence needs at least one variable");
  int prev = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& fs = factors_[i];
    if (fs.size() < 2)
      throw ArgumentError("form " + std::to_string(i + 1) + " has degree " + std::to_string(fs.size()) +
                          "; degrees must be at least 2");
    if (static_cast<int>(fs.size()) < prev) throw ArgumentError("degrees of the sequence must be non-decreasing");
    prev = static_cast<int>(fs.size());
    for (const auto& q : fs) {
      if (q.num_vars() != n || !(q.field() == field))
        throw DimensionError("factor " + q.to_string() + " lives in a different ring");
      if (!q.is_linear_form()) throw ArgumentError("factor " + q.to_string() + " is not a nonzero linear form");
    }
    generators_.push_back(product(fs, n, field));
  }
}

SplitSequence SplitSequence::sorted(int n, Field field, std::vector<std::vector<Polynomial>> factors) {
  std::stable_sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return SplitSequence(n, field, std::move(factors));
}

std::vector<int> SplitSequence::degrees() const {
  std::vector<int> out;
  for (const auto& fs : factors_) out.push_back(static_cast<int>(fs.size()));
  return out;
}

int SplitSequence::socle_bound() const {
  int s = 0;
  for (const auto& fs : factors_) s += static_cast<int>(fs.size()) - 1;
  return s;
}

IdealPresentation SplitSequence::ideal() const { return IdealPresentation(n_, field_, generators_); }

std::optional<QuadraticSplitSequence> SplitSequence::quadratic_shape() const {
  if (size() != n_) return std::nullopt;
  Matrix a;
  for (int i = 1; i <= n_; ++i) {
    const auto& fs = factors(i);
    if (fs.size() != 2) return std::nullopt;
    // f_i = c x_i * l, so l_i = c l
    std::optional<Row> row;
    for (int k = 0; k < 2 && !row; ++k) {
      const auto& q = fs[static_cast<std::size_t>(k)];
      if (q.num_terms() != 1 || q.terms().begin()->first != Monomial::variable(n_, i)) continue;
      const Scalar c = q.terms().begin()->second;
      Row r = fs[static_cast<std::size_t>(1 - k)].linear_coefficients();
      for (auto& e : r) e *= c;
      row = std::move(r);
    }
    if (!row) return std::nullopt;
    a.push_back(std::move(*row));
  }
  return QuadraticSplitSequence(std::move(a));
}

bool is_regular_general(const SplitSequence& seq) {
  if (seq.size() != seq.num_vars()) return false;
  const int top = seq.socle_bound() + 1;
  return hilbert_function(seq.ideal(), top)[top] == 0;
}

// ----------------------------------------------------------- square-free forms

Polynomial squarefree_reduce(const Polynomial& g, const QuadraticSplitSequence& seq) {
  const int n = seq.num_vars();
  const Field field = seq.field();
  if (g.num_vars() != n || !(g.field() == field)) throw DimensionError("polynomial from a different ring");
  if (g.is_zero()) return g;
  auto deg = g.homogeneous_degree();
  if (!deg) throw ArgumentError("square-free reduction needs a homogeneous polynomial, got " + g.to_string());
  if (!seq.is_verified()) {
    MinorsResult res = is_regular_minors(seq.matrix());
    if (!res.regular)
      throw ArgumentError("principal minor on " + subset_string(res.failing_subset) + " vanishes; not a regular sequence");
  }
  const Matrix& a = seq.matrix();

  // x_i w modulo P for square-free w with x_i | w: solve sum_{j in A} c_j A[j][k]
  // = delta_{ik} on A = supp(w), so x_i = sum c_j l_j - sum_{k not in A} e_k x_k.
  auto rewrite = [&](int i, const Monomial& w) {
    const std::vector<int> supp = w.support();
    Matrix sub = principal_submatrix(a, supp);
    Row rhs(supp.size(), Scalar::zero(field));
    for (std::size_t k = 0; k < supp.size(); ++k)
      if (supp[k] == i) rhs[k] = Scalar::one(field);
    std::optional<Row> c = solve_left(field, sub, rhs);
    if (!c) throw InvariantError("principal submatrix on the support of " + w.to_string() + " is singular");
    Polynomial out(n, field);
    for (int k = 1; k <= n; ++k) {
      if (w.exponent(k) != 0) continue;
      Scalar e = Scalar::zero(field);
      for (std::size_t j = 0; j < supp.size(); ++j)
        e -= (*c)[j] * a[static_cast<std::size_t>(supp[j] - 1)][static_cast<std::size_t>(k - 1)];
      if (!e.is_zero()) out.add_term(w.times_variable(k), e);
    }
    return out;
  };

  std::unordered_map<Monomial, Polynomial, MonomialHash> memo;
  std::function<Polynomial(const Monomial&)> reduce = [&](const Monomial& u) -> Polynomial {
    if (u.is_squarefree()) return Polynomial(u, Scalar::one(field));
    if (auto it = memo.find(u); it != memo.end()) return it->second;
    int i = 1;
    while (u.exponent(i) < 2) ++i;
    const Polynomial inner = reduce(u.divided_by_variable(i));
    Polynomial out(n, field);
    for (const auto& [w, c] : inner.terms()) {
      if (w.exponent(i) == 0)
        out.add_term(w.times_variable(i), c);
      else
        out += rewrite(i, w).scaled(c);
    }
    memo.emplace(u, out);
    return out;
  };

  Polynomial h(n, field);
  for (const auto& [u, c] : g.terms()) h += reduce(u).scaled(c);

  if (!ideal_component(seq.ideal(), *deg).contains(g - h))
    throw InvariantError("square-free reduction of " + g.to_string() + " gave " + h.to_string() +
                         ", which differs from it modulo P");
  return h;
}

std::uint64_t s1_growth_formula(int n, int d, std::span<const Monomial> ws) {
  if (d < 2 || d > n) throw ArgumentError("the growth formula needs 2 <= d <= n");
  const auto segment = enumerate_monomials(n, d, MonomialFilter::squarefree());
  if (ws.size() > segment.size() || !std::equal(ws.begin(), ws.end(), segment.begin()))
    throw ArgumentError("monomials must be an initial lex segment of the square-free monomials of degree " +
                        std::to_string(d));
  mpz_class total = binomial(d + n, d + 1) - binomial(n, d + 1);
  for (const auto& w : ws) total += n - w.max_variable();
  return total.get_ui();
}

GradedBasis monomial_span(int n, int d, Field field, std::span<const Monomial> ms) {
  GradedBasis out(n, d, field);
  for (const auto& m : ms) {
    if (m.num_vars() != n || m.degree() != d) throw DimensionError("monomial " + m.to_string() + " is not in S_" + std::to_string(d));
    out.insert(Polynomial(m, Scalar::one(field)));
  }
  return out;
}

S1IntersectionDims s1_intersection_dims(const QuadraticSplitSequence& seq, const Monomial& w,
                                        std::span<const Monomial> ws) {
  const int n = seq.num_vars();
  const int d = w.degree();
  if (!w.is_squarefree()) throw ArgumentError(w.to_string() + " is not square-free");
  std::unordered_set<Monomial, MonomialHash> seen;
  for (const auto& v : ws) {
    if (!v.is_squarefree() || v.degree() != d)
      throw ArgumentError(v.to_string() + " is not a square-free monomial of degree " + std::to_string(d));
    if (v == w) throw ArgumentError(v.to_string() + " coincides with the tested monomial");
    if (!seen.insert(v).second) throw ArgumentError(v.to_string() + " is listed twice");
  }
  const Field field = seq.field();
  const GradedBasis s1w = multiply_space(monomial_span(n, d, field, std::span(&w, 1)));
  const GradedBasis s1ws = multiply_space(monomial_span(n, d, field, ws));
  const GradedBasis p = ideal_component(seq.ideal(), d + 1);
  return {intersect_dim(s1w, sum_spaces(p, s1ws)), intersect_dim(s1w, p), intersect_dim(s1w, s1ws)};
}

}  // namespace splitegh
