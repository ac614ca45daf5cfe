#include "splitegh/graded.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "splitegh/errors.hpp"

namespace splitegh {

namespace {

// shift_table(n, d)[k][i-1] = column of x_i * m_k in degree d+1, where m_k is
// column k of degree d.
std::shared_ptr<const std::vector<std::vector<std::size_t>>> shift_table(int n, int d) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const std::vector<std::vector<std::size_t>>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, d}];
  if (!slot) {
    auto basis = monomial_basis(n, d);
    auto table = std::make_shared<std::vector<std::vector<std::size_t>>>();
    table->reserve(basis->size());
    for (const auto& m : *basis) {
      std::vector<std::size_t> row(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) row[static_cast<std::size_t>(i - 1)] = monomial_rank(m.times_variable(i));
      table->push_back(std::move(row));
    }
    slot = std::move(table);
  }
  return slot;
}

std::shared_ptr<const Matrix> identity_matrix(std::size_t size, Field field) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::uint64_t>, std::shared_ptr<const Matrix>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{size, field.characteristic()}];
  if (!slot) {
    auto m = std::make_shared<Matrix>(size, Row(size, Scalar::zero(field)));
    for (std::size_t i = 0; i < size; ++i) (*m)[i][i] = Scalar::one(field);
    slot = std::move(m);
  }
  return slot;
}

// r (degree d) times the linear form with coefficients `lin`, in degree d+1.
Row shift_by_linear(const Row& r, int n, int d, std::span<const Scalar> lin, Field field) {
  auto table = shift_table(n, d);
  Row out(count_monomials(n, d + 1), Scalar::zero(field));
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k].is_zero()) continue;
    const auto& targets = (*table)[k];
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (!lin[i].is_zero()) out[targets[i]] += r[k] * lin[i];
  }
  return out;
}

Row shift_by_variable(const Row& r, int n, int d, int var, Field field) {
  auto table = shift_table(n, d);
  Row out(count_monomials(n, d + 1), Scalar::zero(field));
  for (std::size_t k = 0; k < r.size(); ++k)
    if (!r[k].is_zero()) out[(*table)[k][static_cast<std::size_t>(var - 1)]] = r[k];
  return out;
}

Row unit_row(std::size_t size, std::size_t k, Field field) {
  Row r(size, Scalar::zero(field));
  r[k] = Scalar::one(field);
  return r;
}

void require_linear(const Polynomial& q) {
  if (!q.is_linear_form()) throw ArgumentError("expected a nonzero linear form, got " + q.to_string());
}

}  // namespace

// ---------------------------------------------------------------- GradedBasis

GradedBasis::GradedBasis(int n, int degree, Field field)
    : n_(n),
      degree_(degree),
      field_(field),
      ambient_dim_(count_monomials(n, degree)),
      echelon_(field, count_monomials(n, degree)) {
  mark_full_if_needed();
}

GradedBasis GradedBasis::full(int n, int degree, Field field) {
  GradedBasis b(n, degree, field);
  b.full_ = true;
  b.echelon_ = Echelon(field, 0);
  return b;
}

GradedBasis GradedBasis::span(int n, int degree, Field field, std::span<const Polynomial> polys) {
  GradedBasis b(n, degree, field);
  for (const auto& p : polys) b.insert(p);
  return b;
}

void GradedBasis::mark_full_if_needed() {
  // a full space drops its matrix and answers from the flag
  if (!full_ && echelon_.rank() == ambient_dim_ && ambient_dim_ > 0) {
    full_ = true;
    echelon_ = Echelon(field_, 0);
  }
}

const Matrix& GradedBasis::rows() const {
  if (!full_) return echelon_.rows();
  // cached identity matrices live for the whole process
  return *identity_matrix(ambient_dim_, field_);
}

std::vector<Polynomial> GradedBasis::basis() const {
  std::vector<Polynomial> out;
  for (const Row& r : rows()) out.push_back(from_row(n_, degree_, field_, r));
  return out;
}

void GradedBasis::reduce_row(Row& r) const {
  if (r.size() != ambient_dim_) throw DimensionError("vector length does not match the graded component");
  if (full_) {
    std::fill(r.begin(), r.end(), Scalar::zero(field_));
    return;
  }
  echelon_.reduce(r);
}

bool GradedBasis::contains_row(const Row& r) const {
  if (full_) return true;
  return echelon_.contains(r);
}

bool GradedBasis::contains(const Polynomial& f) const { return contains_row(to_row(f, degree_)); }

Polynomial GradedBasis::normal_form(const Polynomial& f) const {
  Row r = to_row(f, degree_);
  reduce_row(r);
  return from_row(n_, degree_, field_, r);
}

bool GradedBasis::insert(Row r) {
  if (full_) return false;
  if (r.size() != ambient_dim_) throw DimensionError("vector length does not match the graded component");
  bool grew = echelon_.insert(std::move(r));
  if (grew) mark_full_if_needed();
  return grew;
}

bool GradedBasis::insert(const Polynomial& f) {
  if (f.num_vars() != n_) throw DimensionError("polynomial from a different ring");
  return insert(to_row(f, degree_));
}

bool operator==(const GradedBasis& a, const GradedBasis& b) {
  if (a.n_ != b.n_ || a.degree_ != b.degree_ || !(a.field_ == b.field_)) return false;
  if (a.full_ || b.full_) return a.full_ == b.full_;
  return a.echelon_.rows() == b.echelon_.rows();
}

Row to_row(const Polynomial& f, int d) {
  Row r(count_monomials(f.num_vars(), d), Scalar::zero(f.field()));
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != d)
      throw ArgumentError("polynomial " + f.to_string() + " is not homogeneous of degree " + std::to_string(d));
    r[monomial_rank(m)] = c;
  }
  return r;
}

Polynomial from_row(int n, int d, Field field, const Row& r) {
  auto basis = monomial_basis(n, d);
  Polynomial f(n, field);
  for (std::size_t k = 0; k < r.size(); ++k)
    if (!r[k].is_zero()) f.add_term((*basis)[k], r[k]);
  return f;
}

static void require_same_component(const GradedBasis& u, const GradedBasis& v) {
  if (u.num_vars() != v.num_vars() || u.degree() != v.degree() || !(u.field() == v.field()))
    throw DimensionError("subspaces live in different graded components");
}

GradedBasis sum_spaces(const GradedBasis& u, const GradedBasis& v) {
  require_same_component(u, v);
  if (u.is_full() || v.dim() == 0) return u;
  if (v.is_full() || u.dim() == 0) return v;
  const GradedBasis& big = u.dim() >= v.dim() ? u : v;
  const GradedBasis& small = u.dim() >= v.dim() ? v : u;
  GradedBasis out = big;
  for (const Row& r : small.rows()) {
    if (out.is_full()) break;
    out.insert(r);
  }
  return out;
}

std::size_t intersect_dim(const GradedBasis& u, const GradedBasis& v) {
  return u.dim() + v.dim() - sum_spaces(u, v).dim();
}

GradedBasis multiply_space(const GradedBasis& v) {
  const int n = v.num_vars();
  const int d = v.degree();
  if (d < 0) return GradedBasis(n, d + 1, v.field());
  if (v.is_full()) return GradedBasis::full(n, d + 1, v.field());
  GradedBasis out(n, d + 1, v.field());
  for (const Row& r : v.rows())
    for (int i = 1; i <= n; ++i) {
      if (out.is_full()) return out;
      out.insert(shift_by_variable(r, n, d, i, v.field()));
    }
  return out;
}

GradedBasis multiply_space(const GradedBasis& v, const Polynomial& f) {
  auto e = f.homogeneous_degree();
  if (!e) throw ArgumentError("multiplier must be homogeneous and nonzero");
  const int n = v.num_vars();
  const int d = v.degree();
  GradedBasis out(n, d + *e, v.field());
  if (d < 0) return out;
  auto basis = monomial_basis(n, d);
  auto emit = [&](const Row& r) {
    Polynomial g(n, v.field());
    for (std::size_t k = 0; k < r.size(); ++k)
      if (!r[k].is_zero()) g.add_term((*basis)[k], r[k]);
    out.insert(g * f);
  };
  if (v.is_full()) {
    for (std::size_t k = 0; k < v.ambient_dim() && !out.is_full(); ++k) emit(unit_row(v.ambient_dim(), k, v.field()));
  } else {
    for (const Row& r : v.rows()) {
      if (out.is_full()) break;
      emit(r);
    }
  }
  return out;
}

GradedBasis principal_component(const Polynomial& q, int d) {
  auto e = q.homogeneous_degree();
  if (!e) throw ArgumentError("principal generator must be homogeneous and nonzero");
  const int n = q.num_vars();
  GradedBasis out(n, d, q.field());
  if (d < *e) return out;
  for (const auto& m : *monomial_basis(n, d - *e)) {
    if (out.is_full()) break;
    out.insert(q.times(m));
  }
  return out;
}

// ------------------------------------------------------------ HilbertFunction

HilbertFunction::HilbertFunction(std::vector<std::uint64_t> values) : values_(std::move(values)) {
  bool vanished = false;
  for (std::size_t t = 0; t < values_.size(); ++t) {
    if (vanished && values_[t] != 0)
      throw ArgumentError("Hilbert function " + to_string() + " is nonzero after vanishing at degree " +
                          std::to_string(t - 1));
    if (values_[t] == 0) vanished = true;
  }
}

std::uint64_t HilbertFunction::operator[](int t) const {
  if (t < 0) return 0;
  if (t > truncation())
    throw ArgumentError("degree " + std::to_string(t) + " is beyond the truncation " + std::to_string(truncation()));
  return values_[static_cast<std::size_t>(t)];
}

std::uint64_t HilbertFunction::at_or_zero(int t) const {
  if (t < 0) return 0;
  if (t > truncation()) {
    if (!vanishes_at_end())
      throw ArgumentError("degree " + std::to_string(t) + " is beyond the truncation of a non-vanishing function");
    return 0;
  }
  return values_[static_cast<std::size_t>(t)];
}

HilbertFunction HilbertFunction::truncated(int degree) const {
  std::vector<std::uint64_t> v;
  for (int t = 0; t <= degree; ++t) v.push_back(at_or_zero(t));
  return HilbertFunction(std::move(v));
}

std::string HilbertFunction::to_string() const {
  std::string s;
  for (std::size_t t = 0; t < values_.size(); ++t) {
    if (t) s += ',';
    s += std::to_string(values_[t]);
  }
  return s;
}

// ---------------------------------------------------------- IdealPresentation

IdealPresentation::IdealPresentation(int n, Field field, std::vector<Polynomial> generators) : n_(n), field_(field) {
  for (auto& g : generators) add_generator(std::move(g));
}

void IdealPresentation::add_generator(Polynomial g) {
  if (g.num_vars() != n_ || !(g.field() == field_))
    throw DimensionError("generator " + g.to_string() + " lives in a different ring");
  if (g.is_zero()) throw ArgumentError("ideal generators must be nonzero");
  if (!g.homogeneous_degree()) throw ArgumentError("generator " + g.to_string() + " is not homogeneous");
  generators_.push_back(std::move(g));
}

// ----------------------------------------------------------------- IdealTower

IdealTower::IdealTower(int n, Field field, std::vector<std::shared_ptr<const GradedBasis>> components)
    : n_(n), field_(field), components_(std::move(components)) {}

std::shared_ptr<const GradedBasis> IdealTower::component(int d) const {
  if (d < 0) return std::make_shared<GradedBasis>(n_, d, field_);
  if (d <= top()) return components_[static_cast<std::size_t>(d)];
  if (saturated()) return std::make_shared<GradedBasis>(GradedBasis::full(n_, d, field_));
  throw ArgumentError("ideal component of degree " + std::to_string(d) + " was not computed (tower stops at " +
                      std::to_string(top()) + ")");
}

HilbertFunction IdealTower::hilbert(int max_degree) const {
  std::vector<std::uint64_t> values;
  for (int t = 0; t <= max_degree; ++t) values.push_back(component(t)->codim());
  return HilbertFunction(std::move(values));
}

IdealPresentation IdealTower::presentation() const {
  IdealPresentation out(n_, field_);
  for (int t = 0; t <= top(); ++t) {
    const GradedBasis& comp = *components_[static_cast<std::size_t>(t)];
    if (comp.is_zero()) continue;
    GradedBasis generated = t == 0 ? GradedBasis(n_, 0, field_) : multiply_space(*components_[static_cast<std::size_t>(t - 1)]);
    if (generated.dim() == comp.dim()) continue;
    if (comp.is_full()) {
      for (std::size_t k = 0; k < comp.ambient_dim() && !generated.is_full(); ++k) {
        Row e = unit_row(comp.ambient_dim(), k, field_);
        if (generated.insert(e)) out.add_generator(from_row(n_, t, field_, e));
      }
    } else {
      for (const Row& r : comp.rows()) {
        if (generated.dim() == comp.dim()) break;
        if (generated.insert(r)) out.add_generator(from_row(n_, t, field_, r));
      }
    }
  }
  return out;
}

IdealTower ideal_tower(const IdealPresentation& ideal, int max_degree) {
  const int n = ideal.num_vars();
  const Field field = ideal.field();
  std::vector<std::shared_ptr<const GradedBasis>> comps;
  for (int t = 0; t <= max_degree; ++t) {
    auto comp = std::make_shared<GradedBasis>(n, t, field);
    for (const auto& g : ideal.generators()) {
      if (comp->is_full()) break;
      if (g.homogeneous_degree() == t) comp->insert(g);
    }
    if (t > 0) {
      const GradedBasis& prev = *comps.back();
      for (const Row& r : prev.rows()) {
        if (comp->is_full()) break;
        for (int i = 1; i <= n && !comp->is_full(); ++i) comp->insert(shift_by_variable(r, n, t - 1, i, field));
      }
    }
    const bool full = comp->is_full();
    comps.push_back(std::move(comp));
    if (full) break;
  }
  return IdealTower(n, field, std::move(comps));
}

IdealTower colon_tower(const IdealTower& c, const Polynomial& q) {
  require_linear(q);
  const int n = c.num_vars();
  const Field field = c.field();
  if (q.num_vars() != n || !(q.field() == field)) throw DimensionError("colon by a form from a different ring");
  const std::vector<Scalar> lin = q.linear_coefficients();

  std::vector<std::shared_ptr<const GradedBasis>> comps;
  for (int t = 0; c.knows(t + 1); ++t) {
    auto target = c.component(t + 1);
    if (target->is_full()) {
      comps.push_back(std::make_shared<GradedBasis>(GradedBasis::full(n, t, field)));
      break;
    }
    // matrix of g -> q g modulo C_{t+1}, in the coordinates of a complement
    std::vector<std::size_t> free_cols;
    {
      std::vector<bool> pivot(target->ambient_dim(), false);
      for (const Row& r : target->rows()) {
        std::size_t p = 0;
        while (r[p].is_zero()) ++p;
        pivot[p] = true;
      }
      for (std::size_t k = 0; k < pivot.size(); ++k)
        if (!pivot[k]) free_cols.push_back(k);
    }
    const std::size_t src = count_monomials(n, t);
    Matrix map;
    map.reserve(src);
    for (std::size_t k = 0; k < src; ++k) {
      Row image = shift_by_linear(unit_row(src, k, field), n, t, lin, field);
      target->reduce_row(image);
      Row coords;
      coords.reserve(free_cols.size());
      for (std::size_t col : free_cols) coords.push_back(image[col]);
      map.push_back(std::move(coords));
    }
    auto comp = std::make_shared<GradedBasis>(n, t, field);
    for (Row& r : left_kernel(field, src, free_cols.size(), map)) comp->insert(std::move(r));
    const bool full = comp->is_full();
    comps.push_back(std::move(comp));
    if (full) break;
  }
  return IdealTower(n, field, std::move(comps));
}

IdealTower add_principal_tower(const IdealTower& c, const Polynomial& q) {
  auto e = q.homogeneous_degree();
  if (!e) throw ArgumentError("principal generator must be homogeneous and nonzero");
  const int n = c.num_vars();
  std::vector<std::shared_ptr<const GradedBasis>> comps;
  for (int t = 0; t <= c.top(); ++t) {
    auto base = c.component(t);
    if (t < *e || base->is_full()) {
      comps.push_back(base);
    } else {
      auto comp = std::make_shared<GradedBasis>(*base);
      for (const auto& m : *monomial_basis(n, t - *e)) {
        if (comp->is_full()) break;
        comp->insert(q.times(m));
      }
      comps.push_back(std::move(comp));
    }
    if (comps.back()->is_full()) break;
  }
  return IdealTower(n, c.field(), std::move(comps));
}

// ------------------------------------------------------------ presentations

GradedBasis ideal_component(const IdealPresentation& ideal, int d) {
  if (d < 0) return GradedBasis(ideal.num_vars(), d, ideal.field());
  return *ideal_tower(ideal, d).component(d);
}

GradedBasis ideal_component_direct(const IdealPresentation& ideal, int d) {
  const int n = ideal.num_vars();
  GradedBasis out(n, d, ideal.field());
  if (d < 0) return out;
  for (const auto& g : ideal.generators()) {
    const int e = *g.homogeneous_degree();
    if (e > d) continue;
    for (const auto& m : *monomial_basis(n, d - e)) {
      if (out.is_full()) return out;
      out.insert(g.times(m));
    }
  }
  return out;
}

HilbertFunction hilbert_function(const IdealPresentation& ideal, int max_degree) {
  if (max_degree < 0) throw ArgumentError("Hilbert function needs a non-negative truncation degree");
  return ideal_tower(ideal, max_degree).hilbert(max_degree);
}

GradedBasis colon_component(const IdealPresentation& ideal, std::span<const Polynomial> qs, int d) {
  for (const auto& q : qs) require_linear(q);
  if (d < 0) return GradedBasis(ideal.num_vars(), d, ideal.field());
  IdealTower tower = ideal_tower(ideal, d + static_cast<int>(qs.size()));
  for (const auto& q : qs) tower = colon_tower(tower, q);
  return *tower.component(d);
}

IdealPresentation add_principal(const IdealPresentation& ideal, const Polynomial& q) {
  IdealPresentation out = ideal;
  out.add_generator(q);
  return out;
}

LinearQuotientMap linear_quotient_map(const Polynomial& q) {
  require_linear(q);
  const std::vector<Scalar> a = q.linear_coefficients();
  int pivot = static_cast<int>(a.size());
  while (a[static_cast<std::size_t>(pivot - 1)].is_zero()) --pivot;
  const Scalar inv = a[static_cast<std::size_t>(pivot - 1)].inverse();
  LinearQuotientMap map{q.num_vars(), pivot, {}};
  for (std::size_t j = 0; j < a.size(); ++j)
    map.replacement.push_back(static_cast<int>(j) + 1 == pivot ? Scalar::zero(q.field()) : -(a[j] * inv));
  return map;
}

Polynomial LinearQuotientMap::apply(const Polynomial& f) const {
  if (f.num_vars() != n) throw DimensionError("polynomial from a different ring");
  const Field field = f.field();
  const int m = n - 1;
  auto rename = [&](int j) { return j < pivot ? j : j - 1; };

  Polynomial repl(m, field);
  for (int j = 1; j <= n; ++j)
    if (j != pivot) repl.add_term(Monomial::variable(m, rename(j)), replacement[static_cast<std::size_t>(j - 1)]);

  std::vector<Polynomial> powers{Polynomial(Monomial::one(m), Scalar::one(field))};
  Polynomial out(m, field);
  for (const auto& [u, c] : f.terms()) {
    const int e = u.exponent(pivot);
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * repl);
    std::vector<int> exps;
    exps.reserve(static_cast<std::size_t>(m));
    for (int j = 1; j <= n; ++j)
      if (j != pivot) exps.push_back(u.exponent(j));
    out += powers[static_cast<std::size_t>(e)].times(Monomial(std::move(exps))).scaled(c);
  }
  return out;
}

IdealPresentation quotient_by_linear(const IdealPresentation& ideal, const Polynomial& q) {
  if (ideal.num_vars() < 1) throw ArgumentError("cannot quotient a ring without variables");
  const LinearQuotientMap map = linear_quotient_map(q);
  IdealPresentation out(ideal.num_vars() - 1, ideal.field());
  for (const auto& g : ideal.generators()) {
    Polynomial image = map.apply(g);
    if (!image.is_zero()) out.add_generator(std::move(image));
  }
  return out;
}

}  // namespace splitegh
