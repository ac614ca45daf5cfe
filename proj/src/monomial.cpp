#include "splitegh/monomial.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "splitegh/errors.hpp"

namespace splitegh {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw ArgumentError("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::variable(int n, int i) { return power(n, i, 1); }

Monomial Monomial::power(int n, int i, int e) {
  if (i < 1 || i > n) throw DimensionError("variable index x" + std::to_string(i) + " outside 1.." + std::to_string(n));
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  exps[static_cast<std::size_t>(i - 1)] = e;
  return Monomial(std::move(exps));
}

bool Monomial::is_squarefree() const noexcept {
  for (int e : exps_)
    if (e > 1) return false;
  return true;
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) out.push_back(static_cast<int>(i) + 1);
  return out;
}

int Monomial::max_variable() const noexcept {
  for (std::size_t i = exps_.size(); i > 0; --i)
    if (exps_[i - 1] > 0) return static_cast<int>(i);
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) throw DimensionError("monomials from different rings");
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::times_variable(int i) const {
  Monomial out = *this;
  out.exps_.at(static_cast<std::size_t>(i - 1)) += 1;
  out.degree_ += 1;
  return out;
}

Monomial Monomial::divided_by_variable(int i) const {
  Monomial out = *this;
  int& e = out.exps_.at(static_cast<std::size_t>(i - 1));
  if (e == 0) throw ArgumentError("x" + std::to_string(i) + " does not divide " + to_string());
  e -= 1;
  out.degree_ -= 1;
  return out;
}

Monomial Monomial::with_extra_variable(int exponent) const {
  Monomial out = *this;
  out.exps_.push_back(exponent);
  out.degree_ += exponent;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.exps_.size() != b.exps_.size()) throw DimensionError("monomials from different rings");
  Monomial out = a;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] += b.exps_[i];
  out.degree_ += b.degree_;
  return out;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (exps_[i] > 1) s += '^' + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars())
    throw DimensionError("cannot compare monomials in " + std::to_string(a.num_vars()) + " and " +
                         std::to_string(b.num_vars()) + " variables");
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] != eb[i]) return ea[i] <=> eb[i];
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
  return h;
}

bool MonomialFilter::accepts(const Monomial& m) const {
  switch (kind_) {
    case Kind::all:
      return true;
    case Kind::squarefree:
      return m.is_squarefree();
    case Kind::outside_powers: {
      if (powers_.size() != static_cast<std::size_t>(m.num_vars()))
        throw DimensionError("power list length does not match the number of variables");
      for (int i = 1; i <= m.num_vars(); ++i)
        if (m.exponent(i) >= powers_[static_cast<std::size_t>(i - 1)]) return false;
      return true;
    }
  }
  return false;
}

namespace {

// Descending lex within a fixed degree: x1 exponent runs from d down to 0,
// and the tail is enumerated recursively.
void enumerate_into(std::vector<int>& exps, std::size_t pos, int remaining, std::vector<Monomial>& out) {
  if (pos + 1 == exps.size()) {
    exps[pos] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[pos] = e;
    enumerate_into(exps, pos + 1, remaining - e, out);
  }
  exps[pos] = 0;
}

std::uint64_t binom_u64(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

std::uint64_t count_monomials(int n, int d) {
  if (d < 0 || n < 0) return 0;
  if (n == 0) return d == 0 ? 1 : 0;
  return binom_u64(static_cast<std::uint64_t>(n + d - 1), static_cast<std::uint64_t>(d));
}

std::shared_ptr<const std::vector<Monomial>> monomial_basis(int n, int d) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const std::vector<Monomial>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, d}];
  if (!slot) {
    auto list = std::make_shared<std::vector<Monomial>>();
    if (n == 0) {
      if (d == 0) list->emplace_back(std::vector<int>{});
    } else if (d >= 0) {
      list->reserve(count_monomials(n, d));
      std::vector<int> exps(static_cast<std::size_t>(n), 0);
      enumerate_into(exps, 0, d, *list);
    }
    slot = std::move(list);
  }
  return slot;
}

std::vector<Monomial> enumerate_monomials(int n, int d, const MonomialFilter& filter) {
  if (n < 1 || d < 0) throw ArgumentError("enumerate_monomials needs n >= 1 and d >= 0");
  auto all = monomial_basis(n, d);
  if (filter.kind() == MonomialFilter::Kind::all) return *all;
  std::vector<Monomial> out;
  for (const auto& m : *all)
    if (filter.accepts(m)) out.push_back(m);
  return out;
}

std::size_t monomial_rank(const Monomial& m) {
  // Monomials before m: for each position i, those agreeing on x_1..x_{i-1}
  // with a larger exponent at x_i.
  auto e = m.exponents();
  const int n = m.num_vars();
  int remaining = m.degree();
  std::uint64_t rank = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const int tail_vars = n - i - 1;
    for (int v = remaining; v > e[static_cast<std::size_t>(i)]; --v) rank += count_monomials(tail_vars, remaining - v);
    remaining -= e[static_cast<std::size_t>(i)];
  }
  return static_cast<std::size_t>(rank);
}

}  // namespace splitegh
