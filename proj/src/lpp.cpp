#include "splitegh/lpp.hpp"

#include <algorithm>
#include <unordered_set>

#include "splitegh/errors.hpp"
#include "splitegh/macaulay.hpp"

namespace splitegh {

namespace {

void check_powers(const std::vector<int>& powers) {
  if (powers.empty()) throw ArgumentError("need at least one power");
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (powers[i] < 1) throw ArgumentError("powers must be positive");
    if (i && powers[i] < powers[i - 1]) throw ArgumentError("powers must be non-decreasing");
  }
}

bool in_powers(const Monomial& m, const std::vector<int>& powers) {
  for (int i = 1; i <= m.num_vars(); ++i)
    if (m.exponent(i) >= powers[static_cast<std::size_t>(i - 1)]) return true;
  return false;
}

}  // namespace

// -------------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(int n, int truncation) : n_(n) {
  if (n < 1) throw ArgumentError("a monomial ideal needs at least one variable");
  if (truncation < 0) throw ArgumentError("truncation degree must be non-negative");
  components_.resize(static_cast<std::size_t>(truncation + 1));
}

MonomialIdeal MonomialIdeal::generated_by(int n, int truncation, const std::vector<Monomial>& generators) {
  MonomialIdeal out(n, truncation);
  for (int d = 0; d <= truncation; ++d)
    for (const auto& m : enumerate_monomials(n, d))
      for (const auto& g : generators)
        if (g.divides(m)) {
          out.components_[static_cast<std::size_t>(d)].push_back(m);
          break;
        }
  return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  const auto& comp = component(m.degree());
  return std::binary_search(comp.begin(), comp.end(), m, LexGreater{});
}

const std::vector<Monomial>& MonomialIdeal::component(int d) const {
  if (d < 0 || d > truncation())
    throw ArgumentError("degree " + std::to_string(d) + " is outside the truncation " + std::to_string(truncation()));
  return components_[static_cast<std::size_t>(d)];
}

void MonomialIdeal::insert(const Monomial& m) {
  if (m.num_vars() != n_) throw DimensionError("monomial from a different ring");
  component(m.degree());
  auto& comp = components_[static_cast<std::size_t>(m.degree())];
  auto it = std::lower_bound(comp.begin(), comp.end(), m, LexGreater{});
  if (it == comp.end() || *it != m) comp.insert(it, m);
}

bool MonomialIdeal::erase(const Monomial& m) {
  component(m.degree());
  auto& comp = components_[static_cast<std::size_t>(m.degree())];
  auto it = std::lower_bound(comp.begin(), comp.end(), m, LexGreater{});
  if (it == comp.end() || *it != m) return false;
  comp.erase(it);
  return true;
}

HilbertFunction MonomialIdeal::hilbert() const {
  std::vector<std::uint64_t> v;
  for (int d = 0; d <= truncation(); ++d) v.push_back(count_monomials(n_, d) - component(d).size());
  return HilbertFunction(std::move(v));
}

std::vector<Monomial> MonomialIdeal::minimal_generators() const {
  std::vector<Monomial> out;
  for (int d = 0; d <= truncation(); ++d)
    for (const auto& m : component(d)) {
      bool generated = false;
      if (d > 0)
        for (int i = 1; i <= n_ && !generated; ++i)
          if (m.exponent(i) > 0 && contains(m.divided_by_variable(i))) generated = true;
      if (!generated) out.push_back(m);
    }
  return out;
}

std::optional<int> MonomialIdeal::closure_failure() const {
  for (int d = 0; d < truncation(); ++d)
    for (const auto& m : component(d))
      for (int i = 1; i <= n_; ++i)
        if (!contains(m.times_variable(i))) return d;
  return std::nullopt;
}

IdealPresentation MonomialIdeal::presentation(Field field) const {
  IdealPresentation out(n_, field);
  for (const auto& m : minimal_generators()) out.add_generator(Polynomial(m, Scalar::one(field)));
  return out;
}

// ------------------------------------------------------------------- LppIdeal

std::vector<Monomial> lexsegment(int n, const std::vector<int>& powers, int d, std::size_t t) {
  if (static_cast<int>(powers.size()) != n) throw DimensionError("need one power per variable");
  auto outside = enumerate_monomials(n, d, MonomialFilter::outside_powers(powers));
  if (t > outside.size())
    throw ArgumentError("lex segment of size " + std::to_string(t) + " requested, but only " +
                        std::to_string(outside.size()) + " monomials of degree " + std::to_string(d) + " lie outside");
  outside.resize(t);
  return outside;
}

LppIdeal::LppIdeal(std::vector<int> powers, std::vector<std::size_t> segment_sizes) : powers_(std::move(powers)) {
  check_powers(powers_);
  if (segment_sizes.empty()) throw ArgumentError("need at least degree 0");
  const int n = num_vars();
  for (std::size_t d = 0; d < segment_sizes.size(); ++d) {
    auto outside = enumerate_monomials(n, static_cast<int>(d), MonomialFilter::outside_powers(powers_));
    if (segment_sizes[d] > outside.size())
      throw NotRealizableError("segment of size " + std::to_string(segment_sizes[d]) + " in degree " +
                               std::to_string(d) + " exceeds the " + std::to_string(outside.size()) +
                               " monomials outside the powers");
    outside.resize(segment_sizes[d]);
    segments_.push_back(std::move(outside));
  }
  for (int d = 0; d < truncation(); ++d) {
    const auto& next = segments_[static_cast<std::size_t>(d + 1)];
    std::unordered_set<Monomial, MonomialHash> members(next.begin(), next.end());
    for (const auto& m : segments_[static_cast<std::size_t>(d)])
      for (int i = 1; i <= n; ++i) {
        Monomial up = m.times_variable(i);
        if (!in_powers(up, powers_) && !members.count(up))
          throw NotRealizableError("lex segment is not closed under multiplication: " + m.to_string() + " * x" +
                                   std::to_string(i) + " is missing in degree " + std::to_string(d + 1));
      }
  }
}

const std::vector<Monomial>& LppIdeal::segment(int d) const {
  if (d < 0 || d > truncation())
    throw ArgumentError("degree " + std::to_string(d) + " is outside the truncation " + std::to_string(truncation()));
  return segments_[static_cast<std::size_t>(d)];
}

HilbertFunction LppIdeal::hilbert() const {
  std::vector<std::uint64_t> v;
  for (int d = 0; d <= truncation(); ++d) {
    const auto outside = enumerate_monomials(num_vars(), d, MonomialFilter::outside_powers(powers_)).size();
    v.push_back(outside - segment_size(d));
  }
  return HilbertFunction(std::move(v));
}

MonomialIdeal LppIdeal::to_monomial_ideal() const {
  MonomialIdeal out(num_vars(), truncation());
  for (int d = 0; d <= truncation(); ++d) {
    std::unordered_set<Monomial, MonomialHash> seg(segment(d).begin(), segment(d).end());
    for (const auto& m : enumerate_monomials(num_vars(), d))
      if (in_powers(m, powers_) || seg.count(m)) out.insert(m);
  }
  return out;
}

std::vector<Monomial> LppIdeal::generators() const {
  const int n = num_vars();
  std::vector<Monomial> out;
  for (int i = 1; i <= n; ++i) out.push_back(Monomial::power(n, i, powers_[static_cast<std::size_t>(i - 1)]));
  std::sort(out.begin(), out.end(), LexGreater{});
  for (int d = 0; d <= truncation(); ++d) {
    std::unordered_set<Monomial, MonomialHash> prev;
    if (d > 0) prev.insert(segment(d - 1).begin(), segment(d - 1).end());
    for (const auto& m : segment(d)) {
      bool generated = false;
      for (int i = 1; i <= n && !generated; ++i)
        if (m.exponent(i) > 0 && prev.count(m.divided_by_variable(i))) generated = true;
      if (!generated) out.push_back(m);
    }
  }
  return out;
}

LppIdeal lpp_realize(const HilbertFunction& h, const std::vector<int>& powers) {
  check_powers(powers);
  // H(0) = 0 is the unit ideal
  if (h.truncation() < 0 || h[0] > 1) throw ArgumentError("Hilbert function must start with H(0) = 1 or 0");
  const int n = static_cast<int>(powers.size());
  std::vector<std::size_t> sizes;
  for (int d = 0; d <= h.truncation(); ++d) {
    const auto outside = enumerate_monomials(n, d, MonomialFilter::outside_powers(powers)).size();
    if (h[d] > outside)
      throw NotRealizableError("H(" + std::to_string(d) + ") = " + std::to_string(h[d]) + " exceeds the " +
                               std::to_string(outside) + " monomials outside the powers");
    sizes.push_back(outside - h[d]);
  }
  return LppIdeal(powers, std::move(sizes));
}

std::string KkResult::to_string() const {
  if (ok) return "bound holds";
  return "bound violated at d=" + std::to_string(degree) + ": " + std::to_string(value) + " > " + std::to_string(bound);
}

KkResult kk_bound_check(const HilbertFunction& h) {
  for (int d = 1; d < h.truncation(); ++d) {
    const mpz_class bound = macaulay_upper(mpz_class(static_cast<unsigned long>(h[d])), d);
    if (mpz_class(static_cast<unsigned long>(h[d + 1])) > bound)
      return {false, d, h[d + 1], bound.get_ui()};
  }
  return {};
}

LppIdeal squarefree_kk_ideal(const HilbertFunction& h, int n) {
  if (n < 1) throw ArgumentError("need at least one variable");
  KkResult kk = kk_bound_check(h);
  if (!kk.ok) throw NotRealizableError(kk.to_string());
  for (int d = 0; d <= h.truncation(); ++d)
    if (mpz_class(static_cast<unsigned long>(h[d])) > binomial(n, d))
      throw NotRealizableError("H(" + std::to_string(d) + ") = " + std::to_string(h[d]) + " exceeds C(" +
                               std::to_string(n) + "," + std::to_string(d) + ")");
  return lpp_realize(h, std::vector<int>(static_cast<std::size_t>(n), 2));
}

bool is_lex_plus_powers(const MonomialIdeal& ideal, const std::vector<int>& powers) {
  check_powers(powers);
  const int n = ideal.num_vars();
  if (static_cast<int>(powers.size()) != n) throw DimensionError("need one power per variable");
  for (int i = 1; i <= n; ++i) {
    const int a = powers[static_cast<std::size_t>(i - 1)];
    if (a <= ideal.truncation() && !ideal.contains(Monomial::power(n, i, a))) return false;
  }
  if (ideal.closure_failure()) return false;
  for (int d = 0; d <= ideal.truncation(); ++d) {
    bool inside = true;
    for (const auto& m : enumerate_monomials(n, d, MonomialFilter::outside_powers(powers))) {
      const bool member = ideal.contains(m);
      if (member && !inside) return false;
      if (!member) inside = false;
    }
  }
  return true;
}

}  // namespace splitegh
