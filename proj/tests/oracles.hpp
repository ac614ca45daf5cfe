#pragma once

// Slow reference implementations for tests. Nothing here goes through the
// echelon, tower or lex-segment code of the library.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "splitegh/polynomial.hpp"

namespace oracle {

using Exps = std::vector<int>;
using Dense = std::map<Exps, mpq_class>;

inline Dense dense(const splitegh::Polynomial& f) {
  Dense out;
  for (const auto& [m, c] : f.terms()) {
    Exps e(m.exponents().begin(), m.exponents().end());
    out[e] = c.to_rational();
  }
  return out;
}

inline void all_exponents(int n, int d, Exps& cur, int i, std::vector<Exps>& out) {
  if (i == n - 1) {
    cur[static_cast<std::size_t>(i)] = d;
    out.push_back(cur);
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[static_cast<std::size_t>(i)] = e;
    all_exponents(n, d - e, cur, i + 1, out);
  }
}

inline std::vector<Exps> exponents_of_degree(int n, int d) {
  std::vector<Exps> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exps cur(static_cast<std::size_t>(n), 0);
  all_exponents(n, d, cur, 0, out);
  return out;
}

inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline std::int64_t mod_p(const mpq_class& q, std::int64_t p) {
  mpz_class n = q.get_num() % p, d = q.get_den() % p;
  if (n < 0) n += p;
  if (d < 0) d += p;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mpz_class(p).get_mpz_t());
  return mpz_class((n * inv) % p).get_si();
}

/// Rank of a family of polynomials of degree d, over Q or over F_p.
inline std::size_t span_rank(int n, int d, const std::vector<Dense>& polys, std::int64_t p = 0) {
  const auto cols = exponents_of_degree(n, d);
  std::map<Exps, std::size_t> index;
  for (std::size_t k = 0; k < cols.size(); ++k) index[cols[k]] = k;
  std::vector<std::vector<mpq_class>> m;
  for (const auto& f : polys) {
    std::vector<mpq_class> row(cols.size());
    for (const auto& [e, c] : f) row[index.at(e)] = p ? mpq_class(mod_p(c, p)) : c;
    m.push_back(std::move(row));
  }
  if (!p) return rank(std::move(m));
  // elimination mod p on integer residues
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols.size() && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), m[r][c].get_num().get_mpz_t(), mpz_class(p).get_mpz_t());
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      mpz_class f = (m[i][c].get_num() * inv) % p;
      for (std::size_t k = c; k < cols.size(); ++k) {
        mpz_class v = (m[i][k].get_num() - f * m[r][k].get_num()) % p;
        if (v < 0) v += p;
        m[i][k] = v;
      }
    }
    ++r;
  }
  return r;
}

inline Dense times_monomial(const Dense& f, const Exps& m) {
  Dense out;
  for (const auto& [e, c] : f) {
    Exps s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += m[i];
    out[s] = c;
  }
  return out;
}

inline int degree_of(const Dense& f) {
  int d = 0;
  for (int e : f.begin()->first) d += e;
  return d;
}

/// H(S/I, 0..top) from all products m*g, by dense elimination.
inline std::vector<std::uint64_t> hilbert(int n, const std::vector<splitegh::Polynomial>& gens, int top,
                                          std::int64_t p = 0) {
  std::vector<Dense> gs;
  for (const auto& g : gens) gs.push_back(dense(g));
  std::vector<std::uint64_t> h;
  for (int d = 0; d <= top; ++d) {
    std::vector<Dense> rows;
    for (const auto& g : gs) {
      const int e = degree_of(g);
      for (const auto& m : exponents_of_degree(n, d - e)) rows.push_back(times_monomial(g, m));
    }
    const std::size_t total = exponents_of_degree(n, d).size();
    h.push_back(total - span_rank(n, d, rows, p));
  }
  return h;
}

/// Monomials of degree d with every exponent below its power.
inline std::uint64_t pure_power_count(const std::vector<int>& powers, int d) {
  std::uint64_t count = 0;
  for (const auto& e : exponents_of_degree(static_cast<int>(powers.size()), d)) {
    bool ok = true;
    for (std::size_t i = 0; i < e.size(); ++i) ok = ok && e[i] < powers[i];
    count += ok;
  }
  return count;
}

inline mpz_class choose(long a, long b) {
  if (b < 0 || a < b) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

/// Every strictly decreasing s_q > ... > s_j >= j >= 1 with sum C(s_i, i) = p.
inline void expansions(const mpz_class& p, int i, long below, std::vector<long>& cur,
                       std::vector<std::vector<long>>& out) {
  if (p == 0) {
    out.push_back(cur);
    return;
  }
  if (i == 0) return;
  for (long s = std::min<long>(below - 1, 400); s >= i; --s) {
    mpz_class c = choose(s, i);
    if (c > p) continue;
    cur.push_back(s);
    expansions(p - c, i - 1, s, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<long>> all_expansions(long p, int q) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  expansions(mpz_class(p), q, 100000, cur, out);
  return out;
}

/// p^(q) from the unique expansion found by exhaustive search.
inline mpz_class upper(long p, int q) {
  auto all = all_expansions(p, q);
  mpz_class out = 0;
  int i = q;
  for (long s : all.at(0)) out += choose(s, i-- + 1);
  return out;
}

inline mpq_class random_coefficient(std::mt19937& rng, int lo = -3, int hi = 3) {
  return mpq_class(std::uniform_int_distribution<int>(lo, hi)(rng));
}

}  // namespace oracle
