#pragma once

#include <vector>

#include <gmpxx.h>

namespace splitegh {

/// C(a, b) with arbitrary precision; zero when b < 0 or a < b (a >= 0).
mpz_class binomial(long a, long b);

/// The greedy binomial expansion p = C(s_q, q) + C(s_{q-1}, q-1) + ... with
/// s_q > s_{q-1} > ... > s_j >= j >= 1. Trailing terms whose contribution
/// would be zero are omitted.
struct MacaulayExpansion {
  struct Term {
    long top;   // s_j
    int index;  // j
    bool operator==(const Term&) const = default;
  };

  mpz_class p;
  int q = 1;
  std::vector<Term> terms;  // index strictly decreasing from q

  mpz_class sum() const;
};

MacaulayExpansion macaulay_expansion(const mpz_class& p, int q);

/// p^{(q)}: every C(s_j, j) of the expansion replaced by C(s_j, j+1).
mpz_class macaulay_upper(const mpz_class& p, int q);

}  // namespace splitegh
