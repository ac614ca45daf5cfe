#include "splitegh/macaulay.hpp"

#include "splitegh/errors.hpp"

namespace splitegh {

mpz_class binomial(long a, long b) {
  if (a < 0) throw ArgumentError("binomial with negative top argument");
  if (b < 0 || a < b) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

mpz_class MacaulayExpansion::sum() const {
  mpz_class total = 0;
  for (const auto& t : terms) total += binomial(t.top, t.index);
  return total;
}

MacaulayExpansion macaulay_expansion(const mpz_class& p, int q) {
  if (sgn(p) < 0) throw ArgumentError("Macaulay expansion of a negative number");
  if (q < 1) throw ArgumentError("Macaulay expansion needs q >= 1");
  MacaulayExpansion out{p, q, {}};
  mpz_class rest = p;
  for (int j = q; j >= 1 && sgn(rest) > 0; --j) {
    // largest s with C(s, j) <= rest; C(j, j) = 1 <= rest so s >= j
    long lo = j, hi = j + 1;
    while (binomial(hi, j) <= rest) {
      lo = hi;
      hi = 2 * hi;
    }
    while (hi - lo > 1) {
      long mid = lo + (hi - lo) / 2;
      (binomial(mid, j) <= rest ? lo : hi) = mid;
    }
    const long s = lo;
    out.terms.push_back({s, j});
    rest -= binomial(s, j);
  }
  return out;
}

mpz_class macaulay_upper(const mpz_class& p, int q) {
  mpz_class total = 0;
  for (const auto& t : macaulay_expansion(p, q).terms) total += binomial(t.top, t.index + 1);
  return total;
}

}  // namespace splitegh
