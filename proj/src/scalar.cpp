#include "splitegh/scalar.hpp"

#include <climits>
#include <cstdint>
#include <numeric>
#include <ostream>

#include "splitegh/errors.hpp"

namespace splitegh {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed 64-bit values; p < 2^32 keeps everything in range
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw ArgumentError("field characteristic " + std::to_string(p) + " is not a prime below 2^32");
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? "rationals" : "prime " + std::to_string(p_);
}

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t small_max = INT64_MAX;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if (a <= UINT64_MAX && b <= UINT64_MAX) return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  u128 u = abs128(v);
  mpz_class hi, lo;
  mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
  mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(u & UINT64_MAX));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a), static_cast<std::uint64_t>(b < 0 ? -b : b)));
}

}  // namespace

Scalar::Scalar(const Scalar& other)
    : field_(other.field_),
      num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this == &other) return *this;
  field_ = other.field_;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    if (big_)
      *big_ = *other.big_;
    else
      big_ = std::make_unique<mpq_class>(*other.big_);
  } else {
    big_.reset();
  }
  return *this;
}

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field_.is_rational()) {
    if (value == INT64_MIN)
      assign(mpq_class(mpz_class(value)));
    else
      num_ = value;
  } else {
    std::int64_t p = static_cast<std::int64_t>(field_.characteristic());
    std::int64_t r = value % p;
    if (r < 0) r += p;
    num_ = r;
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    assign(q);
    return;
  }
  const std::uint64_t p = field_.characteristic();
  std::uint64_t num = reduce_mod(value.get_num(), p);
  std::uint64_t den = reduce_mod(value.get_den(), p);
  if (den == 0) throw ArgumentError("denominator vanishes in " + field_.to_string());
  num_ = static_cast<std::int64_t>((static_cast<u128>(num) * inverse_mod(den, p)) % p);
}

// canonical mpq -> inline when it fits
void Scalar::assign(const mpq_class& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t()) && n != INT64_MIN) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    if (big_)
      *big_ = q;
    else
      big_ = std::make_unique<mpq_class>(q);
  }
}

// num/den in lowest terms with den > 0
void Scalar::assign(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  if (den != 1) {
    const u128 g = gcd128(abs128(num), static_cast<u128>(den));
    if (g != 1) {
      num /= static_cast<i128>(g);
      den /= static_cast<i128>(g);
    }
  }
  if (num <= small_max && num >= -small_max && den <= small_max) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  assign(q);
}

mpq_class Scalar::big_value() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

bool Scalar::is_zero() const noexcept { return !big_ && num_ == 0; }

bool Scalar::is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }

mpq_class Scalar::to_rational() const {
  if (field_.is_rational()) return big_value();
  mpz_class z;
  mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(num_));
  return mpq_class(z);
}

void Scalar::check_same_field(const Scalar& other) const {
  if (!(field_ == other.field_))
    throw DimensionError("scalars from different fields: " + field_.to_string() + " vs " +
                         other.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational()) {
    if (big_) {
      out.assign(mpq_class(-*big_));
    } else {
      out.num_ = -num_;
    }
  } else if (num_ != 0) {
    out.num_ = static_cast<std::int64_t>(field_.characteristic()) - num_;
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArgumentError("division by zero");
  Scalar out = *this;
  if (!field_.is_rational()) {
    out.num_ = static_cast<std::int64_t>(inverse_mod(static_cast<std::uint64_t>(num_), field_.characteristic()));
  } else if (big_) {
    out.assign(mpq_class(1 / *big_));
  } else {
    out.assign(static_cast<i128>(den_), static_cast<i128>(num_));
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (!field_.is_rational()) {
    const std::int64_t p = static_cast<std::int64_t>(field_.characteristic());
    num_ += rhs.num_;
    if (num_ >= p) num_ -= p;
  } else if (big_ || rhs.big_) {
    assign(mpq_class(big_value() + rhs.big_value()));
  } else if (den_ == 1 && rhs.den_ == 1) {
    assign(static_cast<i128>(num_) + rhs.num_, 1);
  } else {
    assign(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_, static_cast<i128>(den_) * rhs.den_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (!field_.is_rational()) {
    const std::int64_t p = static_cast<std::int64_t>(field_.characteristic());
    num_ = num_ >= rhs.num_ ? num_ - rhs.num_ : num_ + p - rhs.num_;
  } else if (big_ || rhs.big_) {
    assign(mpq_class(big_value() - rhs.big_value()));
  } else if (den_ == 1 && rhs.den_ == 1) {
    assign(static_cast<i128>(num_) - rhs.num_, 1);
  } else {
    assign(static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_, static_cast<i128>(den_) * rhs.den_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (!field_.is_rational()) {
    num_ = static_cast<std::int64_t>((static_cast<u128>(num_) * static_cast<u128>(rhs.num_)) % field_.characteristic());
  } else if (big_ || rhs.big_) {
    assign(mpq_class(big_value() * rhs.big_value()));
  } else if (num_ == 0 || rhs.num_ == 0) {
    num_ = 0;
    den_ = 1;
  } else {
    // cross-cancel first so the product is already in lowest terms
    const std::int64_t g1 = gcd64(num_, rhs.den_);
    const std::int64_t g2 = gcd64(rhs.num_, den_);
    const i128 n = static_cast<i128>(num_ / g1) * (rhs.num_ / g2);
    const i128 d = static_cast<i128>(den_ / g2) * (rhs.den_ / g1);
    if (n <= small_max && n >= -small_max && d <= small_max) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      assign(n, d);
    }
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
  if (!field_.is_rational()) {
    const std::uint64_t p = field_.characteristic();
    const std::int64_t prod =
        static_cast<std::int64_t>((static_cast<u128>(a.num_) * static_cast<u128>(b.num_)) % p);
    num_ = num_ >= prod ? num_ - prod : num_ + static_cast<std::int64_t>(p) - prod;
    return;
  }
  if (a.is_zero() || b.is_zero()) return;
  Scalar prod = a;
  prod *= b;
  *this -= prod;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) {
    if (big_) return big_->get_str();
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  const std::int64_t p = static_cast<std::int64_t>(field_.characteristic());
  if (num_ > p / 2) return "-" + std::to_string(p - num_);
  return std::to_string(num_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace splitegh
