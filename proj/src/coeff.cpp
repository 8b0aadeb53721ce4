#include "singlab/coeff.hpp"

namespace singlab {

namespace {

unsigned long mod_inverse(unsigned long a, unsigned long p) {
  // extended Euclid on signed longs; p < 2^31 so everything fits
  long t = 0, newt = 1;
  long r = static_cast<long>(p), newr = static_cast<long>(a % p);
  while (newr != 0) {
    long q = r / newr;
    long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) fail(Errc::bad_denominator, "not invertible mod " + std::to_string(p));
  if (t < 0) t += static_cast<long>(p);
  return static_cast<unsigned long>(t);
}

bool is_odd_prime(unsigned long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(unsigned long p) {
  if (!is_odd_prime(p)) fail(Errc::invalid_argument, "field modulus must be an odd prime, got " + std::to_string(p));
  return Field{Kind::prime, p};
}

std::string Field::describe() const {
  return is_prime_field() ? "fp:" + std::to_string(p) : "q";
}

Coeff Coeff::zero(const Field& f) {
  Coeff c;
  c.field_ = f;
  return c;
}

Coeff Coeff::one(const Field& f) {
  Coeff c;
  c.field_ = f;
  if (f.is_prime_field())
    c.r_ = 1;
  else
    c.q_ = 1;
  return c;
}

Coeff Coeff::from_long(long v, const Field& f) {
  Coeff c;
  c.field_ = f;
  if (f.is_prime_field()) {
    long m = v % static_cast<long>(f.p);
    if (m < 0) m += static_cast<long>(f.p);
    c.r_ = static_cast<unsigned long>(m);
  } else {
    c.q_ = v;
  }
  return c;
}

Coeff Coeff::from_mpq(mpq_class v) {
  Coeff c;
  v.canonicalize();
  c.q_ = std::move(v);
  return c;
}

Coeff Coeff::from_mod(unsigned long v, unsigned long p) {
  Coeff c;
  c.field_ = Field::prime(p);
  c.r_ = v % p;
  return c;
}

Coeff Coeff::from_fraction(const mpz_class& num, const mpz_class& den, const Field& f) {
  if (den == 0) fail(Errc::bad_denominator, "zero denominator");
  if (f.is_prime_field()) {
    mpz_class p(static_cast<unsigned long>(f.p));
    mpz_class dn = den % p;
    if (dn < 0) dn += p;
    if (dn == 0) fail(Errc::bad_denominator, "denominator divisible by " + std::to_string(f.p));
    mpz_class nn = num % p;
    if (nn < 0) nn += p;
    unsigned long inv = mod_inverse(dn.get_ui(), f.p);
    mpz_class r = (nn * mpz_class(inv)) % p;
    return from_mod(r.get_ui(), f.p);
  }
  mpq_class q(num, den);
  q.canonicalize();
  return from_mpq(q);
}

bool Coeff::is_zero() const { return field_.is_prime_field() ? r_ == 0 : q_ == 0; }
bool Coeff::is_one() const { return field_.is_prime_field() ? r_ == 1 : q_ == 1; }

void Coeff::check_same(const Coeff& o) const {
  if (field_ != o.field_) fail(Errc::ring_mismatch, "coefficients from different fields");
}

Coeff Coeff::operator+(const Coeff& o) const {
  check_same(o);
  Coeff c;
  c.field_ = field_;
  if (field_.is_prime_field())
    c.r_ = (r_ + o.r_) % field_.p;
  else
    c.q_ = q_ + o.q_;
  return c;
}

Coeff Coeff::operator-(const Coeff& o) const {
  check_same(o);
  Coeff c;
  c.field_ = field_;
  if (field_.is_prime_field())
    c.r_ = (r_ + field_.p - o.r_) % field_.p;
  else
    c.q_ = q_ - o.q_;
  return c;
}

Coeff Coeff::operator*(const Coeff& o) const {
  check_same(o);
  Coeff c;
  c.field_ = field_;
  if (field_.is_prime_field())
    c.r_ = (r_ * o.r_) % field_.p;  // p < 2^31, no overflow in 64-bit
  else
    c.q_ = q_ * o.q_;
  return c;
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

Coeff Coeff::operator-() const {
  Coeff c;
  c.field_ = field_;
  if (field_.is_prime_field())
    c.r_ = r_ == 0 ? 0 : field_.p - r_;
  else
    c.q_ = -q_;
  return c;
}

Coeff Coeff::inverse() const {
  if (is_zero()) fail(Errc::invalid_argument, "division by zero coefficient");
  Coeff c;
  c.field_ = field_;
  if (field_.is_prime_field())
    c.r_ = mod_inverse(r_, field_.p);
  else
    c.q_ = 1 / q_;
  return c;
}

bool Coeff::operator==(const Coeff& o) const {
  if (field_ != o.field_) return false;
  return field_.is_prime_field() ? r_ == o.r_ : q_ == o.q_;
}

std::string Coeff::str() const {
  if (field_.is_prime_field()) return std::to_string(r_);
  return q_.get_str();
}

}  // namespace singlab
