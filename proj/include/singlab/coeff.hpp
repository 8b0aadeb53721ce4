#ifndef SINGLAB_COEFF_HPP
#define SINGLAB_COEFF_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "singlab/error.hpp"

namespace singlab {

/// Coefficient field: the rationals, or a prime field F_p with p an odd prime.
struct Field {
  enum class Kind { rational, prime };

  Kind kind = Kind::rational;
  unsigned long p = 0;  // modulus, only meaningful for Kind::prime

  static Field rationals() { return Field{Kind::rational, 0}; }
  static Field prime(unsigned long p);

  bool is_prime_field() const { return kind == Kind::prime; }
  unsigned long characteristic() const { return is_prime_field() ? p : 0; }

  bool operator==(const Field&) const = default;

  std::string describe() const;
};

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); F_p values are reduced to [0, p).
class Coeff {
 public:
  Coeff() = default;  // zero over Q

  static Coeff zero(const Field& f);
  static Coeff one(const Field& f);
  static Coeff from_long(long v, const Field& f);
  static Coeff from_mpq(mpq_class v);  // rational field
  static Coeff from_mod(unsigned long v, unsigned long p);
  /// num/den in the given field; in F_p the denominator is inverted mod p.
  static Coeff from_fraction(const mpz_class& num, const mpz_class& den, const Field& f);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff operator-() const;
  Coeff inverse() const;

  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  /// Canonical text: "a" or "a/b" over Q, the representative in [0,p) over F_p.
  std::string str() const;

  const mpq_class& rational() const { return q_; }
  unsigned long residue() const { return r_; }

 private:
  void check_same(const Coeff& o) const;

  Field field_ = Field::rationals();
  mpq_class q_ = 0;       // rational payload
  unsigned long r_ = 0;   // prime-field payload
};

}  // namespace singlab

#endif
