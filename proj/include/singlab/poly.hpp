#ifndef SINGLAB_POLY_HPP
#define SINGLAB_POLY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "singlab/coeff.hpp"
#include "singlab/monomial.hpp"

namespace singlab {

/// Ring context shared by all values: variable names, coefficient field,
/// monomial order. Contexts compare by value; polynomials from two contexts
/// mix only when the contexts are equal.
struct Ring {
  std::vector<std::string> vars;
  Field field;
  MonomialOrder order = MonomialOrder::grevlex();

  std::size_t nvars() const { return vars.size(); }
  bool operator==(const Ring&) const = default;
  std::optional<std::size_t> var_index(const std::string& name) const;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, Field field = Field::rationals(),
                  MonomialOrder order = MonomialOrder::grevlex());

/// Same variables and field, different monomial order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

struct Term {
  Monomial m;
  Coeff c;
  bool operator==(const Term&) const = default;
};

/// Sparse distributed exact polynomial. Terms are kept strictly sorted in
/// decreasing ring order and never carry zero coefficients, so equality is
/// term-set equality and the front term is the leading term.
class Polynomial {
 public:
  Polynomial() = default;  // detached placeholder; not usable in arithmetic

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial constant(RingPtr ring, long v);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Coeff c, Monomial m);
  /// Terms in any order, duplicates combined.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t nterms() const { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const;
  const Coeff& leading_coeff() const;
  /// Constant coefficient (zero coeff of the field if absent).
  Coeff constant_coeff() const;

  long degree() const;  // max total degree; -1 for the zero polynomial

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Coeff& c) const;
  /// c * m * this
  Polynomial times_term(const Coeff& c, const Monomial& m) const;
  Polynomial monic() const;
  Polynomial pow(unsigned long k) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Formal partial derivative; the exponent rule runs in the coefficient
  /// field, so positive characteristic can kill terms.
  Polynomial partial_derivative(std::size_t var_index) const;

  /// Re-sorts the terms into a ring that shares variables and field.
  Polynomial reorder(const RingPtr& target) const;

  /// Monomial-level variable remap: variable i becomes target variable
  /// var_map[i]. Several variables may map to one target (exponents add),
  /// which is exactly the diagonal restriction y_i := x_i.
  Polynomial map_vars(const RingPtr& target, const std::vector<std::size_t>& var_map) const;

  /// Full substitution: variable i is replaced by images[i] over the target.
  Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;

  /// True when every monomial has the same weighted degree under weights.
  bool is_weighted_homogeneous(const std::vector<mpq_class>& weights) const;

  void check_ring(const Polynomial& o) const;

 private:
  static Polynomial make_sorted(RingPtr ring, std::vector<Term> sorted);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// quotients and remainder of the classical multivariate division algorithm:
/// f = sum q_i g_i + r, no monomial of r divisible by any leading monomial of
/// the divisors. Requires a global order.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

DivisionResult multivariate_divide(const Polynomial& f, const std::vector<Polynomial>& divisors);

Polynomial multiply(const Polynomial& a, const Polynomial& b);

}  // namespace singlab

#endif
