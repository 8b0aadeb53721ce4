#ifndef SINGLAB_GB_HPP
#define SINGLAB_GB_HPP

#include <optional>
#include <vector>

#include "singlab/poly.hpp"

namespace singlab {

/// Length of an Artinian quotient, or the not-finite marker.
struct Colength {
  bool finite = false;
  unsigned long value = 0;

  static Colength infinite() { return Colength{false, 0}; }
  static Colength of(unsigned long v) { return Colength{true, v}; }
  bool operator==(const Colength&) const = default;
};

/// Leading-monomial staircase of a (standard) basis: the standard monomials
/// are the complement, finite exactly when the quotient is Artinian.
struct Staircase {
  std::vector<Monomial> lead_monomials;
  Colength count;
  /// materialized only when finite
  std::vector<Monomial> standard_monomials;
};

Staircase staircase_of(const std::vector<Monomial>& lead_monomials, std::size_t nvars);

/// Reduced Groebner basis (global order) or minimal standard basis (local
/// order). Generators are monic and sorted by decreasing leading monomial;
/// for global orders the basis is fully autoreduced, hence unique.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> source;  // the ideal generators that were handed in

  bool contains_one() const;
};

/// Pair selection used by Buchberger's loop. `normal` picks the pair with the
/// order-smallest lcm (ties by index); `fifo` exists to cross-check that the
/// reduced basis does not depend on the strategy.
enum class PairStrategy { normal, fifo };

/// Buchberger's algorithm with the product and chain criteria. Requires a
/// global order; zero generators are dropped and an empty (or all-zero) input
/// yields the zero ideal's empty basis.
GroebnerBasis buchberger(std::vector<Polynomial> generators, PairStrategy strategy = PairStrategy::normal);

/// Unique remainder modulo a reduced Groebner basis; normal_form(f) == 0 iff
/// f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

Colength colength(const GroebnerBasis& gb);

/// Mora weak normal form with respect to generators under a local order:
/// u*f = sum q_i g_i + r with u a unit in the local ring.
Polynomial mora_normal_form(const Polynomial& f, const std::vector<Polynomial>& generators);

/// Standard basis for a local order (Buchberger loop over the Mora normal
/// form). The output is minimal and monic but not tail-reduced: tails have no
/// canonical finite form in the localization.
GroebnerBasis standard_basis(std::vector<Polynomial> generators);

/// Local colength at the origin: staircase count of the standard basis.
Colength local_colength(const std::vector<Polynomial>& generators);

}  // namespace singlab

#endif
