#ifndef SINGLAB_MODVEC_HPP
#define SINGLAB_MODVEC_HPP

#include <optional>
#include <vector>

#include "singlab/gb.hpp"
#include "singlab/poly.hpp"

namespace singlab {

/// A polynomial ring or a hypersurface quotient of it. The relation W is
/// tracked separately; module routines adjoin W*e_i implicitly so one
/// Groebner engine serves both cases.
struct Ambient {
  RingPtr ring;
  std::optional<Polynomial> relation;  // W, a nonzerodivisor generating the quotient

  bool is_quotient() const { return relation.has_value(); }
  bool operator==(const Ambient& o) const;
};

Ambient plain_ring(RingPtr ring);
Ambient quotient_ring(RingPtr ring, Polynomial w);

/// Canonical representative of f mod (W) (identity for a plain ring).
Polynomial amb_normal_form(const Ambient& amb, const Polynomial& f);

/// Element of a free module R^rank, stored per component. Leading term is
/// position-over-term: the first nonzero component dominates, ties resolved
/// by the ring order inside the component.
struct VecPoly {
  RingPtr ring;
  std::vector<Polynomial> comps;

  static VecPoly zero(RingPtr ring, std::size_t rank);
  static VecPoly unit(RingPtr ring, std::size_t rank, std::size_t index);

  std::size_t rank() const { return comps.size(); }
  bool is_zero() const;
  /// index of the first nonzero component; rank() when zero
  std::size_t lead_comp() const;

  VecPoly operator+(const VecPoly& o) const;
  VecPoly operator-(const VecPoly& o) const;
  VecPoly operator-() const;
  VecPoly times_term(const Coeff& c, const Monomial& m) const;
  VecPoly scaled(const Coeff& c) const;
  VecPoly monic() const;

  bool operator==(const VecPoly& o) const = default;
};

struct ModTermRef {
  std::size_t comp;
  const Term* term;
};

/// Reduced Groebner basis of the submodule of R^rank generated by gens
/// (plus W*e_i when the ambient is a quotient). Position-over-term order.
/// Output elements are monic, fully autoreduced, coordinates in W-normal
/// form, sorted by decreasing leading term; the result is the unique reduced
/// basis of the submodule.
std::vector<VecPoly> module_groebner(const Ambient& amb, std::vector<VecPoly> gens, std::size_t rank);

/// Full normal form of v against a module Groebner basis.
VecPoly module_normal_form(const Ambient& amb, VecPoly v, const std::vector<VecPoly>& gb);

/// Generators of the syzygy module {a in R^s : sum a_i v_i = 0 in R^rank mod W},
/// computed by elimination in R^(rank+s); the output is the canonical reduced
/// basis of the syzygy module lifted to W-normal-form coordinates.
std::vector<VecPoly> module_syzygies(const Ambient& amb, const std::vector<VecPoly>& gens, std::size_t rank);

/// Coefficients a with target = sum a_i gens_i (mod W), if the membership
/// holds.
std::optional<std::vector<Polynomial>> module_lift(const Ambient& amb, const VecPoly& target,
                                                   const std::vector<VecPoly>& gens, std::size_t rank);

/// dim_k of R^rank / <gens> (+ W*e_i), via per-component staircases.
Colength module_colength(const Ambient& amb, const std::vector<VecPoly>& gens, std::size_t rank);

}  // namespace singlab

#endif
