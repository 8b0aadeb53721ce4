#include "singlab/modvec.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "singlab/error.hpp"

namespace singlab {

bool Ambient::operator==(const Ambient& o) const {
  if (!(*ring == *o.ring)) return false;
  if (relation.has_value() != o.relation.has_value()) return false;
  return !relation || *relation == *o.relation;
}

Ambient plain_ring(RingPtr ring) { return Ambient{std::move(ring), std::nullopt}; }

Ambient quotient_ring(RingPtr ring, Polynomial w) {
  if (w.is_zero()) fail(Errc::invalid_argument, "quotient relation must be nonzero");
  if (!(*w.ring() == *ring)) fail(Errc::ring_mismatch, "quotient relation from another ring");
  return Ambient{std::move(ring), std::move(w.monic())};
}

Polynomial amb_normal_form(const Ambient& amb, const Polynomial& f) {
  if (!amb.relation) return f;
  return multivariate_divide(f, {*amb.relation}).remainder;
}

VecPoly VecPoly::zero(RingPtr ring, std::size_t rank) {
  VecPoly v;
  v.ring = ring;
  v.comps.assign(rank, Polynomial::zero(ring));
  return v;
}

VecPoly VecPoly::unit(RingPtr ring, std::size_t rank, std::size_t index) {
  VecPoly v = zero(ring, rank);
  v.comps[index] = Polynomial::constant(ring, Coeff::one(ring->field));
  return v;
}

bool VecPoly::is_zero() const {
  return std::all_of(comps.begin(), comps.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::size_t VecPoly::lead_comp() const {
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (!comps[i].is_zero()) return i;
  return comps.size();
}

VecPoly VecPoly::operator+(const VecPoly& o) const {
  if (rank() != o.rank()) fail(Errc::shape_mismatch, "vector rank mismatch");
  VecPoly r = *this;
  for (std::size_t i = 0; i < comps.size(); ++i) r.comps[i] = r.comps[i] + o.comps[i];
  return r;
}

VecPoly VecPoly::operator-(const VecPoly& o) const { return *this + (-o); }

VecPoly VecPoly::operator-() const {
  VecPoly r = *this;
  for (auto& c : r.comps) c = -c;
  return r;
}

VecPoly VecPoly::times_term(const Coeff& c, const Monomial& m) const {
  VecPoly r = *this;
  for (auto& p : r.comps) p = p.times_term(c, m);
  return r;
}

VecPoly VecPoly::scaled(const Coeff& c) const {
  VecPoly r = *this;
  for (auto& p : r.comps) p = p.scaled(c);
  return r;
}

VecPoly VecPoly::monic() const {
  std::size_t lc = lead_comp();
  if (lc == rank()) return *this;
  return scaled(comps[lc].leading_coeff().inverse());
}

namespace {

// position-over-term compare of leading terms; earlier components dominate
// and the ring order decides within a component. greater == larger lead.
int lead_compare(const VecPoly& a, const VecPoly& b) {
  std::size_t ca = a.lead_comp(), cb = b.lead_comp();
  bool za = ca == a.rank(), zb = cb == b.rank();
  if (za || zb) return za && zb ? 0 : (za ? -1 : 1);
  if (ca != cb) return ca < cb ? 1 : -1;
  auto c = a.ring->order.compare(a.comps[ca].leading_monomial(), b.comps[cb].leading_monomial());
  return c == std::strong_ordering::greater ? 1 : (c == std::strong_ordering::less ? -1 : 0);
}

struct ModPair {
  std::size_t i, j;
  Monomial lcm;
  std::size_t comp;
};

// full reduction: every term of v in some component gets reduced whenever a
// basis lead (same component, dividing monomial) exists
VecPoly reduce_full_vec(VecPoly v, const std::vector<VecPoly>& basis) {
  if (v.is_zero()) return v;
  const RingPtr ring = v.ring;
  VecPoly rem = VecPoly::zero(ring, v.rank());
  while (!v.is_zero()) {
    std::size_t lc = v.lead_comp();
    const Term& lt = v.comps[lc].leading_term();
    bool reduced = false;
    for (const auto& g : basis) {
      std::size_t gc = g.lead_comp();
      if (gc != lc) continue;
      if (!g.comps[gc].leading_monomial().divides(lt.m)) continue;
      Coeff c = lt.c / g.comps[gc].leading_coeff();
      v = v - g.times_term(c, lt.m / g.comps[gc].leading_monomial());
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial t = Polynomial::term(ring, lt.c, lt.m);
      rem.comps[lc] = rem.comps[lc] + t;
      v.comps[lc] = v.comps[lc] - t;
    }
  }
  return rem;
}

std::vector<VecPoly> input_with_relations(const Ambient& amb, std::vector<VecPoly> gens, std::size_t rank) {
  if (amb.relation) {
    for (std::size_t i = 0; i < rank; ++i) {
      VecPoly w = VecPoly::zero(amb.ring, rank);
      w.comps[i] = *amb.relation;
      gens.push_back(std::move(w));
    }
  }
  return gens;
}

// Buchberger over the free module with POT order, full autoreduction at the
// end. Input vectors must share `ring`.
std::vector<VecPoly> module_groebner_raw(const RingPtr& ring, std::vector<VecPoly> input, std::size_t rank) {
  std::vector<VecPoly> basis;
  for (auto& v : input) {
    if (v.rank() != rank) fail(Errc::shape_mismatch, "generator rank mismatch");
    if (!v.is_zero()) basis.push_back(v.monic());
  }
  if (basis.empty()) return basis;
  const MonomialOrder& ord = ring->order;
  if (!ord.global()) fail(Errc::global_order_required, "module Groebner bases need a global order");

  std::deque<ModPair> pairs;
  auto push_pairs = [&](std::size_t j) {
    std::size_t cj = basis[j].lead_comp();
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].lead_comp() != cj) continue;
      pairs.push_back(ModPair{i, j,
                              Monomial::lcm(basis[i].comps[cj].leading_monomial(),
                                            basis[j].comps[cj].leading_monomial()),
                              cj});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  std::set<std::pair<std::size_t, std::size_t>> done;
  auto chain_applies = [&](const ModPair& p) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (basis[k].lead_comp() != p.comp) continue;
      if (!basis[k].comps[p.comp].leading_monomial().divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (done.count(key(p.i, k)) && done.count(key(p.j, k))) return true;
    }
    return false;
  };

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      auto c = ord.compare(pairs[k].lcm, pairs[best].lcm);
      if (c == std::strong_ordering::less ||
          (c == std::strong_ordering::equal &&
           std::make_pair(pairs[k].i, pairs[k].j) < std::make_pair(pairs[best].i, pairs[best].j)))
        best = k;
    }
    ModPair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    done.insert({p.i, p.j});
    if (chain_applies(p)) continue;
    const VecPoly& f = basis[p.i];
    const VecPoly& g = basis[p.j];
    VecPoly s = f.times_term(Coeff::one(ring->field), p.lcm / f.comps[p.comp].leading_monomial()) -
                g.times_term(Coeff::one(ring->field), p.lcm / g.comps[p.comp].leading_monomial());
    VecPoly h = reduce_full_vec(std::move(s), basis);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    push_pairs(basis.size() - 1);
  }

  // minimalize
  std::vector<VecPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t ci = basis[i].lead_comp();
    const Monomial& mi = basis[i].comps[ci].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      std::size_t cj = basis[j].lead_comp();
      if (cj != ci) continue;
      const Monomial& mj = basis[j].comps[cj].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // autoreduce: unique reduced basis
  std::vector<VecPoly> reduced = minimal;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<VecPoly> others;
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = reduce_full_vec(reduced[i], others).monic();
  }
  std::sort(reduced.begin(), reduced.end(), [](const VecPoly& a, const VecPoly& b) { return lead_compare(a, b) > 0; });
  return reduced;
}

}  // namespace

std::vector<VecPoly> module_groebner(const Ambient& amb, std::vector<VecPoly> gens, std::size_t rank) {
  for (auto& v : gens)
    if (!(*v.ring == *amb.ring)) fail(Errc::ring_mismatch, "module generator from another ring");
  std::vector<VecPoly> gb = module_groebner_raw(amb.ring, input_with_relations(amb, std::move(gens), rank), rank);
  if (!amb.relation) return gb;
  // drop elements that vanish over the quotient; surviving coordinates are
  // already W-reduced by the reducedness of the basis
  std::vector<VecPoly> out;
  for (auto& g : gb) {
    bool all_zero = true;
    for (auto& c : g.comps) {
      c = amb_normal_form(amb, c);
      if (!c.is_zero()) all_zero = false;
    }
    if (!all_zero) out.push_back(std::move(g));
  }
  return out;
}

VecPoly module_normal_form(const Ambient& amb, VecPoly v, const std::vector<VecPoly>& gb) {
  std::vector<VecPoly> reducers = input_with_relations(amb, gb, v.rank());
  return reduce_full_vec(std::move(v), reducers);
}

namespace {

// shared elimination machinery: Groebner basis of {(v_i, e_{r+i})} + W-block
// in R^(r+s); POT makes the first block dominate
struct Elimination {
  RingPtr ring;
  std::size_t rank, count;
  std::vector<VecPoly> gb;

  Elimination(const Ambient& amb, const std::vector<VecPoly>& gens, std::size_t r) {
    ring = amb.ring;
    rank = r;
    count = gens.size();
    std::vector<VecPoly> big;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].rank() != rank) fail(Errc::shape_mismatch, "generator rank mismatch");
      VecPoly v = VecPoly::zero(ring, rank + count);
      for (std::size_t c = 0; c < rank; ++c) v.comps[c] = gens[i].comps[c];
      v.comps[rank + i] = Polynomial::constant(ring, Coeff::one(ring->field));
      big.push_back(std::move(v));
    }
    if (amb.relation) {
      for (std::size_t c = 0; c < rank; ++c) {
        VecPoly w = VecPoly::zero(ring, rank + count);
        w.comps[c] = *amb.relation;
        big.push_back(std::move(w));
      }
    }
    gb = module_groebner_raw(ring, std::move(big), rank + count);
  }

  bool upper_zero(const VecPoly& v) const {
    for (std::size_t c = 0; c < rank; ++c)
      if (!v.comps[c].is_zero()) return false;
    return true;
  }

  VecPoly lower(const VecPoly& v) const {
    VecPoly out = VecPoly::zero(ring, count);
    for (std::size_t i = 0; i < count; ++i) out.comps[i] = v.comps[rank + i];
    return out;
  }
};

}  // namespace

std::vector<VecPoly> module_syzygies(const Ambient& amb, const std::vector<VecPoly>& gens, std::size_t rank) {
  Elimination el(amb, gens, rank);
  std::vector<VecPoly> raw;
  for (const auto& g : el.gb)
    if (el.upper_zero(g)) raw.push_back(el.lower(g));
  // canonicalize over the quotient: reduced basis of the syzygy module itself
  return module_groebner(amb, std::move(raw), gens.size());
}

std::optional<std::vector<Polynomial>> module_lift(const Ambient& amb, const VecPoly& target,
                                                   const std::vector<VecPoly>& gens, std::size_t rank) {
  Elimination el(amb, gens, rank);
  VecPoly v = VecPoly::zero(el.ring, rank + el.count);
  for (std::size_t c = 0; c < rank; ++c) v.comps[c] = target.comps[c];
  VecPoly nf = reduce_full_vec(std::move(v), el.gb);
  if (!el.upper_zero(nf)) return std::nullopt;
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < el.count; ++i) out.push_back(amb_normal_form(amb, -nf.comps[rank + i]));
  return out;
}

Colength module_colength(const Ambient& amb, const std::vector<VecPoly>& gens, std::size_t rank) {
  if (rank == 0) return Colength::of(0);
  std::vector<VecPoly> gb = module_groebner(amb, gens, rank);
  // over a quotient, the W*e_i leads count toward the staircase
  if (amb.relation) gb = input_with_relations(amb, std::move(gb), rank);
  unsigned long total = 0;
  for (std::size_t c = 0; c < rank; ++c) {
    std::vector<Monomial> leads;
    for (const auto& g : gb) {
      if (g.lead_comp() != c) continue;
      leads.push_back(g.comps[c].leading_monomial());
    }
    Staircase st = staircase_of(leads, amb.ring->nvars());
    if (!st.count.finite) return Colength::infinite();
    total += st.count.value;
  }
  return Colength::of(total);
}

}  // namespace singlab
