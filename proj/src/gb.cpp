#include "singlab/gb.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "singlab/error.hpp"

namespace singlab {

namespace {

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  const RingPtr& ring = f.ring();
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(f.leading_coeff().inverse(), l / f.leading_monomial());
  Polynomial b = g.times_term(g.leading_coeff().inverse(), l / g.leading_monomial());
  (void)ring;
  return a - b;
}

// top-reduction loop used inside Buchberger; full tail reduction happens in
// the final autoreduction pass
Polynomial reduce_top(Polynomial h, const std::vector<Polynomial>& basis) {
  bool again = true;
  while (!h.is_zero() && again) {
    again = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(h.leading_monomial())) {
        Coeff c = h.leading_coeff() / g.leading_coeff();
        h = h - g.times_term(c, h.leading_monomial() / g.leading_monomial());
        again = true;
        break;
      }
    }
  }
  return h;
}

Polynomial reduce_full(Polynomial h, const std::vector<Polynomial>& basis) {
  const RingPtr ring = h.ring();
  Polynomial rem = Polynomial::zero(ring);
  while (!h.is_zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(h.leading_monomial())) {
        Coeff c = h.leading_coeff() / g.leading_coeff();
        h = h - g.times_term(c, h.leading_monomial() / g.leading_monomial());
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Polynomial t = Polynomial::term(ring, h.leading_coeff(), h.leading_monomial());
      rem = rem + t;
      h = h - t;
    }
  }
  return rem;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

bool GroebnerBasis::contains_one() const {
  return generators.size() == 1 && generators[0].is_constant() && !generators[0].is_zero();
}

GroebnerBasis buchberger(std::vector<Polynomial> generators, PairStrategy strategy) {
  std::vector<Polynomial> source = generators;
  std::vector<Polynomial> basis;
  RingPtr ring;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!ring) ring = g.ring();
    g.check_ring(generators.front());
    basis.push_back(g.monic());
  }
  if (basis.empty()) {
    if (!generators.empty()) ring = generators.front().ring();
    return GroebnerBasis{ring, {}, std::move(source)};
  }
  if (!ring->order.global()) fail(Errc::global_order_required, "buchberger needs a global order; use standard_basis");

  const MonomialOrder& ord = ring->order;
  std::deque<Pair> pairs;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back(Pair{i, j, Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial())});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  auto pop_pair = [&]() {
    std::size_t best = 0;
    if (strategy == PairStrategy::normal) {
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        auto c = ord.compare(pairs[k].lcm, pairs[best].lcm);
        if (c == std::strong_ordering::less ||
            (c == std::strong_ordering::equal &&
             std::make_pair(pairs[k].i, pairs[k].j) < std::make_pair(pairs[best].i, pairs[best].j)))
          best = k;
      }
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    return p;
  };

  std::set<std::pair<std::size_t, std::size_t>> done;
  auto chain_applies = [&](const Pair& p) {
    // Buchberger's second criterion: some k with lm(k) | lcm(i,j) and both
    // (i,k) and (j,k) already handled
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].leading_monomial().divides(p.lcm)) continue;
      auto key = [&](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (done.count(key(p.i, k)) && done.count(key(p.j, k))) return true;
    }
    return false;
  };

  while (!pairs.empty()) {
    Pair p = pop_pair();
    done.insert({p.i, p.j});
    if (basis[p.i].leading_monomial().coprime(basis[p.j].leading_monomial())) continue;
    if (chain_applies(p)) continue;
    Polynomial h = reduce_top(spoly(basis[p.i], basis[p.j]), basis);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    push_pairs(basis.size() - 1);
  }

  // minimalize: drop any element whose leading monomial another divides
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading_monomial();
      const Monomial& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // full autoreduction yields the unique reduced basis
  std::vector<Polynomial> reduced = minimal;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = reduce_full(reduced[i], others).monic();
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis{ring, std::move(reduced), std::move(source)};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!gb.ring) return f;
  if (!(*f.ring() == *gb.ring)) fail(Errc::ring_mismatch, "normal_form ring mismatch");
  return reduce_full(f, gb.generators);
}

Staircase staircase_of(const std::vector<Monomial>& lead_monomials, std::size_t nvars) {
  Staircase st;
  st.lead_monomials = lead_monomials;
  for (const auto& m : lead_monomials) {
    if (m.is_one()) {  // unit ideal: zero quotient
      st.count = Colength::of(0);
      return st;
    }
  }
  if (nvars == 0) {
    st.count = Colength::of(1);
    st.standard_monomials.push_back(Monomial(0));
    return st;
  }
  // Artinian iff every variable has a pure power among the leads; the bound
  // per variable is then that exponent
  std::vector<std::uint32_t> bound(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    bool found = false;
    for (const auto& m : lead_monomials) {
      bool pure = true;
      for (std::size_t i = 0; i < nvars; ++i)
        if (i != v && m.e[i] != 0) { pure = false; break; }
      if (pure) {
        found = true;
        bound[v] = found && bound[v] != 0 ? std::min(bound[v], m.e[v]) : m.e[v];
      }
    }
    if (!found) {
      st.count = Colength::infinite();
      return st;
    }
  }
  // enumerate exponent tuples below the bounds and keep those divisible by
  // no leading monomial
  std::vector<std::uint32_t> cur(nvars, 0);
  unsigned long count = 0;
  while (true) {
    Monomial m{std::vector<std::uint32_t>(cur)};
    bool divisible = false;
    for (const auto& l : lead_monomials)
      if (l.divides(m)) { divisible = true; break; }
    if (!divisible) {
      ++count;
      st.standard_monomials.push_back(m);
    }
    std::size_t v = 0;
    while (v < nvars) {
      if (++cur[v] < bound[v]) break;
      cur[v] = 0;
      ++v;
    }
    if (v == nvars) break;
  }
  st.count = Colength::of(count);
  return st;
}

Colength colength(const GroebnerBasis& gb) {
  if (!gb.ring) return Colength::infinite();
  if (gb.generators.empty())
    return gb.ring->nvars() == 0 ? Colength::of(1) : Colength::infinite();
  std::vector<Monomial> leads;
  for (const auto& g : gb.generators) leads.push_back(g.leading_monomial());
  return staircase_of(leads, gb.ring->nvars()).count;
}

namespace {

long ecart(const Polynomial& f) { return f.degree() - f.leading_monomial().degree(); }

Polynomial mora_nf(Polynomial h, std::vector<Polynomial> reducers) {
  while (!h.is_zero()) {
    long best = -1;
    long best_ecart = 0;
    for (std::size_t k = 0; k < reducers.size(); ++k) {
      if (reducers[k].is_zero()) continue;
      if (!reducers[k].leading_monomial().divides(h.leading_monomial())) continue;
      long e = ecart(reducers[k]);
      if (best < 0 || e < best_ecart) {
        best = static_cast<long>(k);
        best_ecart = e;
      }
    }
    if (best < 0) return h;
    const Polynomial g = reducers[static_cast<std::size_t>(best)];
    if (best_ecart > ecart(h)) reducers.push_back(h);  // Mora: h may later reduce itself
    Coeff c = h.leading_coeff() / g.leading_coeff();
    h = h - g.times_term(c, h.leading_monomial() / g.leading_monomial());
  }
  return h;
}

}  // namespace

Polynomial mora_normal_form(const Polynomial& f, const std::vector<Polynomial>& generators) {
  if (f.ring()->order.global())
    fail(Errc::local_order_required, "mora_normal_form needs a local order; use normal_form");
  std::vector<Polynomial> red;
  for (const auto& g : generators) {
    f.check_ring(g);
    if (!g.is_zero()) red.push_back(g);
  }
  return mora_nf(f, red);
}

GroebnerBasis standard_basis(std::vector<Polynomial> generators) {
  std::vector<Polynomial> source = generators;
  std::vector<Polynomial> basis;
  RingPtr ring;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!ring) ring = g.ring();
    basis.push_back(g.monic());
  }
  if (basis.empty()) {
    if (!generators.empty()) ring = generators.front().ring();
    return GroebnerBasis{ring, {}, std::move(source)};
  }
  if (ring->order.global()) fail(Errc::local_order_required, "standard_basis needs a local order; use buchberger");

  const MonomialOrder& ord = ring->order;
  std::deque<Pair> pairs;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back(Pair{i, j, Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial())});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (ord.compare(pairs[k].lcm, pairs[best].lcm) == std::strong_ordering::greater) best = k;
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    Polynomial h = mora_nf(spoly(basis[p.i], basis[p.j]), basis);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    push_pairs(basis.size() - 1);
  }

  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading_monomial();
      const Monomial& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) { redundant = true; break; }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis{ring, std::move(minimal), std::move(source)};
}

Colength local_colength(const std::vector<Polynomial>& generators) {
  GroebnerBasis sb = standard_basis(generators);
  return colength(sb);
}

}  // namespace singlab
