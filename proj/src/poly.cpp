#include "singlab/poly.hpp"

#include <algorithm>
#include <map>

#include "singlab/error.hpp"

namespace singlab {

std::optional<std::size_t> Ring::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> vars, Field field, MonomialOrder order) {
  return std::make_shared<const Ring>(Ring{std::move(vars), field, std::move(order)});
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  return make_ring(ring->vars, ring->field, std::move(order));
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_))
    fail(Errc::ring_mismatch, "polynomials from different ring contexts");
}

Polynomial Polynomial::zero(RingPtr ring) {
  Polynomial p;
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, Coeff c) {
  Polynomial p = zero(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial(p.ring_->nvars()), std::move(c)});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long v) {
  Field f = ring->field;
  return constant(std::move(ring), Coeff::from_long(v, f));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) fail(Errc::index_out_of_range, "variable index out of range");
  Monomial m(ring->nvars());
  m.e[index] = 1;
  return term(std::move(ring), Coeff::one(ring->field), std::move(m));
}

Polynomial Polynomial::term(RingPtr ring, Coeff c, Monomial m) {
  Polynomial p = zero(std::move(ring));
  if (m.nvars() != p.ring_->nvars()) fail(Errc::ring_mismatch, "monomial length mismatch");
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::make_sorted(RingPtr ring, std::vector<Term> sorted) {
  Polynomial p;
  p.ring_ = std::move(ring);
  p.terms_ = std::move(sorted);
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const MonomialOrder& ord = ring->order;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
  std::vector<Term> out;
  for (auto& t : terms) {
    if (t.m.nvars() != ring->nvars()) fail(Errc::ring_mismatch, "monomial length mismatch");
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = out.back().c + t.c;
      if (out.back().c.is_zero()) out.pop_back();
    } else if (!t.c.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return make_sorted(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) fail(Errc::invalid_argument, "leading term of zero polynomial");
  return terms_.front();
}

const Monomial& Polynomial::leading_monomial() const { return leading_term().m; }
const Coeff& Polynomial::leading_coeff() const { return leading_term().c; }

Coeff Polynomial::constant_coeff() const {
  for (const auto& t : terms_)
    if (t.m.is_one()) return t.c;
  return Coeff::zero(ring_->field);
}

long Polynomial::degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  const MonomialOrder& ord = ring_->order;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    auto c = ord.compare(terms_[i].m, o.terms_[j].m);
    if (c == std::strong_ordering::greater) {
      out.push_back(terms_[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(o.terms_[j++]);
    } else {
      Coeff s = terms_[i].c + o.terms_[j].c;
      if (!s.is_zero()) out.push_back(Term{terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return make_sorted(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_term(const Coeff& c, const Monomial& m) const {
  if (c.is_zero()) return zero(ring_);
  Polynomial p(*this);
  for (auto& t : p.terms_) {
    t.c = t.c * c;
    t.m = t.m * m;
  }
  return p;
}

Polynomial Polynomial::scaled(const Coeff& c) const { return times_term(c, Monomial(ring_->nvars())); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  const MonomialOrder& ord = ring_->order;
  auto cmp = [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); };
  std::map<Monomial, Coeff, decltype(cmp)> acc(cmp);
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.m * b.m;
      Coeff c = a.c * b.c;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), std::move(c));
      else
        it->second = it->second + c;
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back(Term{m, c});
  return make_sorted(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned long k) const {
  Polynomial r = constant(ring_, Coeff::one(ring_->field));
  Polynomial base(*this);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
  if (!(*ring_ == *o.ring_)) return false;
  return terms_ == o.terms_;
}

Polynomial Polynomial::partial_derivative(std::size_t var_index) const {
  if (var_index >= ring_->nvars()) fail(Errc::index_out_of_range, "derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = t.m.e[var_index];
    if (e == 0) continue;
    Coeff c = t.c * Coeff::from_long(static_cast<long>(e), ring_->field);
    if (c.is_zero()) continue;  // characteristic kills the term
    Monomial m = t.m;
    m.e[var_index] -= 1;
    out.push_back(Term{std::move(m), std::move(c)});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::reorder(const RingPtr& target) const {
  if (target->vars != ring_->vars || !(target->field == ring_->field))
    fail(Errc::ring_mismatch, "reorder requires same variables and field");
  return from_terms(target, terms_);
}

Polynomial Polynomial::map_vars(const RingPtr& target, const std::vector<std::size_t>& var_map) const {
  if (var_map.size() != ring_->nvars()) fail(Errc::ring_mismatch, "variable map length mismatch");
  if (!(target->field == ring_->field)) fail(Errc::ring_mismatch, "variable map across fields");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (var_map[i] >= target->nvars()) fail(Errc::index_out_of_range, "variable map target out of range");
      m.e[var_map[i]] += t.m.e[i];
    }
    out.push_back(Term{std::move(m), t.c});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::substitute(const RingPtr& target, const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->nvars()) fail(Errc::ring_mismatch, "substitution image count mismatch");
  Polynomial acc = Polynomial::zero(target);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.c);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.m.e[i] > 0) prod = prod * images[i].pow(t.m.e[i]);
    acc = acc + prod;
  }
  return acc;
}

bool Polynomial::is_weighted_homogeneous(const std::vector<mpq_class>& weights) const {
  if (weights.size() != ring_->nvars()) fail(Errc::ring_mismatch, "weight vector length mismatch");
  if (terms_.empty()) return true;
  auto wdeg = [&](const Monomial& m) {
    mpq_class d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * static_cast<long>(m.e[i]);
    return d;
  };
  mpq_class d0 = wdeg(terms_[0].m);
  for (const auto& t : terms_)
    if (wdeg(t.m) != d0) return false;
  return true;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) { return a * b; }

DivisionResult multivariate_divide(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  const RingPtr& ring = f.ring();
  if (!ring->order.global()) fail(Errc::global_order_required, "division needs a global order; use mora_normal_form");
  for (const auto& g : divisors) {
    f.check_ring(g);
    if (g.is_zero()) fail(Errc::invalid_argument, "zero divisor in division algorithm");
  }
  DivisionResult res;
  res.quotients.assign(divisors.size(), Polynomial::zero(ring));
  res.remainder = Polynomial::zero(ring);
  Polynomial h = f;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (divisors[i].leading_monomial().divides(lt.m)) {
        Coeff c = lt.c / divisors[i].leading_coeff();
        Monomial m = lt.m / divisors[i].leading_monomial();
        res.quotients[i] = res.quotients[i] + Polynomial::term(ring, c, m);
        h = h - divisors[i].times_term(c, m);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Polynomial t = Polynomial::term(ring, lt.c, lt.m);
      res.remainder = res.remainder + t;
      h = h - t;
    }
  }
  return res;
}

}  // namespace singlab
