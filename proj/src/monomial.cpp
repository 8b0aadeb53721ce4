#include "singlab/monomial.hpp"

#include <algorithm>
#include <string>

#include "singlab/error.hpp"

namespace singlab {

long Monomial::degree() const {
  long d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

bool Monomial::divides(const Monomial& m) const {
  if (e.size() != m.e.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

bool Monomial::coprime(const Monomial& m) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0 && m.e[i] > 0) return false;
  return true;
}

MonomialOrder MonomialOrder::wgrevlex(std::vector<long> weights) {
  for (long w : weights)
    if (w <= 0) fail(Errc::invalid_argument, "wgrevlex weights must be positive");
  MonomialOrder o(Kind::wgrevlex);
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::block_elim(std::size_t split, Kind inner) {
  if (inner == Kind::block_elim || inner == Kind::local_ds)
    fail(Errc::invalid_argument, "block_elim inner order must be a plain global order");
  MonomialOrder o(Kind::block_elim);
  o.split_ = split;
  o.inner_ = inner;
  return o;
}

bool MonomialOrder::global() const { return kind_ != Kind::local_ds; }

namespace {

// grevlex on a slice [lo, hi): higher degree first, tie broken by the
// smallest trailing exponent difference (standard graded reverse lex).
std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.e[i] != b.e[i]) return b.e[i] <=> a.e[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] <=> b.e[i];
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.e.size();
  if (n != b.e.size()) fail(Errc::ring_mismatch, "monomials of different variable counts");
  switch (kind_) {
    case Kind::lex:
      return lex_cmp(a, b, 0, n);
    case Kind::grevlex:
      return grevlex_cmp(a, b, 0, n);
    case Kind::wgrevlex: {
      if (weights_.size() != n) fail(Errc::ring_mismatch, "weight vector length mismatch");
      long da = 0, db = 0;
      for (std::size_t i = 0; i < n; ++i) {
        da += weights_[i] * static_cast<long>(a.e[i]);
        db += weights_[i] * static_cast<long>(b.e[i]);
      }
      if (da != db) return da <=> db;
      return grevlex_cmp(a, b, 0, n);
    }
    case Kind::local_ds: {
      long da = a.degree(), db = b.degree();
      if (da != db) return db <=> da;  // smaller degree is larger: local
      return grevlex_cmp(a, b, 0, n);
    }
    case Kind::block_elim: {
      std::size_t s = std::min(split_, n);
      auto first = inner_ == Kind::lex ? lex_cmp(a, b, 0, s) : grevlex_cmp(a, b, 0, s);
      if (first != std::strong_ordering::equal) return first;
      return inner_ == Kind::lex ? lex_cmp(a, b, s, n) : grevlex_cmp(a, b, s, n);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::lex: return "lex";
    case Kind::grevlex: return "grevlex";
    case Kind::wgrevlex: {
      std::string s = "wgrevlex(";
      for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
      return s + ")";
    }
    case Kind::local_ds: return "local";
    case Kind::block_elim: return "block_elim(" + std::to_string(split_) + ")";
  }
  return "?";
}

}  // namespace singlab
