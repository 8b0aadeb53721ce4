#ifndef SINGLAB_MONOMIAL_HPP
#define SINGLAB_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace singlab {

/// Exponent vector; length equals the ring's variable count.
struct Monomial {
  std::vector<std::uint32_t> e;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

  std::size_t nvars() const { return e.size(); }
  long degree() const;
  bool is_one() const;

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  /// this / m; caller guarantees m.divides(*this).
  Monomial operator/(const Monomial& m) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& m) const;

  bool operator==(const Monomial&) const = default;
};

/// Total order on monomials of a fixed ring.
///
/// lex, grevlex and weighted-grevlex are global (1 is the smallest monomial);
/// local_ds is the anti-graded local order (1 is the largest). block_elim
/// compares the first `split` variables by the inner order, then the rest.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, wgrevlex, local_ds, block_elim };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  static MonomialOrder wgrevlex(std::vector<long> weights);
  static MonomialOrder local_ds() { return MonomialOrder(Kind::local_ds); }
  static MonomialOrder block_elim(std::size_t split, Kind inner = Kind::grevlex);

  Kind kind() const { return kind_; }
  bool global() const;
  bool local() const { return !global(); }

  /// std::strong_ordering::greater means a is larger in this order.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == std::strong_ordering::less; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == std::strong_ordering::greater; }

  bool operator==(const MonomialOrder&) const = default;

  std::string describe() const;

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  Kind kind_;
  std::vector<long> weights_;
  std::size_t split_ = 0;
  Kind inner_ = Kind::grevlex;
};

}  // namespace singlab

#endif
