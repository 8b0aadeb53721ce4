#ifndef SINGLAB_PARSE_HPP
#define SINGLAB_PARSE_HPP

#include <string>

#include "singlab/poly.hpp"

namespace singlab {

/// Canonical text form: terms in decreasing ring order, explicit `*`, `^` for
/// powers, e.g. `3*x^2*y - 1/2*y^3`. parse_polynomial(to_string(f)) == f.
std::string to_string(const Polynomial& f);

/// Recursive-descent parser for
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' nat)?
///   base     := rational | var | '(' expr ')'
///   rational := int ('/' nat)?
/// Implicit multiplication is not allowed. Syntax errors carry a 1-based
/// column; in F_p mode a denominator divisible by p is rejected.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace singlab

#endif
