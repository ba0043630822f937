#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gredcheck/monomial.hpp"
#include "gredcheck/order.hpp"
#include "gredcheck/rational.hpp"
#include "gredcheck/ring.hpp"

namespace gredcheck {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse multivariate polynomial over the rationals. Terms are kept
// strictly descending in the polynomial's monomial order, with no zero
// coefficients and no duplicate monomials; the zero polynomial has an
// empty term list.
class Polynomial {
 public:
  explicit Polynomial(Ring ring,
                      MonomialOrder order = MonomialOrder::grevlex());

  static Polynomial zero(const Ring& ring,
                         MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial constant(const Ring& ring, Rational c,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial variable(const Ring& ring, int index,
                             MonomialOrder order = MonomialOrder::grevlex());
  // Merges duplicates, drops zeros, sorts descending.
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::grevlex());

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  Rational constant_term() const;

  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;
  Polynomial tail() const;  // everything below the leading term
  long long total_degree() const;  // -1 for the zero polynomial

  // Same polynomial with terms re-sorted under `order`.
  Polynomial with_order(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial pow(unsigned e) const;

  Polynomial scaled(const Rational& c) const;
  // this - c * m * g, the reduction step of multivariate division.
  Polynomial minus_scaled(const Rational& c, const Monomial& m,
                          const Polynomial& g) const;
  Polynomial monic() const;

  Polynomial derivative(int var) const;
  Polynomial derivative(std::string_view var) const;

  Rational eval(std::span<const Rational> point) const;

  // Relocates exponents into `target`; var_map[i] is the target index
  // of this ring's variable i. All other target exponents are zero.
  Polynomial map_to_ring(const Ring& target,
                         const std::vector<int>& var_map) const;
  // Substitutes images[i] for variable i; images live in a common ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  // Canonical text form; parses back to the same polynomial.
  std::string str() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

// Quotient f / g when the division is exact; throws std::invalid_argument
// otherwise. Used by fraction-free elimination, where exactness is
// guaranteed.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// Parses the problem-file polynomial grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := rational | name | '(' expr ')'
// Whitespace is insignificant; multiplication is always explicit.
// Throws ParseError (with byte offset) or reports unknown variables.
Polynomial parse_polynomial(std::string_view text, const Ring& ring,
                            MonomialOrder order = MonomialOrder::grevlex());

}  // namespace gredcheck
