#pragma once

#include <string>
#include <utility>

#include "gredcheck/monomial.hpp"

namespace gredcheck {

enum class OrderKind { lex, grevlex, block };

// Total multiplicative well-ordering on monomials of one ring.
// block(k) compares the first k variables by grevlex and breaks ties
// by grevlex on the remaining ones; it is an elimination order for the
// first k variables.
class MonomialOrder {
 public:
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex, 0); }
  static MonomialOrder grevlex() {
    return MonomialOrder(OrderKind::grevlex, 0);
  }
  static MonomialOrder block(int first_block);

  OrderKind kind() const { return kind_; }
  int block_size() const { return block_; }

  // <0, 0, >0 as a is below, equal to, above b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  std::pair<int, int> key() const { return {static_cast<int>(kind_), block_}; }
  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.key() == b.key();
  }
  friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  MonomialOrder(OrderKind kind, int block) : kind_(kind), block_(block) {}

  OrderKind kind_;
  int block_;
};

}  // namespace gredcheck
