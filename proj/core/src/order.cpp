#include "gredcheck/order.hpp"

#include <stdexcept>

namespace gredcheck {

namespace {

int lex_compare(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.arity(); ++i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
  }
  return 0;
}

// Graded reverse lexicographic on the variable range [lo, hi): higher
// total degree wins; on equal degree the monomial whose last nonzero
// exponent difference is negative is the larger one.
int grevlex_compare_range(const Monomial& a, const Monomial& b, int lo,
                          int hi) {
  long long da = a.degree_range(lo, hi);
  long long db = b.degree_range(lo, hi);
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    int d = a.exp(i) - b.exp(i);
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::block(int first_block) {
  if (first_block <= 0) {
    throw std::invalid_argument("block order needs a positive block size");
  }
  return MonomialOrder(OrderKind::block, first_block);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::lex:
      return lex_compare(a, b);
    case OrderKind::grevlex:
      return grevlex_compare_range(a, b, 0, a.arity());
    case OrderKind::block: {
      int c = grevlex_compare_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_compare_range(a, b, block_, a.arity());
    }
  }
  return 0;
}

std::string MonomialOrder::str() const {
  switch (kind_) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::grevlex:
      return "grevlex";
    case OrderKind::block:
      return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace gredcheck
