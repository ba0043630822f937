#include "gredcheck/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace gredcheck {

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring()) {
    throw std::invalid_argument("polynomials live in different rings");
  }
}

}  // namespace

Polynomial::Polynomial(Ring ring, MonomialOrder order)
    : ring_(std::move(ring)), order_(order) {}

Polynomial Polynomial::zero(const Ring& ring, MonomialOrder order) {
  return Polynomial(ring, order);
}

Polynomial Polynomial::constant(const Ring& ring, Rational c,
                                MonomialOrder order) {
  Polynomial p(ring, order);
  if (!c.is_zero()) {
    p.terms_.push_back({Monomial(ring.arity()), std::move(c)});
  }
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, int index,
                                MonomialOrder order) {
  if (index < 0 || index >= ring.arity()) {
    throw std::invalid_argument("variable index out of range");
  }
  std::vector<int> exps(ring.arity(), 0);
  exps[index] = 1;
  Polynomial p(ring, order);
  p.terms_.push_back({Monomial(std::move(exps)), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms,
                                  MonomialOrder order) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.mono, b.mono);
  });
  Polynomial p(ring, order);
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Polynomial::constant_term() const {
  if (terms_.empty()) return Rational(0);
  const Term& last = terms_.back();
  return last.mono.is_one() ? last.coeff : Rational(0);
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.front().mono;
}

const Rational& Polynomial::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.front().coeff;
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) throw std::logic_error("tail of zero");
  Polynomial out(ring_, order_);
  out.terms_.assign(terms_.begin() + 1, terms_.end());
  return out;
}

long long Polynomial::total_degree() const {
  long long d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  return from_terms(ring_, terms_, order);
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_, order_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  return minus_scaled(Rational(-1), Monomial(ring_.arity()), o);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return minus_scaled(Rational(1), Monomial(ring_.arity()), o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(*this, o);
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : o.terms_) {
      out.push_back({a.mono.times(b.mono), a.coeff * b.coeff});
    }
  }
  return from_terms(ring_, std::move(out), order_);
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc = constant(ring_, Rational(1), order_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial(ring_, order_);
  Polynomial out(ring_, order_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
  return out;
}

Polynomial Polynomial::minus_scaled(const Rational& c, const Monomial& m,
                                    const Polynomial& g) const {
  require_same_ring(*this, g);
  std::optional<Polynomial> converted;
  const Polynomial* rhs = &g;
  if (g.order() != order_) {
    converted = g.with_order(order_);
    rhs = &*converted;
  }
  const std::vector<Term>& gt = rhs->terms_;
  Polynomial out(ring_, order_);
  out.terms_.reserve(terms_.size() + gt.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < gt.size()) {
    if (j == gt.size()) {
      out.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial gm = gt[j].mono.times(m);
    if (i == terms_.size()) {
      Rational coeff = -(c * gt[j].coeff);
      if (!coeff.is_zero()) out.terms_.push_back({std::move(gm), coeff});
      ++j;
      continue;
    }
    int cmp = order_.compare(terms_[i].mono, gm);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      Rational coeff = -(c * gt[j].coeff);
      if (!coeff.is_zero()) out.terms_.push_back({std::move(gm), coeff});
      ++j;
    } else {
      Rational coeff = terms_[i].coeff - c * gt[j].coeff;
      if (!coeff.is_zero()) out.terms_.push_back({std::move(gm), coeff});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= ring_.arity()) {
    throw std::invalid_argument("unknown variable index");
  }
  std::vector<Term> out;
  for (const Term& t : terms_) {
    int e = t.mono.exp(var);
    if (e == 0) continue;
    std::vector<int> exps = t.mono.exps();
    exps[var] = e - 1;
    out.push_back({Monomial(std::move(exps)), t.coeff * Rational(e)});
  }
  return from_terms(ring_, std::move(out), order_);
}

Polynomial Polynomial::derivative(std::string_view var) const {
  auto idx = ring_.index_of(var);
  if (!idx) {
    throw std::invalid_argument("unknown variable: '" + std::string(var) +
                                "'");
  }
  return derivative(*idx);
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != ring_.arity()) {
    throw std::invalid_argument("evaluation point arity mismatch");
  }
  Rational total(0);
  for (const Term& t : terms_) {
    Rational v = t.coeff;
    for (int i = 0; i < ring_.arity(); ++i) {
      int e = t.mono.exp(i);
      if (e > 0) v *= point[i].pow(static_cast<unsigned long>(e));
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::map_to_ring(const Ring& target,
                                   const std::vector<int>& var_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::vector<int> exps(target.arity(), 0);
    for (int i = 0; i < ring_.arity(); ++i) {
      int e = t.mono.exp(i);
      if (e == 0) continue;
      int j = var_map[i];
      if (j < 0) {
        throw std::invalid_argument("polynomial involves a dropped variable");
      }
      exps[j] = e;
    }
    out.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return from_terms(target, std::move(out), order_);
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != ring_.arity()) {
    throw std::invalid_argument("substitution needs one image per variable");
  }
  if (images.empty()) throw std::invalid_argument("empty substitution");
  const Ring& target = images[0].ring();
  Polynomial total(target, images[0].order());
  for (const Term& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coeff, total.order());
    for (int i = 0; i < ring_.arity(); ++i) {
      int e = t.mono.exp(i);
      if (e > 0) prod = prod * images[i].pow(static_cast<unsigned>(e));
    }
    total = total + prod;
  }
  return total;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Polynomial rem = f.with_order(g.order());
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    if (!g.leading_monomial().divides(rem.leading_monomial())) {
      throw std::invalid_argument("polynomial division is not exact");
    }
    Rational c = rem.leading_coeff() / g.leading_coeff();
    Monomial m = rem.leading_monomial().divide(g.leading_monomial());
    rem = rem.minus_scaled(c, m, g);
    quotient.push_back({std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient), g.order());
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  std::optional<Polynomial> converted;
  const Polynomial* rhs = &b;
  if (b.order_ != a.order_) {
    converted = b.with_order(a.order_);
    rhs = &*converted;
  }
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != rhs->terms_[i].mono ||
        a.terms_[i].coeff != rhs->terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    std::string mono;
    for (int i = 0; i < ring_.arity(); ++i) {
      int e = t.mono.exp(i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.var(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.str();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace gredcheck
