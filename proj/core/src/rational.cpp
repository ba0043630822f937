#include "gredcheck/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace gredcheck {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  mpq_class v;
  if (v.set_str(s, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
  if (v.get_den() == 0) {
    throw std::invalid_argument("rational with zero denominator: " + s);
  }
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(unsigned long e) const {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
  return Rational(std::move(r));  // power of a canonical form is canonical
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

std::string Rational::numerator_str() const { return v_.get_num().get_str(); }

std::string Rational::denominator_str() const { return v_.get_den().get_str(); }

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace gredcheck
