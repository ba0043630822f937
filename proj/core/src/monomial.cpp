#include "gredcheck/monomial.hpp"

#include <limits>
#include <stdexcept>

namespace gredcheck {

namespace {

int checked_add(int a, int b) {
  long long s = static_cast<long long>(a) + b;
  if (s > std::numeric_limits<int>::max()) {
    throw std::overflow_error("monomial exponent overflow");
  }
  return static_cast<int>(s);
}

}  // namespace

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)), degree_(0) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::times(const Monomial& o) const {
  std::vector<int> out(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i) {
    out[i] = checked_add(exps_[i], o.exps_[i]);
  }
  return Monomial(std::move(out));
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  std::vector<int> out(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < o.exps_[i]) {
      throw std::invalid_argument("monomial division is not exact");
    }
    out[i] = exps_[i] - o.exps_[i];
  }
  return Monomial(std::move(out));
}

Monomial Monomial::lcm(const Monomial& o) const {
  std::vector<int> out(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i) {
    out[i] = std::max(exps_[i], o.exps_[i]);
  }
  return Monomial(std::move(out));
}

bool Monomial::coprime(const Monomial& o) const {
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0 && o.exps_[i] > 0) return false;
  }
  return true;
}

Monomial Monomial::pow(unsigned e) const {
  std::vector<int> out(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i) {
    long long v = static_cast<long long>(exps_[i]) * e;
    if (v > std::numeric_limits<int>::max()) {
      throw std::overflow_error("monomial exponent overflow");
    }
    out[i] = static_cast<int>(v);
  }
  return Monomial(std::move(out));
}

long long Monomial::degree_range(int lo, int hi) const {
  long long d = 0;
  for (int i = lo; i < hi; ++i) d += exps_[i];
  return d;
}

}  // namespace gredcheck
