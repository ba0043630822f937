#pragma once

#include <cstdint>
#include <vector>

namespace gredcheck {

// Exponent vector of fixed arity. Exponents are machine integers;
// arithmetic that would overflow them is a hard error.
class Monomial {
 public:
  explicit Monomial(int arity) : exps_(arity, 0), degree_(0) {}
  explicit Monomial(std::vector<int> exps);

  int arity() const { return static_cast<int>(exps_.size()); }
  int exp(int i) const { return exps_[i]; }
  const std::vector<int>& exps() const { return exps_; }
  long long degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial times(const Monomial& o) const;     // throws on exponent overflow
  bool divides(const Monomial& o) const;       // this | o
  Monomial divide(const Monomial& o) const;    // this / o, requires o | this
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;       // gcd == 1
  Monomial pow(unsigned e) const;

  // Degree of the sub-vector [lo, hi).
  long long degree_range(int lo, int hi) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

 private:
  std::vector<int> exps_;
  long long degree_;
};

}  // namespace gredcheck
