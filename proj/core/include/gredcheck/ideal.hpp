#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "gredcheck/budget.hpp"
#include "gredcheck/polynomial.hpp"

namespace gredcheck {

// Reduced Groebner basis: monic elements, no leading monomial divides
// another, no trailing term divisible by any leading monomial. Unique
// for a given ideal and order; elements sorted ascending by leading
// monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<Polynomial> elements)
      : order_(order), elements_(std::move(elements)) {}

  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  bool empty() const { return elements_.empty(); }
  // True when the basis is {1}, i.e. the ideal is the whole ring.
  bool is_trivial() const {
    return elements_.size() == 1 && elements_[0].is_constant() &&
           !elements_[0].is_zero();
  }

 private:
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
};

// Remainder of full multivariate division of f by the basis. No term of
// the result is divisible by a leading monomial of the basis, and
// f - result lies in the ideal the basis generates.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis,
                       const StepBudget& budget = StepBudget());

// Finitely generated ideal with a cache of reduced Groebner bases, one
// per monomial order. The cache behaves as a write-once-per-key map and
// is safe under concurrent readers; everything else is immutable.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return impl_->ring; }
  const std::vector<Polynomial>& generators() const { return impl_->gens; }
  bool is_zero_ideal() const { return impl_->gens.empty(); }

  const GroebnerBasis& groebner(const MonomialOrder& order,
                                const StepBudget& budget = StepBudget()) const;

  Ideal plus(const Ideal& other) const;
  Ideal plus(const Polynomial& f) const;

  std::string str() const;

 private:
  struct Impl {
    Ring ring;
    std::vector<Polynomial> gens;
    mutable std::mutex mu;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const GroebnerBasis>>
        cache;
    Impl(Ring r, std::vector<Polynomial> g)
        : ring(std::move(r)), gens(std::move(g)) {}
  };
  std::shared_ptr<Impl> impl_;
};

// f in I, decided by normal form against a reduced basis.
bool member(const Polynomial& f, const Ideal& ideal,
            const StepBudget& budget = StepBudget());

// f in the radical of I, via the extra-variable trick: 1 in I + (1 - t f).
bool rad_member(const Polynomial& f, const Ideal& ideal,
                const StepBudget& budget = StepBudget());

// Equality as ideals (identical reduced bases).
bool ideal_equal(const Ideal& a, const Ideal& b,
                 const StepBudget& budget = StepBudget());

// Equality of zero sets over an algebraically closed field: mutual
// radical membership of generators.
bool variety_equal(const Ideal& a, const Ideal& b,
                   const StepBudget& budget = StepBudget());

// Krull dimension of the zero set: the largest number of variables no
// leading monomial of the reduced basis lives entirely on. Returns -1
// for the empty variety.
int dim_variety(const Ideal& ideal, const StepBudget& budget = StepBudget());

// Generators of I intersected with the subring without `drop`,
// computed with a block order that eliminates the dropped variables.
// The result lives in the ring of the remaining variables.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop,
                const StepBudget& budget = StepBudget());

// I : f^inf, by eliminating t from I + (1 - t f).
Ideal saturate(const Ideal& ideal, const Polynomial& f,
               const StepBudget& budget = StepBudget());

}  // namespace gredcheck
