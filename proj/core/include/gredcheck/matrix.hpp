#pragma once

#include <span>
#include <vector>

#include "gredcheck/ideal.hpp"
#include "gredcheck/polynomial.hpp"

namespace gredcheck {

// Dense matrix of polynomials over one ring, row-major.
class PolyMatrix {
 public:
  PolyMatrix(Ring ring, int rows, int cols, std::vector<Polynomial> entries);

  const Ring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Polynomial& at(int r, int c) const { return entries_[r * cols_ + c]; }

 private:
  Ring ring_;
  int rows_, cols_;
  std::vector<Polynomial> entries_;
};

// |fs| x n matrix of partial derivatives; row i is the gradient of fs[i].
PolyMatrix jacobian(const std::vector<Polynomial>& fs);

// Exact rank of the matrix evaluated at a rational point, by
// fraction-free (Bareiss) elimination on a denominator-cleared integer
// matrix.
int rank_at(const PolyMatrix& m, std::span<const Rational> point);

// Determinant of a square polynomial matrix by fraction-free Bareiss
// elimination; every division along the way is exact.
Polynomial determinant(const PolyMatrix& m);

// The r x r minor on the given row and column index sets (ascending).
Polynomial minor_of(const PolyMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols);

// Ideal generated by all r x r minors, enumerated in lexicographic
// order of (row set, column set) so reports are deterministic.
Ideal minors_ideal(const PolyMatrix& m, int r);

// Largest r such that some r x r minor of the Jacobian of fs does not
// vanish on the variety of y (radical membership test); 0 when every
// entry vanishes on it. On an irreducible variety this is the rank at a
// generic point.
int rank_on_variety(const std::vector<Polynomial>& fs, const Ideal& y,
                    const StepBudget& budget = StepBudget());

}  // namespace gredcheck
