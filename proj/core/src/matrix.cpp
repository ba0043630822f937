#include "gredcheck/matrix.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace gredcheck {

PolyMatrix::PolyMatrix(Ring ring, int rows, int cols,
                       std::vector<Polynomial> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      entries_(std::move(entries)) {
  if (rows_ <= 0 || cols_ <= 0) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
  if (entries_.size() != static_cast<size_t>(rows_) * cols_) {
    throw std::invalid_argument("matrix entry count does not match shape");
  }
  for (const Polynomial& p : entries_) {
    if (p.ring() != ring_) {
      throw std::invalid_argument("matrix entry from a different ring");
    }
  }
}

PolyMatrix jacobian(const std::vector<Polynomial>& fs) {
  if (fs.empty()) throw std::invalid_argument("jacobian of nothing");
  const Ring& ring = fs[0].ring();
  int n = ring.arity();
  std::vector<Polynomial> entries;
  entries.reserve(fs.size() * n);
  for (const Polynomial& f : fs) {
    if (f.ring() != ring) {
      throw std::invalid_argument("jacobian rows from different rings");
    }
    for (int v = 0; v < n; ++v) entries.push_back(f.derivative(v));
  }
  return PolyMatrix(ring, static_cast<int>(fs.size()), n, std::move(entries));
}

int rank_at(const PolyMatrix& m, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != m.ring().arity()) {
    throw std::invalid_argument("evaluation point arity mismatch");
  }
  int rows = m.rows(), cols = m.cols();
  // Evaluate and clear denominators row by row; row scaling keeps rank.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class common_den(1);
    std::vector<mpq_class> row(cols);
    for (int j = 0; j < cols; ++j) {
      row[j] = m.at(i, j).eval(point).raw();
      mpz_class den = row[j].get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), common_den.get_mpz_t(), den.get_mpz_t());
      common_den = common_den / g * den;
    }
    for (int j = 0; j < cols; ++j) {
      a[i][j] = mpz_class(row[j].get_num() * (common_den / row[j].get_den()));
    }
  }

  // Bareiss elimination with row/column pivoting; rank is the number of
  // pivots found.
  int rank = 0;
  mpz_class prev(1);
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        mpz_class num = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant of a non-square matrix");
  }
  int n = m.rows();
  const Ring& ring = m.ring();
  std::vector<std::vector<Polynomial>> a(
      n, std::vector<Polynomial>(n, Polynomial::zero(ring)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  }

  Polynomial prev = Polynomial::constant(ring, Rational(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!a[i][k].is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return Polynomial::zero(ring);  // singular column
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Polynomial num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = exact_divide(num, prev);
      }
      a[i][k] = Polynomial::zero(ring);
    }
    prev = a[k][k];
  }
  Polynomial det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

Polynomial minor_of(const PolyMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  if (rows.size() != cols.size() || rows.empty()) {
    throw std::invalid_argument("minor needs equal-size nonempty index sets");
  }
  int r = static_cast<int>(rows.size());
  std::vector<Polynomial> entries;
  entries.reserve(static_cast<size_t>(r) * r);
  for (int i : rows) {
    for (int j : cols) entries.push_back(m.at(i, j));
  }
  return determinant(PolyMatrix(m.ring(), r, r, std::move(entries)));
}

namespace {

// Ascending r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(r);
  for (int i = 0; i < r; ++i) cur[i] = i;
  if (r > n) return out;
  for (;;) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == n - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

Ideal minors_ideal(const PolyMatrix& m, int r) {
  if (r < 1 || r > std::min(m.rows(), m.cols())) {
    throw std::invalid_argument("minor size out of range");
  }
  std::vector<Polynomial> gens;
  for (const auto& rows : subsets(m.rows(), r)) {
    for (const auto& cols : subsets(m.cols(), r)) {
      Polynomial d = minor_of(m, rows, cols);
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
  }
  return Ideal(m.ring(), std::move(gens));
}

int rank_on_variety(const std::vector<Polynomial>& fs, const Ideal& y,
                    const StepBudget& budget) {
  PolyMatrix jac = jacobian(fs);
  for (int r = std::min(jac.rows(), jac.cols()); r >= 1; --r) {
    for (const auto& rows : subsets(jac.rows(), r)) {
      for (const auto& cols : subsets(jac.cols(), r)) {
        Polynomial d = minor_of(jac, rows, cols);
        if (d.is_zero()) continue;
        if (!rad_member(d, y, budget)) return r;
      }
    }
  }
  return 0;
}

}  // namespace gredcheck
