#pragma once

// Shared generators and independent oracles for the test suites. The
// oracles deliberately avoid the engine's own reduction paths: the
// univariate routines work on coefficient vectors, the dimension oracle
// enumerates all variable subsets, and the determinant oracle expands
// by cofactors.

#include <random>
#include <vector>

#include "gredcheck/catalog.hpp"
#include "gredcheck/ideal.hpp"
#include "gredcheck/polynomial.hpp"
#include "gredcheck/problem.hpp"

namespace testutil {

using gredcheck::Ideal;
using gredcheck::Monomial;
using gredcheck::MonomialOrder;
using gredcheck::Polynomial;
using gredcheck::Rational;
using gredcheck::Ring;
using gredcheck::Term;

inline Polynomial random_poly(std::mt19937& rng, const Ring& ring,
                              int max_degree = 4, int max_terms = 5,
                              int coeff_bound = 9) {
  std::uniform_int_distribution<int> n_terms(0, max_terms);
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<int> exp(0, max_degree);
  std::vector<Term> terms;
  int count = n_terms(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<int> exps(ring.arity());
    int remaining = max_degree;
    for (int i = 0; i < ring.arity(); ++i) {
      int e = exp(rng) % (remaining + 1);
      exps[i] = e;
      remaining -= e;
    }
    terms.push_back({Monomial(std::move(exps)), Rational(coeff(rng))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

// ---- univariate oracles on dense coefficient vectors ----

using UniPoly = std::vector<Rational>;  // coefficient of x^i at index i

inline UniPoly uni_trim(UniPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

inline UniPoly uni_from(const Polynomial& f) {
  UniPoly out;
  for (const Term& t : f.terms()) {
    size_t e = static_cast<size_t>(t.mono.exp(0));
    if (out.size() <= e) out.resize(e + 1, Rational(0));
    out[e] += t.coeff;
  }
  return uni_trim(std::move(out));
}

inline UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  a = uni_trim(std::move(a));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a = uni_trim(std::move(a));
  }
  return a;
}

inline bool uni_divides(const UniPoly& b, const UniPoly& a) {
  return uni_rem(a, b).empty();
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
  a = uni_trim(std::move(a));
  b = uni_trim(std::move(b));
  while (!b.empty()) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

// ---- exhaustive dimension oracle for monomial ideals (n <= 8) ----

inline int monomial_dim_oracle(const std::vector<Monomial>& lms, int n) {
  int best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const Monomial& m : lms) {
      bool inside = true;
      for (int v = 0; v < n && inside; ++v) {
        if (m.exp(v) > 0 && !(mask >> v & 1u)) inside = false;
      }
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

// ---- independent division for the Groebner-property check ----

// Reduces f against gs with plain polynomial arithmetic; used to verify
// that S-polynomials of a claimed basis reduce to zero without going
// through the engine's normal_form.
inline Polynomial naive_reduce(Polynomial f, const std::vector<Polynomial>& gs,
                               const MonomialOrder& order) {
  Polynomial remainder = Polynomial::zero(f.ring(), order);
  f = f.with_order(order);
  while (!f.is_zero()) {
    bool step = false;
    for (const Polynomial& g : gs) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(f.leading_monomial())) {
        Rational c = f.leading_coeff() / g.leading_coeff();
        Monomial m = f.leading_monomial().divide(g.leading_monomial());
        Polynomial mono = Polynomial::from_terms(f.ring(), {{m, c}}, order);
        f = f - mono * g;
        step = true;
        break;
      }
    }
    if (!step) {
      Polynomial lead = Polynomial::from_terms(
          f.ring(), {{f.leading_monomial(), f.leading_coeff()}}, order);
      remainder = remainder + lead;
      f = f - lead;
    }
  }
  return remainder;
}

inline Polynomial naive_spoly(const Polynomial& f, const Polynomial& g,
                              const MonomialOrder& order) {
  Polynomial fo = f.with_order(order);
  Polynomial go = g.with_order(order);
  Monomial l = fo.leading_monomial().lcm(go.leading_monomial());
  Polynomial mf = Polynomial::from_terms(
      f.ring(), {{l.divide(fo.leading_monomial()),
                  fo.leading_coeff().inverse()}}, order);
  Polynomial mg = Polynomial::from_terms(
      g.ring(), {{l.divide(go.leading_monomial()),
                  go.leading_coeff().inverse()}}, order);
  return mf * fo - mg * go;
}

// ---- cofactor determinant oracle ----

inline Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational total(0);
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Rational>> sub;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      sub.push_back(std::move(row));
    }
    Rational term = m[0][j] * cofactor_det(sub);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

// Every ideal the catalog and its bundled problems mention; the
// property suites iterate over these.
inline std::vector<Ideal> catalog_suite_ideals() {
  std::vector<Ideal> out;
  for (const auto& entry : gredcheck::catalog_names()) {
    const auto& spec = gredcheck::catalog_get(entry);
    out.push_back(gredcheck::null_cone_ideal(spec));
    for (const auto& s : spec.strata) {
      if (!s.closure_ideal.is_zero_ideal()) out.push_back(s.closure_ideal);
    }
    for (const auto& pname : gredcheck::bundled_problem_names(entry)) {
      gredcheck::Problem p = gredcheck::bundled_problem(entry, pname);
      out.push_back(p.y_ideal);
      for (const auto& comp : p.component_ideals) out.push_back(comp);
    }
  }
  return out;
}

}  // namespace testutil
