#include "gredcheck/ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gredcheck {

namespace {

Polynomial times_monomial(const Polynomial& f, const Monomial& m) {
  return Polynomial::zero(f.ring(), f.order())
      .minus_scaled(Rational(-1), m, f);
}

// Full division: remainder after reducing every reducible term. Each
// leading-term cancellation costs one budget step.
Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order, const StepBudget& budget) {
  std::vector<Term> remainder;
  while (!f.is_zero()) {
    bool reduced = false;
    for (const Polynomial& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(f.leading_monomial())) {
        budget.tick();
        Rational c = f.leading_coeff() / g.leading_coeff();
        Monomial m = f.leading_monomial().divide(g.leading_monomial());
        f = f.minus_scaled(c, m, g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(f.terms().front());
      f = f.tail();
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder), order);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = times_monomial(f, l.divide(f.leading_monomial()))
                     .scaled(f.leading_coeff().inverse());
  Polynomial b = times_monomial(g, l.divide(g.leading_monomial()))
                     .scaled(g.leading_coeff().inverse());
  return a - b;
}

// Buchberger with the coprime and chain criteria and normal pair
// selection (smallest lcm first). Returns the unique reduced basis.
std::vector<Polynomial> buchberger_reduced(const std::vector<Polynomial>& gens,
                                           const MonomialOrder& order,
                                           const StepBudget& budget) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens) {
    if (!g.is_zero()) basis.push_back(g.with_order(order).monic());
  }
  if (basis.empty()) return {};

  struct PairKey {
    long long deg;
    Monomial lcm;
    int i, j;
  };
  auto cmp = [&order](const PairKey& a, const PairKey& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<PairKey, decltype(cmp)> queue(cmp);
  std::set<std::pair<int, int>> pending;

  auto push_pair = [&](int i, int j) {
    Monomial l = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
    queue.insert({l.degree(), l, i, j});
    pending.insert({i, j});
  };
  for (size_t j = 1; j < basis.size(); ++j) {
    for (size_t i = 0; i < j; ++i) push_pair(static_cast<int>(i), static_cast<int>(j));
  }

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});

    const Monomial& lmi = basis[pk.i].leading_monomial();
    const Monomial& lmj = basis[pk.j].leading_monomial();
    if (lmi.coprime(lmj)) continue;  // S-polynomial reduces to zero

    // Chain criterion: skip when some basis element divides the lcm and
    // both companion pairs are already settled.
    bool skip = false;
    for (size_t k = 0; k < basis.size(); ++k) {
      int ki = static_cast<int>(k);
      if (ki == pk.i || ki == pk.j) continue;
      if (!basis[k].leading_monomial().divides(pk.lcm)) continue;
      auto p1 = std::minmax(pk.i, ki);
      auto p2 = std::minmax(pk.j, ki);
      if (!pending.count({p1.first, p1.second}) &&
          !pending.count({p2.first, p2.second})) {
        skip = true;
        break;
      }
    }
    if (skip) continue;

    Polynomial s = s_polynomial(basis[pk.i], basis[pk.j]);
    Polynomial r = reduce_full(std::move(s), basis, order, budget);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    int t = static_cast<int>(basis.size()) - 1;
    for (int i = 0; i < t; ++i) push_pair(i, t);
  }

  // Minimalize: drop elements whose leading monomial is divisible by
  // another's.
  std::sort(basis.begin(), basis.end(),
            [&order](const Polynomial& a, const Polynomial& b) {
              return order.less(a.leading_monomial(), b.leading_monomial());
            });
  std::vector<Polynomial> minimal;
  for (const Polynomial& g : basis) {
    bool redundant = false;
    for (const Polynomial& h : minimal) {
      if (h.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }

  // Autoreduce tails; leading monomials are already pairwise
  // non-dividing, so one pass yields the reduced basis.
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i] = reduce_full(minimal[i], others, order, budget).monic();
  }
  std::sort(minimal.begin(), minimal.end(),
            [&order](const Polynomial& a, const Polynomial& b) {
              return order.less(a.leading_monomial(), b.leading_monomial());
            });
  return minimal;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis,
                       const StepBudget& budget) {
  Polynomial g = f.with_order(basis.order());
  return reduce_full(std::move(g), basis.elements(), basis.order(), budget);
}

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) {
  std::vector<Polynomial> gens;
  gens.reserve(generators.size());
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.ring() != ring) {
      throw std::invalid_argument("ideal generator from a different ring");
    }
    gens.push_back(std::move(g));
  }
  impl_ = std::make_shared<Impl>(std::move(ring), std::move(gens));
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order,
                                     const StepBudget& budget) const {
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->cache.find(order.key());
    if (it != impl_->cache.end()) return *it->second;
  }
  auto computed = std::make_shared<const GroebnerBasis>(
      order, buchberger_reduced(impl_->gens, order, budget));
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto [it, inserted] = impl_->cache.emplace(order.key(), computed);
  return *it->second;  // first writer wins; the result is identical anyway
}

Ideal Ideal::plus(const Ideal& other) const {
  if (other.ring() != ring()) {
    throw std::invalid_argument("ideal sum across different rings");
  }
  std::vector<Polynomial> gens = impl_->gens;
  gens.insert(gens.end(), other.impl_->gens.begin(), other.impl_->gens.end());
  return Ideal(ring(), std::move(gens));
}

Ideal Ideal::plus(const Polynomial& f) const {
  std::vector<Polynomial> gens = impl_->gens;
  gens.push_back(f);
  return Ideal(ring(), std::move(gens));
}

std::string Ideal::str() const {
  std::string out = "(";
  for (size_t i = 0; i < impl_->gens.size(); ++i) {
    if (i) out += ", ";
    out += impl_->gens[i].str();
  }
  if (impl_->gens.empty()) out += "0";
  return out + ")";
}

bool member(const Polynomial& f, const Ideal& ideal,
            const StepBudget& budget) {
  if (f.is_zero()) return true;
  if (f.ring() != ideal.ring()) {
    throw std::invalid_argument("membership across different rings");
  }
  if (ideal.is_zero_ideal()) return false;
  const GroebnerBasis& basis = ideal.groebner(MonomialOrder::grevlex(), budget);
  return normal_form(f, basis, budget).is_zero();
}

bool rad_member(const Polynomial& f, const Ideal& ideal,
                const StepBudget& budget) {
  if (f.is_zero()) return true;
  if (f.ring() != ideal.ring()) {
    throw std::invalid_argument("membership across different rings");
  }
  if (ideal.is_zero_ideal()) return false;  // the ring has no nilpotents
  const Ring& ring = ideal.ring();
  Ring ext = ring.extended(ring.fresh_name("t"));
  std::vector<int> var_map(ring.arity());
  for (int i = 0; i < ring.arity(); ++i) var_map[i] = i;

  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size() + 1);
  for (const Polynomial& g : ideal.generators()) {
    gens.push_back(g.map_to_ring(ext, var_map));
  }
  Polynomial t = Polynomial::variable(ext, ext.arity() - 1);
  Polynomial one = Polynomial::constant(ext, Rational(1));
  gens.push_back(one - t * f.map_to_ring(ext, var_map));

  Ideal extended(ext, std::move(gens));
  return extended.groebner(MonomialOrder::grevlex(), budget).is_trivial();
}

bool ideal_equal(const Ideal& a, const Ideal& b, const StepBudget& budget) {
  if (a.ring() != b.ring()) {
    throw std::invalid_argument("ideal comparison across different rings");
  }
  if (a.is_zero_ideal() || b.is_zero_ideal()) {
    return a.is_zero_ideal() && b.is_zero_ideal();
  }
  const MonomialOrder order = MonomialOrder::grevlex();
  const auto& ba = a.groebner(order, budget).elements();
  const auto& bb = b.groebner(order, budget).elements();
  if (ba.size() != bb.size()) return false;
  for (size_t i = 0; i < ba.size(); ++i) {
    if (ba[i] != bb[i]) return false;
  }
  return true;
}

bool variety_equal(const Ideal& a, const Ideal& b, const StepBudget& budget) {
  for (const Polynomial& g : a.generators()) {
    if (!rad_member(g, b, budget)) return false;
  }
  for (const Polynomial& g : b.generators()) {
    if (!rad_member(g, a, budget)) return false;
  }
  return true;
}

int dim_variety(const Ideal& ideal, const StepBudget& budget) {
  int n = ideal.ring().arity();
  if (ideal.is_zero_ideal()) return n;
  const GroebnerBasis& basis = ideal.groebner(MonomialOrder::grevlex(), budget);
  if (basis.is_trivial()) return -1;

  std::vector<Monomial> lms;
  lms.reserve(basis.elements().size());
  for (const Polynomial& g : basis.elements()) {
    lms.push_back(g.leading_monomial());
  }

  // Largest set of variables supporting no leading monomial entirely,
  // by depth-first search over variable subsets with pruning.
  int best = 0;
  std::vector<int> chosen(n, 0);
  auto independent_with = [&](int candidate) {
    for (const Monomial& m : lms) {
      bool inside = true;
      for (int v = 0; v < n && inside; ++v) {
        if (m.exp(v) > 0 && !(chosen[v] || v == candidate)) inside = false;
      }
      if (inside) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int next, int count) -> void {
    best = std::max(best, count);
    if (count + (n - next) <= best) return;
    for (int v = next; v < n; ++v) {
      if (!independent_with(v)) continue;
      chosen[v] = 1;
      self(self, v + 1, count + 1);
      chosen[v] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop,
                const StepBudget& budget) {
  const Ring& ring = ideal.ring();
  std::vector<int> drop_idx;
  for (const auto& name : drop) {
    auto idx = ring.index_of(name);
    if (!idx) {
      throw std::invalid_argument("cannot eliminate unknown variable '" +
                                  name + "'");
    }
    drop_idx.push_back(*idx);
  }
  std::sort(drop_idx.begin(), drop_idx.end());
  drop_idx.erase(std::unique(drop_idx.begin(), drop_idx.end()),
                 drop_idx.end());
  if (drop_idx.empty()) return ideal;

  // Permuted ring with the dropped variables in front, so that
  // block(k) is an elimination order for them.
  std::vector<int> keep_idx;
  for (int i = 0; i < ring.arity(); ++i) {
    if (!std::binary_search(drop_idx.begin(), drop_idx.end(), i)) {
      keep_idx.push_back(i);
    }
  }
  std::vector<int> permuted_order = drop_idx;
  permuted_order.insert(permuted_order.end(), keep_idx.begin(),
                        keep_idx.end());
  Ring permuted = ring.subring(permuted_order);
  std::vector<int> var_map(ring.arity());
  for (size_t pos = 0; pos < permuted_order.size(); ++pos) {
    var_map[permuted_order[pos]] = static_cast<int>(pos);
  }

  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Polynomial& g : ideal.generators()) {
    gens.push_back(g.map_to_ring(permuted, var_map));
  }
  Ideal permuted_ideal(permuted, std::move(gens));
  const GroebnerBasis& basis = permuted_ideal.groebner(
      MonomialOrder::block(static_cast<int>(drop_idx.size())), budget);

  Ring target = ring.subring(keep_idx);
  int k = static_cast<int>(drop_idx.size());
  std::vector<int> down_map(permuted.arity(), -1);
  for (int pos = k; pos < permuted.arity(); ++pos) down_map[pos] = pos - k;

  std::vector<Polynomial> kept;
  for (const Polynomial& g : basis.elements()) {
    bool free_of_dropped = true;
    for (const Term& t : g.terms()) {
      if (t.mono.degree_range(0, k) > 0) {
        free_of_dropped = false;
        break;
      }
    }
    if (free_of_dropped) kept.push_back(g.map_to_ring(target, down_map));
  }
  return Ideal(target, std::move(kept));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f,
               const StepBudget& budget) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero");
  if (f.ring() != ideal.ring()) {
    throw std::invalid_argument("saturation across different rings");
  }
  const Ring& ring = ideal.ring();
  std::string t_name = ring.fresh_name("t");
  Ring ext = ring.extended(t_name);
  std::vector<int> var_map(ring.arity());
  for (int i = 0; i < ring.arity(); ++i) var_map[i] = i;

  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size() + 1);
  for (const Polynomial& g : ideal.generators()) {
    gens.push_back(g.map_to_ring(ext, var_map));
  }
  Polynomial t = Polynomial::variable(ext, ext.arity() - 1);
  Polynomial one = Polynomial::constant(ext, Rational(1));
  gens.push_back(one - t * f.map_to_ring(ext, var_map));

  Ideal result = eliminate(Ideal(ext, std::move(gens)), {t_name}, budget);
  // Re-anchor in the caller's ring object.
  std::vector<Polynomial> back;
  back.reserve(result.generators().size());
  for (const Polynomial& g : result.generators()) {
    back.push_back(g.map_to_ring(ring, var_map));
  }
  return Ideal(ring, std::move(back));
}

}  // namespace gredcheck
