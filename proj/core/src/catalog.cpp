#include "gredcheck/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "gredcheck/errors.hpp"

namespace gredcheck {

const StratumSpec* RepresentationSpec::find_stratum(
    std::string_view stratum_name) const {
  for (const auto& s : strata) {
    if (s.name == stratum_name) return &s;
  }
  return nullptr;
}

const WitnessPoint* RepresentationSpec::find_witness(
    std::string_view witness_name) const {
  for (const auto& w : witnesses) {
    if (w.name == witness_name) return &w;
  }
  return nullptr;
}

const Polynomial* RepresentationSpec::find_invariant(
    std::string_view invariant_name) const {
  for (const auto& [n, p] : invariants) {
    if (n == invariant_name) return &p;
  }
  return nullptr;
}

Ideal null_cone_ideal(const RepresentationSpec& spec) {
  std::vector<Polynomial> gens;
  for (const auto& [name, p] : spec.invariants) {
    if (p.constant_term().is_zero()) gens.push_back(p);
  }
  return Ideal(spec.ring, std::move(gens));
}

Polynomial pull_back(const RepresentationSpec& spec, std::string_view expr) {
  std::vector<std::string> names;
  std::vector<Polynomial> images;
  names.reserve(spec.invariants.size());
  for (const auto& [name, p] : spec.invariants) {
    names.push_back(name);
    images.push_back(p);
  }
  Ring name_ring{names};
  Polynomial in_names = [&] {
    try {
      return parse_polynomial(expr, name_ring);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      auto pos = msg.find("unknown variable");
      if (pos != std::string::npos) {
        msg.replace(pos, 16, "unknown invariant");
      }
      throw ParseError(msg, e.offset());
    }
  }();
  return in_names.substitute(images);
}

namespace {

// V(a) contained in V(b): every generator of b vanishes on V(a).
bool closure_contained(const Ideal& a, const Ideal& b,
                       const StepBudget& budget) {
  for (const Polynomial& g : b.generators()) {
    if (!rad_member(g, a, budget)) return false;
  }
  return true;
}

bool vanishes_at(const Ideal& ideal, std::span<const Rational> point) {
  for (const Polynomial& g : ideal.generators()) {
    if (!g.eval(point).is_zero()) return false;
  }
  return true;
}

}  // namespace

const StratumSpec& locate_stratum(const RepresentationSpec& spec,
                                  std::span<const Rational> point,
                                  const StepBudget& budget) {
  if (static_cast<int>(point.size()) != spec.ring.arity()) {
    throw std::invalid_argument("point arity does not match the ring");
  }
  std::vector<const StratumSpec*> vanishing;
  for (const auto& s : spec.strata) {
    if (vanishes_at(s.closure_ideal, point)) vanishing.push_back(&s);
  }
  if (vanishing.empty()) {
    throw ValidationError("no stratum closure vanishes at the point (spec '" +
                          spec.name + "' is malformed)");
  }
  for (const StratumSpec* cand : vanishing) {
    bool smallest = true;
    for (const StratumSpec* other : vanishing) {
      if (other == cand) continue;
      if (!closure_contained(cand->closure_ideal, other->closure_ideal,
                             budget)) {
        smallest = false;
        break;
      }
    }
    if (smallest) return *cand;
  }
  throw ValidationError("vanishing stratum closures are not nested in spec '" +
                        spec.name + "'");
}

void validate_spec(const RepresentationSpec& spec, const StepBudget& budget) {
  auto fail = [&](const std::string& what) {
    throw ValidationError("catalog entry '" + spec.name + "': " + what);
  };

  std::vector<std::string> inv_names;
  for (const auto& [name, p] : spec.invariants) {
    if (!is_valid_variable_name(name)) fail("bad invariant name '" + name + "'");
    if (std::count(inv_names.begin(), inv_names.end(), name) > 0) {
      fail("duplicate invariant name '" + name + "'");
    }
    inv_names.push_back(name);
    if (p.is_zero()) fail("invariant '" + name + "' is zero");
    if (p.ring() != spec.ring) fail("invariant '" + name + "' in wrong ring");
  }

  if (spec.stable && !spec.strata.empty()) {
    int principal_count = 0;
    for (const auto& s : spec.strata) principal_count += s.principal ? 1 : 0;
    if (principal_count != 1) {
      fail("stable spec must have exactly one principal stratum");
    }
  }

  for (const auto& s : spec.strata) {
    if (s.principal && !s.almost_principal) {
      fail("stratum '" + s.name + "': principal but not almost principal");
    }
    int dim = dim_variety(s.closure_ideal, budget);
    if (spec.ring.arity() - dim != s.codim) {
      fail("stratum '" + s.name + "': declared codim " +
           std::to_string(s.codim) + " but closure has codim " +
           std::to_string(spec.ring.arity() - dim));
    }
  }

  // Cofreeness is equivalent to the null cone having codimension equal
  // to the invariant-ring dimension (regularity of the invariant ring
  // is trusted metadata).
  int null_dim = dim_variety(null_cone_ideal(spec), budget);
  bool identity = null_dim + spec.dim_invariant_ring == spec.ring.arity();
  if (identity != spec.cofree) {
    fail("cofree flag disagrees with dim(null cone) + dim invariants = arity");
  }

  for (const auto& w : spec.witnesses) {
    if (static_cast<int>(w.coords.size()) != spec.ring.arity()) {
      fail("witness '" + w.name + "': wrong arity");
    }
    const StratumSpec* s = spec.find_stratum(w.stratum);
    if (!s) fail("witness '" + w.name + "': unknown stratum '" + w.stratum + "'");
    if (!vanishes_at(s->closure_ideal, w.coords)) {
      fail("witness '" + w.name + "': stratum closure does not vanish");
    }
    // The point must sit outside every strictly smaller stratum.
    for (const auto& other : spec.strata) {
      if (other.name == s->name) continue;
      bool smaller = closure_contained(other.closure_ideal, s->closure_ideal,
                                       budget) &&
                     !closure_contained(s->closure_ideal, other.closure_ideal,
                                        budget);
      if (smaller && vanishes_at(other.closure_ideal, w.coords)) {
        fail("witness '" + w.name + "': lies in the smaller stratum '" +
             other.name + "'");
      }
    }
    const StratumSpec& located = locate_stratum(spec, w.coords, budget);
    if (located.name != s->name) {
      fail("witness '" + w.name + "': locates in stratum '" + located.name +
           "'");
    }
  }
}

namespace {

std::vector<Rational> point_of(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    out.push_back(Rational::from_string(item));
  }
  return out;
}

Ideal ideal_of(const Ring& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> gens;
  gens.reserve(texts.size());
  for (const auto& t : texts) gens.push_back(parse_polynomial(t, ring));
  return Ideal(ring, std::move(gens));
}

// (k copies of C^2, SL2) in per-vector coordinates x_i, y_i. The
// invariants are the determinants D_ij of pairs of vectors; the null
// cone is the locus of pairwise-dependent vectors (rank <= 1), of
// codimension k-1. Orbits outside the null cone are closed with trivial
// isotropy, so the non-null locus is one principal stratum.
RepresentationSpec make_sl2(int k) {
  std::vector<std::string> vars;
  for (int i = 1; i <= k; ++i) {
    vars.push_back("x" + std::to_string(i));
    vars.push_back("y" + std::to_string(i));
  }
  Ring ring{vars};

  RepresentationSpec spec{.name = "sl2_k" + std::to_string(k),
                          .group = "SL2",
                          .summary = "",
                          .ring = ring};
  std::vector<std::string> det_names;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      std::string si = std::to_string(i), sj = std::to_string(j);
      std::string name = "D" + si + sj;
      spec.invariants.emplace_back(
          name, parse_polynomial("x" + si + "*y" + sj + " - x" + sj + "*y" + si,
                                 ring));
      det_names.push_back(name);
    }
  }

  // dim of the quotient is 2k - 3 (k >= 2); the generators satisfy one
  // quadratic relation once k >= 4.
  spec.dim_invariant_ring = 2 * k - 3;
  spec.cofree = (k == 2);
  spec.stable = true;

  std::vector<Polynomial> null_gens;
  for (const auto& [n, p] : spec.invariants) null_gens.push_back(p);

  spec.strata.push_back({.name = "principal",
                         .closure_ideal = Ideal(ring, {}),
                         .codim = 0,
                         .principal = true,
                         .almost_principal = true,
                         .fiber_dim = 3,
                         .slice_coreduced = true});
  spec.strata.push_back({.name = "null_cone",
                         .closure_ideal = Ideal(ring, null_gens),
                         .codim = k - 1,
                         .principal = false,
                         .almost_principal = false,
                         .fiber_dim = k + 1,
                         .slice_coreduced = true});

  // First two vectors a basis, the rest zero.
  std::vector<Rational> basis(2 * k, Rational(0));
  basis[0] = Rational(1);
  basis[3] = Rational(1);
  spec.witnesses.push_back({"basis_pair", basis, "principal", true});
  spec.witnesses.push_back(
      {"origin", std::vector<Rational>(2 * k, Rational(0)), "null_cone", true});
  return spec;
}

RepresentationSpec make_sl2_k2() {
  RepresentationSpec spec = make_sl2(2);
  spec.summary = "SL2 on 2 copies of C^2; one determinant invariant, "
                 "cofree, null cone a reduced hypersurface";
  spec.real_form = RealForm{"SU(2)", "C^2 (quaternionic coordinates)"};
  spec.witnesses.push_back(
      {"dependent_pair", point_of("1,0,1,0"), "null_cone", false});
  return spec;
}

RepresentationSpec make_sl2_k3() {
  RepresentationSpec spec = make_sl2(3);
  spec.summary = "SL2 on 3 copies of C^2; determinantal null cone of "
                 "codimension 2, not cofree";
  spec.witnesses.push_back(
      {"line_config", point_of("1,0,0,0,0,0"), "null_cone", false});
  return spec;
}

RepresentationSpec make_sl2_k4() {
  RepresentationSpec spec = make_sl2(4);
  spec.summary = "SL2 on 4 copies of C^2; six determinant invariants with "
                 "one relation, null cone of codimension 3, not cofree";
  spec.real_form = RealForm{"SU(2)", "C^2 + C^2 (two quaternionic lines)"};
  spec.witnesses.push_back(
      {"third_vector", point_of("0,0,0,0,1,0,0,0"), "null_cone", false});
  spec.witnesses.push_back(
      {"split_pair", point_of("1,0,0,0,0,1,0,0"), "principal", true});
  return spec;
}

// (2 copies of C^3, SO3) realized with the split form 2*u1*u3 + u2^2 so
// every isotropic witness stays rational. Invariants are the pairings
// f_ij of the two vectors. Strata: generic pairs (trivial isotropy),
// pairs spanning one non-isotropic line (isotropy a torus, Gram rank
// <= 1), and the null cone (totally isotropic pairs, which are forced
// to span at most one isotropic line). The entry is cofree; its null
// cone is irreducible but not reduced as a scheme.
RepresentationSpec make_so3_2v() {
  Ring ring{{"p1", "p2", "p3", "q1", "q2", "q3"}};
  RepresentationSpec spec{
      .name = "so3_2v",
      .group = "SO3",
      .summary = "SO3 (split form) on 2 copies of C^3; pairing invariants "
                 "f11, f22, f12; cofree, null cone not reduced",
      .ring = ring};
  spec.invariants.emplace_back("f11", parse_polynomial("2*p1*p3 + p2^2", ring));
  spec.invariants.emplace_back("f22", parse_polynomial("2*q1*q3 + q2^2", ring));
  spec.invariants.emplace_back(
      "f12", parse_polynomial("p1*q3 + p2*q2 + p3*q1", ring));
  spec.dim_invariant_ring = 3;
  spec.cofree = true;
  spec.stable = true;

  spec.strata.push_back({.name = "principal",
                         .closure_ideal = Ideal(ring, {}),
                         .codim = 0,
                         .principal = true,
                         .almost_principal = true,
                         .fiber_dim = 3,
                         .slice_coreduced = true});
  spec.strata.push_back(
      {.name = "aniso_line",
       .closure_ideal = ideal_of(
           ring, {"(2*p1*p3 + p2^2)*(2*q1*q3 + q2^2) - "
                  "(p1*q3 + p2*q2 + p3*q1)^2"}),
       .codim = 1,
       .principal = false,
       .almost_principal = false,
       .fiber_dim = 3,
       .slice_coreduced = true});
  spec.strata.push_back({.name = "null_cone",
                         .closure_ideal = null_cone_ideal(spec),
                         .codim = 3,
                         .principal = false,
                         .almost_principal = false,
                         .fiber_dim = 3,
                         .slice_coreduced = false});

  spec.witnesses.push_back(
      {"generic_pair", point_of("0,1,0,1,0,1"), "principal", true});
  spec.witnesses.push_back(
      {"aniso_vector", point_of("0,1,0,0,0,0"), "aniso_line", true});
  spec.witnesses.push_back(
      {"null_pair", point_of("1,0,0,1,0,0"), "null_cone", false});
  spec.witnesses.push_back(
      {"origin", point_of("0,0,0,0,0,0"), "null_cone", true});
  spec.real_form = RealForm{"SO(3)", "R^3 + R^3"};
  return spec;
}

// (2 copies of C^2, SO2) with the torus acting by weights +1/-1 on each
// vector: coordinates (p1, p2) and (q1, q2) of weights (+1, -1).
// Invariants: the pairings f11, f22, f12 and the determinant e, with
// the relation e^2 = f12^2 - f11*f22. The null cone is the union of the
// two weight planes (codimension 2). Orbits outside the null cone are
// closed with trivial isotropy.
RepresentationSpec make_so2_2v() {
  Ring ring{{"p1", "p2", "q1", "q2"}};
  RepresentationSpec spec{
      .name = "so2_2v",
      .group = "SO2",
      .summary = "SO2 (weights +1/-1) on 2 copies of C^2; invariants f11, "
                 "f22, f12, e with e^2 = f12^2 - f11*f22; not cofree",
      .ring = ring};
  spec.invariants.emplace_back("f11", parse_polynomial("2*p1*p2", ring));
  spec.invariants.emplace_back("f22", parse_polynomial("2*q1*q2", ring));
  spec.invariants.emplace_back("f12",
                               parse_polynomial("p1*q2 + p2*q1", ring));
  spec.invariants.emplace_back("e", parse_polynomial("p1*q2 - p2*q1", ring));
  spec.dim_invariant_ring = 3;
  spec.cofree = false;
  spec.stable = true;

  spec.strata.push_back({.name = "principal",
                         .closure_ideal = Ideal(ring, {}),
                         .codim = 0,
                         .principal = true,
                         .almost_principal = true,
                         .fiber_dim = 1,
                         .slice_coreduced = true});
  spec.strata.push_back({.name = "null_cone",
                         .closure_ideal = null_cone_ideal(spec),
                         .codim = 2,
                         .principal = false,
                         .almost_principal = false,
                         .fiber_dim = 2,
                         .slice_coreduced = std::nullopt});

  spec.witnesses.push_back(
      {"generic_pair", point_of("1,1,0,0"), "principal", true});
  spec.witnesses.push_back(
      {"null_pair", point_of("1,0,1,0"), "null_cone", false});
  spec.witnesses.push_back(
      {"origin", point_of("0,0,0,0"), "null_cone", true});
  spec.real_form = RealForm{"SO(2)", "R^2 + R^2"};
  return spec;
}

// SU(2) acting by left multiplication on two quaternions plus a fixed
// real line, complexified: 9 coordinates p0..p3, q0..q3, x. The
// invariants are the two norms alpha, beta, the four components gamma,
// delta, epsilon, zeta of the conjugate pairing, and x itself; they
// satisfy gamma^2 + delta^2 + epsilon^2 + zeta^2 = alpha*beta. The
// non-principal closed orbits are the fixed points (0, x); the fiber
// over such a point is the rank <= 1 locus of the quaternionic part,
// of dimension 5.
RepresentationSpec make_su2_quat() {
  Ring ring{{"p0", "p1", "p2", "p3", "q0", "q1", "q2", "q3", "x"}};
  RepresentationSpec spec{
      .name = "su2_quat",
      .group = "SU2",
      .summary = "SU(2) on two quaternions plus a trivial line, "
                 "complexified; 9 coordinates, 7 invariant generators",
      .ring = ring};
  spec.invariants.emplace_back(
      "alpha", parse_polynomial("p0^2 + p1^2 + p2^2 + p3^2", ring));
  spec.invariants.emplace_back(
      "beta", parse_polynomial("q0^2 + q1^2 + q2^2 + q3^2", ring));
  spec.invariants.emplace_back(
      "gamma", parse_polynomial("p0*q0 + p1*q1 + p2*q2 + p3*q3", ring));
  spec.invariants.emplace_back(
      "delta", parse_polynomial("p1*q0 - p0*q1 + p2*q3 - p3*q2", ring));
  spec.invariants.emplace_back(
      "epsilon", parse_polynomial("p2*q0 + p3*q1 - p0*q2 - p1*q3", ring));
  spec.invariants.emplace_back(
      "zeta", parse_polynomial("p3*q0 - p2*q1 + p1*q2 - p0*q3", ring));
  spec.invariants.emplace_back("x", parse_polynomial("x", ring));
  spec.dim_invariant_ring = 6;
  spec.cofree = false;
  spec.stable = true;

  std::vector<Polynomial> pairing_gens;
  for (int i = 0; i < 6; ++i) pairing_gens.push_back(spec.invariants[i].second);

  spec.strata.push_back({.name = "principal",
                         .closure_ideal = Ideal(ring, {}),
                         .codim = 0,
                         .principal = true,
                         .almost_principal = true,
                         .fiber_dim = 3,
                         .slice_coreduced = true});
  spec.strata.push_back({.name = "fixed_line",
                         .closure_ideal = Ideal(ring, pairing_gens),
                         .codim = 3,
                         .principal = false,
                         .almost_principal = false,
                         .fiber_dim = 5,
                         .slice_coreduced = true});
  spec.strata.push_back({.name = "null_cone",
                         .closure_ideal = null_cone_ideal(spec),
                         .codim = 4,
                         .principal = false,
                         .almost_principal = false,
                         .fiber_dim = 5,
                         .slice_coreduced = true});

  spec.witnesses.push_back(
      {"on_circle", point_of("1,1/2,1/2,0,1,1/2,1/2,0,1/2"), "principal",
       true});
  spec.witnesses.push_back(
      {"fixed_point", point_of("0,0,0,0,0,0,0,0,1"), "fixed_line", true});
  spec.witnesses.push_back(
      {"origin", point_of("0,0,0,0,0,0,0,0,0"), "null_cone", true});
  spec.real_form = RealForm{"SU(2)", "H + H + R"};
  return spec;
}

const std::map<std::string, RepresentationSpec>& catalog_map() {
  static std::map<std::string, RepresentationSpec>* entries = [] {
    auto* m = new std::map<std::string, RepresentationSpec>();
    for (RepresentationSpec spec :
         {make_sl2_k2(), make_sl2_k3(), make_sl2_k4(), make_so3_2v(),
          make_so2_2v(), make_su2_quat()}) {
      std::string name = spec.name;
      m->emplace(std::move(name), std::move(spec));
    }
    StepBudget validation_budget(100'000'000);
    for (const auto& [name, spec] : *m) validate_spec(spec, validation_budget);
    return m;
  }();
  return *entries;
}

}  // namespace

const RepresentationSpec& catalog_get(const std::string& name) {
  const auto& m = catalog_map();
  auto it = m.find(name);
  if (it == m.end()) {
    std::string known;
    for (const auto& [n, s] : m) {
      if (!known.empty()) known += ", ";
      known += n;
    }
    throw UnknownCatalogEntry("unknown catalog entry '" + name +
                              "' (available: " + known + ")");
  }
  return it->second;
}

const std::vector<std::string>& catalog_names() {
  static std::vector<std::string>* names = [] {
    auto* v = new std::vector<std::string>();
    for (const auto& [n, s] : catalog_map()) v->push_back(n);
    return v;
  }();
  return *names;
}

}  // namespace gredcheck
