#include "gredcheck/problem.hpp"

#include <algorithm>
#include <map>

#include "gredcheck/errors.hpp"
#include "gredcheck/matrix.hpp"

namespace gredcheck {

std::vector<Polynomial> pulled_back_relations(const Problem& problem) {
  std::vector<Polynomial> out;
  out.reserve(problem.invariant_relations.size());
  for (const auto& text : problem.invariant_relations) {
    out.push_back(pull_back(problem.spec, text));
  }
  return out;
}

Ideal pull_back_ideal(const Problem& problem) {
  return Ideal(problem.spec.ring, pulled_back_relations(problem));
}

void validate_problem(const Problem& problem, const StepBudget& budget) {
  auto fail = [&](const std::string& what) {
    throw ValidationError("problem '" + problem.id + "': " + what);
  };
  const Ring& ring = problem.spec.ring;
  if (problem.y_ideal.ring() != ring) fail("Y ideal lives in the wrong ring");

  // Relations must vanish on Y.
  for (const auto& text : problem.invariant_relations) {
    Polynomial p = pull_back(problem.spec, text);
    if (!rad_member(p, problem.y_ideal, budget)) {
      fail("relation '" + text + "' does not vanish on Y");
    }
  }

  // Components must sit inside Y.
  for (size_t i = 0; i < problem.component_ideals.size(); ++i) {
    const Ideal& comp = problem.component_ideals[i];
    if (comp.ring() != ring) fail("component ideal in the wrong ring");
    for (const Polynomial& g : problem.y_ideal.generators()) {
      if (!rad_member(g, comp, budget)) {
        fail("component " + std::to_string(i) + " is not contained in Y");
      }
    }
  }

  for (const auto& w : problem.witnesses) {
    if (static_cast<int>(w.coords.size()) != ring.arity()) {
      fail("witness '" + w.name + "' has wrong arity");
    }
    const StratumSpec* s = problem.spec.find_stratum(w.stratum);
    if (!s) fail("witness '" + w.name + "' names unknown stratum");
    for (const Polynomial& g : s->closure_ideal.generators()) {
      if (!g.eval(w.coords).is_zero()) {
        fail("witness '" + w.name + "' is not on its stratum closure");
      }
    }
  }

  if (problem.radical_reference &&
      problem.radical_reference->ring() != ring) {
    fail("reference ideal lives in the wrong ring");
  }
}

namespace {

std::vector<Rational> point_of(std::initializer_list<const char*> coords) {
  std::vector<Rational> out;
  for (const char* c : coords) out.push_back(Rational::from_string(c));
  return out;
}

Ideal ideal_of(const RepresentationSpec& spec,
               const std::vector<std::string>& texts) {
  std::vector<Polynomial> gens;
  gens.reserve(texts.size());
  for (const auto& t : texts) gens.push_back(parse_polynomial(t, spec.ring));
  return Ideal(spec.ring, std::move(gens));
}

Ideal pulled_ideal(const RepresentationSpec& spec,
                   const std::vector<std::string>& names) {
  std::vector<Polynomial> gens;
  gens.reserve(names.size());
  for (const auto& n : names) gens.push_back(pull_back(spec, n));
  return Ideal(spec.ring, std::move(gens));
}

// The 2x2 minors of the generic 2xk matrix whose columns are the
// vectors; same zero set as the null cone and classically a prime
// ideal, so it serves as the trusted radical reference.
Ideal determinantal_reference(const RepresentationSpec& spec, int k) {
  const Ring& ring = spec.ring;
  std::vector<Polynomial> entries;
  for (int i = 0; i < k; ++i) entries.push_back(Polynomial::variable(ring, 2 * i));
  for (int i = 0; i < k; ++i) {
    entries.push_back(Polynomial::variable(ring, 2 * i + 1));
  }
  PolyMatrix m(ring, 2, k, std::move(entries));
  return minors_ideal(m, 2);
}

Problem null_cone_problem(const std::string& entry,
                          std::vector<Ideal> components,
                          std::optional<Ideal> reference) {
  const RepresentationSpec& spec = catalog_get(entry);
  Problem p{.id = entry + ":null_cone",
            .spec = spec,
            .y_ideal = null_cone_ideal(spec)};
  for (const auto& [name, poly] : spec.invariants) {
    if (poly.constant_term().is_zero()) p.invariant_relations.push_back(name);
  }
  p.claims_quotient_ideal_generated = true;
  p.component_ideals = std::move(components);
  p.radical_reference = std::move(reference);
  return p;
}

Problem make_problem(const std::string& entry, const std::string& name) {
  const RepresentationSpec& spec = catalog_get(entry);

  if (entry == "sl2_k2" && name == "null_cone") {
    return null_cone_problem(entry, {null_cone_ideal(spec)},
                             determinantal_reference(spec, 2));
  }
  if (entry == "sl2_k3" && name == "null_cone") {
    return null_cone_problem(entry, {null_cone_ideal(spec)},
                             determinantal_reference(spec, 3));
  }
  if (entry == "sl2_k3" && name == "first_vector_zero") {
    Problem p{.id = entry + ":first_vector_zero",
              .spec = spec,
              .y_ideal = ideal_of(spec, {"x1", "y1"})};
    p.invariant_relations = {"D12", "D13"};
    p.claims_quotient_ideal_generated = true;
    p.component_ideals = {p.y_ideal};
    p.witnesses.push_back(
        {"excess", point_of({"1", "0", "0", "0", "0", "0"}), "null_cone",
         false});
    return p;
  }
  if (entry == "sl2_k4" && name == "two_determinants") {
    Problem p{.id = entry + ":two_determinants",
              .spec = spec,
              .y_ideal = pulled_ideal(spec, {"D12", "D34"})};
    p.invariant_relations = {"D12", "D34"};
    p.claims_quotient_ideal_generated = true;
    p.component_ideals = {p.y_ideal};
    p.witnesses.push_back(
        {"on_y", point_of({"1", "0", "0", "0", "0", "1", "0", "0"}),
         "principal", true});
    return p;
  }
  if (entry == "sl2_k4" && name == "two_planes") {
    Problem p{.id = entry + ":two_planes",
              .spec = spec,
              .y_ideal = ideal_of(spec, {"x3", "y3", "x4", "y4"})};
    p.invariant_relations = {"D13", "D14", "D23", "D24", "D34"};
    p.claims_quotient_ideal_generated = true;
    p.is_complexification = true;
    p.component_ideals = {p.y_ideal};
    p.witnesses.push_back(
        {"excess", point_of({"0", "0", "0", "0", "1", "0", "0", "0"}),
         "null_cone", false});
    return p;
  }
  if (entry == "so3_2v" && name == "null_cone") {
    Problem p = null_cone_problem(entry, {null_cone_ideal(spec)}, std::nullopt);
    p.witnesses.push_back(
        {"null_pair", point_of({"1", "0", "0", "1", "0", "0"}), "null_cone",
         false});
    return p;
  }
  if (entry == "so2_2v" && name == "coordinate_planes") {
    Problem p{.id = entry + ":coordinate_planes",
              .spec = spec,
              .y_ideal = ideal_of(spec, {"p1*q1", "p1*q2", "p2*q1", "p2*q2"})};
    p.invariant_relations = {"e", "f12", "f11*f22"};
    p.claims_quotient_ideal_generated = true;
    p.is_complexification = true;
    p.component_ideals = {ideal_of(spec, {"q1", "q2"}),
                          ideal_of(spec, {"p1", "p2"})};
    p.witnesses.push_back(
        {"null_pair", point_of({"1", "0", "1", "0"}), "null_cone", false});
    return p;
  }
  if (entry == "so2_2v" && name == "null_cone") {
    return null_cone_problem(
        entry, {ideal_of(spec, {"p2", "q2"}), ideal_of(spec, {"p1", "q1"})},
        std::nullopt);
  }
  if (entry == "su2_quat" && name == "circle_diagonal") {
    Problem p{.id = entry + ":circle_diagonal",
              .spec = spec,
              .y_ideal = ideal_of(
                  spec, {"q0 - p0", "q1 - p1", "q2 - p2", "q3 - p3",
                         "(p0^2 + p1^2 + p2^2 + p3^2 - 1)^2 + x^2 - 1/2"})};
    p.invariant_relations = {"delta",        "epsilon",
                             "zeta",         "alpha - beta",
                             "alpha - gamma", "(alpha - 1)^2 + x^2 - 1/2"};
    p.claims_quotient_ideal_generated = false;
    p.is_complexification = true;
    p.component_ideals = {p.y_ideal};
    p.witnesses.push_back({"on_circle",
                           point_of({"1", "1/2", "1/2", "0", "1", "1/2", "1/2",
                                     "0", "1/2"}),
                           "principal", true});
    return p;
  }
  throw UnknownCatalogEntry("entry '" + entry + "' has no bundled problem '" +
                            name + "'");
}

const std::map<std::string, std::vector<std::string>>& problem_index() {
  static const std::map<std::string, std::vector<std::string>> index = {
      {"sl2_k2", {"null_cone"}},
      {"sl2_k3", {"null_cone", "first_vector_zero"}},
      {"sl2_k4", {"two_determinants", "two_planes"}},
      {"so3_2v", {"null_cone"}},
      {"so2_2v", {"coordinate_planes", "null_cone"}},
      {"su2_quat", {"circle_diagonal"}},
  };
  return index;
}

}  // namespace

std::vector<std::string> bundled_problem_names(const std::string& entry) {
  catalog_get(entry);  // surfaces unknown-entry errors uniformly
  auto it = problem_index().find(entry);
  if (it == problem_index().end()) return {};
  return it->second;
}

Problem bundled_problem(const std::string& entry,
                        const std::string& problem_name) {
  auto names = bundled_problem_names(entry);
  if (names.empty()) {
    throw UnknownCatalogEntry("entry '" + entry + "' has no bundled problems");
  }
  std::string chosen = problem_name.empty() ? names.front() : problem_name;
  if (std::find(names.begin(), names.end(), chosen) == names.end()) {
    std::string known;
    for (const auto& n : names) {
      if (!known.empty()) known += ", ";
      known += n;
    }
    throw UnknownCatalogEntry("entry '" + entry + "' has no bundled problem '" +
                              chosen + "' (available: " + known + ")");
  }
  return make_problem(entry, chosen);
}

}  // namespace gredcheck
