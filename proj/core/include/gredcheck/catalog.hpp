#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gredcheck/ideal.hpp"

namespace gredcheck {

// Closure of one isotropy stratum, with the representation-theoretic
// facts the engine cannot recompute. `fiber_dim` is the dimension of
// the quotient-map fiber through closed orbits of the stratum; for the
// shipped entries it is also the minimum fiber dimension over the whole
// closure, which is what the fiber-dimension rule needs.
struct StratumSpec {
  std::string name;
  Ideal closure_ideal;
  int codim = 0;
  bool principal = false;
  bool almost_principal = false;
  int fiber_dim = 0;
  std::optional<bool> slice_coreduced;
};

struct WitnessPoint {
  std::string name;
  std::vector<Rational> coords;
  std::string stratum;       // asserted stratum
  bool orbit_closed = false; // trusted metadata
};

// Display-only record of the compact real form a complex entry came from.
struct RealForm {
  std::string group;
  std::string space;
};

// One representation: coordinates, generating invariants, strata,
// witness points and the flags (cofreeness, stability, invariant-ring
// dimension) that are genuinely representation-theoretic input.
struct RepresentationSpec {
  std::string name;
  std::string group;
  std::string summary;
  Ring ring;
  std::vector<std::pair<std::string, Polynomial>> invariants;
  std::vector<StratumSpec> strata;
  bool cofree = false;
  bool stable = true;
  int dim_invariant_ring = 0;
  std::vector<WitnessPoint> witnesses;
  std::optional<RealForm> real_form;

  const StratumSpec* find_stratum(std::string_view stratum_name) const;
  const WitnessPoint* find_witness(std::string_view witness_name) const;
  const Polynomial* find_invariant(std::string_view invariant_name) const;
};

class UnknownCatalogEntry : public std::runtime_error {
 public:
  explicit UnknownCatalogEntry(const std::string& what)
      : std::runtime_error(what) {}
};

// Built-in entries, validated on first access.
const RepresentationSpec& catalog_get(const std::string& name);
const std::vector<std::string>& catalog_names();

// Ideal generated by the invariant generators with zero constant term;
// cuts out the fiber of the quotient map over the image of the origin.
Ideal null_cone_ideal(const RepresentationSpec& spec);

// Substitutes coordinate polynomials for invariant names in `expr` and
// expands. Unknown invariant names are reported by name.
Polynomial pull_back(const RepresentationSpec& spec, std::string_view expr);

// The stratum with the smallest closure whose closure ideal vanishes at
// the point. Throws ValidationError when no stratum matches or the
// vanishing strata are not nested.
const StratumSpec& locate_stratum(const RepresentationSpec& spec,
                                  std::span<const Rational> point,
                                  const StepBudget& budget = StepBudget());

// Runs every recomputable invariant of the entry: stratum codimensions,
// the cofreeness dimension identity, witness vanishing, nesting.
void validate_spec(const RepresentationSpec& spec,
                   const StepBudget& budget = StepBudget());

}  // namespace gredcheck
