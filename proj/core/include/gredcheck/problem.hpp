#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gredcheck/catalog.hpp"

namespace gredcheck {

// One checkable question: a group-stable subset Y of the representation,
// given by generators of its ideal, plus whatever is known about its
// image in the quotient.
//
// `invariant_relations` are polynomial texts in invariant names whose
// zero set in the quotient is the image of Y (trusted metadata; the
// containment direction is validated). `component_ideals` cut out the
// irreducible components of Y when known — supplying Y itself asserts
// irreducibility. `radical_reference`, when present, is a trusted
// radical ideal with the same zero set as Y (for coreducedness checks).
// `is_complexification` asserts that Y is the complexification of a
// real subset of the compact form; the real translation of verdicts is
// only valid, and only offered, under that assertion.
struct Problem {
  std::string id;
  RepresentationSpec spec;
  Ideal y_ideal;
  std::vector<std::string> invariant_relations;
  std::vector<Ideal> component_ideals;
  bool claims_quotient_ideal_generated = false;
  bool is_complexification = false;
  std::vector<WitnessPoint> witnesses;
  std::optional<Ideal> radical_reference;
};

// The relations as polynomials on the representation space.
std::vector<Polynomial> pulled_back_relations(const Problem& problem);
Ideal pull_back_ideal(const Problem& problem);

// Checks what can be checked: rings match, relations parse and vanish
// on Y (radical membership), components lie inside Y, witness strata
// exist and their closures vanish at the points.
void validate_problem(const Problem& problem,
                      const StepBudget& budget = StepBudget());

// Ready-made problems shipped with the catalog entries; the first name
// is the default used by `catalog run`.
std::vector<std::string> bundled_problem_names(const std::string& entry);
Problem bundled_problem(const std::string& entry,
                        const std::string& problem_name = "");

}  // namespace gredcheck
