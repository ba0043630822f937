#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gredcheck/problem.hpp"

namespace gredcheck {

// Three-valued outcome. proved_yes / proved_no are backed by evidence;
// unknown is an honest answer (rule inapplicable or budget exhausted),
// never a wrong one.
enum class Truth { proved_yes, proved_no, unknown };
std::string_view truth_str(Truth t);

struct Evidence {
  enum class Kind { dim, rank, nonmember, witness_point, note };
  Kind kind;
  std::string label;
  long long value = 0;           // dim / rank facts
  std::string poly;              // nonmember facts
  std::vector<Rational> point;   // witness points
};
std::string_view evidence_kind_str(Evidence::Kind k);

struct Verdict {
  Truth value = Truth::unknown;
  std::string rule;
  std::vector<Evidence> evidence;
};

// Outcome of one named rule when every rule is evaluated for
// cross-checking. `value == unknown` means the rule did not apply.
struct RuleOutcome {
  std::string rule;
  Truth value = Truth::unknown;
  std::vector<Evidence> evidence;
};

struct DensityResult {
  Verdict pr_dense;
  Verdict apr_dense;
};

struct CheckOptions {
  StepBudget budget;
  bool all_rules = false;       // evaluate every rule, not first-wins only
  bool want_saturated = true;   // run_checks: which questions to decide
  bool want_reduced = true;     // (reducedness implies the saturation run)
};

struct OrbitResult {
  Verdict k_reduced;
  Verdict almost_k_reduced;
};

struct RealResult {
  Verdict k_reduced;
  Verdict almost_k_reduced;
};

struct CheckReport {
  std::string problem_id;
  Verdict g_saturated;
  Verdict g_reduced;
  DensityResult density;
  std::optional<RealResult> real;
  std::vector<RuleOutcome> saturated_rules;  // filled in all-rules mode
  std::vector<RuleOutcome> reduced_rules;
  std::map<std::string, double> timings_ms;
  bool budget_exhausted = false;
};

// Density of the principal / almost-principal locus in Y, decided by
// comparing dim(Y meet stratum closure) against dim Y stratum by
// stratum; a NO additionally needs a supplied component inside the
// stratum closure.
DensityResult density_check(const Problem& problem,
                            const CheckOptions& options = {});

// Saturation rules, in order:
//   R1 direct          pulled-back relations cut out exactly Y
//   R2 all-apr         every stratum meeting Y is almost principal
//   R3 cofree          cofree and the almost-principal locus is dense
//   R4 codim           dense apr locus + k relations + every non-apr
//                      stratum meeting Y has codimension >= k+1
//   R5 fiber-dim       Y meets a stratum closure in less than the fiber
//                      dimension (derived rule: a saturated set is a
//                      union of quotient-map fibers)
//   R6 stratumwise     cofree and stratum-saturated on every generic
//                      stratum
Verdict check_g_saturated(const Problem& problem,
                          const CheckOptions& options = {});

// Reducedness rules, in order:
//   Q0 radical-reference   the ideal of Y equals a trusted radical ideal
//   Q1 all-pr              every stratum meeting Y is principal
//   Q2 cofree              cofree and the principal locus is dense
//   Q3 serre-sufficient    saturated + ideal-generated image + k
//                          relations = codim Y + dense principal locus
//   Q4 serre-necessary     Jacobian rank below codimension on a component
//   Q5 saturation          not saturated, hence not reduced
//   Q6 slice               a generic stratum has a non-coreduced slice
Verdict check_g_reduced(const Problem& problem,
                        const CheckOptions& options = {});

// Per-stratum saturation: vacuous when Y misses the stratum closure,
// then the fiber-dimension rule, then the direct comparison restricted
// to the stratum (with the problem relations, or per-stratum ones).
Verdict check_stratum_saturated(
    const Problem& problem, const StratumSpec& stratum,
    const CheckOptions& options = {},
    const std::vector<std::string>* stratum_relations = nullptr);

// Is the null cone reduced as a scheme? With a trusted radical
// reference the answer is an ideal comparison; without one it falls
// through to the reducedness rules on the null-cone problem.
Verdict check_coreduced(const RepresentationSpec& spec,
                        const std::optional<Ideal>& reference,
                        const CheckOptions& options = {});

// Classification of a closed orbit: reduced iff principal, almost
// reduced iff almost principal. Rejects witnesses without the
// closed-orbit flag.
OrbitResult orbit_check(const RepresentationSpec& spec,
                        const WitnessPoint& witness,
                        const CheckOptions& options = {});

// Transport to the compact real form: almost reduced over the reals
// matches saturated over the complexification, reduced matches reduced.
// Requires real-form metadata.
RealResult real_translate(const Problem& problem, const Verdict& g_saturated,
                          const Verdict& g_reduced);

// Validates, runs every requested check, transports to the real form
// when possible, and enforces the cross-verdict consistency rules.
CheckReport run_checks(const Problem& problem,
                       const CheckOptions& options = {});

}  // namespace gredcheck
