#include "gredcheck/checker.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "gredcheck/errors.hpp"
#include "gredcheck/matrix.hpp"

namespace gredcheck {

std::string_view truth_str(Truth t) {
  switch (t) {
    case Truth::proved_yes:
      return "proved_yes";
    case Truth::proved_no:
      return "proved_no";
    case Truth::unknown:
      return "unknown";
  }
  return "?";
}

std::string_view evidence_kind_str(Evidence::Kind k) {
  switch (k) {
    case Evidence::Kind::dim:
      return "dim";
    case Evidence::Kind::rank:
      return "rank";
    case Evidence::Kind::nonmember:
      return "nonmember";
    case Evidence::Kind::witness_point:
      return "witness_point";
    case Evidence::Kind::note:
      return "note";
  }
  return "?";
}

namespace {

Evidence dim_fact(std::string label, long long v) {
  return {Evidence::Kind::dim, std::move(label), v, "", {}};
}
Evidence rank_fact(std::string label, long long v) {
  return {Evidence::Kind::rank, std::move(label), v, "", {}};
}
Evidence nonmember_fact(std::string label, const Polynomial& p) {
  return {Evidence::Kind::nonmember, std::move(label), 0, p.str(), {}};
}
Evidence witness_fact(std::string label, std::vector<Rational> coords) {
  return {Evidence::Kind::witness_point, std::move(label), 0, "",
          std::move(coords)};
}
Evidence note(std::string text) {
  return {Evidence::Kind::note, std::move(text), 0, "", {}};
}

bool vanishes_at(const Ideal& ideal, std::span<const Rational> point) {
  for (const Polynomial& g : ideal.generators()) {
    if (!g.eval(point).is_zero()) return false;
  }
  return true;
}

// Shared lazy state for one run of the rule engine over a problem.
class Ctx {
 public:
  Ctx(const Problem& p, const CheckOptions& options)
      : p_(p), options_(options) {}

  const Problem& problem() const { return p_; }
  const StepBudget& budget() const { return options_.budget; }
  const CheckOptions& options() const { return options_; }

  const std::vector<Polynomial>& relation_polys() {
    if (!relation_polys_) relation_polys_ = pulled_back_relations(p_);
    return *relation_polys_;
  }

  const Ideal& pullback() {
    if (!pullback_) pullback_ = Ideal(p_.spec.ring, relation_polys());
    return *pullback_;
  }

  int dim_y() {
    if (!dim_y_) dim_y_ = dim_variety(p_.y_ideal, budget());
    return *dim_y_;
  }

  const Ideal& y_plus(const StratumSpec& s) {
    auto it = sums_.find(s.name);
    if (it == sums_.end()) {
      it = sums_.emplace(s.name, p_.y_ideal.plus(s.closure_ideal)).first;
    }
    return it->second;
  }

  int dim_y_plus(const StratumSpec& s) {
    auto it = sum_dims_.find(s.name);
    if (it == sum_dims_.end()) {
      it = sum_dims_.emplace(s.name, dim_variety(y_plus(s), budget())).first;
    }
    return it->second;
  }

  // Nonempty intersection of Y with the stratum closure.
  bool meets(const StratumSpec& s) { return dim_y_plus(s) >= 0; }

  const DensityResult& density();

 private:
  const Problem& p_;
  CheckOptions options_;
  std::optional<std::vector<Polynomial>> relation_polys_;
  std::optional<Ideal> pullback_;
  std::optional<int> dim_y_;
  std::map<std::string, Ideal> sums_;
  std::map<std::string, int> sum_dims_;
  std::optional<DensityResult> density_;
};

// One density question (principal or almost-principal locus).
Verdict density_one(Ctx& ctx, bool almost) {
  const Problem& p = ctx.problem();
  Verdict v;
  v.rule = "density";
  if (p.spec.strata.empty()) {
    v.value = Truth::unknown;
    v.evidence.push_back(note("no strata declared"));
    return v;
  }
  if (ctx.dim_y() < 0) {
    v.value = Truth::proved_yes;
    v.evidence.push_back(note("Y is empty"));
    return v;
  }
  std::vector<const StratumSpec*> offending;
  for (const auto& s : p.spec.strata) {
    bool good = almost ? s.almost_principal : s.principal;
    if (good) continue;
    int d = ctx.dim_y_plus(s);
    v.evidence.push_back(
        dim_fact("dim(Y meet closure(" + s.name + "))", d));
    if (d >= ctx.dim_y()) offending.push_back(&s);
  }
  v.evidence.push_back(dim_fact("dim(Y)", ctx.dim_y()));
  if (offending.empty()) {
    v.value = Truth::proved_yes;
    return v;
  }
  // A full-dimensional intersection alone is not a proof; a supplied
  // component inside the stratum closure is.
  for (const StratumSpec* s : offending) {
    for (size_t i = 0; i < p.component_ideals.size(); ++i) {
      const Ideal& comp = p.component_ideals[i];
      bool inside = true;
      for (const Polynomial& g : s->closure_ideal.generators()) {
        if (!rad_member(g, comp, ctx.budget())) {
          inside = false;
          break;
        }
      }
      if (inside) {
        v.value = Truth::proved_no;
        v.evidence.push_back(note("component " + std::to_string(i) +
                                  " lies inside closure(" + s->name + ")"));
        return v;
      }
    }
  }
  v.value = Truth::unknown;
  v.evidence.push_back(
      note("full-dimensional intersection but no confirming component"));
  return v;
}

const DensityResult& Ctx::density() {
  if (!density_) {
    DensityResult d;
    try {
      d.pr_dense = density_one(*this, false);
      d.apr_dense = density_one(*this, true);
    } catch (const BudgetExceeded&) {
      d.pr_dense = {Truth::unknown, "budget", {note("step budget exhausted")}};
      d.apr_dense = d.pr_dense;
    }
    density_ = std::move(d);
  }
  return *density_;
}

using Rule = std::function<RuleOutcome(Ctx&)>;

// Runs rules in order; the first decisive one becomes the primary
// verdict. In all-rules mode every rule still runs for cross-checking.
Verdict drive_rules(Ctx& ctx, const std::vector<std::pair<std::string, Rule>>& rules,
                    std::vector<RuleOutcome>* trace, bool* budget_hit) {
  Verdict primary;
  bool decided = false;
  for (const auto& [name, rule] : rules) {
    RuleOutcome outcome;
    outcome.rule = name;
    try {
      outcome = rule(ctx);
      outcome.rule = name;
    } catch (const BudgetExceeded&) {
      outcome.value = Truth::unknown;
      outcome.evidence = {note("step budget exhausted")};
      if (!decided && budget_hit) *budget_hit = true;
    }
    if (trace) trace->push_back(outcome);
    if (!decided && outcome.value != Truth::unknown) {
      primary.value = outcome.value;
      primary.rule = name;
      primary.evidence = outcome.evidence;
      decided = true;
      if (!ctx.options().all_rules) break;
    }
  }
  if (!decided) {
    primary.value = Truth::unknown;
    primary.rule = (budget_hit && *budget_hit) ? "budget" : "none";
  }
  return primary;
}

RuleOutcome na() { return {}; }

// ---- saturation rules ----

RuleOutcome rule_r1_direct(Ctx& ctx) {
  const Problem& p = ctx.problem();
  if (p.invariant_relations.empty()) return na();
  RuleOutcome out;
  if (variety_equal(ctx.pullback(), p.y_ideal, ctx.budget())) {
    out.value = Truth::proved_yes;
    out.evidence.push_back(
        note("the pulled-back relations cut out exactly Y"));
    return out;
  }
  out.value = Truth::proved_no;
  for (const Polynomial& g : p.y_ideal.generators()) {
    if (!rad_member(g, ctx.pullback(), ctx.budget())) {
      out.evidence.push_back(
          nonmember_fact("radical of the pulled-back relation ideal", g));
      for (const auto& w : p.witnesses) {
        if (vanishes_at(ctx.pullback(), w.coords) &&
            !g.eval(w.coords).is_zero()) {
          out.evidence.push_back(witness_fact(w.name, w.coords));
          break;
        }
      }
      return out;
    }
  }
  for (const Polynomial& g : ctx.pullback().generators()) {
    if (!rad_member(g, p.y_ideal, ctx.budget())) {
      out.evidence.push_back(nonmember_fact("radical of the ideal of Y", g));
      return out;
    }
  }
  return out;
}

RuleOutcome rule_r2_all_apr(Ctx& ctx) {
  if (ctx.problem().spec.strata.empty()) return na();
  for (const auto& s : ctx.problem().spec.strata) {
    if (ctx.meets(s) && !s.almost_principal) return na();
  }
  RuleOutcome out;
  out.value = Truth::proved_yes;
  out.evidence.push_back(
      note("every stratum whose closure meets Y is almost principal"));
  return out;
}

RuleOutcome rule_r3_cofree(Ctx& ctx) {
  if (!ctx.problem().spec.cofree) return na();
  const Verdict& apr = ctx.density().apr_dense;
  if (apr.value != Truth::proved_yes) return na();
  RuleOutcome out;
  out.value = Truth::proved_yes;
  out.evidence.push_back(
      note("cofree and the almost-principal locus is dense in Y"));
  return out;
}

RuleOutcome rule_r4_codim(Ctx& ctx) {
  const Problem& p = ctx.problem();
  if (p.invariant_relations.empty()) return na();
  if (ctx.density().apr_dense.value != Truth::proved_yes) return na();
  int k = static_cast<int>(p.invariant_relations.size());
  RuleOutcome out;
  for (const auto& s : p.spec.strata) {
    if (s.almost_principal || !ctx.meets(s)) continue;
    if (s.codim < k + 1) return na();
    out.evidence.push_back(dim_fact("codim(" + s.name + ")", s.codim));
  }
  out.value = Truth::proved_yes;
  out.evidence.push_back(dim_fact("number of relations k", k));
  out.evidence.push_back(note(
      "every non-almost-principal stratum meeting Y has codim >= k+1"));
  return out;
}

RuleOutcome rule_r5_fiber_dim(Ctx& ctx) {
  for (const auto& s : ctx.problem().spec.strata) {
    if (!ctx.meets(s)) continue;
    int d = ctx.dim_y_plus(s);
    if (d < s.fiber_dim) {
      RuleOutcome out;
      out.value = Truth::proved_no;
      out.evidence.push_back(
          dim_fact("dim(Y meet closure(" + s.name + "))", d));
      out.evidence.push_back(dim_fact("fiber_dim(" + s.name + ")", s.fiber_dim));
      out.evidence.push_back(note(
          "derived rule: a saturated set is a union of quotient-map fibers"));
      return out;
    }
  }
  return na();
}

Verdict stratum_saturated_impl(Ctx& ctx, const StratumSpec& s,
                               const std::vector<std::string>* relations);

RuleOutcome rule_r6_stratumwise(Ctx& ctx) {
  const Problem& p = ctx.problem();
  if (!p.spec.cofree) return na();
  if (ctx.dim_y() < 0) return na();
  RuleOutcome out;
  bool any = false;
  for (const auto& s : p.spec.strata) {
    if (ctx.dim_y_plus(s) != ctx.dim_y()) continue;  // not generic for Y
    any = true;
    Verdict v = stratum_saturated_impl(ctx, s, nullptr);
    if (v.value != Truth::proved_yes) return na();
    out.evidence.push_back(
        note("stratum-saturated on generic stratum '" + s.name + "'"));
  }
  if (!any) return na();
  out.value = Truth::proved_yes;
  out.evidence.push_back(note("cofree and stratum-saturated on every "
                              "generic stratum"));
  return out;
}

Verdict saturated_with(Ctx& ctx, std::vector<RuleOutcome>* trace,
                       bool* budget_hit) {
  static const std::vector<std::pair<std::string, Rule>> rules = {
      {"R1-direct", rule_r1_direct},   {"R2-all-apr", rule_r2_all_apr},
      {"R3-cofree", rule_r3_cofree},   {"R4-codim", rule_r4_codim},
      {"R5-fiber-dim", rule_r5_fiber_dim},
      {"R6-stratumwise", rule_r6_stratumwise},
  };
  return drive_rules(ctx, rules, trace, budget_hit);
}

// ---- reducedness rules ----

struct ReducedCtx {
  Ctx* ctx;
  Verdict g_saturated;
};

RuleOutcome rule_q0_reference(Ctx& ctx) {
  const Problem& p = ctx.problem();
  if (!p.radical_reference || p.invariant_relations.empty()) return na();
  if (!ideal_equal(ctx.pullback(), p.y_ideal, ctx.budget())) return na();
  const Ideal& ref = *p.radical_reference;
  RuleOutcome out;
  if (!variety_equal(ref, p.y_ideal, ctx.budget())) {
    out.evidence.push_back(
        note("reference ideal has a different zero set; metadata rejected"));
    return out;  // unknown
  }
  if (ideal_equal(p.y_ideal, ref, ctx.budget())) {
    out.value = Truth::proved_yes;
    out.evidence.push_back(note(
        "ideal of invariants coincides with the trusted radical reference"));
  } else {
    out.value = Truth::proved_no;
    out.evidence.push_back(note(
        "ideal of invariants differs from the trusted radical reference"));
  }
  return out;
}

RuleOutcome rule_q1_all_pr(Ctx& ctx) {
  if (ctx.problem().spec.strata.empty()) return na();
  for (const auto& s : ctx.problem().spec.strata) {
    if (ctx.meets(s) && !s.principal) return na();
  }
  RuleOutcome out;
  out.value = Truth::proved_yes;
  out.evidence.push_back(
      note("every stratum whose closure meets Y is principal"));
  return out;
}

RuleOutcome rule_q2_cofree(Ctx& ctx) {
  if (!ctx.problem().spec.cofree) return na();
  if (ctx.density().pr_dense.value != Truth::proved_yes) return na();
  RuleOutcome out;
  out.value = Truth::proved_yes;
  out.evidence.push_back(note("cofree and the principal locus is dense in Y"));
  return out;
}

RuleOutcome rule_q3_serre_sufficient(ReducedCtx& rctx) {
  Ctx& ctx = *rctx.ctx;
  const Problem& p = ctx.problem();
  if (rctx.g_saturated.value != Truth::proved_yes) return na();
  if (!p.claims_quotient_ideal_generated) return na();
  if (p.invariant_relations.empty()) return na();
  if (ctx.density().pr_dense.value != Truth::proved_yes) return na();
  int k = static_cast<int>(p.invariant_relations.size());
  int codim = p.spec.ring.arity() - ctx.dim_y();
  if (k != codim) return na();
  RuleOutcome out;
  out.value = Truth::proved_yes;
  out.evidence.push_back(dim_fact("codim(Y) = number of relations", codim));
  PolyMatrix jac = jacobian(ctx.relation_polys());
  for (const auto& w : p.witnesses) {
    if (!vanishes_at(p.y_ideal, w.coords)) continue;
    int r = rank_at(jac, w.coords);
    out.evidence.push_back(rank_fact("rank at witness '" + w.name + "'", r));
    out.evidence.push_back(witness_fact(w.name, w.coords));
  }
  return out;
}

RuleOutcome rule_q4_serre_necessary(Ctx& ctx) {
  const Problem& p = ctx.problem();
  if (!p.claims_quotient_ideal_generated) return na();
  if (p.invariant_relations.empty() || p.component_ideals.empty()) return na();
  for (size_t i = 0; i < p.component_ideals.size(); ++i) {
    const Ideal& comp = p.component_ideals[i];
    int r = rank_on_variety(ctx.relation_polys(), comp, ctx.budget());
    int codim = p.spec.ring.arity() - dim_variety(comp, ctx.budget());
    if (r < codim) {
      RuleOutcome out;
      out.value = Truth::proved_no;
      out.evidence.push_back(
          rank_fact("max rank on component " + std::to_string(i), r));
      out.evidence.push_back(
          dim_fact("codim(component " + std::to_string(i) + ")", codim));
      out.evidence.push_back(note(
          "the relations never reach full rank on this component"));
      return out;
    }
  }
  return na();
}

RuleOutcome rule_q5_saturation(ReducedCtx& rctx) {
  if (rctx.g_saturated.value != Truth::proved_no) return na();
  RuleOutcome out;
  out.value = Truth::proved_no;
  out.evidence.push_back(note("not saturated (rule " + rctx.g_saturated.rule +
                              "), hence the invariant ideal cuts a larger set"));
  return out;
}

RuleOutcome rule_q6_slice(Ctx& ctx) {
  if (ctx.dim_y() < 0) return na();
  for (const auto& s : ctx.problem().spec.strata) {
    if (s.slice_coreduced.value_or(true)) continue;
    if (ctx.dim_y_plus(s) != ctx.dim_y()) continue;  // not generic for Y
    RuleOutcome out;
    out.value = Truth::proved_no;
    out.evidence.push_back(note("generic stratum '" + s.name +
                                "' has a non-coreduced slice representation"));
    out.evidence.push_back(dim_fact("dim(Y meet closure(" + s.name + "))",
                                    ctx.dim_y_plus(s)));
    return out;
  }
  return na();
}

Verdict reduced_with(Ctx& ctx, const Verdict& g_saturated,
                     std::vector<RuleOutcome>* trace, bool* budget_hit) {
  ReducedCtx rctx{&ctx, g_saturated};
  std::vector<std::pair<std::string, Rule>> rules = {
      {"Q0-radical-reference", rule_q0_reference},
      {"Q1-all-pr", rule_q1_all_pr},
      {"Q2-cofree", rule_q2_cofree},
      {"Q3-serre-sufficient",
       [&rctx](Ctx&) { return rule_q3_serre_sufficient(rctx); }},
      {"Q4-serre-necessary", rule_q4_serre_necessary},
      {"Q5-saturation", [&rctx](Ctx&) { return rule_q5_saturation(rctx); }},
      {"Q6-slice", rule_q6_slice},
  };
  return drive_rules(ctx, rules, trace, budget_hit);
}

Verdict stratum_saturated_impl(Ctx& ctx, const StratumSpec& s,
                               const std::vector<std::string>* relations) {
  const Problem& p = ctx.problem();
  const Ideal& sum = ctx.y_plus(s);
  int d = ctx.dim_y_plus(s);
  if (d < 0) {
    return {Truth::proved_yes, "vacuous",
            {note("Y misses the closure of stratum '" + s.name + "'")}};
  }
  if (d < s.fiber_dim) {
    Verdict v;
    v.value = Truth::proved_no;
    v.rule = "fiber-dim";
    v.evidence.push_back(dim_fact("dim(Y meet closure(" + s.name + "))", d));
    v.evidence.push_back(dim_fact("fiber_dim(" + s.name + ")", s.fiber_dim));
    return v;
  }
  const std::vector<std::string>& rels =
      relations ? *relations : p.invariant_relations;
  if (!rels.empty()) {
    std::vector<Polynomial> polys;
    for (const auto& text : rels) polys.push_back(pull_back(p.spec, text));
    Ideal pb_restricted =
        Ideal(p.spec.ring, std::move(polys)).plus(s.closure_ideal);
    Verdict v;
    v.rule = "direct-restricted";
    if (variety_equal(pb_restricted, sum, ctx.budget())) {
      v.value = Truth::proved_yes;
      v.evidence.push_back(note(
          "restricted to the stratum closure, the relations cut out Y"));
      return v;
    }
    // A failed comparison disproves stratum saturation only when the
    // relations cut out the image of Y meet the closure itself; the
    // global problem relations may pick up points of other strata.
    if (relations) {
      v.value = Truth::proved_no;
      for (const Polynomial& g : sum.generators()) {
        if (!rad_member(g, pb_restricted, ctx.budget())) {
          v.evidence.push_back(nonmember_fact(
              "radical of the restricted relation ideal", g));
          break;
        }
      }
      return v;
    }
    return {Truth::unknown, "none",
            {note("global relations cut more than Y inside the closure; "
                  "supply per-stratum relations to decide")}};
  }
  return {Truth::unknown, "none", {}};
}

}  // namespace

DensityResult density_check(const Problem& problem,
                            const CheckOptions& options) {
  Ctx ctx(problem, options);
  return ctx.density();
}

Verdict check_g_saturated(const Problem& problem, const CheckOptions& options) {
  Ctx ctx(problem, options);
  bool budget_hit = false;
  return saturated_with(ctx, nullptr, &budget_hit);
}

Verdict check_g_reduced(const Problem& problem, const CheckOptions& options) {
  Ctx ctx(problem, options);
  bool budget_hit = false;
  Verdict sat = saturated_with(ctx, nullptr, &budget_hit);
  return reduced_with(ctx, sat, nullptr, &budget_hit);
}

Verdict check_stratum_saturated(const Problem& problem,
                                const StratumSpec& stratum,
                                const CheckOptions& options,
                                const std::vector<std::string>* relations) {
  Ctx ctx(problem, options);
  try {
    return stratum_saturated_impl(ctx, stratum, relations);
  } catch (const BudgetExceeded&) {
    return {Truth::unknown, "budget", {note("step budget exhausted")}};
  }
}

Verdict check_coreduced(const RepresentationSpec& spec,
                        const std::optional<Ideal>& reference,
                        const CheckOptions& options) {
  Problem problem = [&] {
    auto names = bundled_problem_names(spec.name);
    if (std::find(names.begin(), names.end(), "null_cone") != names.end()) {
      return bundled_problem(spec.name, "null_cone");
    }
    Problem p{.id = spec.name + ":null_cone",
              .spec = spec,
              .y_ideal = null_cone_ideal(spec)};
    for (const auto& [name, poly] : spec.invariants) {
      if (poly.constant_term().is_zero()) {
        p.invariant_relations.push_back(name);
      }
    }
    p.claims_quotient_ideal_generated = true;
    return p;
  }();
  if (reference) problem.radical_reference = *reference;
  return check_g_reduced(problem, options);
}

OrbitResult orbit_check(const RepresentationSpec& spec,
                        const WitnessPoint& witness,
                        const CheckOptions& options) {
  if (!witness.orbit_closed) {
    throw std::invalid_argument(
        "orbit classification applies to closed orbits only; witness '" +
        witness.name + "' is not marked closed");
  }
  const StratumSpec& s = locate_stratum(spec, witness.coords, options.budget);
  OrbitResult out;
  auto ev = [&](const char* what) {
    std::vector<Evidence> e;
    e.push_back(note(std::string("closed orbit lies in stratum '") + s.name +
                     "' (" + what + ")"));
    e.push_back(witness_fact(witness.name, witness.coords));
    return e;
  };
  out.k_reduced.rule = "orbit-principality";
  out.k_reduced.value = s.principal ? Truth::proved_yes : Truth::proved_no;
  out.k_reduced.evidence =
      ev(s.principal ? "principal" : "not principal");
  out.almost_k_reduced.rule = "orbit-principality";
  out.almost_k_reduced.value =
      s.almost_principal ? Truth::proved_yes : Truth::proved_no;
  out.almost_k_reduced.evidence =
      ev(s.almost_principal ? "almost principal" : "not almost principal");
  return out;
}

RealResult real_translate(const Problem& problem, const Verdict& g_saturated,
                          const Verdict& g_reduced) {
  if (!problem.spec.real_form || !problem.is_complexification) {
    throw std::invalid_argument(
        "real translation needs real-form metadata and a Y declared as a "
        "complexification");
  }
  RealResult out;
  out.almost_k_reduced = g_saturated;
  out.almost_k_reduced.rule = "real-transport:" + g_saturated.rule;
  out.k_reduced = g_reduced;
  out.k_reduced.rule = "real-transport:" + g_reduced.rule;
  return out;
}

CheckReport run_checks(const Problem& problem, const CheckOptions& options) {
  CheckReport report;
  report.problem_id = problem.id;
  Ctx ctx(problem, options);

  auto timed = [&](const char* name, auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    report.timings_ms[name] =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
  };

  try {
    timed("validate", [&] {
      validate_spec(problem.spec, options.budget);
      validate_problem(problem, options.budget);
    });
  } catch (const BudgetExceeded&) {
    report.budget_exhausted = true;
    report.g_saturated = {Truth::unknown, "budget", {}};
    report.g_reduced = {Truth::unknown, "budget", {}};
    report.density.pr_dense = {Truth::unknown, "budget", {}};
    report.density.apr_dense = {Truth::unknown, "budget", {}};
    return report;
  }

  timed("density", [&] { report.density = ctx.density(); });
  if (report.density.pr_dense.rule == "budget") report.budget_exhausted = true;

  bool want_saturated = options.want_saturated || options.want_reduced;
  bool budget_hit = false;
  if (want_saturated) {
    timed("g_saturated", [&] {
      report.g_saturated = saturated_with(
          ctx, options.all_rules ? &report.saturated_rules : nullptr,
          &budget_hit);
    });
  } else {
    report.g_saturated = {Truth::unknown, "skipped", {}};
  }
  if (options.want_reduced) {
    timed("g_reduced", [&] {
      report.g_reduced = reduced_with(
          ctx, report.g_saturated,
          options.all_rules ? &report.reduced_rules : nullptr, &budget_hit);
    });
  } else {
    report.g_reduced = {Truth::unknown, "skipped", {}};
  }
  report.budget_exhausted = report.budget_exhausted || budget_hit;

  // Reduced implies saturated; surface the implication when a rule
  // proved reducedness but no saturation rule applied.
  if (report.g_reduced.value == Truth::proved_yes &&
      report.g_saturated.value == Truth::unknown) {
    report.g_saturated.value = Truth::proved_yes;
    report.g_saturated.rule = "implied-by-reduced";
    report.g_saturated.evidence = {
        note("reducedness forces the invariant ideal to cut out Y")};
  }
  if (report.g_reduced.value == Truth::proved_yes &&
      report.g_saturated.value == Truth::proved_no) {
    throw std::logic_error("inconsistent verdicts: reduced but not saturated");
  }

  if (problem.spec.real_form && problem.is_complexification &&
      want_saturated && options.want_reduced) {
    timed("real", [&] {
      report.real =
          real_translate(problem, report.g_saturated, report.g_reduced);
    });
  }
  return report;
}

}  // namespace gredcheck
