#include "gredcheck/report.hpp"

#include <json.hpp>

#include <ostream>

namespace gredcheck {

namespace {

using nlohmann::json;

json evidence_json(const Evidence& e) {
  json j;
  j["kind"] = std::string(evidence_kind_str(e.kind));
  j["label"] = e.label;
  switch (e.kind) {
    case Evidence::Kind::dim:
    case Evidence::Kind::rank:
      j["value"] = e.value;
      break;
    case Evidence::Kind::nonmember:
      j["poly"] = e.poly;
      break;
    case Evidence::Kind::witness_point: {
      json pt = json::array();
      for (const auto& c : e.point) pt.push_back(c.str());
      j["point"] = pt;
      break;
    }
    case Evidence::Kind::note:
      break;
  }
  return j;
}

json verdict_json(const Verdict& v) {
  json j;
  j["value"] = std::string(truth_str(v.value));
  j["rule"] = v.rule;
  json ev = json::array();
  for (const auto& e : v.evidence) ev.push_back(evidence_json(e));
  j["evidence"] = ev;
  return j;
}

json outcomes_json(const std::vector<RuleOutcome>& outcomes) {
  json arr = json::array();
  for (const auto& o : outcomes) {
    json j;
    j["rule"] = o.rule;
    j["value"] = std::string(truth_str(o.value));
    json ev = json::array();
    for (const auto& e : o.evidence) ev.push_back(evidence_json(e));
    j["evidence"] = ev;
    arr.push_back(j);
  }
  return arr;
}

void print_verdict(std::ostream& os, const std::string& question,
                   const Verdict& v) {
  os << "  " << question << ": " << truth_str(v.value);
  if (!v.rule.empty()) os << "  [rule " << v.rule << "]";
  os << "\n";
  for (const auto& e : v.evidence) {
    os << "    - " << evidence_kind_str(e.kind) << ": " << e.label;
    switch (e.kind) {
      case Evidence::Kind::dim:
      case Evidence::Kind::rank:
        os << " = " << e.value;
        break;
      case Evidence::Kind::nonmember:
        os << ": " << e.poly;
        break;
      case Evidence::Kind::witness_point: {
        os << " = (";
        for (size_t i = 0; i < e.point.size(); ++i) {
          if (i) os << ",";
          os << e.point[i].str();
        }
        os << ")";
        break;
      }
      case Evidence::Kind::note:
        break;
    }
    os << "\n";
  }
}

}  // namespace

std::string report_to_json(const CheckReport& report, int indent) {
  json j;
  j["problem"] = report.problem_id;
  j["g_saturated"] = verdict_json(report.g_saturated);
  j["g_reduced"] = verdict_json(report.g_reduced);
  j["density"]["pr_dense"] = verdict_json(report.density.pr_dense);
  j["density"]["apr_dense"] = verdict_json(report.density.apr_dense);
  if (report.real) {
    j["real"]["k_reduced"] = verdict_json(report.real->k_reduced);
    j["real"]["almost_k_reduced"] = verdict_json(report.real->almost_k_reduced);
  } else {
    j["real"] = nullptr;
  }
  if (!report.saturated_rules.empty() || !report.reduced_rules.empty()) {
    j["rules"]["saturated"] = outcomes_json(report.saturated_rules);
    j["rules"]["reduced"] = outcomes_json(report.reduced_rules);
  }
  j["budget_exhausted"] = report.budget_exhausted;
  json timings;
  for (const auto& [name, ms] : report.timings_ms) timings[name] = ms;
  j["timings"] = timings;
  return j.dump(indent) + "\n";
}

void print_report(std::ostream& os, const CheckReport& report) {
  os << "problem " << report.problem_id << "\n";
  print_verdict(os, "g_saturated", report.g_saturated);
  print_verdict(os, "g_reduced", report.g_reduced);
  print_verdict(os, "pr_dense", report.density.pr_dense);
  print_verdict(os, "apr_dense", report.density.apr_dense);
  if (report.real) {
    print_verdict(os, "K_reduced", report.real->k_reduced);
    print_verdict(os, "almost_K_reduced", report.real->almost_k_reduced);
  }
  if (report.budget_exhausted) {
    os << "  (step budget exhausted; unknown verdicts may be decidable "
          "with a larger --budget)\n";
  }
}

}  // namespace gredcheck
