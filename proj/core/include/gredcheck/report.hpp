#pragma once

#include <iosfwd>
#include <string>

#include "gredcheck/checker.hpp"

namespace gredcheck {

// Machine-readable report. Top-level keys: problem, g_saturated,
// g_reduced, density, real, rules (all-rules mode only), timings,
// budget_exhausted. Every verdict is {value, rule, evidence[]} with
// evidence entries tagged by kind (dim, rank, nonmember, witness_point,
// note). Identical runs produce identical JSON apart from timings.
std::string report_to_json(const CheckReport& report, int indent = 2);

void print_report(std::ostream& os, const CheckReport& report);

}  // namespace gredcheck
