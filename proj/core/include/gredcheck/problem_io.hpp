#pragma once

#include <string>
#include <utility>

#include "gredcheck/problem.hpp"

namespace gredcheck {

// Line-oriented problem-file format. Sections:
//   name <id>                     group <label or "quoted">
//   summary "<text>"              ring <var> <var> ...
//   invariant_ring_dim <n>
//   flags cofree=<bool> stable=<bool> quotient_ideal_generated=<bool>
//   real_form group="..." space="..."
//   invariants ... end            (lines "name = polynomial")
//   stratum name=<s> codim=<n> principal=<bool> apr=<bool> fiberdim=<n>
//           [slice_coreduced=<bool>] ... end   (closure generators)
//   witness name=<w> point=(r,...) stratum=<s> closed=<bool>
//   ideal Y ... end               (generators, one per line)
//   quotient_relations ... end    (texts in invariant names)
//   component ... end             (repeatable)
//   reference ... end             (trusted radical ideal)
// '#' starts a comment; blank lines are ignored.
Problem parse_problem_file(const std::string& text,
                           const std::string& source_name = "<input>");
Problem load_problem_file(const std::string& path);

// Canonical serialization; parse followed by serialize is the identity
// on serialized output.
std::string serialize_problem(const Problem& problem);

// Minimal input for the direct engine subcommands: a ring line and an
// "ideal" block.
std::pair<Ring, Ideal> parse_ring_ideal(const std::string& text,
                                        const std::string& source_name);
std::pair<Ring, Ideal> load_ring_ideal(const std::string& path);

}  // namespace gredcheck
