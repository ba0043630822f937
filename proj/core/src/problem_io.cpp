#include "gredcheck/problem_io.hpp"

#include <fstream>
#include <sstream>

#include "gredcheck/errors.hpp"

namespace gredcheck {

namespace {

struct Line {
  std::string text;
  int number;
};

[[noreturn]] void fail_at(const std::string& source, int line,
                          const std::string& what) {
  throw ParseError(source + ":" + std::to_string(line) + ": " + what, 0);
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::stringstream ss(text);
  std::string raw;
  int n = 0;
  while (std::getline(ss, raw)) {
    ++n;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = strip(raw);
    if (!s.empty()) out.push_back({s, n});
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

// key=value pairs; values may be double-quoted (required when they
// contain whitespace).
std::vector<std::pair<std::string, std::string>> parse_kv(
    const std::string& s, const std::string& source, int line) {
  std::vector<std::pair<std::string, std::string>> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    size_t eq = s.find('=', i);
    if (eq == std::string::npos) fail_at(source, line, "expected key=value");
    std::string key = strip(s.substr(i, eq - i));
    i = eq + 1;
    std::string value;
    if (i < s.size() && s[i] == '"') {
      size_t close = s.find('"', i + 1);
      if (close == std::string::npos) {
        fail_at(source, line, "unterminated quoted value");
      }
      value = s.substr(i + 1, close - i - 1);
      i = close + 1;
    } else {
      size_t end = i;
      int paren = 0;
      while (end < s.size()) {
        char c = s[end];
        if (c == '(') ++paren;
        if (c == ')') --paren;
        if (std::isspace(static_cast<unsigned char>(c)) && paren == 0) break;
        ++end;
      }
      value = s.substr(i, end - i);
      i = end;
    }
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

bool parse_bool(const std::string& v, const std::string& source, int line) {
  if (v == "true") return true;
  if (v == "false") return false;
  fail_at(source, line, "expected true or false, got '" + v + "'");
}

int parse_int(const std::string& v, const std::string& source, int line) {
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    fail_at(source, line, "expected an integer, got '" + v + "'");
  }
}

std::vector<Rational> parse_point(const std::string& v,
                                  const std::string& source, int line) {
  if (v.size() < 2 || v.front() != '(' || v.back() != ')') {
    fail_at(source, line, "expected point=(r1,...,rn)");
  }
  std::vector<Rational> out;
  std::stringstream ss(v.substr(1, v.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rational::from_string(strip(item)));
    } catch (const std::invalid_argument& e) {
      fail_at(source, line, e.what());
    }
  }
  return out;
}

struct RawStratum {
  std::vector<std::pair<std::string, std::string>> kv;
  std::vector<std::pair<std::string, int>> gens;
  int line;
};

struct RawFile {
  std::string name;
  std::string group;
  std::string summary;
  std::vector<std::string> ring_vars;
  int invariant_ring_dim = 0;
  bool has_flags = false;
  bool cofree = false, stable = true, claims = false, complexification = false;
  std::optional<std::pair<std::string, std::string>> real_form;
  std::vector<std::tuple<std::string, std::string, int>> invariants;
  std::vector<RawStratum> strata;
  std::vector<std::vector<std::pair<std::string, std::string>>> witnesses;
  std::vector<int> witness_lines;
  std::vector<std::pair<std::string, int>> y_gens;
  bool has_ideal = false;
  std::vector<std::string> relations;
  std::vector<std::vector<std::pair<std::string, int>>> components;
  std::vector<std::pair<std::string, int>> reference;
  bool has_reference = false;
};

RawFile scan(const std::vector<Line>& lines, const std::string& source) {
  RawFile raw;
  size_t i = 0;
  auto block = [&](std::vector<std::pair<std::string, int>>* out) {
    ++i;
    while (i < lines.size() && lines[i].text != "end") {
      out->push_back({lines[i].text, lines[i].number});
      ++i;
    }
    if (i >= lines.size()) fail_at(source, lines.back().number, "missing end");
    ++i;
  };
  while (i < lines.size()) {
    const Line& line = lines[i];
    auto words = split_ws(line.text);
    const std::string& kw = words[0];
    std::string rest = strip(line.text.substr(kw.size()));
    if (kw == "name") {
      raw.name = rest;
      ++i;
    } else if (kw == "group") {
      raw.group = rest.size() >= 2 && rest.front() == '"'
                      ? rest.substr(1, rest.size() - 2)
                      : rest;
      ++i;
    } else if (kw == "summary") {
      if (rest.size() < 2 || rest.front() != '"' || rest.back() != '"') {
        fail_at(source, line.number, "summary must be quoted");
      }
      raw.summary = rest.substr(1, rest.size() - 2);
      ++i;
    } else if (kw == "ring") {
      raw.ring_vars.assign(words.begin() + 1, words.end());
      ++i;
    } else if (kw == "invariant_ring_dim") {
      raw.invariant_ring_dim = parse_int(rest, source, line.number);
      ++i;
    } else if (kw == "flags") {
      raw.has_flags = true;
      for (const auto& [k, v] : parse_kv(rest, source, line.number)) {
        if (k == "cofree") raw.cofree = parse_bool(v, source, line.number);
        else if (k == "stable") raw.stable = parse_bool(v, source, line.number);
        else if (k == "quotient_ideal_generated")
          raw.claims = parse_bool(v, source, line.number);
        else if (k == "complexification")
          raw.complexification = parse_bool(v, source, line.number);
        else fail_at(source, line.number, "unknown flag '" + k + "'");
      }
      ++i;
    } else if (kw == "real_form") {
      std::string group, space;
      for (const auto& [k, v] : parse_kv(rest, source, line.number)) {
        if (k == "group") group = v;
        else if (k == "space") space = v;
        else fail_at(source, line.number, "unknown real_form key '" + k + "'");
      }
      raw.real_form = {group, space};
      ++i;
    } else if (kw == "invariants") {
      ++i;
      while (i < lines.size() && lines[i].text != "end") {
        auto eq = lines[i].text.find('=');
        if (eq == std::string::npos) {
          fail_at(source, lines[i].number, "expected 'name = polynomial'");
        }
        raw.invariants.emplace_back(strip(lines[i].text.substr(0, eq)),
                                    strip(lines[i].text.substr(eq + 1)),
                                    lines[i].number);
        ++i;
      }
      if (i >= lines.size()) fail_at(source, lines.back().number, "missing end");
      ++i;
    } else if (kw == "stratum") {
      RawStratum s;
      s.kv = parse_kv(rest, source, line.number);
      s.line = line.number;
      block(&s.gens);
      raw.strata.push_back(std::move(s));
    } else if (kw == "witness") {
      raw.witnesses.push_back(parse_kv(rest, source, line.number));
      raw.witness_lines.push_back(line.number);
      ++i;
    } else if (kw == "ideal") {
      raw.has_ideal = true;
      block(&raw.y_gens);
    } else if (kw == "quotient_relations") {
      std::vector<std::pair<std::string, int>> rels;
      block(&rels);
      for (auto& [text, n] : rels) raw.relations.push_back(text);
    } else if (kw == "component") {
      std::vector<std::pair<std::string, int>> gens;
      block(&gens);
      raw.components.push_back(std::move(gens));
    } else if (kw == "reference") {
      raw.has_reference = true;
      block(&raw.reference);
    } else {
      fail_at(source, line.number, "unknown section '" + kw + "'");
    }
  }
  return raw;
}

Polynomial parse_poly_at(const std::string& text, const Ring& ring,
                         const std::string& source, int line) {
  try {
    return parse_polynomial(text, ring);
  } catch (const ParseError& e) {
    fail_at(source, line, e.what());
  }
}

Ideal parse_block_ideal(const std::vector<std::pair<std::string, int>>& gens,
                        const Ring& ring, const std::string& source) {
  std::vector<Polynomial> polys;
  polys.reserve(gens.size());
  for (const auto& [text, line] : gens) {
    polys.push_back(parse_poly_at(text, ring, source, line));
  }
  return Ideal(ring, std::move(polys));
}

}  // namespace

Problem parse_problem_file(const std::string& text,
                           const std::string& source_name) {
  auto lines = split_lines(text);
  if (lines.empty()) fail_at(source_name, 1, "empty problem file");
  RawFile raw = scan(lines, source_name);

  if (raw.ring_vars.empty()) fail_at(source_name, 1, "missing ring section");
  if (!raw.has_ideal) fail_at(source_name, 1, "missing ideal section");

  Ring ring = [&] {
    try {
      return Ring(raw.ring_vars);
    } catch (const std::invalid_argument& e) {
      fail_at(source_name, 1, e.what());
    }
  }();

  RepresentationSpec spec{.name = raw.name.empty() ? source_name : raw.name,
                          .group = raw.group,
                          .summary = raw.summary,
                          .ring = ring};
  spec.cofree = raw.cofree;
  spec.stable = raw.stable;
  spec.dim_invariant_ring = raw.invariant_ring_dim;
  for (const auto& [name, poly_text, line] : raw.invariants) {
    spec.invariants.emplace_back(
        name, parse_poly_at(poly_text, ring, source_name, line));
  }
  if (raw.real_form) {
    spec.real_form = RealForm{raw.real_form->first, raw.real_form->second};
  }

  for (const RawStratum& rs : raw.strata) {
    StratumSpec s{.name = "", .closure_ideal = Ideal(ring, {})};
    for (const auto& [k, v] : rs.kv) {
      if (k == "name") s.name = v;
      else if (k == "codim") s.codim = parse_int(v, source_name, rs.line);
      else if (k == "principal")
        s.principal = parse_bool(v, source_name, rs.line);
      else if (k == "apr")
        s.almost_principal = parse_bool(v, source_name, rs.line);
      else if (k == "fiberdim")
        s.fiber_dim = parse_int(v, source_name, rs.line);
      else if (k == "slice_coreduced")
        s.slice_coreduced = parse_bool(v, source_name, rs.line);
      else fail_at(source_name, rs.line, "unknown stratum key '" + k + "'");
    }
    if (s.name.empty()) fail_at(source_name, rs.line, "stratum needs a name");
    s.closure_ideal = parse_block_ideal(rs.gens, ring, source_name);
    spec.strata.push_back(std::move(s));
  }

  for (size_t w = 0; w < raw.witnesses.size(); ++w) {
    WitnessPoint wp;
    int line = raw.witness_lines[w];
    for (const auto& [k, v] : raw.witnesses[w]) {
      if (k == "name") wp.name = v;
      else if (k == "point") wp.coords = parse_point(v, source_name, line);
      else if (k == "stratum") wp.stratum = v;
      else if (k == "closed") wp.orbit_closed = parse_bool(v, source_name, line);
      else fail_at(source_name, line, "unknown witness key '" + k + "'");
    }
    if (wp.name.empty()) fail_at(source_name, line, "witness needs a name");
    spec.witnesses.push_back(std::move(wp));
  }

  Problem problem{.id = spec.name,
                  .spec = spec,
                  .y_ideal = parse_block_ideal(raw.y_gens, ring, source_name)};
  problem.invariant_relations = raw.relations;
  problem.claims_quotient_ideal_generated = raw.claims;
  problem.is_complexification = raw.complexification;
  problem.witnesses = spec.witnesses;
  for (const auto& comp : raw.components) {
    problem.component_ideals.push_back(
        parse_block_ideal(comp, ring, source_name));
  }
  if (raw.has_reference) {
    problem.radical_reference =
        parse_block_ideal(raw.reference, ring, source_name);
  }
  return problem;
}

Problem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'", 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem_file(ss.str(), path);
}

std::string serialize_problem(const Problem& problem) {
  const RepresentationSpec& spec = problem.spec;
  std::ostringstream out;
  auto bool_str = [](bool b) { return b ? "true" : "false"; };

  out << "name " << problem.id << "\n";
  if (!spec.group.empty()) out << "group \"" << spec.group << "\"\n";
  if (!spec.summary.empty()) out << "summary \"" << spec.summary << "\"\n";
  out << "ring";
  for (const auto& v : spec.ring.vars()) out << " " << v;
  out << "\n";
  out << "invariant_ring_dim " << spec.dim_invariant_ring << "\n";
  out << "flags cofree=" << bool_str(spec.cofree)
      << " stable=" << bool_str(spec.stable) << " quotient_ideal_generated="
      << bool_str(problem.claims_quotient_ideal_generated)
      << " complexification=" << bool_str(problem.is_complexification)
      << "\n";
  if (spec.real_form) {
    out << "real_form group=\"" << spec.real_form->group << "\" space=\""
        << spec.real_form->space << "\"\n";
  }

  if (!spec.invariants.empty()) {
    out << "invariants\n";
    for (const auto& [name, poly] : spec.invariants) {
      out << "  " << name << " = " << poly.str() << "\n";
    }
    out << "end\n";
  }

  for (const auto& s : spec.strata) {
    out << "stratum name=" << s.name << " codim=" << s.codim
        << " principal=" << bool_str(s.principal)
        << " apr=" << bool_str(s.almost_principal)
        << " fiberdim=" << s.fiber_dim;
    if (s.slice_coreduced) {
      out << " slice_coreduced=" << bool_str(*s.slice_coreduced);
    }
    out << "\n";
    for (const Polynomial& g : s.closure_ideal.generators()) {
      out << "  " << g.str() << "\n";
    }
    out << "end\n";
  }

  // Spec witnesses first, then problem-only ones; names are unique.
  std::vector<const WitnessPoint*> witnesses;
  for (const auto& w : spec.witnesses) witnesses.push_back(&w);
  for (const auto& w : problem.witnesses) {
    bool seen = false;
    for (const WitnessPoint* have : witnesses) {
      if (have->name == w.name) {
        seen = true;
        break;
      }
    }
    if (!seen) witnesses.push_back(&w);
  }
  for (const WitnessPoint* w : witnesses) {
    out << "witness name=" << w->name << " point=(";
    for (size_t i = 0; i < w->coords.size(); ++i) {
      if (i) out << ",";
      out << w->coords[i].str();
    }
    out << ") stratum=" << w->stratum
        << " closed=" << bool_str(w->orbit_closed) << "\n";
  }

  out << "ideal Y\n";
  for (const Polynomial& g : problem.y_ideal.generators()) {
    out << "  " << g.str() << "\n";
  }
  out << "end\n";

  if (!problem.invariant_relations.empty()) {
    out << "quotient_relations\n";
    for (const auto& r : problem.invariant_relations) out << "  " << r << "\n";
    out << "end\n";
  }
  for (const Ideal& comp : problem.component_ideals) {
    out << "component\n";
    for (const Polynomial& g : comp.generators()) {
      out << "  " << g.str() << "\n";
    }
    out << "end\n";
  }
  if (problem.radical_reference) {
    out << "reference\n";
    for (const Polynomial& g : problem.radical_reference->generators()) {
      out << "  " << g.str() << "\n";
    }
    out << "end\n";
  }
  return out.str();
}

std::pair<Ring, Ideal> parse_ring_ideal(const std::string& text,
                                        const std::string& source_name) {
  auto lines = split_lines(text);
  if (lines.empty()) fail_at(source_name, 1, "empty input");
  RawFile raw = scan(lines, source_name);
  if (raw.ring_vars.empty()) fail_at(source_name, 1, "missing ring section");
  if (!raw.has_ideal) fail_at(source_name, 1, "missing ideal section");
  Ring ring = [&] {
    try {
      return Ring(raw.ring_vars);
    } catch (const std::invalid_argument& e) {
      fail_at(source_name, 1, e.what());
    }
  }();
  return {ring, parse_block_ideal(raw.y_gens, ring, source_name)};
}

std::pair<Ring, Ideal> load_ring_ideal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'", 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ring_ideal(ss.str(), path);
}

}  // namespace gredcheck
