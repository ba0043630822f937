// gred-check: exact-arithmetic checker for saturation and reducedness
// of group-stable algebraic subsets, with direct access to the
// underlying polynomial-ideal engine.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "gredcheck/catalog.hpp"
#include "gredcheck/checker.hpp"
#include "gredcheck/errors.hpp"
#include "gredcheck/problem_io.hpp"
#include "gredcheck/report.hpp"

namespace {

using namespace gredcheck;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

struct GlobalOpts {
  std::string order = "grevlex";
  long long budget = StepBudget::kDefaultLimit;
  std::string json_path;
  bool all_rules = false;
};

MonomialOrder order_of(const std::string& name) {
  return name == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
}

void write_json(const GlobalOpts& opts, const std::string& payload) {
  if (opts.json_path.empty()) return;
  std::ofstream out(opts.json_path);
  if (!out) {
    throw std::runtime_error("cannot write JSON to '" + opts.json_path + "'");
  }
  out << payload;
}

int run_report(const Problem& problem, const GlobalOpts& opts,
               const std::string& check) {
  CheckOptions options{StepBudget(opts.budget), opts.all_rules};
  options.want_saturated = check != "density";
  options.want_reduced = check == "all" || check == "reduced";
  CheckReport report = run_checks(problem, options);
  print_report(std::cout, report);
  write_json(opts, report_to_json(report));
  return report.budget_exhausted ? kExitBudget : kExitOk;
}

int cmd_run(const std::string& path, const GlobalOpts& opts,
            const std::string& check) {
  return run_report(load_problem_file(path), opts, check);
}

int cmd_catalog_list(const GlobalOpts& opts) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& name : catalog_names()) {
    const RepresentationSpec& spec = catalog_get(name);
    std::cout << name << "  (" << spec.group << ", "
              << spec.ring.arity() << " variables)\n    " << spec.summary
              << "\n";
    auto problems = bundled_problem_names(name);
    if (!problems.empty()) {
      std::cout << "    problems:";
      for (const auto& p : problems) std::cout << " " << p;
      std::cout << "\n";
    }
    nlohmann::json e;
    e["name"] = name;
    e["group"] = spec.group;
    e["summary"] = spec.summary;
    e["problems"] = problems;
    entries.push_back(e);
  }
  write_json(opts, entries.dump(2) + "\n");
  return kExitOk;
}

int cmd_catalog_run(const std::string& name, const std::string& problem_name,
                    const GlobalOpts& opts, const std::string& check) {
  return run_report(bundled_problem(name, problem_name), opts, check);
}

int cmd_catalog_export(const std::string& name, const std::string& out_path) {
  Problem problem = bundled_problem(name, "");
  std::string text = serialize_problem(problem);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
  }
  return kExitOk;
}

int cmd_gb(const std::string& path, const GlobalOpts& opts) {
  auto [ring, ideal] = load_ring_ideal(path);
  const GroebnerBasis& basis =
      ideal.groebner(order_of(opts.order), StepBudget(opts.budget));
  std::cout << "reduced groebner basis (" << order_of(opts.order).str()
            << "), " << basis.elements().size() << " elements:\n";
  nlohmann::json elems = nlohmann::json::array();
  for (const Polynomial& g : basis.elements()) {
    std::cout << "  " << g.str() << "\n";
    elems.push_back(g.str());
  }
  nlohmann::json j;
  j["order"] = order_of(opts.order).str();
  j["basis"] = elems;
  write_json(opts, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_dim(const std::string& path, const GlobalOpts& opts) {
  auto [ring, ideal] = load_ring_ideal(path);
  int d = dim_variety(ideal, StepBudget(opts.budget));
  std::cout << "dim = " << d << "\n";
  nlohmann::json j;
  j["dim"] = d;
  write_json(opts, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_member(const std::string& path, const std::string& poly_text,
               const GlobalOpts& opts, bool radical) {
  auto [ring, ideal] = load_ring_ideal(path);
  Polynomial f = parse_polynomial(poly_text, ring);
  StepBudget budget(opts.budget);
  bool result =
      radical ? rad_member(f, ideal, budget) : member(f, ideal, budget);
  std::cout << (result ? "true" : "false") << "\n";
  nlohmann::json j;
  j[radical ? "rad_member" : "member"] = result;
  write_json(opts, j.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gred-check: decides, in exact rational arithmetic, whether a "
      "group-stable algebraic subset is saturated for the invariant-theory "
      "quotient and whether its ideal is generated by invariants, and "
      "transports the verdicts to the compact real form."};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts opts;
  app.add_option("--order", opts.order, "monomial order for gb output")
      ->check(CLI::IsMember({"lex", "grevlex"}));
  app.add_option("--budget", opts.budget,
                 "reduction-step budget before checks report unknown");
  app.add_option("--json", opts.json_path,
                 "write a machine-readable report to this path");
  app.add_flag("--all-rules", opts.all_rules,
               "evaluate every rule for cross-checking, not first-wins");

  std::string run_file, check = "all";
  auto* run = app.add_subcommand("run", "run checks from a problem file");
  run->add_option("file", run_file, "problem file")->required();
  run->add_option("--check", check, "which question to decide")
      ->check(CLI::IsMember({"saturated", "reduced", "density", "all"}));

  auto* cat = app.add_subcommand("catalog", "built-in representations");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list entries");
  std::string cat_name, cat_problem, export_name, export_out;
  auto* cat_run = cat->add_subcommand("run", "run a bundled problem");
  cat_run->add_option("name", cat_name, "catalog entry")->required();
  cat_run->add_option("--problem", cat_problem,
                      "bundled problem name (default: first)");
  cat_run->add_option("--check", check, "which question to decide")
      ->check(CLI::IsMember({"saturated", "reduced", "density", "all"}));
  auto* cat_export =
      cat->add_subcommand("export", "write a bundled problem as a file");
  cat_export->add_option("name", export_name, "catalog entry")->required();
  cat_export->add_option("-o,--out", export_out,
                         "output path (default stdout)");

  std::string engine_file, poly_text;
  auto* gb = app.add_subcommand("gb", "reduced groebner basis of an ideal");
  gb->add_option("file", engine_file, "file with ring and ideal sections")
      ->required();
  auto* dim = app.add_subcommand("dim", "dimension of the zero set");
  dim->add_option("file", engine_file)->required();
  auto* mem = app.add_subcommand("member", "ideal membership");
  mem->add_option("file", engine_file)->required();
  mem->add_option("--poly", poly_text, "polynomial to test")->required();
  auto* rmem = app.add_subcommand("radmember", "radical membership");
  rmem->add_option("file", engine_file)->required();
  rmem->add_option("--poly", poly_text, "polynomial to test")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_file, opts, check);
    if (cat_list->parsed()) return cmd_catalog_list(opts);
    if (cat_run->parsed()) {
      return cmd_catalog_run(cat_name, cat_problem, opts, check);
    }
    if (cat_export->parsed()) return cmd_catalog_export(export_name, export_out);
    if (gb->parsed()) return cmd_gb(engine_file, opts);
    if (dim->parsed()) return cmd_dim(engine_file, opts);
    if (mem->parsed()) return cmd_member(engine_file, poly_text, opts, false);
    if (rmem->parsed()) return cmd_member(engine_file, poly_text, opts, true);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnknownCatalogEntry& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
