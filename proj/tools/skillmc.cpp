// skillmc: command-line front end for the epistemic-skill model checker.
//
// Exit status: 0 = holds / ok, 1 = does not hold / disagreement,
// 2 = usage, parse or format error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skillmc/skillmc.hpp"

namespace {

using nlohmann::ordered_json;
using namespace skillmc;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct FormulaArgs {
  std::vector<std::string> positional;
  std::string formula_file;
  bool json = false;
};

// Splits positionals into (model, formula text, rest) honoring
// --formula-file, which replaces the inline formula.
Formula take_formula(FormulaArgs& args, std::size_t expected_rest) {
  const std::size_t inline_formula = args.formula_file.empty() ? 1 : 0;
  if (args.positional.size() != 1 + inline_formula + expected_rest) {
    throw CLI::ValidationError("wrong number of arguments");
  }
  std::string text =
      inline_formula ? args.positional[1] : read_file(args.formula_file);
  args.positional.erase(args.positional.begin() + 1,
                        args.positional.begin() + 1 + static_cast<long>(inline_formula));
  return parse_formula(text);
}

int run_check(FormulaArgs args) {
  Formula f = take_formula(args, 1);
  Model m = load_model_file(args.positional[0]);
  const WorldId& w = args.positional[1];
  bool result = holds(m, w, f);
  if (args.json) {
    ordered_json out;
    out["holds"] = result;
    out["world"] = w;
    out["formula"] = render_formula(f);
    out["fragment"] = fragment_name(fragment_of(f));
    out["formula_length"] = formula_length(f);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (result ? "true" : "false") << "\n";
  }
  return result ? kOk : kFalse;
}

int run_truthset(FormulaArgs args) {
  Formula f = take_formula(args, 0);
  Model m = load_model_file(args.positional[0]);
  TruthSet ts = truth_set(m, f);  // std::set: already sorted by name
  if (args.json) {
    ordered_json out;
    out["formula"] = render_formula(f);
    out["worlds"] = ts;
    std::cout << out.dump() << "\n";
  } else {
    std::string line;
    for (const auto& w : ts) line += (line.empty() ? "" : " ") + w;
    std::cout << line << "\n";
  }
  return kOk;
}

int run_validate(const std::string& path, bool json) {
  Model m = load_model_file(path);
  if (json) {
    ordered_json out;
    out["valid"] = true;
    out["worlds"] = m.worlds().size();
    out["edges"] = m.edges().size();
    out["agents"] = m.capabilities().size();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "ok: " << m.worlds().size() << " worlds, " << m.edges().size()
              << " nonempty edges, " << m.capabilities().size() << " agents\n";
  }
  return kOk;
}

int run_ueg(const std::string& path, const std::string& variant, std::size_t max_edges,
            bool json) {
  RootedGraph g = load_graph_file(path);
  ReductionVariant v = parse_variant(variant);
  ReductionResult r = reduction_check(g, v, max_edges);
  if (json) {
    ordered_json out;
    out["game"] = to_string(r.game);
    out["logic"] = r.logic;
    out["agree"] = r.agree;
    out["variant"] = to_string(v);
    out["edges"] = g.edges().size();
    out["players"] = player_count(g);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "game: " << to_string(r.game) << "\n"
              << "logic: " << (r.logic ? "true" : "false") << "\n"
              << "agree: " << (r.agree ? "true" : "false") << "\n";
  }
  return r.agree ? kOk : kFalse;
}

int run_demo(const std::string& out_path) {
  std::string doc = save_model(demo_model());
  if (out_path.empty() || out_path == "-") {
    std::cout << doc;
    return kOk;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << doc;
  return out ? kOk : kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checker for epistemic logics with skill updates"};
  app.require_subcommand(1);

  FormulaArgs check_args;
  auto* check = app.add_subcommand("check", "Decide M, w |= formula");
  check->add_option("args", check_args.positional, "MODEL FORMULA WORLD")->required();
  check->add_option("--formula-file", check_args.formula_file,
                    "Read the formula from a file (omit FORMULA)");
  check->add_flag("--json", check_args.json, "Print a JSON report");

  FormulaArgs truth_args;
  auto* truthset = app.add_subcommand("truthset", "Print the worlds where a formula holds");
  truthset->add_option("args", truth_args.positional, "MODEL FORMULA")->required();
  truthset->add_option("--formula-file", truth_args.formula_file,
                       "Read the formula from a file (omit FORMULA)");
  truthset->add_flag("--json", truth_args.json, "Print a JSON report");

  std::string validate_path;
  bool validate_json = false;
  auto* validate = app.add_subcommand("validate", "Load and validate a model file");
  validate->add_option("model", validate_path, "MODEL")->required();
  validate->add_flag("--json", validate_json, "Print a JSON report");

  std::string graph_path;
  std::string variant = "plus";
  std::size_t max_edges = kDefaultMaxEdges;
  bool ueg_json = false;
  auto* ueg = app.add_subcommand("ueg", "Cross-check edge geography against the induced formula");
  ueg->add_option("graph", graph_path, "GRAPH")->required();
  ueg->add_option("--variant", variant, "Quantifier family: plus, box or minus")
      ->check(CLI::IsMember({"plus", "box", "minus"}));
  ueg->add_option("--max-edges", max_edges, "Refuse graphs with more edges")
      ->capture_default_str();
  ueg->add_flag("--json", ueg_json, "Print a JSON report");

  std::string demo_path;
  auto* demo = app.add_subcommand("demo", "Write the five-world example model");
  demo->add_option("out", demo_path, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (check->parsed()) return run_check(check_args);
    if (truthset->parsed()) return run_truthset(truth_args);
    if (validate->parsed()) return run_validate(validate_path, validate_json);
    if (ueg->parsed()) return run_ueg(graph_path, variant, max_edges, ueg_json);
    if (demo->parsed()) return run_demo(demo_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
