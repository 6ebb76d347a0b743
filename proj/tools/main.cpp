#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "groupkit/checks.hpp"
#include "groupkit/corpus.hpp"
#include "groupkit/errors.hpp"
#include "groupkit/survey.hpp"

namespace {

using namespace groupkit;

const char* yn(bool b) { return b ? "true" : "false"; }

std::string join_orders(const std::vector<int>& orders) {
  std::string out;
  for (size_t i = 0; i < orders.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(orders[i]);
  }
  return out;
}

std::vector<std::string> split_checks(const std::string& list) {
  std::vector<std::string> checks;
  std::string current;
  for (char c : list) {
    if (c == ',') {
      if (!current.empty()) checks.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current.push_back(c);
    }
  }
  if (!current.empty()) checks.push_back(current);
  return checks;
}

int run_info(const std::string& spec_text, const RealizeOptions& realize_options) {
  GroupSpec spec = parse_spec(spec_text);
  GroupPtr g = realize(spec, realize_options);
  Subgroup residual = nilpotent_residual(g);
  Subgroup fitting = fitting_subgroup(g);
  std::optional<int> height = fitting_height(g);
  std::cout << "spec: " << spec.to_string() << '\n'
            << "order: " << g->order() << '\n'
            << "abelian: " << yn(g->is_abelian()) << '\n'
            << "soluble: " << yn(is_soluble(g)) << '\n'
            << "nilpotent: " << yn(residual.is_trivial()) << '\n'
            << "gamma_inf_order: " << residual.size() << '\n'
            << "fitting_order: " << fitting.size() << '\n'
            << "fitting_height: ";
  if (height) {
    std::cout << *height << '\n';
  } else {
    std::cout << "insoluble" << '\n';
  }
  return 0;
}

int run_series(const std::string& spec_text, int max_k,
               const RealizeOptions& realize_options) {
  GroupPtr g = realize(parse_spec(spec_text), realize_options);
  std::cout << "lower_central: " << join_orders(lower_central_series(g).term_orders())
            << '\n'
            << "derived: " << join_orders(derived_series(g).term_orders()) << '\n'
            << "lower_fitting: "
            << join_orders(lower_fitting_series(g, max_k).term_orders()) << '\n';
  return 0;
}

int run_check(const std::string& spec_text, const std::string& theorem,
              const RealizeOptions& realize_options) {
  TheoremSelector selector = TheoremSelector::parse(theorem);
  GroupPtr g = realize(parse_spec(spec_text), realize_options);
  CheckVerdict v = theorem_check(g, selector);
  std::cout << "check: " << v.check_name << '\n'
            << "hypothesis: " << yn(v.hypothesis) << '\n'
            << "conclusion: " << yn(v.conclusion) << '\n'
            << "sound: " << yn(v.sound) << '\n'
            << "open_conjecture: " << yn(v.open_conjecture) << '\n';
  if (v.witness) {
    std::cout << "witness: x=" << v.witness->x << " y=" << v.witness->y
              << " |x|=" << v.witness->order_x << " |y|=" << v.witness->order_y
              << " |xy|=" << v.witness->order_product << '\n';
  }
  if (!v.note.empty()) std::cout << "note: " << v.note << '\n';
  if (v.sound) return 0;
  return v.open_conjecture ? 3 : 2;
}

int run_survey(const std::string& corpus_name, const std::string& checks,
               int jobs, const std::string& out,
               const RealizeOptions& realize_options) {
  SurveyOptions options;
  options.checks = split_checks(checks);
  options.jobs = jobs;
  options.out_path = out;
  options.realize = realize_options;
  SurveySummary summary = survey(resolve_corpus(corpus_name), options);
  std::cout << "groups: " << summary.groups << '\n'
            << "verdicts: " << summary.verdicts << '\n'
            << "sound: " << summary.sound << '\n'
            << "unsound: " << summary.unsound_proved << '\n'
            << "candidates: " << summary.candidates << '\n';
  if (!out.empty()) std::cout << "wrote: " << out << '\n';
  return summary.exit_code();
}

int run_hunt(int level, const std::string& corpus_name, const std::string& out,
             const RealizeOptions& realize_options) {
  HuntOptions options;
  options.level = level;
  options.out_path = out;
  options.realize = realize_options;
  HuntSummary summary = hunt(resolve_corpus(corpus_name), options);
  std::cout << "level: " << level << '\n'
            << "examined: " << summary.examined << '\n'
            << "hypothesis_holds: " << summary.hypothesis_holds << '\n'
            << "candidates: " << summary.candidates << '\n';
  if (!out.empty()) std::cout << "wrote: " << out << '\n';
  return summary.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite group computations over multiplication tables"};
  app.require_subcommand(1);

  int max_order = kDefaultMaxOrder;
  bool strict_assoc = false;
  app.add_option("--max-order", max_order, "largest allowed group order")
      ->capture_default_str();
  app.add_flag("--strict-assoc", strict_assoc,
               "exhaustive associativity check for table files at any order");

  std::string spec_text;
  std::string theorem = "main";
  std::string corpus_name = "builtin";
  std::string checks = "bw,bs,main,bw-equiv";
  std::string out_path;
  int max_k = 8;
  int jobs = 1;
  int level = 2;

  CLI::App* info = app.add_subcommand("info", "order, solubility, nilpotency and Fitting data");
  info->add_option("spec", spec_text, "group description")->required();

  CLI::App* series = app.add_subcommand("series", "lower central, derived and lower Fitting term orders");
  series->add_option("spec", spec_text, "group description")->required();
  series->add_option("--max-k", max_k, "cap on lower Fitting terms")->capture_default_str();

  CLI::App* check = app.add_subcommand("check", "evaluate one theorem check on a group");
  check->add_option("spec", spec_text, "group description")->required();
  check->add_option("--theorem", theorem, "bw, bs, main, or level:K")->required();

  CLI::App* survey_cmd = app.add_subcommand("survey", "run checks across a corpus, write JSON lines");
  survey_cmd->add_option("--corpus", corpus_name, "'builtin' or a corpus file")
      ->capture_default_str();
  survey_cmd->add_option("--checks", checks, "comma-separated check names")
      ->capture_default_str();
  survey_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  survey_cmd->add_option("--out", out_path, "output path (JSON lines)");

  CLI::App* hunt_cmd = app.add_subcommand("hunt", "search a corpus for open-question counterexamples");
  hunt_cmd->add_option("--level", level, "commutator level, 2..4")->required();
  hunt_cmd->add_option("--corpus", corpus_name, "'builtin' or a corpus file")
      ->capture_default_str();
  hunt_cmd->add_option("--out", out_path, "output path (JSON lines)");

  CLI11_PARSE(app, argc, argv);

  RealizeOptions realize_options;
  realize_options.max_order = max_order;
  realize_options.strict_assoc = strict_assoc;

  try {
    if (info->parsed()) return run_info(spec_text, realize_options);
    if (series->parsed()) return run_series(spec_text, max_k, realize_options);
    if (check->parsed()) return run_check(spec_text, theorem, realize_options);
    if (survey_cmd->parsed()) {
      return run_survey(corpus_name, checks, jobs, out_path, realize_options);
    }
    if (hunt_cmd->parsed()) {
      return run_hunt(level, corpus_name, out_path, realize_options);
    }
  } catch (const GroupError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
