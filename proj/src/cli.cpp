#include "bodycad/cli.hpp"

#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bodycad/analyzer.hpp"
#include "bodycad/error.hpp"
#include "bodycad/io.hpp"

namespace bodycad {

namespace {

struct AnalyzeArgs {
  std::string path;
  std::uint64_t seed = 1;
  std::string field = "prime";
  bool json = false;
  bool text = false;
};

struct GraphArgs {
  std::string path;
  int k = 6;
  int g = 3;
};

struct CrossArgs {
  int trials = 200;
  int nmax = 6;
  int k = 6;
  int g = 3;
  std::uint64_t seed = 1;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const auto field = field_choice_from_string(a.field);
  if (!field) throw Error(ErrorCode::InvalidArgument, "unknown field '" + a.field + "'");
  const CadFramework fw = parse_framework(read_file(a.path));
  const AnalysisReport report = analyze(fw, a.seed, *field);
  out << (a.json ? report_to_json(report) : report_to_text(report));
  return exit_code(report);
}

int cmd_check_graph(const GraphArgs& a, std::ostream& out) {
  const SparsityParams params(a.k, a.g);
  const BiColoredMultigraph h = parse_bare_graph(read_file(a.path));
  const CombinatorialVerdict v = decide(h, params);
  out << verdict_to_text(h, params, v);
  return exit_code(v);
}

int cmd_crossvalidate(const CrossArgs& a, std::ostream& out) {
  const SparsityParams params(a.k, a.g);
  if (a.trials < 0) throw Error(ErrorCode::InvalidArgument, "--trials must be non-negative");
  if (a.nmax < 2) throw Error(ErrorCode::InvalidArgument, "--nmax must be at least 2");
  const CrossValidationSummary s = crossvalidate(a.trials, a.nmax, params, a.seed);
  out << "crossvalidate k=" << a.k << " g=" << a.g << " nmax=" << a.nmax << " seed=" << a.seed
      << ": " << s.agreements << "/" << s.trials << " agree, " << s.rigid
      << " minimally rigid";
  if (!s.disagreeing_trials.empty()) {
    out << ", disagreeing trials:";
    for (int t : s.disagreeing_trials) out << " " << t;
  }
  out << "\n";
  return s.agreements == s.trials ? 0 : kExitDisagree;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"bodycad: generic rigidity analysis of body-and-cad frameworks"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze a framework document");
  analyze_cmd->add_option("path", analyze_args.path, "framework JSON file")->required();
  analyze_cmd->add_option("--seed", analyze_args.seed, "seed for generic labelings");
  analyze_cmd->add_option("--field", analyze_args.field, "rational or prime")
      ->check(CLI::IsMember({"rational", "prime"}));
  auto* json_flag = analyze_cmd->add_flag("--json", analyze_args.json, "JSON report");
  auto* text_flag = analyze_cmd->add_flag("--text", analyze_args.text, "text report (default)");
  json_flag->excludes(text_flag);

  GraphArgs graph_args;
  auto* graph_cmd = app.add_subcommand("check-graph", "decide a bare bi-colored graph");
  graph_cmd->add_option("path", graph_args.path, "edge-list file")->required();
  graph_cmd->add_option("--k", graph_args.k, "vector length per body");
  graph_cmd->add_option("--g", graph_args.g, "angular sub-length");

  CrossArgs cross_args;
  auto* cross_cmd =
      app.add_subcommand("crossvalidate", "compare the tree test with determinants");
  cross_cmd->add_option("--trials", cross_args.trials, "number of random graphs");
  cross_cmd->add_option("--nmax", cross_args.nmax, "largest vertex count");
  cross_cmd->add_option("--k", cross_args.k, "vector length per body");
  cross_cmd->add_option("--g", cross_args.g, "angular sub-length");
  cross_cmd->add_option("--seed", cross_args.seed, "base seed");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_args, out);
    if (*graph_cmd) return cmd_check_graph(graph_args, out);
    return cmd_crossvalidate(cross_args, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace bodycad
