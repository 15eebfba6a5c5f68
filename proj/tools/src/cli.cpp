#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "abcopt/benchmarks.hpp"
#include "abcopt/colony.hpp"
#include "abcopt/experiment.hpp"
#include "abcopt/results_io.hpp"
#include "abcopt/spring.hpp"
#include "abcopt/variant.hpp"
#include "config_file.hpp"
#include "plot.hpp"

namespace abcopt::cli {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1E", v);
  return buf;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void print_elapsed(std::ostream& out, const Stopwatch& watch) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "# elapsed %.3f s", watch.seconds());
  out << buf << '\n';
}

std::string range_text(const Bounds& b) {
  bool uniform = true;
  for (std::size_t j = 1; j < b.dimension(); ++j) {
    uniform = uniform && b.lower[j] == b.lower[0] && b.upper[j] == b.upper[0];
  }
  if (uniform) return "[" + num(b.lower[0]) + ", " + num(b.upper[0]) + "]";
  std::string s;
  for (std::size_t j = 0; j < b.dimension(); ++j) {
    if (j) s += " x ";
    s += "[" + num(b.lower[j]) + ", " + num(b.upper[j]) + "]";
  }
  return s;
}

struct RunFlags {
  std::string algo;
  std::string function;
  std::uint64_t seed = 1;
  std::uint64_t budget = 200000;
  int np = 50;
  int limit = 1500;
  double q = 0.01;
};

void add_run_flags(CLI::App& cmd, RunFlags& f, bool need_function) {
  cmd.add_option("--seed", f.seed, "Random seed")->capture_default_str();
  cmd.add_option("--budget", f.budget, "Maximum function evaluations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--np", f.np, "Colony size (food sources = np / 2)")
      ->check(CLI::Range(4, 1 << 20))
      ->capture_default_str();
  cmd.add_option("--limit", f.limit, "Abandonment limit")->check(CLI::PositiveNumber)->capture_default_str();
  cmd.add_option("--q", f.q, "Memetic search stopping width")->check(CLI::PositiveNumber)->capture_default_str();
  if (need_function) cmd.add_option("--function", f.function, "Problem id or alias")->required();
}

VariantConfig variant_from(const RunFlags& f) {
  VariantConfig v = VariantConfig::preset(f.algo);
  v.colony_size = f.np;
  v.limit = f.limit;
  v.memetic.epsilon = f.q;
  v.validate();
  return v;
}

int cmd_list(std::ostream& out) {
  out << "problems:\n";
  for (const auto& id : problem_names()) {
    const Problem p = problem_by_name(id);
    out << "  " << id << "  " << p.title << "  D=" << p.dimension << "  range=" << range_text(p.bounds)
        << "  optimum=" << num(p.optimum_value) << "  AE=" << sci(p.acceptable_error) << "  alias="
        << problem_alias(id) << '\n';
  }
  out << "algorithms:\n";
  for (const auto& name : VariantConfig::preset_names()) {
    const VariantConfig v = VariantConfig::preset(name);
    out << "  " << name << "  employed=" << to_string(v.employed_rule)
        << "  onlooker=" << to_string(v.onlooker_rule) << "  fitness=" << to_string(v.fitness_rule)
        << "  memetic=" << to_string(v.memetic_phase) << '\n';
  }
  return kExitSuccess;
}

int cmd_run(const RunFlags& f, std::ostream& out) {
  const VariantConfig variant = variant_from(f);
  const Problem problem = problem_by_name(f.function);
  Stopwatch watch;
  const RunResult result = run(problem, variant, f.budget, f.seed);
  const RunRecord& r = result.record;
  out << "algorithm " << r.algorithm << '\n'
      << "problem " << r.problem << " (" << problem.title << ")\n"
      << "seed " << r.seed << '\n'
      << "evaluations " << r.evaluations << '\n'
      << "cycles " << result.cycles << '\n'
      << "best_objective " << format_number(r.best_objective) << '\n'
      << "error " << format_number(r.error) << '\n'
      << "success " << (r.success ? "true" : "false") << '\n';
  print_elapsed(out, watch);
  return r.success ? kExitSuccess : kExitNotSolved;
}

int cmd_spring(const RunFlags& f, int runs, double penalty, std::ostream& out) {
  const VariantConfig variant = variant_from(f);
  ProblemOptions options;
  options.spring_penalty_weight = penalty;
  const Problem problem = problem_by_name("f10", options);
  Stopwatch watch;
  int successes = 0;
  int within_1e3 = 0;
  bool last_success = false;
  for (int r = 0; r < runs; ++r) {
    const std::uint64_t seed = f.seed + static_cast<std::uint64_t>(r);
    const RunResult result = run(problem, variant, f.budget, seed);
    const SpringDesign d = snap_spring(result.best_position);
    const ConstraintReport report = spring_constraints(d);
    out << "seed " << seed << "  x1=" << d.active_coils << "  x2=" << num(d.mean_coil_diameter)
        << "  x3=" << num(d.wire_diameter) << "  f=" << num(spring_objective(d))
        << "  feasible=" << (report.feasible ? "yes" : "no") << "  g=(";
    for (std::size_t i = 0; i < report.g.size(); ++i) out << (i ? ", " : "") << num(report.g[i]);
    out << ")  evaluations=" << result.record.evaluations
        << "  error=" << num(result.record.error) << '\n';
    last_success = result.record.success;
    successes += last_success ? 1 : 0;
    within_1e3 += result.record.error <= 1e-3 ? 1 : 0;
  }
  out << "best known " << num(kSpringBestKnown) << '\n'
      << "reached AE " << sci(problem.acceptable_error) << ": " << successes << "/" << runs << '\n'
      << "within 1.0E-03: " << within_1e3 << "/" << runs << '\n';
  print_elapsed(out, watch);
  if (runs == 1) return last_success ? kExitSuccess : kExitNotSolved;
  return kExitSuccess;
}

struct ExperimentFlags {
  std::string config_path;
  std::vector<std::string> algos;
  std::vector<std::string> functions;
  int runs = 100;
  std::uint64_t base_seed = 0;
  std::uint64_t budget = 200000;
  int np = 50;
  int limit = 1500;
  double q = 0.01;
  unsigned jobs = 1;
  std::string output = "results.csv";
  std::string format;
};

int cmd_experiment(const ExperimentFlags& f, const CLI::App& cmd, std::ostream& out) {
  ExperimentConfig config;
  std::string output;
  std::string format;
  if (!f.config_path.empty()) {
    ExperimentFile file = load_experiment_file(f.config_path);
    config = std::move(file.config);
    output = file.output;
    format = file.format;
  }
  auto given = [&](const char* name) { return cmd.count(name) > 0; };
  if (given("--algos")) config.algorithms = f.algos;
  if (given("--functions")) config.problems = f.functions;
  if (given("--runs") || f.config_path.empty()) config.runs = f.runs;
  if (given("--seed") || f.config_path.empty()) config.base_seed = f.base_seed;
  if (given("--budget") || f.config_path.empty()) config.budget = f.budget;
  if (given("--np") || f.config_path.empty()) config.colony_size = f.np;
  if (given("--limit") || f.config_path.empty()) config.limit = f.limit;
  if (given("--q") || f.config_path.empty()) config.memetic_epsilon = f.q;
  if (given("--jobs") || f.config_path.empty()) config.jobs = f.jobs;
  if (given("--out") || output.empty()) output = f.output;
  if (given("--format")) format = f.format;
  if (config.algorithms.empty()) throw ConfigError("missing required key algorithms (or --algos)");
  if (config.problems.empty()) throw ConfigError("missing required key problems (or --functions)");
  if (format.empty()) format = std::filesystem::path(output).extension() == ".json" ? "json" : "csv";

  Stopwatch watch;
  const std::vector<RunRecord> records = run_experiment(config);
  const std::vector<Summary> summaries = summarize_all(records);
  out << format_summary_grid(summaries);
  write_results(output, format == "json" ? ResultFormat::json : ResultFormat::csv, records, summaries);
  out << "# wrote " << output << '\n';
  print_elapsed(out, watch);
  return kExitSuccess;
}

int cmd_plot(const std::string& input, const std::string& measure_name, const std::string& output,
             std::ostream& out) {
  const Measure measure = parse_measure(measure_name);
  std::vector<RunRecord> records;
  std::vector<Summary> summaries;
  read_results(input, records, summaries);
  const std::string svg = render_bar_chart(summaries, measure);
  std::ofstream file(output, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot open '" + output + "' for writing");
  file << svg;
  file.flush();
  if (!file) throw ConfigError("failed writing '" + output + "'");
  out << "# wrote " << output << '\n';
  return kExitSuccess;
}

int cmd_describe(std::uint64_t shift_seed, std::ostream& out) {
  const KowalikData& k = KowalikData::standard();
  out << "kowalik data (i, a_i, b_i, 1/b_i):\n";
  for (std::size_t i = 0; i < k.a.size(); ++i) {
    out << "  " << i + 1 << "  " << num(k.a[i]) << "  " << num(k.b[i]) << "  " << num(1.0 / k.b[i])
        << '\n';
  }
  const ShiftVector shift = ShiftVector::random_interior(10, shift_seed);
  out << "f9 shift vector (seed " << shift_seed << ", bias " << num(shift.bias) << "):\n";
  for (std::size_t j = 0; j < shift.offsets.size(); ++j) {
    out << "  o" << j + 1 << " = " << format_number(shift.offsets[j]) << '\n';
  }
  return kExitSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artificial bee colony optimizers and benchmark experiments", "abcopt"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  CLI::App* list = app.add_subcommand("list", "List problems and algorithm presets");

  RunFlags run_flags;
  CLI::App* run_cmd = app.add_subcommand("run", "Run one algorithm once on one problem");
  run_cmd->add_option("--algo", run_flags.algo, "Algorithm preset")->required();
  add_run_flags(*run_cmd, run_flags, true);

  RunFlags spring_flags;
  spring_flags.algo = "rmabc";
  int spring_runs = 1;
  double spring_penalty = 1e3;
  CLI::App* spring = app.add_subcommand("spring", "Compression spring design case study");
  spring->add_option("--algo", spring_flags.algo, "Algorithm preset")->capture_default_str();
  add_run_flags(*spring, spring_flags, false);
  spring->add_option("--runs", spring_runs, "Number of runs (seeds seed..seed+runs-1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  spring->add_option("--penalty", spring_penalty, "Penalty weight")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  ExperimentFlags ex;
  CLI::App* experiment = app.add_subcommand("experiment", "Multi-run campaign with summary statistics");
  experiment->add_option("--config", ex.config_path, "key = value experiment file")->check(CLI::ExistingFile);
  experiment->add_option("--algos", ex.algos, "Algorithm presets")->delimiter(',');
  experiment->add_option("--functions", ex.functions, "Problem ids")->delimiter(',');
  experiment->add_option("--runs", ex.runs, "Runs per cell")->check(CLI::PositiveNumber)->capture_default_str();
  experiment->add_option("--seed", ex.base_seed, "Base seed; run r uses seed + r")->capture_default_str();
  experiment->add_option("--budget", ex.budget, "Maximum function evaluations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  experiment->add_option("--np", ex.np, "Colony size")->check(CLI::Range(4, 1 << 20))->capture_default_str();
  experiment->add_option("--limit", ex.limit, "Abandonment limit")->check(CLI::PositiveNumber)->capture_default_str();
  experiment->add_option("--q", ex.q, "Memetic search stopping width")->check(CLI::PositiveNumber)->capture_default_str();
  experiment->add_option("--jobs", ex.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  experiment->add_option("--out", ex.output, "Results file")->capture_default_str();
  experiment->add_option("--format", ex.format, "csv or json (default: from --out extension)")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string plot_input;
  std::string plot_measure = "afe";
  std::string plot_output = "chart.svg";
  CLI::App* plot = app.add_subcommand("plot", "Bar chart (SVG) of one measure per problem");
  plot->add_option("results", plot_input, "CSV or JSON results file")->required()->check(CLI::ExistingFile);
  plot->add_option("--measure", plot_measure, "afe, me, sd or sr")->capture_default_str();
  plot->add_option("--out", plot_output, "SVG output path")->capture_default_str();

  std::uint64_t shift_seed = ProblemOptions{}.shift_seed;
  CLI::App* describe = app.add_subcommand("describe", "Print embedded benchmark data");
  describe->add_option("--shift-seed", shift_seed, "Seed of the f9 shift vector")->capture_default_str();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("abcopt");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    CLI::App* failing = &app;
    for (CLI::App* sub : app.get_subcommands()) failing = sub;
    err << failing->help();
    return kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_list(out);
    if (run_cmd->parsed()) return cmd_run(run_flags, out);
    if (spring->parsed()) return cmd_spring(spring_flags, spring_runs, spring_penalty, out);
    if (experiment->parsed()) return cmd_experiment(ex, *experiment, out);
    if (plot->parsed()) return cmd_plot(plot_input, plot_measure, plot_output, out);
    if (describe->parsed()) return cmd_describe(shift_seed, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownNameError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResultsIoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InitializationBudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace abcopt::cli
