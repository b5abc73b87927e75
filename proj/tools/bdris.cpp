#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bdris/harness.hpp"
#include "bdris/validate.hpp"

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kConfig = 3, kArgument = 4, kDegenerate = 5, kIo = 6 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OptimizeArgs {
  std::string config;
  std::string arch;
  std::optional<std::uint64_t> seed;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<double> k_db;
};

struct SweepArgs {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  int threads = 0;
};

struct ComplexityArgs {
  int n_max = 64;
  int n_step = 0;
  std::vector<int> group_sizes{2, 4, 8};
  std::string out;
};

struct ValidateArgs {
  std::string suite = "props";
  std::uint64_t seed = 1;
};

int run_optimize(const OptimizeArgs& a) {
  using namespace bdris;
  const ScenarioConfig config = load_config(a.config);
  const ArchitectureSpec spec = parse_architecture_spec(Json(a.arch));
  const int n = a.n.value_or(config.n_list.front());
  const int m = a.m.value_or(config.m_list.front());
  const double k = a.k_db.value_or(config.rician_k_db.front());
  const OptimizationResult r = optimize_realization(config, spec, a.seed.value_or(config.seed), n, m, k);
  Json j = to_json(r);
  j["n"] = n;
  j["m"] = m;
  j["k_db"] = k;
  j["seed"] = a.seed.value_or(config.seed);
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int run_sweep_cmd(const SweepArgs& a) {
  using namespace bdris;
  ScenarioConfig config = load_config(a.config);
  if (a.seed) config.seed = *a.seed;
  const SweepResult result = run_sweep(config, a.threads);

  std::ofstream csv(a.out);
  if (!csv) throw IoError("cannot write '" + a.out + "'");
  write_sweep_csv(result, csv);
  const std::string meta_path = a.out + ".meta.json";
  std::ofstream meta(meta_path);
  if (!meta) throw IoError("cannot write '" + meta_path + "'");
  meta << sweep_metadata_json(result, config).dump(2) << '\n';
  if (!csv || !meta) throw IoError("write to '" + a.out + "' failed");
  return kOk;
}

int run_complexity(const ComplexityArgs& a) {
  using namespace bdris;
  if (a.n_max < 1) throw InvalidArgument("--n-max must be positive");
  int step = a.n_step;
  if (step == 0) {
    step = 1;
    for (int g : a.group_sizes) {
      if (g < 1) throw InvalidArgument("group sizes must be positive");
      step = std::lcm(step, g);
    }
  }
  if (step < 1) throw InvalidArgument("--n-step must be positive");
  std::vector<int> ns;
  for (int n = step; n <= a.n_max; n += step) ns.push_back(n);
  if (ns.empty()) throw InvalidArgument("no N in [1, " + std::to_string(a.n_max) + "] is a multiple of " + std::to_string(step));
  const ComplexityTable table = complexity_table(ns, a.group_sizes);
  if (a.out.empty()) {
    write_complexity_csv(table, std::cout);
  } else {
    std::ofstream out(a.out);
    if (!out) throw IoError("cannot write '" + a.out + "'");
    write_complexity_csv(table, out);
  }
  return kOk;
}

int run_validate(const ValidateArgs& a) {
  const auto checks = bdris::run_property_suite(a.suite, a.seed);
  int failed = 0;
  for (const auto& c : checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ')';
    std::cout << '\n';
    failed += c.passed ? 0 : 1;
  }
  std::cout << checks.size() - failed << '/' << checks.size() << " properties hold\n";
  return failed == 0 ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BD-RIS architecture modeling and optimization"};
  app.set_version_flag("--version", BDRIS_VERSION);
  app.require_subcommand(1);

  OptimizeArgs opt;
  auto* optimize = app.add_subcommand("optimize", "Optimize one channel realization and print the result as JSON");
  optimize->add_option("--config", opt.config, "Scenario JSON file")->required();
  optimize->add_option("--arch", opt.arch, "Architecture, e.g. tree, forest:8, group:4, single")->required();
  optimize->add_option("--seed", opt.seed, "Overrides the config seed");
  optimize->add_option("--n", opt.n, "Ports (default: first of n_list)");
  optimize->add_option("--m", opt.m, "Transmit antennas (default: first of m_list)");
  optimize->add_option("--k-db", opt.k_db, "Rician factor in dB (default: first of rician_k_db)");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Run a Monte Carlo sweep; writes CSV plus <out>.meta.json");
  sweep->add_option("--config", sw.config, "Scenario JSON file")->required();
  sweep->add_option("--out", sw.out, "Output CSV path")->required();
  sweep->add_option("--seed", sw.seed, "Overrides the config seed");
  sweep->add_option("--threads", sw.threads, "Worker threads (default: BDRIS_THREADS or all cores)");

  ComplexityArgs cx;
  auto* complexity = app.add_subcommand("complexity", "Print tunable admittance counts as CSV");
  complexity->add_option("--n-max", cx.n_max, "Largest N")->required();
  complexity->add_option("--n-step", cx.n_step, "Spacing of N (default: lcm of the group sizes)");
  complexity->add_option("--group-sizes", cx.group_sizes, "Comma-separated group sizes")->delimiter(',');
  complexity->add_option("--out", cx.out, "Output CSV path (default: stdout)");

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Run randomized property checks");
  validate->add_option("--suite", va.suite, "props, graph, architecture, network, optimize or channel");
  validate->add_option("--seed", va.seed, "Seed for the random instances");

  if (argc > 1 && argv[1][0] != '-') {
    const std::string name = argv[1];
    const auto subs = app.get_subcommands([&](CLI::App* sub) { return sub->get_name() == name; });
    if (subs.empty()) {
      std::cerr << "unknown subcommand '" << name << "'; expected optimize, sweep, complexity or validate\n";
      return kUsage;
    }
  }
  CLI11_PARSE(app, argc, argv);

  try {
    if (*optimize) return run_optimize(opt);
    if (*sweep) return run_sweep_cmd(sw);
    if (*complexity) return run_complexity(cx);
    if (*validate) return run_validate(va);
  } catch (const bdris::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const bdris::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kArgument;
  } catch (const bdris::DegenerateChannel& e) {
    std::cerr << "degenerate channel: " << e.what() << '\n';
    return kDegenerate;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
