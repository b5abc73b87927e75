#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "bdris/architecture.hpp"
#include "bdris/channel.hpp"
#include "bdris/optimize.hpp"
#include "bdris/serialize.hpp"

namespace bdris {

/// Malformed or inconsistent scenario configuration.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// An architecture as named in a scenario, resolved per N at run time.
///
/// Accepted forms: "single", "tridiagonal", "arrowhead", "tree", "fully",
/// "forest:<N_G>", "forest:<N_G>:arrowhead", "group:<N_G>", or an object
/// {"kind": ..., "group_size": ..., "inner": ...}. "tree" draws a uniform
/// random labeled tree per trial.
struct ArchitectureSpec {
  ArchKind kind = ArchKind::Single;
  int group_size = 0;
  GroupTopology inner = GroupTopology::Tridiagonal;

  std::string label() const;
  /// Group size reported in CSV output: 1 for single, N for connected kinds.
  int reported_group_size(int n) const;
  Architecture build(int n, RandomStream& topology) const;
};

ArchitectureSpec parse_architecture_spec(const Json& j);

struct ScenarioConfig {
  Geometry geometry;
  PathLossParams path_loss;
  std::vector<double> rician_k_db{0.0};
  double p_t_mw = 10.0;
  std::vector<int> n_list;
  std::vector<int> m_list;
  int trials = 1000;
  std::uint64_t seed = 1;
  std::vector<ArchitectureSpec> architectures;
  double z0 = kDefaultZ0;
  double tol = 1e-8;
  int max_iter = 100;
  /// The document the config was parsed from.
  Json source;

  OptimizerSettings optimizer_settings() const;
};

/// Validates and parses a scenario document:
/// {geometry: {tx: [x, y], rx: [x, y], ris: [x, y]},
///  path_loss: {l0_db, d0, alpha_ri, alpha_it}, rician_k_db: number | [numbers],
///  p_t_mw, n_list, m_list, trials, seed, architectures,
///  z0?, tol?, max_iter?}
/// geometry, path_loss, rician_k_db and p_t_mw default to the reference
/// scenario. Throws ConfigError with a field-specific message.
ScenarioConfig parse_config(const Json& j);
ScenarioConfig load_config(const std::filesystem::path& path);

struct SweepRow {
  std::string architecture;
  int n = 0;
  int m = 0;
  int group_size = 0;
  double rician_k_db = 0.0;
  int trials = 0;
  double mean_power_w = 0.0;
  double std_error_w = 0.0;
  double mean_iterations = 0.0;
  /// Per-trial values in trial order; not written to CSV.
  std::vector<double> trial_power;
  std::vector<double> trial_bound;
};

struct SweepMetadata {
  std::uint64_t seed = 0;
  std::string config_hash;
  std::string code_version;
  std::string los_model;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  SweepMetadata metadata;
};

/// Thread cap from BDRIS_THREADS, else hardware concurrency (at least 1).
int default_thread_count();

/// Runs every (n, m, K, architecture) grid point. Trial t of every grid point
/// draws from substreams of (seed, t), so all architectures see the same
/// channels; results are reduced in trial order and do not depend on
/// `threads` (0 selects default_thread_count()).
SweepResult run_sweep(const ScenarioConfig& config, int threads = 0);

/// Columns: arch,n,m,group_size,k_db,trials,mean_power_w,stderr_w,mean_iters
void write_sweep_csv(const SweepResult& result, std::ostream& out);
Json sweep_metadata_json(const SweepResult& result, const ScenarioConfig& config);

/// One realization of the first grid point (or the given n, m, K) for a
/// single architecture, using the trial-0 substreams of `seed`.
OptimizationResult optimize_realization(const ScenarioConfig& config, const ArchitectureSpec& spec,
                                        std::uint64_t seed, int n, int m, double k_db);

struct ComplexityRow {
  int n = 0;
  std::int64_t single = 0;
  std::int64_t tree = 0;
  std::vector<std::int64_t> forest;  // per group size
  std::vector<std::int64_t> group;   // per group size
  std::int64_t fully = 0;
};

struct ComplexityTable {
  std::vector<int> group_sizes;
  std::vector<ComplexityRow> rows;
};

/// Admittance counts for every architecture, counted from the built graphs.
/// Throws InvalidArgument if a group size does not divide some n.
ComplexityTable complexity_table(const std::vector<int>& n_values, const std::vector<int>& group_sizes);

/// Columns: n,single,tree,forest_<g>...,group_<g>...,fully
void write_complexity_csv(const ComplexityTable& table, std::ostream& out);

}  // namespace bdris
