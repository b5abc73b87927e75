#include "bdris/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#ifndef BDRIS_VERSION
#define BDRIS_VERSION "unknown"
#endif

namespace bdris {

namespace {

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

template <typename T>
T field(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ConfigError(std::string("config field '") + key + "' has the wrong type");
  }
}

Point2 point_from(const Json& j, const char* key, Point2 fallback) {
  if (!j.contains(key)) return fallback;
  const Json& p = j.at(key);
  if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
    throw ConfigError(std::string("geometry.") + key + " must be an [x, y] pair");
  }
  return {p[0].get<double>(), p[1].get<double>()};
}

std::vector<int> positive_int_list(const Json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("config is missing '") + key + "'");
  const Json& list = j.at(key);
  if (!list.is_array() || list.empty()) throw ConfigError(std::string("'") + key + "' must be a nonempty array");
  std::vector<int> out;
  for (const auto& v : list) {
    if (!v.is_number_integer() || v.get<int>() < 1) {
      throw ConfigError(std::string("'") + key + "' entries must be positive integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

struct TrialOutcome {
  std::vector<double> power;
  std::vector<int> iterations;
  double bound = 0.0;
};

template <typename Fn>
void parallel_for(int count, int threads, Fn&& body) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::string ArchitectureSpec::label() const { return std::string(to_string(kind)); }

int ArchitectureSpec::reported_group_size(int n) const {
  switch (kind) {
    case ArchKind::Single:
      return 1;
    case ArchKind::Forest:
    case ArchKind::Group:
      return group_size;
    default:
      return n;
  }
}

Architecture ArchitectureSpec::build(int n, RandomStream& topology) const {
  switch (kind) {
    case ArchKind::Tree:
      return tree_architecture(random_spanning_tree(n, topology));
    case ArchKind::Forest:
      return build_architecture(kind, n, group_size, inner);
    case ArchKind::Group:
      return build_architecture(kind, n, group_size);
    default:
      return build_architecture(kind, n);
  }
}

ArchitectureSpec parse_architecture_spec(const Json& j) {
  ArchitectureSpec spec;
  std::string inner;
  try {
    if (j.is_string()) {
      const std::string text = j.get<std::string>();
      const auto first = text.find(':');
      spec.kind = parse_arch_kind(text.substr(0, first));
      if (first != std::string::npos) {
        const auto second = text.find(':', first + 1);
        spec.group_size = std::stoi(text.substr(first + 1, second - first - 1));
        if (second != std::string::npos) inner = text.substr(second + 1);
      }
    } else if (j.is_object() && j.contains("kind")) {
      spec.kind = parse_arch_kind(j.at("kind").get<std::string>());
      if (j.contains("group_size") && !j.at("group_size").is_null()) spec.group_size = j.at("group_size").get<int>();
      if (j.contains("inner") && !j.at("inner").is_null()) inner = j.at("inner").get<std::string>();
    } else {
      throw ConfigError("architecture entries must be strings or {\"kind\": ...} objects");
    }
    if (!inner.empty()) spec.inner = parse_group_topology(inner);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("invalid architecture entry " + j.dump() + ": " + e.what());
  }
  const bool grouped = spec.kind == ArchKind::Forest || spec.kind == ArchKind::Group;
  if (grouped && spec.group_size < 1) throw ConfigError("architecture " + j.dump() + " needs a positive group size");
  if (!grouped && spec.group_size != 0) throw ConfigError("architecture " + j.dump() + " takes no group size");
  if (!inner.empty() && spec.kind != ArchKind::Forest) {
    throw ConfigError("only forest architectures take an inner topology");
  }
  return spec;
}

OptimizerSettings ScenarioConfig::optimizer_settings() const {
  OptimizerSettings s;
  s.z0 = z0;
  s.p_t = p_t_mw * 1e-3;
  s.tol = tol;
  s.max_iter = max_iter;
  return s;
}

ScenarioConfig parse_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ScenarioConfig c;
  c.source = j;

  if (j.contains("geometry")) {
    const Json& g = j.at("geometry");
    if (!g.is_object()) throw ConfigError("'geometry' must be an object");
    c.geometry.tx = point_from(g, "tx", c.geometry.tx);
    c.geometry.rx = point_from(g, "rx", c.geometry.rx);
    c.geometry.ris = point_from(g, "ris", c.geometry.ris);
  }
  if (j.contains("path_loss")) {
    const Json& p = j.at("path_loss");
    if (!p.is_object()) throw ConfigError("'path_loss' must be an object");
    c.path_loss.l0_db = field(p, "l0_db", c.path_loss.l0_db);
    c.path_loss.d0 = field(p, "d0", c.path_loss.d0);
    c.path_loss.alpha_ri = field(p, "alpha_ri", c.path_loss.alpha_ri);
    c.path_loss.alpha_it = field(p, "alpha_it", c.path_loss.alpha_it);
  }
  if (j.contains("rician_k_db")) {
    const Json& k = j.at("rician_k_db");
    if (k.is_number()) {
      c.rician_k_db = {k.get<double>()};
    } else if (k.is_array() && !k.empty() && std::all_of(k.begin(), k.end(), [](const Json& v) { return v.is_number(); })) {
      c.rician_k_db = k.get<std::vector<double>>();
    } else {
      throw ConfigError("'rician_k_db' must be a number or a nonempty array of numbers");
    }
  }
  c.p_t_mw = field(j, "p_t_mw", c.p_t_mw);
  c.n_list = positive_int_list(j, "n_list");
  c.m_list = positive_int_list(j, "m_list");
  c.trials = field(j, "trials", c.trials);
  c.seed = field<std::uint64_t>(j, "seed", c.seed);
  c.z0 = field(j, "z0", c.z0);
  c.tol = field(j, "tol", c.tol);
  c.max_iter = field(j, "max_iter", c.max_iter);

  if (!j.contains("architectures") || !j.at("architectures").is_array() || j.at("architectures").empty()) {
    throw ConfigError("'architectures' must be a nonempty array");
  }
  for (const auto& a : j.at("architectures")) c.architectures.push_back(parse_architecture_spec(a));

  if (c.trials < 1) throw ConfigError("'trials' must be positive");
  if (!(c.p_t_mw > 0.0)) throw ConfigError("'p_t_mw' must be positive");
  if (!(c.z0 > 0.0)) throw ConfigError("'z0' must be positive");
  if (!(c.tol >= 0.0)) throw ConfigError("'tol' must be nonnegative");
  if (c.max_iter < 1) throw ConfigError("'max_iter' must be positive");
  try {
    c.geometry.validate();
    c.path_loss.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  for (const auto& spec : c.architectures) {
    if (spec.group_size == 0) continue;
    for (int n : c.n_list) {
      if (n % spec.group_size != 0) {
        throw ConfigError("group size " + std::to_string(spec.group_size) + " of '" + spec.label() +
                          "' does not divide N = " + std::to_string(n));
      }
    }
  }
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ConfigError("config file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

int default_thread_count() {
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BDRIS_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) threads = threads > 0 ? std::min(threads, cap) : cap;
  }
  return std::max(threads, 1);
}

SweepResult run_sweep(const ScenarioConfig& config, int threads) {
  if (threads <= 0) threads = default_thread_count();
  const OptimizerSettings settings = config.optimizer_settings();
  SweepResult result;
  result.metadata.seed = config.seed;
  result.metadata.config_hash = hex64(detail::fnv1a(config.source.dump()));
  result.metadata.code_version = BDRIS_VERSION;
  result.metadata.los_model = kLosModel;

  const auto arch_count = config.architectures.size();
  for (int n : config.n_list) {
    for (int m : config.m_list) {
      for (double k_db : config.rician_k_db) {
        std::vector<TrialOutcome> outcomes(config.trials);
        parallel_for(config.trials, threads, [&](int t) {
          const TrialStreams pristine = TrialStreams::derive(config.seed, static_cast<std::uint64_t>(t));
          TrialStreams draw = pristine;
          const ChannelRealization ch =
              sample_channels(n, m, config.geometry, config.path_loss, k_db, draw);
          TrialOutcome& out = outcomes[t];
          out.bound = upper_bound(ch.h_ri, ch.h_it, settings.p_t);
          for (const auto& spec : config.architectures) {
            RandomStream topology = pristine.topology;
            RandomStream precoder = pristine.precoder;
            const Architecture arch = spec.build(n, topology);
            const OptimizationResult r = optimize(ch.h_ri, ch.h_it, arch, settings, precoder);
            out.power.push_back(r.power);
            out.iterations.push_back(r.iterations);
          }
        });

        for (std::size_t a = 0; a < arch_count; ++a) {
          SweepRow row;
          row.architecture = config.architectures[a].label();
          row.n = n;
          row.m = m;
          row.group_size = config.architectures[a].reported_group_size(n);
          row.rician_k_db = k_db;
          row.trials = config.trials;
          double sum = 0.0;
          double iter_sum = 0.0;
          for (const auto& o : outcomes) {
            sum += o.power[a];
            iter_sum += o.iterations[a];
            row.trial_power.push_back(o.power[a]);
            row.trial_bound.push_back(o.bound);
          }
          row.mean_power_w = sum / config.trials;
          row.mean_iterations = iter_sum / config.trials;
          if (config.trials > 1) {
            double ss = 0.0;
            for (double p : row.trial_power) ss += (p - row.mean_power_w) * (p - row.mean_power_w);
            row.std_error_w = std::sqrt(ss / (config.trials - 1) / config.trials);
          }
          result.rows.push_back(std::move(row));
        }
      }
    }
  }
  return result;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << "arch,n,m,group_size,k_db,trials,mean_power_w,stderr_w,mean_iters\n";
  for (const auto& r : result.rows) {
    out << r.architecture << ',' << r.n << ',' << r.m << ',' << r.group_size << ',' << fmt_double(r.rician_k_db)
        << ',' << r.trials << ',' << fmt_double(r.mean_power_w) << ',' << fmt_double(r.std_error_w) << ','
        << fmt_double(r.mean_iterations) << '\n';
  }
}

Json sweep_metadata_json(const SweepResult& result, const ScenarioConfig& config) {
  return {{"seed", result.metadata.seed},
          {"config_hash", result.metadata.config_hash},
          {"config", config.source},
          {"versions", {{"bdris", result.metadata.code_version}, {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." +
                                                                              std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                                                              std::to_string(EIGEN_MINOR_VERSION)}}},
          {"los_model", result.metadata.los_model},
          {"power_unit", "W"},
          {"averaging", "linear"}};
}

OptimizationResult optimize_realization(const ScenarioConfig& config, const ArchitectureSpec& spec,
                                        std::uint64_t seed, int n, int m, double k_db) {
  if (spec.group_size != 0 && n % spec.group_size != 0) {
    throw ConfigError("group size " + std::to_string(spec.group_size) + " does not divide N = " + std::to_string(n));
  }
  const TrialStreams pristine = TrialStreams::derive(seed, 0);
  TrialStreams draw = pristine;
  const ChannelRealization ch = sample_channels(n, m, config.geometry, config.path_loss, k_db, draw);
  RandomStream topology = pristine.topology;
  RandomStream precoder = pristine.precoder;
  return optimize(ch.h_ri, ch.h_it, spec.build(n, topology), config.optimizer_settings(), precoder);
}

ComplexityTable complexity_table(const std::vector<int>& n_values, const std::vector<int>& group_sizes) {
  if (n_values.empty()) throw InvalidArgument("complexity table needs at least one N");
  ComplexityTable table;
  table.group_sizes = group_sizes;
  for (int n : n_values) {
    ComplexityRow row;
    row.n = n;
    row.single = admittance_count(build_architecture(ArchKind::Single, n));
    row.tree = admittance_count(build_architecture(ArchKind::Tridiagonal, n));
    for (int g : group_sizes) {
      row.forest.push_back(admittance_count(build_architecture(ArchKind::Forest, n, g)));
      row.group.push_back(admittance_count(build_architecture(ArchKind::Group, n, g)));
    }
    row.fully = admittance_count(build_architecture(ArchKind::Fully, n));
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_complexity_csv(const ComplexityTable& table, std::ostream& out) {
  out << "n,single,tree";
  for (int g : table.group_sizes) out << ",forest_" << g;
  for (int g : table.group_sizes) out << ",group_" << g;
  out << ",fully\n";
  for (const auto& r : table.rows) {
    out << r.n << ',' << r.single << ',' << r.tree;
    for (auto v : r.forest) out << ',' << v;
    for (auto v : r.group) out << ',' << v;
    out << ',' << r.fully << '\n';
  }
}

}  // namespace bdris
