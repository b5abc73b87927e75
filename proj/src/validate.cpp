#include "bdris/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "bdris/architecture.hpp"
#include "bdris/channel.hpp"
#include "bdris/graph.hpp"
#include "bdris/network.hpp"
#include "bdris/optimize.hpp"

namespace bdris {

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

ComplexRowVector random_row(int n, RandomStream& rng) {
  ComplexRowVector v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.complex_normal();
  return v;
}

ComplexMatrix random_matrix(int n, int m, RandomStream& rng) {
  ComplexMatrix a(n, m);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k) a(i, k) = rng.complex_normal();
  return a;
}

RealMatrix random_symmetric(const RisGraph& g, RandomStream& rng) {
  const int n = g.vertex_count();
  RealMatrix b = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) b(i, i) = (rng.uniform() - 0.5) * 0.2;
  for (const Edge& e : g.edges()) {
    const double v = (rng.uniform() - 0.5) * 0.2;
    b(e.a - 1, e.b - 1) = v;
    b(e.b - 1, e.a - 1) = v;
  }
  return b;
}

RisGraph random_graph(int n, double p, RandomStream& rng) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng.uniform() < p) edges.push_back({i, j});
  return RisGraph(n, std::move(edges));
}

bool dfs_has_cycle(const RisGraph& g) {
  const auto adj = g.adjacency();
  std::vector<int> parent(g.vertex_count() + 1, -1);
  std::vector<bool> seen(g.vertex_count() + 1, false);
  for (int s = 1; s <= g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    parent[s] = 0;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj[v - 1]) {
        if (w == parent[v]) continue;
        if (seen[w]) return true;
        seen[w] = true;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  return false;
}

using Suite = std::function<void(std::vector<PropertyCheck>&, RandomStream&)>;

void add(std::vector<PropertyCheck>& out, const char* suite, std::string name, bool ok, std::string detail = {}) {
  out.push_back({suite, std::move(name), ok, std::move(detail)});
}

void graph_suite(std::vector<PropertyCheck>& out, RandomStream& rng) {
  bool trees_ok = true;
  bool bridges_ok = true;
  for (int n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const RisGraph t = random_spanning_tree(n, rng);
      trees_ok = trees_ok && is_tree(t) && is_connected(t) && static_cast<int>(t.edge_count()) == n - 1;
      for (std::size_t drop = 0; drop < t.edge_count(); ++drop) {
        std::vector<Edge> rest;
        for (std::size_t k = 0; k < t.edge_count(); ++k)
          if (k != drop) rest.push_back(t.edges()[k]);
        bridges_ok = bridges_ok && !is_connected(RisGraph(n, rest));
      }
    }
  }
  add(out, "graph", "random trees are connected with n-1 edges", trees_ok);
  add(out, "graph", "every tree edge is a bridge", bridges_ok);

  bool predicates_ok = true;
  bool cover_ok = true;
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 1 + static_cast<int>(rng.bounded(10));
    const RisGraph g = random_graph(n, rng.uniform() * 0.5, rng);
    predicates_ok = predicates_ok && (is_acyclic(g) == !dfs_has_cycle(g)) &&
                    (is_tree(g) == (is_connected(g) && !dfs_has_cycle(g)));
    std::vector<int> hits(n + 1, 0);
    for (const auto& c : connected_components(g))
      for (Vertex v : c) ++hits[v];
    cover_ok = cover_ok && std::all_of(hits.begin() + 1, hits.end(), [](int h) { return h == 1; });
  }
  add(out, "graph", "union-find and DFS cycle checks agree", predicates_ok);
  add(out, "graph", "components partition the vertex set", cover_ok);
}

void architecture_suite(std::vector<PropertyCheck>& out, RandomStream&) {
  bool counts_ok = true;
  for (int n = 1; n <= 256; ++n) {
    for (ArchKind k : {ArchKind::Single, ArchKind::Tridiagonal, ArchKind::Arrowhead, ArchKind::Fully}) {
      counts_ok = counts_ok && admittance_count(build_architecture(k, n)) == closed_form_admittance_count(k, n);
    }
    for (int g = 1; g <= n; ++g) {
      if (n % g != 0) continue;
      for (ArchKind k : {ArchKind::Forest, ArchKind::Group}) {
        counts_ok = counts_ok && admittance_count(build_architecture(k, n, g)) == closed_form_admittance_count(k, n, g);
      }
    }
  }
  add(out, "architecture", "admittance counts match closed forms for N <= 256", counts_ok);

  bool nested_ok = true;
  for (int n : {4, 8, 12, 16}) {
    for (int g = 1; g <= n; ++g) {
      if (n % g != 0) continue;
      for (GroupTopology inner : {GroupTopology::Tridiagonal, GroupTopology::Arrowhead}) {
        const auto forest = susceptance_support(build_architecture(ArchKind::Forest, n, g, inner));
        const auto group = susceptance_support(build_architecture(ArchKind::Group, n, g));
        nested_ok = nested_ok && std::includes(group.begin(), group.end(), forest.begin(), forest.end());
        if (g <= 2) nested_ok = nested_ok && forest == group;
      }
    }
  }
  add(out, "architecture", "forest support lies inside group support", nested_ok);
}

void network_suite(std::vector<PropertyCheck>& out, RandomStream& rng) {
  double worst_sym = 0.0;
  double worst_unit = 0.0;
  double worst_block = 0.0;
  bool roundtrip_ok = true;
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + static_cast<int>(rng.bounded(12));
    const RisGraph g = random_graph(n, rng.uniform(), rng);
    const ScatteringMatrix theta = scattering_from_susceptance(random_symmetric(g, rng));
    worst_sym = std::max(worst_sym, theta.symmetry_error());
    worst_unit = std::max(worst_unit, theta.unitarity_error() / std::sqrt(static_cast<double>(n)));

    // Entries of B that are outside every block must vanish in Theta too.
    const int group = 1 + static_cast<int>(rng.bounded(3));
    const int ports = group * (1 + static_cast<int>(rng.bounded(4)));
    const Architecture arch = build_architecture(ArchKind::Group, ports, group);
    const ComplexMatrix t = scattering_from_susceptance(random_symmetric(arch.graph(), rng)).matrix();
    for (int i = 0; i < ports; ++i)
      for (int k = 0; k < ports; ++k)
        if (i / group != k / group) worst_block = std::max(worst_block, std::abs(t(i, k)));

    ComplexMatrix y = Complex(0.0, 1.0) * random_symmetric(g, rng).cast<Complex>();
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) y(i, k) = Complex(std::round(y(i, k).real() * 1024.0), std::round(y(i, k).imag() * 1024.0)) / 1024.0;
    const Architecture any = build_architecture(ArchKind::Fully, n);
    roundtrip_ok = roundtrip_ok && admittance_from_components(components_from_admittance(y, any), n) == y;
  }
  add(out, "network", "Theta is symmetric", worst_sym <= 1e-10, "worst " + sci(worst_sym));
  add(out, "network", "Theta is unitary", worst_unit <= 1e-10, "worst " + sci(worst_unit));
  add(out, "network", "block-diagonal B gives block-diagonal Theta", worst_block <= 1e-12, "worst " + sci(worst_block));
  add(out, "network", "component mapping round trip is exact", roundtrip_ok);
}

void optimize_suite(std::vector<PropertyCheck>& out, RandomStream& rng) {
  double worst_low = 0.0;
  double worst_high = 0.0;
  bool rank_ok = true;
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng.bounded(31));
    const int m = 1 + static_cast<int>(rng.bounded(4));
    const ComplexRowVector h = random_row(n, rng);
    const ComplexMatrix g = random_matrix(n, m, rng);
    const Architecture tree = tree_architecture(random_spanning_tree(n, rng));
    const OptimizationResult r = tree_optimize(h, g, tree);
    const double ratio = r.power / r.bound;
    worst_low = std::max(worst_low, 1.0 - ratio);
    worst_high = std::max(worst_high, ratio - 1.0);

    const LinearSystem sys = build_linear_system(tree, h, dominant_left_singular_vector(g));
    RealMatrix aug(sys.a.rows(), sys.a.cols() + 1);
    aug << sys.a, sys.b;
    const auto rank_of = [](const RealMatrix& a) {
      const RealVector s = Eigen::JacobiSVD<RealMatrix>(a).singularValues();
      return static_cast<int>((s.array() > 1e-8 * s(0)).count());
    };
    rank_ok = rank_ok && rank_of(sys.a) == 2 * n - 1 && rank_of(aug) == 2 * n - 1;
  }
  add(out, "optimize", "tree optimum reaches the bound", worst_low <= 1e-9 && worst_high <= 1e-12,
      "worst shortfall " + sci(worst_low));
  add(out, "optimize", "A and [A|b] have rank 2N-1", rank_ok);

  bool monotone = true;
  double worst_gap = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const ComplexRowVector h = random_row(8, rng);
    const ComplexMatrix g = random_matrix(8, 2, rng);
    OptimizerSettings settings;
    const OptimizationResult r = forest_optimize(h, g, build_architecture(ArchKind::Forest, 8, 4), settings, rng);
    for (std::size_t i = 1; i < r.objective_history.size(); ++i)
      monotone = monotone && r.objective_history[i] >= r.objective_history[i - 1];
    for (const auto& u : r.block_updates) worst_gap = std::max(worst_gap, std::abs(u.power - u.group_bound) / u.group_bound);
  }
  add(out, "optimize", "forest objective is nondecreasing", monotone);
  add(out, "optimize", "forest updates reach the group bound", worst_gap <= 1e-9, "worst " + sci(worst_gap));
}

void channel_suite(std::vector<PropertyCheck>& out, RandomStream& rng) {
  const Geometry geo;
  const PathLossParams params;
  const int draws = 4000;
  double e_it = 0.0;
  double e_ri = 0.0;
  const std::uint64_t seed = rng();
  for (int t = 0; t < draws; ++t) {
    TrialStreams s = TrialStreams::derive(seed, t);
    const ChannelRealization c = sample_channels(4, 2, geo, params, 0.0, s);
    e_it += c.h_it.squaredNorm();
    e_ri += c.h_ri.squaredNorm();
  }
  const double l_it = path_loss(geo.d_it(), params, Link::TransmitterToRis);
  const double l_ri = path_loss(geo.d_ri(), params, Link::RisToReceiver);
  const double rel_it = std::abs(e_it / draws / (l_it * 8) - 1.0);
  const double rel_ri = std::abs(e_ri / draws / (l_ri * 4) - 1.0);
  add(out, "channel", "mean H_IT energy matches path loss", rel_it <= 0.02, "relative error " + sci(rel_it));
  add(out, "channel", "mean h_RI energy matches path loss", rel_ri <= 0.02, "relative error " + sci(rel_ri));
}

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all = {{"graph", graph_suite},
                                                                 {"architecture", architecture_suite},
                                                                 {"network", network_suite},
                                                                 {"optimize", optimize_suite},
                                                                 {"channel", channel_suite}};
  return all;
}

}  // namespace

std::vector<std::string> property_suite_names() {
  std::vector<std::string> names{"props"};
  for (const auto& [name, fn] : suites()) names.push_back(name);
  return names;
}

std::vector<PropertyCheck> run_property_suite(std::string_view suite, std::uint64_t seed) {
  std::vector<PropertyCheck> out;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (suite != "props" && suite != name) continue;
    found = true;
    RandomStream rng = RandomStream::derive(seed, 0, name);
    fn(out, rng);
  }
  if (!found) throw InvalidArgument("unknown property suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace bdris
