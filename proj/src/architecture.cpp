#include "bdris/architecture.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "bdris/types.hpp"

namespace bdris {

namespace {

constexpr std::array kKindNames{
    std::pair{ArchKind::Single, std::string_view("single")},
    std::pair{ArchKind::Tridiagonal, std::string_view("tridiagonal")},
    std::pair{ArchKind::Arrowhead, std::string_view("arrowhead")},
    std::pair{ArchKind::Tree, std::string_view("tree")},
    std::pair{ArchKind::Forest, std::string_view("forest")},
    std::pair{ArchKind::Group, std::string_view("group")},
    std::pair{ArchKind::Fully, std::string_view("fully")},
};

Vertex pick_center(std::span<const Vertex> group, const CenterRule& rule) {
  if (!rule) return group.front();
  const Vertex c = rule(group);
  if (std::find(group.begin(), group.end(), c) == group.end()) {
    throw InvalidArgument("center rule returned vertex " + std::to_string(c) + " outside its group");
  }
  return c;
}

void append_group_edges(std::vector<Edge>& edges, std::span<const Vertex> group, ArchKind topology,
                        const CenterRule& rule) {
  switch (topology) {
    case ArchKind::Tridiagonal:
      for (std::size_t l = 0; l + 1 < group.size(); ++l) edges.push_back({group[l], group[l + 1]});
      break;
    case ArchKind::Arrowhead: {
      const Vertex c = pick_center(group, rule);
      for (Vertex v : group) {
        if (v != c) edges.push_back({c, v});
      }
      break;
    }
    case ArchKind::Fully:
      for (std::size_t i = 0; i < group.size(); ++i) {
        for (std::size_t j = i + 1; j < group.size(); ++j) edges.push_back({group[i], group[j]});
      }
      break;
    default:
      break;
  }
}

std::vector<Vertex> port_range(Vertex first, int count) {
  std::vector<Vertex> ports(count);
  for (int i = 0; i < count; ++i) ports[i] = first + i;
  return ports;
}

}  // namespace

std::string_view to_string(ArchKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::string_view to_string(GroupTopology topology) {
  return topology == GroupTopology::Tridiagonal ? "tridiagonal" : "arrowhead";
}

ArchKind parse_arch_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw InvalidArgument("unknown architecture kind '" + std::string(name) + "'");
}

GroupTopology parse_group_topology(std::string_view name) {
  if (name == "tridiagonal") return GroupTopology::Tridiagonal;
  if (name == "arrowhead") return GroupTopology::Arrowhead;
  throw InvalidArgument("unknown group topology '" + std::string(name) + "'");
}

Architecture::Architecture(RisGraph graph, ArchKind kind, int group_size, GroupTopology inner,
                           std::vector<std::vector<Vertex>> partition)
    : graph_(std::move(graph)), kind_(kind), group_size_(group_size), inner_(inner), partition_(std::move(partition)) {}

bool Architecture::is_tree_kind() const {
  return kind_ == ArchKind::Tridiagonal || kind_ == ArchKind::Arrowhead || kind_ == ArchKind::Tree;
}

bool Architecture::allows(Vertex i, Vertex j) const { return i == j || graph_.has_edge(i, j); }

Architecture build_architecture(ArchKind kind, int n, std::optional<int> group_size,
                                std::optional<GroupTopology> inner, const CenterRule& center_rule) {
  if (n < 1) throw InvalidArgument("architecture needs at least one port");
  const auto all_ports = port_range(1, n);
  std::vector<Edge> edges;
  switch (kind) {
    case ArchKind::Single:
      return Architecture(RisGraph(n), kind, 0, GroupTopology::Tridiagonal, {});
    case ArchKind::Tridiagonal:
    case ArchKind::Arrowhead:
    case ArchKind::Fully:
      append_group_edges(edges, all_ports, kind, center_rule);
      return Architecture(RisGraph(n, std::move(edges)), kind, 0, GroupTopology::Tridiagonal, {});
    case ArchKind::Tree:
      throw InvalidArgument("a generic tree architecture needs an explicit graph (use tree_architecture)");
    case ArchKind::Forest:
    case ArchKind::Group: {
      if (!group_size) throw InvalidArgument(std::string(to_string(kind)) + " architecture needs a group size");
      const int ng = *group_size;
      if (ng < 1 || n % ng != 0) {
        throw InvalidArgument("group size " + std::to_string(ng) + " does not divide N = " + std::to_string(n));
      }
      const GroupTopology topology = inner.value_or(GroupTopology::Tridiagonal);
      const ArchKind per_group = kind == ArchKind::Group                      ? ArchKind::Fully
                                 : topology == GroupTopology::Tridiagonal ? ArchKind::Tridiagonal
                                                                              : ArchKind::Arrowhead;
      std::vector<std::vector<Vertex>> partition;
      for (Vertex first = 1; first <= n; first += ng) {
        partition.push_back(port_range(first, ng));
        append_group_edges(edges, partition.back(), per_group, center_rule);
      }
      return Architecture(RisGraph(n, std::move(edges)), kind, ng, topology, std::move(partition));
    }
  }
  throw InvalidArgument("unhandled architecture kind");
}

Architecture tree_architecture(RisGraph graph) {
  if (!is_tree(graph)) throw InvalidArgument("graph is not a tree");
  return Architecture(std::move(graph), ArchKind::Tree, 0, GroupTopology::Tridiagonal, {});
}

std::int64_t admittance_count(const Architecture& arch) {
  return arch.port_count() + static_cast<std::int64_t>(arch.graph().edge_count());
}

std::int64_t closed_form_admittance_count(ArchKind kind, std::int64_t n, std::int64_t group_size) {
  switch (kind) {
    case ArchKind::Single:
      return n;
    case ArchKind::Tridiagonal:
    case ArchKind::Arrowhead:
    case ArchKind::Tree:
      return 2 * n - 1;
    case ArchKind::Forest:
      // N (2 - 1/N_G), kept in integers.
      return 2 * n - n / group_size;
    case ArchKind::Group:
      return n * (group_size + 1) / 2;
    case ArchKind::Fully:
      return n * (n + 1) / 2;
  }
  return 0;
}

std::set<std::pair<Vertex, Vertex>> susceptance_support(const Architecture& arch) {
  std::set<std::pair<Vertex, Vertex>> support;
  for (Vertex v = 1; v <= arch.port_count(); ++v) support.emplace(v, v);
  for (const Edge& e : arch.graph().edges()) {
    support.emplace(e.a, e.b);
    support.emplace(e.b, e.a);
  }
  return support;
}

}  // namespace bdris
