#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bdris/graph.hpp"

namespace bdris {

enum class ArchKind { Single, Tridiagonal, Arrowhead, Tree, Forest, Group, Fully };

/// Tree topology used inside each group of a forest-connected surface.
enum class GroupTopology { Tridiagonal, Arrowhead };

/// Picks the central vertex of an arrowhead (sub)graph from its ordered
/// vertex list. The default picks the first (lowest) port.
using CenterRule = std::function<Vertex(std::span<const Vertex> group)>;

std::string_view to_string(ArchKind kind);
std::string_view to_string(GroupTopology topology);
ArchKind parse_arch_kind(std::string_view name);
GroupTopology parse_group_topology(std::string_view name);

/// A circuit topology: the interconnection graph plus its place in the
/// single / tree / forest / group / fully-connected taxonomy.
class Architecture {
 public:
  ArchKind kind() const { return kind_; }
  const RisGraph& graph() const { return graph_; }
  int port_count() const { return graph_.vertex_count(); }

  /// N_G for Forest and Group, otherwise 0.
  int group_size() const { return group_size_; }

  /// Only meaningful for Forest.
  GroupTopology inner() const { return inner_; }

  /// Consecutive port blocks for Forest and Group; empty otherwise.
  const std::vector<std::vector<Vertex>>& group_partition() const { return partition_; }

  /// True for Tridiagonal, Arrowhead and Tree.
  bool is_tree_kind() const;

  /// Whether [B]_{i,j} may be nonzero.
  bool allows(Vertex i, Vertex j) const;

  friend Architecture build_architecture(ArchKind, int, std::optional<int>, std::optional<GroupTopology>,
                                         const CenterRule&);
  friend Architecture tree_architecture(RisGraph);

 private:
  Architecture(RisGraph graph, ArchKind kind, int group_size, GroupTopology inner,
               std::vector<std::vector<Vertex>> partition);

  RisGraph graph_;
  ArchKind kind_;
  int group_size_;
  GroupTopology inner_;
  std::vector<std::vector<Vertex>> partition_;
};

/// Builds the graph for a taxonomy kind on n ports.
///
/// Forest and Group require group_size dividing n; ports are split into
/// consecutive blocks. `inner` selects the per-group tree of a Forest
/// (Tridiagonal when omitted). Arrowhead graphs, and arrowhead groups of a
/// Forest, take their center from `center_rule`, the lowest port by default.
/// Tree needs an explicit graph, see tree_architecture().
Architecture build_architecture(ArchKind kind, int n, std::optional<int> group_size = std::nullopt,
                                std::optional<GroupTopology> inner = std::nullopt,
                                const CenterRule& center_rule = {});

/// Generic tree-connected architecture. Throws InvalidArgument unless
/// is_tree(graph).
Architecture tree_architecture(RisGraph graph);

/// Number of tunable admittances: one grounded per port plus one per edge.
std::int64_t admittance_count(const Architecture& arch);

/// Closed-form admittance count of a kind.
std::int64_t closed_form_admittance_count(ArchKind kind, std::int64_t n, std::int64_t group_size = 0);

/// Allowed nonzero positions (1-based) of the susceptance matrix: the full
/// diagonal and both orientations of every edge.
std::set<std::pair<Vertex, Vertex>> susceptance_support(const Architecture& arch);

}  // namespace bdris
