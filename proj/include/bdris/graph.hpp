#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "bdris/rng.hpp"

namespace bdris {

/// RIS port index, 1-based.
using Vertex = int;

/// Undirected edge stored with the smaller endpoint first.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on the ports {1, ..., n}. Vertices are RIS ports
/// and edges are the tunable admittances interconnecting them.
///
/// Immutable after construction. Edge order is preserved as given (after
/// each pair is canonicalized) since it fixes the unknown layout of the
/// tree linear system.
class RisGraph {
 public:
  /// Throws InvalidArgument on n < 1, loops, duplicate edges or out-of-range
  /// endpoints.
  explicit RisGraph(int n, std::vector<Edge> edges = {});

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Neighbours of every vertex, indexed by vertex - 1.
  std::vector<std::vector<Vertex>> adjacency() const;

  bool operator==(const RisGraph&) const = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<Edge> sorted_;
};

bool is_connected(const RisGraph& g);
bool is_acyclic(const RisGraph& g);
bool is_tree(const RisGraph& g);
bool is_forest(const RisGraph& g);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const RisGraph& g);

int degree(const RisGraph& g, Vertex v);

RisGraph path_graph(int n);
RisGraph star_graph(int n, Vertex center);
RisGraph complete_graph(int n);

/// Uniform labeled tree on n vertices, decoded from a random Pruefer sequence.
RisGraph random_spanning_tree(int n, RandomStream& rng);

/// Decodes a Pruefer sequence of length n - 2 with entries in {1, ..., n}.
RisGraph tree_from_pruefer(int n, std::span<const Vertex> sequence);

/// Subgraph induced by `vertices`, relabeled so vertices[i] becomes i + 1.
RisGraph induced_subgraph(const RisGraph& g, std::span<const Vertex> vertices);

/// A spanning tree of a connected graph found by breadth-first search from
/// vertex 1. Throws InvalidArgument when g is disconnected.
RisGraph bfs_spanning_tree(const RisGraph& g);

}  // namespace bdris
