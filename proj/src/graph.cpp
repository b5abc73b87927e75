#include "bdris/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "bdris/types.hpp"

namespace bdris {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[std::max(x, y)] = std::min(x, y);
    return true;
  }

 private:
  std::vector<int> parent_;
};

void check_vertex(const RisGraph& g, Vertex v) {
  if (v < 1 || v > g.vertex_count()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.vertex_count()));
  }
}

}  // namespace

RisGraph::RisGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw InvalidArgument("graph needs at least one vertex");
  std::set<Edge> seen;
  for (Edge& e : edges_) {
    if (e.a == e.b) throw InvalidArgument("loop at vertex " + std::to_string(e.a));
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a < 1 || e.b > n_) {
      throw InvalidArgument("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ") outside 1.." +
                            std::to_string(n_));
    }
    if (!seen.insert(e).second) {
      throw InvalidArgument("duplicate edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ")");
    }
  }
  sorted_.assign(seen.begin(), seen.end());
}

bool RisGraph::has_edge(Vertex u, Vertex v) const {
  const Edge e{std::min(u, v), std::max(u, v)};
  return std::binary_search(sorted_.begin(), sorted_.end(), e);
}

std::vector<std::vector<Vertex>> RisGraph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.a - 1].push_back(e.b);
    adj[e.b - 1].push_back(e.a);
  }
  return adj;
}

bool is_connected(const RisGraph& g) { return connected_components(g).size() == 1; }

bool is_acyclic(const RisGraph& g) {
  DisjointSets sets(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (!sets.unite(e.a - 1, e.b - 1)) return false;
  }
  return true;
}

bool is_tree(const RisGraph& g) {
  return g.edge_count() + 1 == static_cast<std::size_t>(g.vertex_count()) && is_connected(g);
}

bool is_forest(const RisGraph& g) { return is_acyclic(g); }

std::vector<std::vector<Vertex>> connected_components(const RisGraph& g) {
  const auto adj = g.adjacency();
  std::vector<bool> visited(g.vertex_count(), false);
  std::vector<std::vector<Vertex>> components;
  for (Vertex start = 1; start <= g.vertex_count(); ++start) {
    if (visited[start - 1]) continue;
    std::vector<Vertex> component;
    std::vector<Vertex> stack{start};
    visited[start - 1] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex w : adj[v - 1]) {
        if (!visited[w - 1]) {
          visited[w - 1] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

int degree(const RisGraph& g, Vertex v) {
  check_vertex(g, v);
  return static_cast<int>(std::count_if(g.edges().begin(), g.edges().end(),
                                        [v](const Edge& e) { return e.a == v || e.b == v; }));
}

RisGraph path_graph(int n) {
  if (n < 1) throw InvalidArgument("path graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return RisGraph(n, std::move(edges));
}

RisGraph star_graph(int n, Vertex center) {
  if (n < 1) throw InvalidArgument("star graph needs n >= 1");
  if (center < 1 || center > n) throw InvalidArgument("star center " + std::to_string(center) + " out of range");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= n; ++v) {
    if (v != center) edges.push_back({center, v});
  }
  return RisGraph(n, std::move(edges));
}

RisGraph complete_graph(int n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) edges.push_back({u, v});
  }
  return RisGraph(n, std::move(edges));
}

RisGraph tree_from_pruefer(int n, std::span<const Vertex> sequence) {
  if (n < 1) throw InvalidArgument("tree needs n >= 1");
  if (n == 1) return RisGraph(1);
  if (sequence.size() != static_cast<std::size_t>(n - 2)) {
    throw InvalidArgument("Pruefer sequence for n = " + std::to_string(n) + " must have length n - 2");
  }
  std::vector<int> remaining(n + 1, 1);
  for (Vertex v : sequence) {
    if (v < 1 || v > n) throw InvalidArgument("Pruefer entry out of range");
    ++remaining[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 1; v <= n; ++v) {
    if (remaining[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : sequence) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, v});
    if (--remaining[v] == 1) leaves.push(v);
  }
  const Vertex u = leaves.top();
  leaves.pop();
  edges.push_back({u, leaves.top()});
  return RisGraph(n, std::move(edges));
}

RisGraph random_spanning_tree(int n, RandomStream& rng) {
  if (n < 1) throw InvalidArgument("tree needs n >= 1");
  std::vector<Vertex> sequence(n > 2 ? n - 2 : 0);
  for (Vertex& v : sequence) v = static_cast<Vertex>(rng.bounded(n)) + 1;
  return tree_from_pruefer(n, sequence);
}

RisGraph induced_subgraph(const RisGraph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(g.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(g, vertices[i]);
    if (local[vertices[i]] != 0) throw InvalidArgument("repeated vertex in induced subgraph");
    local[vertices[i]] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.a] != 0 && local[e.b] != 0) edges.push_back({local[e.a], local[e.b]});
  }
  return RisGraph(static_cast<int>(vertices.size()), std::move(edges));
}

RisGraph bfs_spanning_tree(const RisGraph& g) {
  const auto adj = g.adjacency();
  std::vector<bool> visited(g.vertex_count(), false);
  std::vector<Edge> edges;
  std::queue<Vertex> frontier;
  frontier.push(1);
  visited[0] = true;
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : adj[v - 1]) {
      if (!visited[w - 1]) {
        visited[w - 1] = true;
        edges.push_back({v, w});
        frontier.push(w);
      }
    }
  }
  if (edges.size() + 1 != static_cast<std::size_t>(g.vertex_count())) {
    throw InvalidArgument("spanning tree requested for a disconnected graph");
  }
  return RisGraph(g.vertex_count(), std::move(edges));
}

}  // namespace bdris
