#include "bdris/serialize.hpp"

namespace bdris {

namespace {

Json pair(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from(const Json& p) {
  if (!p.is_array() || p.size() != 2) throw InvalidArgument("complex entries must be [re, im] pairs");
  return {p[0].get<double>(), p[1].get<double>()};
}

}  // namespace

Json to_json(const RisGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.a, e.b}));
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

RisGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n")) throw InvalidArgument("graph JSON needs an \"n\" field");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidArgument("graph edges must be [a, b] pairs");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
  }
  return RisGraph(j.at("n").get<int>(), std::move(edges));
}

Json to_json(const Architecture& arch) {
  Json j = {{"kind", std::string(to_string(arch.kind()))},
            {"n", arch.port_count()},
            {"group_size", nullptr},
            {"inner", nullptr},
            {"edges", to_json(arch.graph()).at("edges")}};
  if (arch.kind() == ArchKind::Forest || arch.kind() == ArchKind::Group) j["group_size"] = arch.group_size();
  if (arch.kind() == ArchKind::Forest) j["inner"] = std::string(to_string(arch.inner()));
  return j;
}

Architecture architecture_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("n")) {
    throw InvalidArgument("architecture JSON needs \"kind\" and \"n\"");
  }
  const ArchKind kind = parse_arch_kind(j.at("kind").get<std::string>());
  const int n = j.at("n").get<int>();
  if (kind == ArchKind::Tree) return tree_architecture(graph_from_json({{"n", n}, {"edges", j.value("edges", Json::array())}}));

  std::optional<int> group_size;
  if (j.contains("group_size") && !j.at("group_size").is_null()) group_size = j.at("group_size").get<int>();
  std::optional<GroupTopology> inner;
  if (j.contains("inner") && !j.at("inner").is_null()) inner = parse_group_topology(j.at("inner").get<std::string>());
  Architecture arch = build_architecture(kind, n, group_size, inner);
  if (j.contains("edges")) {
    // Non-default centers are not reconstructible from the kind alone.
    const RisGraph given = graph_from_json({{"n", n}, {"edges", j.at("edges")}});
    if (!(given == arch.graph())) throw InvalidArgument("architecture edges do not match its kind");
  }
  return arch;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(pair(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_to_json(const RealMatrix& m) { return matrix_to_json(ComplexMatrix(m.cast<Complex>())); }

ComplexMatrix complex_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("matrix JSON must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols) {
      throw InvalidArgument("matrix rows must have equal length");
    }
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from(j[i][k]);
  }
  return m;
}

RealMatrix real_matrix_from_json(const Json& j) {
  const ComplexMatrix m = complex_matrix_from_json(j);
  if (m.imag().cwiseAbs().maxCoeff() > 0.0) throw InvalidArgument("real matrix has nonzero imaginary parts");
  return m.real();
}

Json vector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(pair(v(i)));
  return out;
}

ComplexVector complex_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("vector JSON must be an array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = complex_from(j[i]);
  return v;
}

Json to_json(const OptimizationResult& r) {
  return {{"architecture", std::string(to_string(r.architecture))},
          {"B", matrix_to_json(r.susceptance.matrix())},
          {"Theta", matrix_to_json(r.scattering.matrix())},
          {"w", vector_to_json(r.precoder)},
          {"power_w", r.power},
          {"bound_w", r.bound},
          {"power_bound_ratio", r.bound > 0.0 ? r.power / r.bound : 0.0},
          {"iterations", r.iterations},
          {"objective_history", r.objective_history}};
}

}  // namespace bdris
