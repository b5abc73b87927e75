#include "bdris/optimize.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <string>

namespace bdris {

namespace {

// Relative pivot threshold below which the tree system counts as rank
// deficient.
constexpr double kRankThreshold = 1e-12;
constexpr double kPhaseReferenceFloor = 1e-12;

struct Block {
  std::vector<Vertex> vertices;
  RisGraph tree;
};

// One closed-form block per connected component, each on a spanning tree of
// that component.
std::vector<Block> optimization_blocks(const Architecture& arch) {
  std::vector<Block> blocks;
  for (auto& component : connected_components(arch.graph())) {
    RisGraph sub = induced_subgraph(arch.graph(), component);
    if (!is_tree(sub)) sub = bfs_spanning_tree(sub);
    blocks.push_back({std::move(component), std::move(sub)});
  }
  return blocks;
}

void check_channels(const ComplexRowVector& h_ri, const ComplexMatrix& h_it) {
  if (h_ri.size() == 0 || h_it.cols() == 0) throw InvalidArgument("channels must be nonempty");
  if (h_ri.size() != h_it.rows()) throw InvalidArgument("h_RI is 1 x N but H_IT has " + std::to_string(h_it.rows()) +
                                                        " rows");
  if (h_ri.squaredNorm() == 0.0) throw InvalidArgument("h_RI is zero");
  if (h_it.squaredNorm() == 0.0) throw InvalidArgument("H_IT is zero");
}

ComplexVector normalized(const ComplexVector& v) { return v / v.norm(); }

ComplexVector mrt_precoder(const ComplexRowVector& h_ri, const ComplexMatrix& theta, const ComplexMatrix& h_it) {
  const ComplexRowVector g = h_ri * theta * h_it;
  const double norm = g.norm();
  if (norm == 0.0) throw DegenerateChannel("effective channel vanished; MRT undefined");
  return g.adjoint() / norm;
}

ComplexVector initial_precoder(Eigen::Index m, RandomStream& rng) {
  if (m == 1) return ComplexVector::Ones(1);
  ComplexVector w(m);
  for (Eigen::Index i = 0; i < m; ++i) w(i) = rng.complex_normal();
  return normalized(w);
}

OptimizationResult closed_form_on_tree(const ComplexRowVector& h_ri, const ComplexMatrix& h_it, const RisGraph& tree,
                                       ArchKind label, const OptimizerSettings& settings) {
  check_channels(h_ri, h_it);
  const ComplexVector u = dominant_left_singular_vector(h_it);
  OptimizationResult r;
  r.architecture = label;
  r.susceptance = solve_tree_block(tree, h_ri, u, settings.z0);
  r.scattering = scattering_from_susceptance(r.susceptance, settings.z0);
  // w = H^H u / ||H^H u|| so that H w = sigma_max u with the same phase as u.
  r.precoder = normalized(h_it.adjoint() * u);
  r.power = received_power(h_ri, r.scattering, h_it, r.precoder, settings.p_t);
  r.bound = upper_bound(h_ri, h_it, settings.p_t);
  r.iterations = 1;
  r.objective_history = {r.power};
  return r;
}

template <typename BlockUpdate>
OptimizationResult alternate(const ComplexRowVector& h_ri, const ComplexMatrix& h_it,
                             const std::vector<std::vector<Vertex>>& partition, ArchKind label,
                             const OptimizerSettings& settings, RandomStream& rng, BlockUpdate&& update_blocks) {
  const auto n = h_ri.size();
  OptimizationResult best;
  best.architecture = label;
  best.bound = upper_bound(h_ri, h_it, settings.p_t);
  ComplexVector w = initial_precoder(h_it.cols(), rng);
  best.precoder = w;
  double previous = -1.0;

  for (int iter = 1; iter <= settings.max_iter; ++iter) {
    const ComplexVector h_eff = h_it * w;
    RealMatrix b = RealMatrix::Zero(n, n);
    ComplexMatrix theta = ComplexMatrix::Zero(n, n);
    update_blocks(h_eff, b, theta);
    const ScatteringMatrix scattering(theta);

    BlockUpdateRecord record;
    record.power = received_power(h_ri, scattering, h_it, w, settings.p_t);
    record.group_bound = group_upper_bound(h_ri, h_eff, partition, settings.p_t);

    const ComplexVector w_next = mrt_precoder(h_ri, theta, h_it);
    const double power = received_power(h_ri, scattering, h_it, w_next, settings.p_t);
    // A decrease can only come from rounding once the scheme has converged.
    if (power < previous) break;

    best.susceptance = SusceptanceMatrix(std::move(b));
    best.scattering = scattering;
    best.precoder = w_next;
    best.power = power;
    best.iterations = iter;
    best.objective_history.push_back(power);
    best.block_updates.push_back(record);
    w = w_next;

    if (previous > 0.0 && power - previous <= settings.tol * previous) break;
    previous = power;
  }
  return best;
}

}  // namespace

ComplexVector dominant_left_singular_vector(const ComplexMatrix& h) {
  if (h.size() == 0 || h.squaredNorm() == 0.0) throw InvalidArgument("dominant singular vector of a zero matrix");
  Eigen::JacobiSVD<ComplexMatrix> svd(h, Eigen::ComputeThinU);
  ComplexVector u = svd.matrixU().col(0);
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (std::abs(u(i)) > kPhaseReferenceFloor) {
      u *= std::conj(u(i)) / std::abs(u(i));
      u(i) = std::abs(u(i));
      break;
    }
  }
  return u;
}

LinearSystem build_linear_system(const RisGraph& tree, const ComplexVector& alpha, const ComplexVector& beta) {
  if (!is_tree(tree)) throw InvalidArgument("linear system requires a tree graph");
  const int n = tree.vertex_count();
  if (alpha.size() != n || beta.size() != n) throw InvalidArgument("alpha and beta must have N entries");

  LinearSystem s;
  s.a = RealMatrix::Zero(2 * n, 2 * n - 1);
  s.b.resize(2 * n);
  s.layout.reserve(2 * n - 1);
  for (int k = 0; k < n; ++k) {
    s.a(k, k) = alpha(k).real();
    s.a(n + k, k) = alpha(k).imag();
    s.b(k) = beta(k).real();
    s.b(n + k) = beta(k).imag();
    s.layout.push_back({k + 1, k + 1});
  }
  int column = n;
  for (const Edge& e : tree.edges()) {
    // Row m carries alpha_n times B_{m,n}; row n carries alpha_m.
    s.a(e.b - 1, column) = alpha(e.a - 1).real();
    s.a(n + e.b - 1, column) = alpha(e.a - 1).imag();
    s.a(e.a - 1, column) = alpha(e.b - 1).real();
    s.a(n + e.a - 1, column) = alpha(e.b - 1).imag();
    s.layout.push_back({e.a, e.b});
    ++column;
  }
  return s;
}

LinearSystem build_linear_system(const Architecture& tree, const ComplexRowVector& h_ri, const ComplexVector& u_it,
                                 double z0) {
  if (h_ri.size() != tree.port_count() || u_it.size() != tree.port_count()) {
    throw InvalidArgument("channel dimensions do not match the architecture");
  }
  const double h_norm = h_ri.norm();
  if (h_norm == 0.0) throw InvalidArgument("h_RI is zero");
  const ComplexVector h_hat_h = h_ri.adjoint() / h_norm;
  return build_linear_system(tree.graph(), Complex(0.0, z0) * (u_it + h_hat_h), u_it - h_hat_h);
}

SusceptanceMatrix assemble_susceptance(const LinearSystem& system, const RealVector& x, int n) {
  if (x.size() != static_cast<Eigen::Index>(system.layout.size())) {
    throw InvalidArgument("solution length does not match the unknown layout");
  }
  RealMatrix b = RealMatrix::Zero(n, n);
  for (std::size_t i = 0; i < system.layout.size(); ++i) {
    const auto& slot = system.layout[i];
    b(slot.row - 1, slot.col - 1) = x(i);
    b(slot.col - 1, slot.row - 1) = x(i);
  }
  return SusceptanceMatrix(std::move(b));
}

RealVector solve_least_squares(const LinearSystem& system) {
  Eigen::ColPivHouseholderQR<RealMatrix> qr(system.a);
  qr.setThreshold(kRankThreshold);
  if (qr.rank() < system.a.cols()) {
    throw DegenerateChannel("tree linear system is rank deficient (rank " + std::to_string(qr.rank()) + " of " +
                            std::to_string(system.a.cols()) + ")");
  }
  return qr.solve(system.b);
}

SusceptanceMatrix solve_tree_block(const RisGraph& tree, const ComplexRowVector& h_ri, const ComplexVector& u,
                                   double z0) {
  const int n = tree.vertex_count();
  if (h_ri.size() != n || u.size() != n) throw InvalidArgument("block channel dimensions do not match the tree");
  const double h_norm = h_ri.norm();
  if (h_norm == 0.0) throw DegenerateChannel("h_RI vanishes on a block");
  const ComplexVector h_hat_h = h_ri.adjoint() / h_norm;
  const LinearSystem system = build_linear_system(tree, Complex(0.0, z0) * (u + h_hat_h), u - h_hat_h);
  return assemble_susceptance(system, solve_least_squares(system), n);
}

OptimizationResult tree_optimize(const ComplexRowVector& h_ri, const ComplexMatrix& h_it, const Architecture& tree,
                                 const OptimizerSettings& settings) {
  if (!is_tree(tree.graph())) throw InvalidArgument("tree_optimize requires a tree-connected architecture");
  if (h_ri.size() != tree.port_count()) throw InvalidArgument("channel dimensions do not match the architecture");
  return closed_form_on_tree(h_ri, h_it, tree.graph(), tree.kind(), settings);
}

OptimizationResult forest_optimize(const ComplexRowVector& h_ri, const ComplexMatrix& h_it,
                                   const Architecture& forest, const OptimizerSettings& settings,
                                   RandomStream& rng) {
  check_channels(h_ri, h_it);
  if (h_ri.size() != forest.port_count()) throw InvalidArgument("channel dimensions do not match the architecture");
  const std::vector<Block> blocks = optimization_blocks(forest);
  std::vector<std::vector<Vertex>> partition;
  for (const Block& blk : blocks) partition.push_back(blk.vertices);

  if (blocks.size() == 1) {
    // A connected surface reaches the global bound with the dominant right
    // singular vector, so there is nothing to alternate.
    OptimizationResult r = closed_form_on_tree(h_ri, h_it, blocks.front().tree, forest.kind(), settings);
    r.block_updates = {{r.power, group_upper_bound(h_ri, h_it * r.precoder, partition, settings.p_t)}};
    return r;
  }

  auto update = [&](const ComplexVector& h_eff, RealMatrix& b, ComplexMatrix& theta) {
    for (const Block& blk : blocks) {
      const auto k = static_cast<Eigen::Index>(blk.vertices.size());
      ComplexRowVector h_g(k);
      ComplexVector e_g(k);
      for (Eigen::Index i = 0; i < k; ++i) {
        h_g(i) = h_ri(blk.vertices[i] - 1);
        e_g(i) = h_eff(blk.vertices[i] - 1);
      }
      const double e_norm = e_g.norm();
      if (e_norm == 0.0) throw DegenerateChannel("effective channel vanishes on a group");
      const SusceptanceMatrix b_g = solve_tree_block(blk.tree, h_g, e_g / e_norm, settings.z0);
      const ScatteringMatrix theta_g = scattering_from_susceptance(b_g, settings.z0);
      for (Eigen::Index j = 0; j < k; ++j) {
        for (Eigen::Index i = 0; i < k; ++i) {
          b(blk.vertices[i] - 1, blk.vertices[j] - 1) = b_g.matrix()(i, j);
          theta(blk.vertices[i] - 1, blk.vertices[j] - 1) = theta_g.matrix()(i, j);
        }
      }
    }
  };
  return alternate(h_ri, h_it, partition, forest.kind(), settings, rng, update);
}

OptimizationResult single_optimize(const ComplexRowVector& h_ri, const ComplexMatrix& h_it,
                                   const OptimizerSettings& settings, RandomStream& rng) {
  check_channels(h_ri, h_it);
  const auto n = h_ri.size();
  std::vector<std::vector<Vertex>> partition;
  for (Vertex v = 1; v <= n; ++v) partition.push_back({v});

  auto update = [&](const ComplexVector& h_eff, RealMatrix& b, ComplexMatrix& theta) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double phase = -std::arg(h_ri(i) * h_eff(i));
      theta(i, i) = std::polar(1.0, phase);
      // (1 - j Z0 b) / (1 + j Z0 b) = exp(-2j atan(Z0 b)).
      b(i, i) = -std::tan(phase / 2.0) / settings.z0;
    }
  };
  return alternate(h_ri, h_it, partition, ArchKind::Single, settings, rng, update);
}

OptimizationResult group_optimize(const ComplexRowVector& h_ri, const ComplexMatrix& h_it, int group_size,
                                  const OptimizerSettings& settings, RandomStream& rng) {
  const Architecture arch = build_architecture(ArchKind::Group, static_cast<int>(h_ri.size()), group_size);
  return forest_optimize(h_ri, h_it, arch, settings, rng);
}

OptimizationResult optimize(const ComplexRowVector& h_ri, const ComplexMatrix& h_it, const Architecture& arch,
                            const OptimizerSettings& settings, RandomStream& rng) {
  switch (arch.kind()) {
    case ArchKind::Single:
      return single_optimize(h_ri, h_it, settings, rng);
    case ArchKind::Tridiagonal:
    case ArchKind::Arrowhead:
    case ArchKind::Tree:
      return tree_optimize(h_ri, h_it, arch, settings);
    case ArchKind::Fully:
      check_channels(h_ri, h_it);
      return closed_form_on_tree(h_ri, h_it, bfs_spanning_tree(arch.graph()), ArchKind::Fully, settings);
    case ArchKind::Forest:
    case ArchKind::Group:
      return forest_optimize(h_ri, h_it, arch, settings, rng);
  }
  throw InvalidArgument("unhandled architecture kind");
}

}  // namespace bdris
