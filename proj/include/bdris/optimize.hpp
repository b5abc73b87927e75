#pragma once

#include <vector>

#include "bdris/architecture.hpp"
#include "bdris/network.hpp"
#include "bdris/rng.hpp"
#include "bdris/types.hpp"

namespace bdris {

/// Position in B that one real unknown of the tree linear system fills.
/// Diagonal entries have row == col.
struct UnknownSlot {
  Vertex row = 0;
  Vertex col = 0;
  bool operator==(const UnknownSlot&) const = default;
};

/// Real 2N x (2N - 1) system A x = b whose unique solution holds the free
/// entries of a tree-connected susceptance matrix. The unknowns are the N
/// diagonal entries followed by one entry per edge, in edge order.
struct LinearSystem {
  RealMatrix a;
  RealVector b;
  std::vector<UnknownSlot> layout;
};

struct OptimizerSettings {
  double z0 = kDefaultZ0;
  /// Transmit power, watts.
  double p_t = 1.0;
  /// Relative objective change that stops the alternating schemes.
  double tol = 1e-8;
  int max_iter = 100;
};

/// One susceptance update of an alternating scheme, taken at fixed w.
struct BlockUpdateRecord {
  double power = 0.0;
  /// group_upper_bound for the same w; equals `power` for forest updates.
  double group_bound = 0.0;
};

struct OptimizationResult {
  ArchKind architecture = ArchKind::Single;
  SusceptanceMatrix susceptance;
  ScatteringMatrix scattering;
  ComplexVector precoder;
  double power = 0.0;
  double bound = 0.0;
  /// Number of susceptance updates, 1 for the closed form.
  int iterations = 0;
  /// Received power after each iteration; nondecreasing.
  std::vector<double> objective_history;
  std::vector<BlockUpdateRecord> block_updates;
};

/// Unit vector u maximizing ||H^H u||, with the first entry of modulus above
/// 1e-12 made real positive. Throws InvalidArgument for a zero matrix.
ComplexVector dominant_left_singular_vector(const ComplexMatrix& h);

/// Builds A and b from alpha = j Z0 (u + h_hat^H) and beta = u - h_hat^H,
/// h_hat = h_RI / ||h_RI||. Throws InvalidArgument unless tree.graph() is a
/// tree or h_ri is zero.
LinearSystem build_linear_system(const Architecture& tree, const ComplexRowVector& h_ri,
                                 const ComplexVector& u_it, double z0 = kDefaultZ0);

/// Same system for a bare tree graph and precomputed alpha, beta.
LinearSystem build_linear_system(const RisGraph& tree, const ComplexVector& alpha, const ComplexVector& beta);

/// Writes a solution vector back into B according to the layout.
SusceptanceMatrix assemble_susceptance(const LinearSystem& system, const RealVector& x, int n);

/// Least-squares solve through column-pivoted Householder QR. Throws
/// DegenerateChannel when A is numerically rank deficient.
RealVector solve_least_squares(const LinearSystem& system);

/// Susceptance of a tree-connected block mapping u onto h_hat^H, i.e.
/// Theta(B) u = (h / ||h||)^H. `u` must have unit norm.
SusceptanceMatrix solve_tree_block(const RisGraph& tree, const ComplexRowVector& h_ri, const ComplexVector& u,
                                   double z0 = kDefaultZ0);

/// Closed-form global optimum of a tree-connected surface with the MRT
/// precoder. Reaches upper_bound() for every nondegenerate channel.
OptimizationResult tree_optimize(const ComplexRowVector& h_ri, const ComplexMatrix& h_it, const Architecture& tree,
                                 const OptimizerSettings& settings = {});

/// Alternating optimization for block-diagonal surfaces. Each connected
/// component of the architecture graph is solved in closed form on a
/// spanning tree of it given the effective channel H_IT w, then w is reset
/// to MRT. A connected architecture is solved in one step.
///
/// w starts as a seeded complex Gaussian draw (the scalar 1 when M = 1).
/// Stops when the relative change of the objective drops below tol, or an
/// update would decrease it, or after max_iter updates.
OptimizationResult forest_optimize(const ComplexRowVector& h_ri, const ComplexMatrix& h_it,
                                   const Architecture& forest, const OptimizerSettings& settings,
                                   RandomStream& rng);

/// Single-connected baseline: per-port co-phasing alternated with MRT.
OptimizationResult single_optimize(const ComplexRowVector& h_ri, const ComplexMatrix& h_it,
                                   const OptimizerSettings& settings, RandomStream& rng);

/// Group-connected surface with consecutive groups of size group_size,
/// solved like a forest over a spanning tree of each group.
OptimizationResult group_optimize(const ComplexRowVector& h_ri, const ComplexMatrix& h_it, int group_size,
                                  const OptimizerSettings& settings, RandomStream& rng);

/// Dispatches on arch.kind(). Fully-connected surfaces use the closed form
/// on a spanning tree of the complete graph.
OptimizationResult optimize(const ComplexRowVector& h_ri, const ComplexMatrix& h_it, const Architecture& arch,
                            const OptimizerSettings& settings, RandomStream& rng);

}  // namespace bdris
