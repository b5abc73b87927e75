#pragma once

#include <map>
#include <span>
#include <vector>

#include "bdris/architecture.hpp"
#include "bdris/types.hpp"

namespace bdris {

/// Real symmetric susceptance matrix B of a lossless reconfigurable network,
/// in siemens. Y = jB.
class SusceptanceMatrix {
 public:
  SusceptanceMatrix() = default;

  /// Throws InvalidArgument if `b` is not square or not exactly symmetric.
  explicit SusceptanceMatrix(RealMatrix b);

  static SusceptanceMatrix zeros(int n) { return SusceptanceMatrix(RealMatrix::Zero(n, n)); }

  const RealMatrix& matrix() const { return b_; }
  int size() const { return static_cast<int>(b_.rows()); }
  double operator()(Vertex i, Vertex j) const { return b_(i - 1, j - 1); }

  /// True when every nonzero off-diagonal entry sits on an edge of `arch`.
  bool conforms_to(const Architecture& arch) const;

 private:
  RealMatrix b_;
};

/// Complex N x N scattering matrix. A lossless reciprocal network gives a
/// symmetric unitary matrix; the accessors below measure how close a value
/// is to that.
class ScatteringMatrix {
 public:
  ScatteringMatrix() = default;
  explicit ScatteringMatrix(ComplexMatrix theta) : theta_(std::move(theta)) {}

  const ComplexMatrix& matrix() const { return theta_; }
  int size() const { return static_cast<int>(theta_.rows()); }

  /// ||Theta - Theta^T|| / ||Theta|| (Frobenius).
  double symmetry_error() const;
  /// ||Theta^H Theta - I|| (Frobenius).
  double unitarity_error() const;

  /// Symmetric within 1e-10 relative and unitary within 1e-10 sqrt(N).
  bool is_lossless_reciprocal() const;

 private:
  ComplexMatrix theta_;
};

/// Tunable component values realizing an admittance matrix: one grounded
/// admittance per port and one admittance per interconnecting edge.
struct ComponentValues {
  std::vector<Complex> grounded;
  std::map<Edge, Complex> interconnecting;
};

/// Theta = (I + j Z0 B)^-1 (I - j Z0 B), via LU with partial pivoting.
ScatteringMatrix scattering_from_susceptance(const SusceptanceMatrix& b, double z0 = kDefaultZ0);

/// Convenience overload; rejects non-symmetric input.
ScatteringMatrix scattering_from_susceptance(const RealMatrix& b, double z0 = kDefaultZ0);

/// Theta = (I + Z0 Y)^-1 (I - Z0 Y). Throws InvalidArgument when I + Z0 Y is
/// numerically singular.
ComplexMatrix scattering_from_admittance(const ComplexMatrix& y, double z0 = kDefaultZ0);

/// Y_{n,m} = -[Y]_{n,m} on every edge and Y_n = sum_k [Y]_{n,k}. Throws if Y
/// is not symmetric or has a nonzero off-diagonal entry outside the support.
ComponentValues components_from_admittance(const ComplexMatrix& y, const Architecture& arch);

/// [Y]_{n,m} = -Y_{n,m} off the diagonal, [Y]_{n,n} = Y_n + sum_k Y_{n,k}.
ComplexMatrix admittance_from_components(const ComponentValues& c, int n);

/// P_T |h_RI Theta H_IT w|^2 in watts. Requires ||w|| = 1 within 1e-12.
double received_power(const ComplexRowVector& h_ri, const ScatteringMatrix& theta, const ComplexMatrix& h_it,
                      const ComplexVector& w, double p_t);

/// P_T ||h_RI||^2 sigma_max(H_IT)^2 (spectral norm).
double upper_bound(const ComplexRowVector& h_ri, const ComplexMatrix& h_it, double p_t);

/// Power bound for a block-diagonal surface fed by the effective channel
/// h_eff = H_IT w: P_T (sum_g ||h_RI,g|| ||h_eff,g||)^2. `partition` must
/// cover {1, ..., N} exactly once.
double group_upper_bound(const ComplexRowVector& h_ri, const ComplexVector& h_it_eff,
                         std::span<const std::vector<Vertex>> partition, double p_t);

}  // namespace bdris
