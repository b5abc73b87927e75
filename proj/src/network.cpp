#include "bdris/network.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <string>

namespace bdris {

namespace {

constexpr double kInvariantTolerance = 1e-10;
constexpr double kUnitNormTolerance = 1e-12;

ComplexMatrix cayley(const ComplexMatrix& z0y) {
  const auto n = z0y.rows();
  const ComplexMatrix identity = ComplexMatrix::Identity(n, n);
  Eigen::PartialPivLU<ComplexMatrix> lu(identity + z0y);
  return lu.solve(identity - z0y);
}

}  // namespace

SusceptanceMatrix::SusceptanceMatrix(RealMatrix b) : b_(std::move(b)) {
  if (b_.rows() != b_.cols()) throw InvalidArgument("susceptance matrix must be square");
  if (b_ != b_.transpose()) throw InvalidArgument("susceptance matrix must be symmetric");
}

bool SusceptanceMatrix::conforms_to(const Architecture& arch) const {
  if (size() != arch.port_count()) return false;
  for (Eigen::Index j = 0; j < b_.cols(); ++j) {
    for (Eigen::Index i = j + 1; i < b_.rows(); ++i) {
      if (b_(i, j) != 0.0 && !arch.allows(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1))) return false;
    }
  }
  return true;
}

double ScatteringMatrix::symmetry_error() const {
  const double scale = theta_.norm();
  if (scale == 0.0) return 0.0;
  return (theta_ - theta_.transpose()).norm() / scale;
}

double ScatteringMatrix::unitarity_error() const {
  return (theta_.adjoint() * theta_ - ComplexMatrix::Identity(theta_.rows(), theta_.cols())).norm();
}

bool ScatteringMatrix::is_lossless_reciprocal() const {
  return symmetry_error() <= kInvariantTolerance &&
         unitarity_error() <= kInvariantTolerance * std::sqrt(static_cast<double>(size()));
}

ScatteringMatrix scattering_from_susceptance(const SusceptanceMatrix& b, double z0) {
  if (!(z0 > 0.0)) throw InvalidArgument("reference impedance must be positive");
  // I + j Z0 B is never singular for real symmetric B: its eigenvalues are
  // 1 + j Z0 lambda with |.| >= 1.
  return ScatteringMatrix(cayley(Complex(0.0, z0) * b.matrix().cast<Complex>()));
}

ScatteringMatrix scattering_from_susceptance(const RealMatrix& b, double z0) {
  return scattering_from_susceptance(SusceptanceMatrix(b), z0);
}

ComplexMatrix scattering_from_admittance(const ComplexMatrix& y, double z0) {
  if (y.rows() != y.cols()) throw InvalidArgument("admittance matrix must be square");
  if (!(z0 > 0.0)) throw InvalidArgument("reference impedance must be positive");
  const auto n = y.rows();
  const ComplexMatrix identity = ComplexMatrix::Identity(n, n);
  Eigen::PartialPivLU<ComplexMatrix> lu(identity + z0 * y);
  if (!(lu.rcond() > std::numeric_limits<double>::epsilon())) {
    throw InvalidArgument("I + Z0 Y is singular");
  }
  return lu.solve(identity - z0 * y);
}

ComponentValues components_from_admittance(const ComplexMatrix& y, const Architecture& arch) {
  const int n = arch.port_count();
  if (y.rows() != n || y.cols() != n) throw InvalidArgument("admittance matrix size does not match architecture");
  if (y != y.transpose()) throw InvalidArgument("admittance matrix must be symmetric");
  for (int j = 0; j < n; ++j) {
    for (int i = j + 1; i < n; ++i) {
      if (y(i, j) != Complex(0.0) && !arch.allows(i + 1, j + 1)) {
        throw InvalidArgument("admittance entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") lies outside the architecture support");
      }
    }
  }
  ComponentValues c;
  c.grounded.resize(n);
  for (int i = 0; i < n; ++i) {
    Complex sum = y(i, i);
    for (int k = 0; k < n; ++k) {
      if (k != i) sum += y(i, k);
    }
    c.grounded[i] = sum;
  }
  for (const Edge& e : arch.graph().edges()) c.interconnecting[e] = -y(e.a - 1, e.b - 1);
  return c;
}

ComplexMatrix admittance_from_components(const ComponentValues& c, int n) {
  if (static_cast<int>(c.grounded.size()) != n) throw InvalidArgument("grounded admittance count must equal N");
  ComplexMatrix y = ComplexMatrix::Zero(n, n);
  for (const auto& [e, value] : c.interconnecting) {
    if (e.a < 1 || e.b > n || e.a >= e.b) throw InvalidArgument("interconnecting admittance on an invalid edge");
    y(e.a - 1, e.b - 1) = -value;
    y(e.b - 1, e.a - 1) = -value;
  }
  for (int i = 0; i < n; ++i) {
    // Subtracting the stored off-diagonals in the same index order as
    // components_from_admittance summed them.
    Complex diag = c.grounded[i];
    for (int k = 0; k < n; ++k) {
      if (k != i) diag -= y(i, k);
    }
    y(i, i) = diag;
  }
  return y;
}

double received_power(const ComplexRowVector& h_ri, const ScatteringMatrix& theta, const ComplexMatrix& h_it,
                      const ComplexVector& w, double p_t) {
  if (std::abs(w.norm() - 1.0) > kUnitNormTolerance) throw InvalidArgument("precoder must have unit norm");
  if (h_ri.size() != theta.size() || h_it.rows() != theta.size() || h_it.cols() != w.size()) {
    throw InvalidArgument("channel, scattering and precoder dimensions disagree");
  }
  const Complex g = (h_ri * theta.matrix() * h_it * w)(0, 0);
  return p_t * std::norm(g);
}

double upper_bound(const ComplexRowVector& h_ri, const ComplexMatrix& h_it, double p_t) {
  if (h_ri.size() != h_it.rows()) throw InvalidArgument("h_RI and H_IT dimensions disagree");
  const double sigma_max = Eigen::JacobiSVD<ComplexMatrix>(h_it).singularValues()(0);
  return p_t * h_ri.squaredNorm() * sigma_max * sigma_max;
}

double group_upper_bound(const ComplexRowVector& h_ri, const ComplexVector& h_it_eff,
                         std::span<const std::vector<Vertex>> partition, double p_t) {
  const auto n = h_ri.size();
  if (h_it_eff.size() != n) throw InvalidArgument("h_RI and effective channel dimensions disagree");
  std::vector<bool> covered(n, false);
  double sum = 0.0;
  for (const auto& group : partition) {
    double h_norm2 = 0.0;
    double e_norm2 = 0.0;
    for (Vertex v : group) {
      if (v < 1 || v > n || covered[v - 1]) throw InvalidArgument("partition is not a partition of the ports");
      covered[v - 1] = true;
      h_norm2 += std::norm(h_ri(v - 1));
      e_norm2 += std::norm(h_it_eff(v - 1));
    }
    sum += std::sqrt(h_norm2) * std::sqrt(e_norm2);
  }
  for (bool c : covered) {
    if (!c) throw InvalidArgument("partition does not cover every port");
  }
  return p_t * sum * sum;
}

}  // namespace bdris
