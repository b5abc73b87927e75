#pragma once

// Independent reference computations shared by the unit and acceptance
// tests. None of these call into the library's numerical code paths.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "bdris/graph.hpp"
#include "bdris/rng.hpp"
#include "bdris/types.hpp"

namespace oracle {

using bdris::Complex;
using bdris::ComplexMatrix;
using bdris::ComplexRowVector;
using bdris::ComplexVector;
using bdris::RealMatrix;
using bdris::RealVector;

inline ComplexRowVector gaussian_row(int n, bdris::RandomStream& rng) {
  ComplexRowVector v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.complex_normal();
  return v;
}

inline ComplexMatrix gaussian_matrix(int n, int m, bdris::RandomStream& rng) {
  ComplexMatrix a(n, m);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k) a(i, k) = rng.complex_normal();
  return a;
}

/// Random real symmetric matrix supported on the diagonal and the edges of g.
inline RealMatrix symmetric_on(const bdris::RisGraph& g, bdris::RandomStream& rng, double scale = 0.1) {
  const int n = g.vertex_count();
  RealMatrix b = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) b(i, i) = scale * (2.0 * rng.uniform() - 1.0);
  for (const auto& e : g.edges()) {
    const double v = scale * (2.0 * rng.uniform() - 1.0);
    b(e.a - 1, e.b - 1) = v;
    b(e.b - 1, e.a - 1) = v;
  }
  return b;
}

inline bdris::RisGraph erdos_renyi(int n, double p, bdris::RandomStream& rng) {
  std::vector<bdris::Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng.uniform() < p) edges.push_back({i, j});
  return bdris::RisGraph(n, std::move(edges));
}

/// Cycle detection by depth-first search, ignoring the tree edge to the parent.
inline bool has_cycle(const bdris::RisGraph& g) {
  const auto adj = g.adjacency();
  const int n = g.vertex_count();
  std::vector<int> parent(n + 1, -1);
  for (int s = 1; s <= n; ++s) {
    if (parent[s] != -1) continue;
    parent[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v - 1]) {
        if (w == parent[v]) continue;
        if (parent[w] != -1) return true;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  return false;
}

inline int dfs_component_count(const bdris::RisGraph& g) {
  const auto adj = g.adjacency();
  std::vector<bool> seen(g.vertex_count() + 1, false);
  int count = 0;
  for (int s = 1; s <= g.vertex_count(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v - 1])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return count;
}

using LComplex = std::complex<long double>;
using LMatrix = Eigen::Matrix<LComplex, Eigen::Dynamic, Eigen::Dynamic>;

/// Gauss-Jordan inverse with full pivoting in long double.
inline LMatrix inverse_extended(LMatrix a) {
  const int n = static_cast<int>(a.rows());
  LMatrix inv = LMatrix::Identity(n, n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
    a.row(c).swap(a.row(p));
    inv.row(c).swap(inv.row(p));
    const LComplex d = a(c, c);
    a.row(c) /= d;
    inv.row(c) /= d;
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const LComplex f = a(r, c);
      if (f == LComplex(0)) continue;
      a.row(r) -= f * a.row(c);
      inv.row(r) -= f * inv.row(c);
    }
  }
  return inv;
}

/// (I + j Z0 B)^-1 (I - j Z0 B) evaluated in long double.
inline ComplexMatrix cayley_extended(const RealMatrix& b, double z0) {
  const int n = static_cast<int>(b.rows());
  LMatrix jb(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) jb(i, k) = LComplex(0.0L, static_cast<long double>(z0) * b(i, k));
  const LMatrix id = LMatrix::Identity(n, n);
  const LMatrix t = inverse_extended(id + jb) * (id - jb);
  ComplexMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) out(i, k) = Complex(static_cast<double>(t(i, k).real()), static_cast<double>(t(i, k).imag()));
  return out;
}

/// Largest singular value from the eigenvalues of the Gram matrix H^H H.
inline double sigma_max_gram(const ComplexMatrix& h) {
  const ComplexMatrix gram = h.adjoint() * h;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

/// Dominant right singular vector from the Gram matrix.
inline ComplexVector dominant_right_gram(const ComplexMatrix& h) {
  const ComplexMatrix gram = h.adjoint() * h;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram);
  return es.eigenvectors().col(gram.rows() - 1);
}

/// x = (A^T A)^-1 A^T b by Cholesky of the normal equations.
inline RealVector normal_equations(const RealMatrix& a, const RealVector& b) {
  const RealMatrix ata = a.transpose() * a;
  return ata.llt().solve(a.transpose() * b);
}

/// Numerical rank by singular-value thresholding relative to sigma_max.
inline int numerical_rank(const RealMatrix& a, double rel = 1e-8) {
  const RealVector s = Eigen::BDCSVD<RealMatrix>(a).singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  return static_cast<int>((s.array() > rel * s(0)).count());
}

}  // namespace oracle
