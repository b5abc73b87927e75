#pragma once

#include "bdris/rng.hpp"
#include "bdris/types.hpp"

namespace bdris {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point2&) const = default;
};

double distance(const Point2& p, const Point2& q);

/// Planar positions of transmitter, receiver and RIS, meters.
struct Geometry {
  Point2 tx{0.0, 0.0};
  Point2 rx{52.0, 0.0};
  Point2 ris{50.0, 2.0};

  /// Throws InvalidArgument unless the three points are pairwise distinct.
  void validate() const;
  double d_it() const { return distance(tx, ris); }
  double d_ri() const { return distance(ris, rx); }
};

/// L(d) = L0 (d / D0)^-alpha with L0 given in dB.
struct PathLossParams {
  double l0_db = -30.0;
  double d0 = 1.0;
  double alpha_ri = 2.8;
  double alpha_it = 2.0;

  void validate() const;
};

enum class Link { RisToReceiver, TransmitterToRis };

/// Linear power gain of the link at distance d. Throws on d <= 0.
double path_loss(double d, const PathLossParams& params, Link link);

struct ChannelRealization {
  ComplexRowVector h_ri;  // 1 x N
  ComplexMatrix h_it;     // N x M
};

/// Identifier recorded in run metadata for the line-of-sight model below.
inline constexpr const char* kLosModel = "rank1-ula-half-wavelength";

/// Deterministic N x M line-of-sight component: the outer product of
/// half-wavelength ULA steering vectors at the RIS (array along x) and at
/// the transmitter (array along y), pointed along the RIS-transmitter line.
/// Every entry has unit modulus, so ||H_LoS||_F^2 = N M.
ComplexMatrix los_component(int n, int m, const Geometry& geometry);

/// One channel draw. h_RI is Rayleigh, H_IT is Rician with factor
/// K = 10^(k_db / 10), both scaled by their path loss. h_RI and the
/// scattered part of H_IT come from separate substreams.
ChannelRealization sample_channels(int n, int m, const Geometry& geometry, const PathLossParams& params,
                                   double rician_k_db, TrialStreams& streams);

}  // namespace bdris
