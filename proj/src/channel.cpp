#include "bdris/channel.hpp"

#include <cmath>
#include <numbers>

namespace bdris {

double distance(const Point2& p, const Point2& q) { return std::hypot(p.x - q.x, p.y - q.y); }

void Geometry::validate() const {
  if (tx == rx || tx == ris || rx == ris) throw InvalidArgument("transmitter, receiver and RIS must be distinct");
}

void PathLossParams::validate() const {
  if (!(d0 > 0.0)) throw InvalidArgument("reference distance must be positive");
  if (alpha_ri < 0.0 || alpha_it < 0.0) throw InvalidArgument("path-loss exponents must be nonnegative");
}

double path_loss(double d, const PathLossParams& params, Link link) {
  if (!(d > 0.0)) throw InvalidArgument("path loss needs a positive distance");
  const double alpha = link == Link::RisToReceiver ? params.alpha_ri : params.alpha_it;
  return std::pow(10.0, params.l0_db / 10.0) * std::pow(d / params.d0, -alpha);
}

ComplexMatrix los_component(int n, int m, const Geometry& geometry) {
  const double d = geometry.d_it();
  // Unit vector from the RIS towards the transmitter.
  const double ux = (geometry.tx.x - geometry.ris.x) / d;
  const double uy = (geometry.tx.y - geometry.ris.y) / d;
  // RIS array runs along x, transmitter array along y; the wave leaves the
  // transmitter along -u.
  const double ris_phase = std::numbers::pi * ux;
  const double tx_phase = -std::numbers::pi * uy;
  ComplexMatrix h(n, m);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < m; ++k) h(i, k) = std::polar(1.0, ris_phase * i + tx_phase * k);
  }
  return h;
}

ChannelRealization sample_channels(int n, int m, const Geometry& geometry, const PathLossParams& params,
                                   double rician_k_db, TrialStreams& streams) {
  if (n < 1 || m < 1) throw InvalidArgument("channel needs N >= 1 and M >= 1");
  geometry.validate();
  params.validate();
  const double l_ri = path_loss(geometry.d_ri(), params, Link::RisToReceiver);
  const double l_it = path_loss(geometry.d_it(), params, Link::TransmitterToRis);
  const double k = std::pow(10.0, rician_k_db / 10.0);
  const double los_weight = std::sqrt(k / (1.0 + k));
  const double nlos_weight = std::sqrt(1.0 / (1.0 + k));

  ChannelRealization c;
  c.h_ri.resize(n);
  for (int i = 0; i < n; ++i) c.h_ri(i) = std::sqrt(l_ri) * streams.h_ri.complex_normal();

  const ComplexMatrix los = los_component(n, m, geometry);
  c.h_it.resize(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      c.h_it(i, j) = std::sqrt(l_it) * (los_weight * los(i, j) + nlos_weight * streams.h_it_nlos.complex_normal());
    }
  }
  return c;
}

}  // namespace bdris
