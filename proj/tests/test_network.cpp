#include <catch_amalgamated.hpp>

#include "bdris/architecture.hpp"
#include "bdris/network.hpp"
#include "bdris/serialize.hpp"
#include "oracles.hpp"

using namespace bdris;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const Complex kJ{0.0, 1.0};
}

TEST_CASE("susceptance matrix validation", "[network]") {
  RealMatrix asym(2, 2);
  asym << 0.0, 1.0, 1.0 + 1e-15, 0.0;
  CHECK_THROWS_AS(SusceptanceMatrix(asym), InvalidArgument);
  CHECK_THROWS_AS(SusceptanceMatrix(RealMatrix::Zero(2, 3)), InvalidArgument);
  CHECK(SusceptanceMatrix::zeros(3).size() == 3);

  RealMatrix b = RealMatrix::Zero(3, 3);
  b(0, 1) = b(1, 0) = 0.5;
  const SusceptanceMatrix s(b);
  CHECK(s(1, 2) == 0.5);
  CHECK(s.conforms_to(build_architecture(ArchKind::Tridiagonal, 3)));
  b(0, 2) = b(2, 0) = 0.1;
  CHECK_FALSE(SusceptanceMatrix(b).conforms_to(build_architecture(ArchKind::Tridiagonal, 3)));
}

TEST_CASE("scattering from susceptance, closed cases", "[network]") {
  const ScatteringMatrix id = scattering_from_susceptance(SusceptanceMatrix::zeros(4));
  CHECK(id.matrix().isApprox(ComplexMatrix::Identity(4, 4), 0.0));

  RealMatrix b(1, 1);
  b << 0.02;
  const Complex t = scattering_from_susceptance(b).matrix()(0, 0);
  CHECK_THAT(t.real(), WithinAbs(0.0, 1e-15));
  CHECK_THAT(t.imag(), WithinAbs(-1.0, 1e-15));

  RealMatrix bad(2, 2);
  bad << 0.0, 1.0, 2.0, 0.0;
  CHECK_THROWS_AS(scattering_from_susceptance(bad), InvalidArgument);
}

TEST_CASE("scattering from susceptance against an extended-precision oracle", "[network]") {
  RandomStream rng(5);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 6;
    const RisGraph g = oracle::erdos_renyi(n, rng.uniform(), rng);
    const RealMatrix b = oracle::symmetric_on(g, rng, 0.2);
    const ScatteringMatrix theta = scattering_from_susceptance(b, 50.0);
    const ComplexMatrix ref = oracle::cayley_extended(b, 50.0);
    REQUIRE((theta.matrix() - ref).norm() <= 1e-12 * ref.norm());
    REQUIRE(theta.unitarity_error() <= 1e-12);
    REQUIRE(theta.is_lossless_reciprocal());
  }
}

TEST_CASE("scattering from admittance", "[network]") {
  const ComplexMatrix zero = ComplexMatrix::Zero(3, 3);
  CHECK(scattering_from_admittance(zero).isApprox(ComplexMatrix::Identity(3, 3)));
  const ComplexMatrix matched = ComplexMatrix::Identity(3, 3) / 50.0;
  CHECK(scattering_from_admittance(matched).norm() <= 1e-15);

  RandomStream rng(8);
  const RealMatrix b = oracle::symmetric_on(complete_graph(5), rng);
  const ComplexMatrix via_y = scattering_from_admittance(kJ * b.cast<Complex>());
  CHECK((via_y - scattering_from_susceptance(b).matrix()).norm() <= 1e-13);

  const ComplexMatrix singular = -ComplexMatrix::Identity(2, 2) / 50.0;
  CHECK_THROWS_AS(scattering_from_admittance(singular), InvalidArgument);

  // Lossy Y keeps symmetry but loses unitarity.
  ComplexMatrix lossy = kJ * b.cast<Complex>();
  lossy.diagonal().array() += 0.01;
  const ScatteringMatrix t(scattering_from_admittance(lossy));
  CHECK(t.symmetry_error() <= 1e-12);
  CHECK(t.unitarity_error() > 1e-3);
}

TEST_CASE("component values", "[network]") {
  const Architecture pair = build_architecture(ArchKind::Fully, 2);
  ComplexMatrix y(2, 2);
  y << kJ * 2.0, -kJ, -kJ, kJ * 3.0;
  const ComponentValues c = components_from_admittance(y, pair);
  REQUIRE(c.grounded.size() == 2);
  CHECK(c.interconnecting.at({1, 2}) == kJ);
  CHECK(c.grounded[0] == kJ);
  CHECK(c.grounded[1] == kJ * 2.0);
  CHECK(admittance_from_components(c, 2) == y);

  ComplexMatrix diag = ComplexMatrix::Zero(3, 3);
  diag.diagonal() << kJ, 2.0 * kJ, -0.5 * kJ;
  const ComponentValues cd = components_from_admittance(diag, build_architecture(ArchKind::Single, 3));
  CHECK(cd.interconnecting.empty());
  CHECK(cd.grounded == std::vector<Complex>{kJ, 2.0 * kJ, -0.5 * kJ});
  CHECK(admittance_from_components(cd, 3) == diag);

  const ComponentValues cz = components_from_admittance(ComplexMatrix::Zero(3, 3), build_architecture(ArchKind::Tridiagonal, 3));
  for (const Complex& v : cz.grounded) CHECK(v == Complex(0.0));
  for (const auto& [e, v] : cz.interconnecting) CHECK(v == Complex(0.0));
  CHECK(cz.interconnecting.size() == 2);

  ComplexMatrix outside = ComplexMatrix::Zero(3, 3);
  outside(0, 2) = outside(2, 0) = kJ;
  CHECK_THROWS_AS(components_from_admittance(outside, build_architecture(ArchKind::Tridiagonal, 3)), InvalidArgument);
  ComplexMatrix asym = ComplexMatrix::Zero(2, 2);
  asym(0, 1) = kJ;
  CHECK_THROWS_AS(components_from_admittance(asym, pair), InvalidArgument);
}

TEST_CASE("component round trip is exact on dyadic values", "[network]") {
  RandomStream rng(21);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + static_cast<int>(rng.bounded(10));
    const Architecture arch = tree_architecture(random_spanning_tree(n, rng));
    RealMatrix b = oracle::symmetric_on(arch.graph(), rng, 1.0);
    b = (b.array() * 1024.0).round() / 1024.0;
    const ComplexMatrix y = kJ * b.cast<Complex>();
    REQUIRE(admittance_from_components(components_from_admittance(y, arch), n) == y);
  }
}

TEST_CASE("block structure of Theta follows B", "[network]") {
  RandomStream rng(2);
  for (int rep = 0; rep < 30; ++rep) {
    const Architecture arch = build_architecture(ArchKind::Group, 12, 3);
    const RealMatrix b = oracle::symmetric_on(arch.graph(), rng);
    const ComplexMatrix t = scattering_from_susceptance(b).matrix();
    for (int i = 0; i < 12; ++i)
      for (int k = 0; k < 12; ++k)
        if (i / 3 != k / 3) REQUIRE(t(i, k) == Complex(0.0));
    for (int g = 0; g < 4; ++g) {
      const ComplexMatrix block = scattering_from_susceptance(RealMatrix(b.block(3 * g, 3 * g, 3, 3))).matrix();
      REQUIRE((t.block(3 * g, 3 * g, 3, 3) - block).norm() <= 1e-14);
    }
  }

  RealMatrix d = RealMatrix::Zero(5, 5);
  d.diagonal() << 0.01, -0.03, 0.0, 0.2, -1.0;
  const ComplexMatrix t = scattering_from_susceptance(d).matrix();
  for (int i = 0; i < 5; ++i) {
    CHECK_THAT(std::abs(t(i, i)), WithinAbs(1.0, 1e-15));
    for (int k = 0; k < 5; ++k)
      if (i != k) CHECK(t(i, k) == Complex(0.0));
  }
}

TEST_CASE("received power and bounds", "[network]") {
  ComplexRowVector h(2);
  h << 1.0, 0.0;
  ComplexVector w(2);
  w << 1.0, 0.0;
  const ComplexMatrix g = ComplexMatrix::Identity(2, 2);
  const ScatteringMatrix id(ComplexMatrix::Identity(2, 2));
  CHECK(received_power(h, id, g, w, 1.0) == 1.0);
  CHECK(upper_bound(h, g, 1.0) == 1.0);

  ComplexRowVector h34(2);
  h34 << 3.0, 4.0;
  CHECK_THAT(upper_bound(h34, 2.0 * g, 1.0), WithinRel(100.0, 1e-14));

  CHECK_THROWS_AS(received_power(h, id, g, ComplexVector(w * 1.001), 1.0), InvalidArgument);

  ComplexRowVector ones(2);
  ones << 1.0, 1.0;
  ComplexVector eff(2);
  eff << 1.0, 1.0;
  const std::vector<std::vector<Vertex>> singletons{{1}, {2}};
  CHECK_THAT(group_upper_bound(ones, eff, singletons, 1.0), WithinRel(4.0, 1e-14));
  const std::vector<std::vector<Vertex>> bad{{1}, {1}};
  CHECK_THROWS_AS(group_upper_bound(ones, eff, bad, 1.0), InvalidArgument);
}

TEST_CASE("bounds against an SVD oracle and random surfaces", "[network]") {
  RandomStream rng(77);
  for (int rep = 0; rep < 100; ++rep) {
    const ComplexRowVector h = oracle::gaussian_row(8, rng);
    const ComplexMatrix g = oracle::gaussian_matrix(8, 4, rng);
    const double s = oracle::sigma_max_gram(g);
    const double ub = upper_bound(h, g, 0.01);
    REQUIRE_THAT(ub, WithinRel(0.01 * h.squaredNorm() * s * s, 1e-10));

    ComplexVector w = oracle::gaussian_matrix(4, 1, rng).col(0);
    w.normalize();
    const ScatteringMatrix theta = scattering_from_susceptance(oracle::symmetric_on(complete_graph(8), rng));
    const double p = received_power(h, theta, g, w, 0.01);
    REQUIRE(p >= 0.0);
    REQUIRE(p <= ub * (1.0 + 1e-12));

    // Any forest surface on the same partition stays under the group bound,
    // which in turn stays under the global bound fed by the best w.
    const Architecture forest = build_architecture(ArchKind::Forest, 8, 4);
    const ComplexVector eff = g * w;
    const double gb = group_upper_bound(h, eff, forest.group_partition(), 0.01);
    for (int k = 0; k < 5; ++k) {
      const ScatteringMatrix tf = scattering_from_susceptance(oracle::symmetric_on(forest.graph(), rng, 1.0));
      REQUIRE(received_power(h, tf, g, w, 0.01) <= gb * (1.0 + 1e-12));
    }
    const ComplexVector v = oracle::dominant_right_gram(g);
    const double gb_best = group_upper_bound(h, ComplexVector(g * v), forest.group_partition(), 0.01);
    REQUIRE(gb_best <= ub * (1.0 + 1e-12));
    const std::vector<std::vector<Vertex>> whole{{1, 2, 3, 4, 5, 6, 7, 8}};
    REQUIRE_THAT(group_upper_bound(h, ComplexVector(g * v), whole, 0.01), WithinRel(ub, 1e-10));
  }
}

TEST_CASE("matrix JSON layout", "[network]") {
  ComplexMatrix m(2, 2);
  m << Complex(1, 2), Complex(3, 4), Complex(5, 6), Complex(7, 8);
  const Json j = matrix_to_json(m);
  CHECK(j == Json::parse("[[[1.0,2.0],[3.0,4.0]],[[5.0,6.0],[7.0,8.0]]]"));
  CHECK(complex_matrix_from_json(j) == m);

  RealMatrix r(1, 2);
  r << 0.25, -1.5;
  CHECK(real_matrix_from_json(matrix_to_json(r)) == r);
  CHECK_THROWS_AS(real_matrix_from_json(j), InvalidArgument);
  CHECK_THROWS_AS(complex_matrix_from_json(Json::parse("[[[1,2]],[[1,2],[3,4]]]")), InvalidArgument);

  ComplexVector v(2);
  v << Complex(0.5, -0.5), Complex(2, 0);
  CHECK(complex_vector_from_json(vector_to_json(v)) == v);
}
