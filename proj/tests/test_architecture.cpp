#include <catch_amalgamated.hpp>

#include <algorithm>

#include "bdris/architecture.hpp"
#include "bdris/serialize.hpp"

using namespace bdris;

namespace {

using Support = std::set<std::pair<Vertex, Vertex>>;

Support diagonal(int n) {
  Support s;
  for (int i = 1; i <= n; ++i) s.insert({i, i});
  return s;
}

void add_edge(Support& s, Vertex a, Vertex b) {
  s.insert({a, b});
  s.insert({b, a});
}

}  // namespace

TEST_CASE("taxonomy graphs", "[architecture]") {
  const Architecture tri = build_architecture(ArchKind::Tridiagonal, 8);
  CHECK(tri.graph() == path_graph(8));
  CHECK(tri.graph().edge_count() == 7);
  CHECK(tri.is_tree_kind());

  const Architecture single = build_architecture(ArchKind::Single, 4);
  CHECK(single.graph().edge_count() == 0);
  CHECK_FALSE(single.is_tree_kind());

  const Architecture arrow = build_architecture(ArchKind::Arrowhead, 5);
  CHECK(arrow.graph() == star_graph(5, 1));

  const Architecture fully = build_architecture(ArchKind::Fully, 6);
  CHECK(fully.graph() == complete_graph(6));

  const Architecture forest = build_architecture(ArchKind::Forest, 8, 4, GroupTopology::Arrowhead);
  CHECK(forest.graph() == RisGraph(8, {{1, 2}, {1, 3}, {1, 4}, {5, 6}, {5, 7}, {5, 8}}));
  CHECK(forest.group_partition() == std::vector<std::vector<Vertex>>{{1, 2, 3, 4}, {5, 6, 7, 8}});
  CHECK(forest.group_size() == 4);
  CHECK(is_forest(forest.graph()));

  const Architecture forest_tri = build_architecture(ArchKind::Forest, 6, 3);
  CHECK(forest_tri.graph() == RisGraph(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}}));
  CHECK(forest_tri.inner() == GroupTopology::Tridiagonal);

  const Architecture group = build_architecture(ArchKind::Group, 6, 3);
  CHECK(group.graph() == RisGraph(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}}));
}

TEST_CASE("center rule overrides the arrowhead hub", "[architecture]") {
  const CenterRule last = [](std::span<const Vertex> g) { return g.back(); };
  CHECK(build_architecture(ArchKind::Arrowhead, 4, std::nullopt, std::nullopt, last).graph() == star_graph(4, 4));
  const Architecture f = build_architecture(ArchKind::Forest, 6, 3, GroupTopology::Arrowhead, last);
  CHECK(f.graph() == RisGraph(6, {{1, 3}, {2, 3}, {4, 6}, {5, 6}}));
  const CenterRule outside = [](std::span<const Vertex>) { return 99; };
  CHECK_THROWS_AS(build_architecture(ArchKind::Arrowhead, 4, std::nullopt, std::nullopt, outside), InvalidArgument);
}

TEST_CASE("invalid constructions", "[architecture]") {
  CHECK_THROWS_AS(build_architecture(ArchKind::Forest, 8, 3), InvalidArgument);
  CHECK_THROWS_AS(build_architecture(ArchKind::Group, 8, 0), InvalidArgument);
  CHECK_THROWS_AS(build_architecture(ArchKind::Forest, 8), InvalidArgument);
  CHECK_THROWS_AS(build_architecture(ArchKind::Tree, 8), InvalidArgument);
  CHECK_THROWS_AS(build_architecture(ArchKind::Single, 0), InvalidArgument);
  CHECK_THROWS_AS(tree_architecture(RisGraph(4, {{1, 2}, {3, 4}})), InvalidArgument);
  CHECK_THROWS_AS(parse_arch_kind("triangle"), InvalidArgument);
}

TEST_CASE("admittance counts", "[architecture]") {
  CHECK(admittance_count(build_architecture(ArchKind::Fully, 64)) == 2080);
  CHECK(admittance_count(build_architecture(ArchKind::Tridiagonal, 64)) == 127);
  CHECK(admittance_count(build_architecture(ArchKind::Group, 64, 8)) == 288);
  CHECK(admittance_count(build_architecture(ArchKind::Forest, 64, 8)) == 120);
  CHECK(admittance_count(build_architecture(ArchKind::Single, 5)) == 5);
  CHECK(2080.0 / 127.0 == Catch::Approx(16.377952755905511));
  CHECK(288.0 / 120.0 == 2.4);

  for (int n = 1; n <= 256; ++n) {
    for (ArchKind k : {ArchKind::Single, ArchKind::Tridiagonal, ArchKind::Arrowhead, ArchKind::Fully}) {
      REQUIRE(admittance_count(build_architecture(k, n)) == closed_form_admittance_count(k, n));
    }
    for (int g = 1; g <= n; ++g) {
      if (n % g != 0) continue;
      REQUIRE(admittance_count(build_architecture(ArchKind::Forest, n, g)) ==
              closed_form_admittance_count(ArchKind::Forest, n, g));
      REQUIRE(admittance_count(build_architecture(ArchKind::Group, n, g)) ==
              closed_form_admittance_count(ArchKind::Group, n, g));
    }
  }
  // Closed forms written out independently.
  CHECK(closed_form_admittance_count(ArchKind::Forest, 64, 8) == 64 * 2 - 64 / 8);
  CHECK(closed_form_admittance_count(ArchKind::Group, 64, 8) == 64 * 9 / 2);
  CHECK(closed_form_admittance_count(ArchKind::Fully, 64) == 64 * 65 / 2);
  CHECK(closed_form_admittance_count(ArchKind::Tree, 64) == 127);
}

TEST_CASE("susceptance supports", "[architecture]") {
  Support tri = diagonal(4);
  add_edge(tri, 1, 2);
  add_edge(tri, 2, 3);
  add_edge(tri, 3, 4);
  CHECK(susceptance_support(build_architecture(ArchKind::Tridiagonal, 4)) == tri);

  Support arrow = diagonal(4);
  add_edge(arrow, 1, 2);
  add_edge(arrow, 1, 3);
  add_edge(arrow, 1, 4);
  CHECK(susceptance_support(build_architecture(ArchKind::Arrowhead, 4)) == arrow);

  CHECK(susceptance_support(build_architecture(ArchKind::Single, 7)) == diagonal(7));

  const Architecture a = build_architecture(ArchKind::Tridiagonal, 5);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) CHECK(a.allows(i, j) == (std::abs(i - j) <= 1));
}

TEST_CASE("forest special cases", "[architecture]") {
  for (int n : {1, 4, 6, 8, 12}) {
    CHECK(build_architecture(ArchKind::Forest, n, 1).graph() == build_architecture(ArchKind::Single, n).graph());
    CHECK(build_architecture(ArchKind::Forest, n, n).graph() == build_architecture(ArchKind::Tridiagonal, n).graph());
    CHECK(build_architecture(ArchKind::Forest, n, n, GroupTopology::Arrowhead).graph() ==
          build_architecture(ArchKind::Arrowhead, n).graph());
  }
  for (int n : {2, 4, 8, 16}) {
    for (GroupTopology t : {GroupTopology::Tridiagonal, GroupTopology::Arrowhead}) {
      CHECK(susceptance_support(build_architecture(ArchKind::Forest, n, 2, t)) ==
            susceptance_support(build_architecture(ArchKind::Group, n, 2)));
    }
  }
  for (int n : {8, 12, 24}) {
    for (int g = 1; g <= n; ++g) {
      if (n % g != 0) continue;
      const Support forest = susceptance_support(build_architecture(ArchKind::Forest, n, g, GroupTopology::Arrowhead));
      const Support group = susceptance_support(build_architecture(ArchKind::Group, n, g));
      CHECK(std::includes(group.begin(), group.end(), forest.begin(), forest.end()));
    }
  }
}

TEST_CASE("architecture JSON round trip", "[architecture]") {
  const Architecture f = build_architecture(ArchKind::Forest, 8, 4, GroupTopology::Arrowhead);
  const Json j = to_json(f);
  CHECK(j.at("kind") == "forest");
  CHECK(j.at("group_size") == 4);
  CHECK(j.at("inner") == "arrowhead");
  const Architecture back = architecture_from_json(j);
  CHECK(back.graph() == f.graph());
  CHECK(back.kind() == ArchKind::Forest);

  const Architecture t = tree_architecture(RisGraph(4, {{2, 4}, {1, 4}, {3, 4}}));
  CHECK(architecture_from_json(to_json(t)).graph() == t.graph());

  Json wrong = to_json(build_architecture(ArchKind::Tridiagonal, 4));
  wrong["edges"] = Json::parse("[[1,3],[2,3],[3,4]]");
  CHECK_THROWS_AS(architecture_from_json(wrong), InvalidArgument);
}
