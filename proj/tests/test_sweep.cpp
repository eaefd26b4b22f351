#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reebforge/arrangement.hpp"
#include "reebforge/enumerate.hpp"
#include "reebforge/graph.hpp"
#include "reebforge/leveling.hpp"
#include "reebforge/sweep.hpp"

using namespace reebforge;

namespace {

Multigraph from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
  Multigraph g;
  for (const auto& [u, v] : edges) {
    g.ensure_vertex(u);
    g.ensure_vertex(v);
    g.add_edge(u, v);
  }
  return g;
}

Multigraph path(int n) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({std::string(1, char('a' + i)), std::string(1, char('a' + i + 1))});
  return from_edges(edges);
}

Arrangement make(const Multigraph& t, std::array<int, 4> exps = {1, 1, 1, 1},
                 const CycleSelection& sel = {}) {
  return build_arrangement(level_tree(t), exps, sel);
}

std::vector<std::string> verts_of_degree(const ReebGraph& rg, int d) {
  std::vector<std::string> out;
  for (int i = 0; i < rg.skeleton.vertex_count(); ++i)
    if (rg.skeleton.degree(i) == d) out.push_back(rg.skeleton.vertex_id(i));
  return out;
}

int tags_with_prefix(const std::set<std::string>& tags, const std::string& prefix) {
  int n = 0;
  for (const std::string& t : tags)
    if (t.rfind(prefix, 0) == 0) ++n;
  return n;
}

int census_count(const std::vector<SingularEvent>& evs, const std::string& kind) {
  int n = 0;
  for (const SingularEvent& e : evs)
    if (e.kind == kind) ++n;
  return n;
}

// Rectangle with one extra separator circle whose wall crossings sit at
// irrational columns, killing the rational-event certificate.
Arrangement irrational_fixture() {
  Arrangement a;
  a.X1 = 0;
  a.X2 = 3;
  a.Y1 = 0;
  a.Y2 = 2;
  a.curves = {Curve::vline(a.X1, 1, 1, "S1"), Curve::vline(a.X2, -1, 1, "S2"),
              Curve::hline(a.Y1, 1, 2, "S3"), Curve::hline(a.Y2, -1, 2, "S4"),
              Curve::circle(2, -1, 3, 3, "irr")};
  a.region_seed = {Rat(1, 2), Rat(1, 2)};
  return a;
}

}  // namespace

TEST_CASE("single edge sweeps to one arc between the walls") {
  ReebGraph rg = sweep_reeb(make(path(2)));
  CHECK(rg.verified);
  CHECK(rg.skeleton.vertex_count() == 2);
  CHECK(rg.skeleton.edge_count() == 1);
  CHECK(rg.edge_fiber.size() == 1);
  CHECK(rg.edge_fiber[0] == "S^1 x S^1");
  std::vector<Rat> levels;
  std::vector<std::set<std::string>> provs;
  for (const auto& [v, lvl] : rg.vertex_level) {
    levels.push_back(lvl);
    provs.push_back(rg.vertex_provenance.at(v));
  }
  std::sort(levels.begin(), levels.end());
  CHECK(levels == std::vector<Rat>{Rat(0), Rat(3)});
  CHECK(provs[0] != provs[1]);
  for (const auto& p : provs) {
    CHECK(p.size() == 1);
    bool wall = p.count("LeftWallSegment") || p.count("RightWallSegment");
    CHECK(wall);
  }
}

TEST_CASE("middle vertex of a three-path appears as a corner event") {
  ReebGraph rg = sweep_reeb(make(path(3)));
  CHECK(rg.verified);
  CHECK(rg.skeleton.vertex_count() == 3);
  CHECK(are_isomorphic(rg.skeleton, path(3)).has_value());
  auto mids = verts_of_degree(rg, 2);
  REQUIRE(mids.size() == 1);
  CHECK(rg.vertex_level.at(mids[0]) == 2);
  const auto& prov = rg.vertex_provenance.at(mids[0]);
  CHECK(prov.size() == 1);
  CHECK(tags_with_prefix(prov, "Corner(") == 1);
  for (const std::string& f : rg.edge_fiber) CHECK(f == "S^1 x S^1 x S^1");
}

TEST_CASE("longer paths replay every interior vertex as a degree-2 corner vertex") {
  for (int n = 3; n <= 9; ++n) {
    CAPTURE(n);
    ReebGraph rg = sweep_reeb(make(path(n)));
    CHECK(rg.verified);
    CHECK(are_isomorphic(rg.skeleton, path(n)).has_value());
    auto mids = verts_of_degree(rg, 2);
    CHECK(static_cast<int>(mids.size()) == n - 2);
    std::vector<Rat> levels;
    for (const std::string& v : mids) {
      const auto& prov = rg.vertex_provenance.at(v);
      CHECK(static_cast<int>(prov.size()) == tags_with_prefix(prov, "Corner("));
      levels.push_back(rg.vertex_level.at(v));
    }
    std::sort(levels.begin(), levels.end());
    for (int i = 0; i < n - 2; ++i) CHECK(levels[i] == i + 2);
  }
}

TEST_CASE("claw branches at its splitter tangency") {
  Multigraph claw = from_edges({{"a", "b"}, {"b", "c"}, {"b", "d"}});
  ReebGraph rg = sweep_reeb(make(claw));
  CHECK(rg.verified);
  CHECK(are_isomorphic(rg.skeleton, claw).has_value());
  auto branch = verts_of_degree(rg, 3);
  REQUIRE(branch.size() == 1);
  CHECK(rg.vertex_level.at(branch[0]) == 2);
  const auto& prov = rg.vertex_provenance.at(branch[0]);
  CHECK(prov.size() == 1);
  CHECK(prov.count("Tangency(splitter1)") == 1);
  int at_right = 0;
  for (const auto& [v, p] : rg.vertex_provenance)
    if (p.count("RightWallSegment")) {
      ++at_right;
      CHECK(rg.vertex_level.at(v) == 4);
    }
  CHECK(at_right == 2);
}

TEST_CASE("coincident tangency columns stack into a single branch vertex") {
  Multigraph star = from_edges({{"a", "b"}, {"b", "c"}, {"b", "d"}, {"b", "e"}});
  ReebGraph rg = sweep_reeb(make(star));
  CHECK(are_isomorphic(rg.skeleton, star).has_value());
  auto branch = verts_of_degree(rg, 4);
  REQUIRE(branch.size() == 1);
  const auto& prov = rg.vertex_provenance.at(branch[0]);
  CHECK(tags_with_prefix(prov, "Tangency(") == 2);
  CHECK(prov.size() == 2);

  auto evs = singular_event_census(make(star));
  CHECK(census_count(evs, "Tangency") == 2);
  std::vector<Rat> tips;
  for (const auto& e : evs)
    if (e.kind == "Tangency") tips.push_back(e.x);
  REQUIRE(tips.size() == 2);
  CHECK(tips[0] == tips[1]);
}

TEST_CASE("corner and tangency at one column share a vertex") {
  Multigraph spider = from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"c", "e"}});
  ReebGraph rg = sweep_reeb(make(spider));
  CHECK(are_isomorphic(rg.skeleton, spider).has_value());
  auto mid = verts_of_degree(rg, 2);
  REQUIRE(mid.size() == 1);
  CHECK(tags_with_prefix(rg.vertex_provenance.at(mid[0]), "Corner(") == 1);
  auto branch = verts_of_degree(rg, 3);
  REQUIRE(branch.size() == 1);
  const auto& prov = rg.vertex_provenance.at(branch[0]);
  CHECK(prov.size() == 2);
  CHECK(tags_with_prefix(prov, "Corner(") == 1);
  CHECK(tags_with_prefix(prov, "Tangency(") == 1);
}

TEST_CASE("higher exponents change fibers but not the skeleton") {
  ReebGraph rg = sweep_reeb(make(path(3), {2, 3, 1, 4}));
  CHECK(rg.verified);
  CHECK(are_isomorphic(rg.skeleton, path(3)).has_value());
  for (const std::string& f : rg.edge_fiber) CHECK(f == "S^2 x S^3 x S^4");
}

TEST_CASE("region and sheet sweeps coincide when every exponent is positive") {
  std::vector<Multigraph> trees{path(4),
                                from_edges({{"a", "b"}, {"b", "c"}, {"b", "d"}}),
                                from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"c", "e"}})};
  for (const Multigraph& t : trees) {
    Arrangement a = make(t);
    ReebGraph s = sweep_reeb(a), r = region_reeb(a);
    CHECK(s.vertex_level == r.vertex_level);
    CHECK(s.vertex_provenance == r.vertex_provenance);
    CHECK(s.skeleton.edges() == r.skeleton.edges());
    CHECK(s.edge_fiber == r.edge_fiber);
  }
}

TEST_CASE("event census counts walls, tangencies, and corners") {
  auto r2 = singular_event_census(make(path(2)));
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].kind == "LeftWallSegment");
  CHECK(r2[0].x == 0);
  CHECK(r2[1].kind == "RightWallSegment");
  CHECK(r2[1].x == 3);

  auto r3 = singular_event_census(make(path(3)));
  CHECK(census_count(r3, "Corner") == 2);
  std::vector<Rat> xs;
  for (const auto& e : r3)
    if (e.kind == "Corner") xs.push_back(e.x);
  std::sort(xs.begin(), xs.end());
  CHECK(xs == std::vector<Rat>{Rat(2), Rat(4)});

  Multigraph claw = from_edges({{"a", "b"}, {"b", "c"}, {"b", "d"}});
  auto rc = singular_event_census(make(claw));
  CHECK(rc.size() == 3);
  CHECK(census_count(rc, "Tangency") == 1);
  CHECK(census_count(rc, "Corner") == 0);
}

TEST_CASE("full coverage glues a covered single edge") {
  Arrangement a = make(path(2), {1, 1, 1, 0});
  ReebGraph rg = sweep_reeb(a);
  CHECK(rg.verified);
  CHECK(rg.skeleton.vertex_count() == 2);
  CHECK(rg.skeleton.edge_count() == 1);
  CHECK(first_betti(rg.skeleton) == 0);
  for (const auto& [v, prov] : rg.vertex_provenance) {
    CHECK(prov.size() == 2);
    CHECK(tags_with_prefix(prov, "Corner(") == 1);
    CHECK(tags_with_prefix(prov, "Sheet") == 0);
  }
}

TEST_CASE("full coverage keeps the zigzag path single-sheeted") {
  ReebGraph rg = sweep_reeb(make(path(4), {1, 1, 1, 0}));
  CHECK(rg.verified);
  CHECK(are_isomorphic(rg.skeleton, path(4)).has_value());
  CHECK(first_betti(rg.skeleton) == 0);
  auto mids = verts_of_degree(rg, 2);
  REQUIRE(mids.size() == 2);
  std::vector<Rat> levels;
  for (const std::string& v : mids) {
    const auto& prov = rg.vertex_provenance.at(v);
    CHECK(prov.size() == 2);
    CHECK(tags_with_prefix(prov, "Corner(") == 2);
    CHECK(tags_with_prefix(prov, "Sheet") == 0);
    levels.push_back(rg.vertex_level.at(v));
  }
  std::sort(levels.begin(), levels.end());
  CHECK(levels == std::vector<Rat>{Rat(2), Rat(3)});
}

TEST_CASE("full coverage doubles an uncovered middle child into a pendant pair") {
  Multigraph star = from_edges({{"a", "b"}, {"b", "c"}, {"b", "e"}, {"b", "g"}});
  Arrangement a = make(star, {1, 1, 1, 0});
  REQUIRE(a.uncovered_edges.size() == 1);
  ReebGraph rg = sweep_reeb(a);
  CHECK(rg.verified);
  CHECK(rg.skeleton.vertex_count() == 6);
  CHECK(rg.skeleton.edge_count() == 5);
  CHECK(first_betti(rg.skeleton) == 0);
  Multigraph expected = from_edges({{"a", "b"},
                                    {"b", "c"},
                                    {"b", "e+"},
                                    {"b", "e-"},
                                    {"b", "g"}});
  CHECK(are_isomorphic(rg.skeleton, expected).has_value());
  auto branch = verts_of_degree(rg, 5);
  REQUIRE(branch.size() == 1);
  const auto& prov = rg.vertex_provenance.at(branch[0]);
  CHECK(tags_with_prefix(prov, "Tangency(") == 2);
  CHECK(tags_with_prefix(prov, "Corner(") == 1);
  CHECK(prov.count("SheetSplit(4)") == 1);
  // The two pendant sheets of the uncovered band end at separate maxima.
  auto leaves = verts_of_degree(rg, 1);
  int plain_right = 0;
  for (const std::string& v : leaves)
    if (rg.vertex_provenance.at(v) == std::set<std::string>{"RightWallSegment"}) ++plain_right;
  CHECK(plain_right == 2);
}

TEST_CASE("an omitted edge doubles into a cycle between sheet split and merge") {
  CycleSelection sel;
  sel.omitted_edges = {{"b", "c"}};
  Arrangement a = make(path(4), {1, 1, 1, 0}, sel);
  REQUIRE(a.uncovered_edges.size() == 1);
  ReebGraph rg = sweep_reeb(a);
  CHECK(rg.verified);
  CHECK(rg.skeleton.vertex_count() == 4);
  CHECK(rg.skeleton.edge_count() == 4);
  CHECK(first_betti(rg.skeleton) == 1);
  auto splitv = verts_of_degree(rg, 3);
  REQUIRE(splitv.size() == 2);
  std::map<Rat, std::string> by_level;
  for (const std::string& v : splitv) by_level[rg.vertex_level.at(v)] = v;
  REQUIRE(by_level.size() == 2);
  CHECK(rg.vertex_provenance.at(by_level.begin()->second).count("SheetSplit(4)") == 1);
  CHECK(rg.vertex_provenance.at(by_level.rbegin()->second).count("SheetMerge(4)") == 1);
  CHECK(by_level.begin()->first == 2);
  CHECK(by_level.rbegin()->first == 3);

  // Without sheet tracking the same region is a plain path.
  ReebGraph plain = region_reeb(a);
  CHECK(first_betti(plain.skeleton) == 0);
  CHECK(plain.skeleton.vertex_count() == 4);
  CHECK(are_isomorphic(plain.skeleton, path(4)).has_value());
}

TEST_CASE("irrational events fall back to an unverified floating sweep") {
  Arrangement a = irrational_fixture();
  CHECK_FALSE(rational_event_certificate(a));
  CHECK_THROWS_AS(singular_event_census(a), std::invalid_argument);
  ReebGraph rg = sweep_reeb(a);
  CHECK_FALSE(rg.verified);
  CHECK(rg.skeleton.vertex_count() == 3);
  CHECK(are_isomorphic(rg.skeleton, path(3)).has_value());
  auto mid = verts_of_degree(rg, 2);
  REQUIRE(mid.size() == 1);
  CHECK(tags_with_prefix(rg.vertex_provenance.at(mid[0]), "Corner(") == 1);
}

TEST_CASE("every small tree sweeps exactly and isomorphic to its input") {
  for (int n = 2; n <= 7; ++n) {
    for (const Multigraph& t : enumerate_trees(n)) {
      Arrangement a = make(t);
      CAPTURE(n);
      CHECK(rational_event_certificate(a));
      ReebGraph rg = sweep_reeb(a);
      CHECK(rg.verified);
      CHECK(rg.edge_fiber.size() == static_cast<size_t>(rg.skeleton.edge_count()));
      CHECK(are_isomorphic(rg.skeleton, t).has_value());
      for (const auto& [v, lvl] : rg.vertex_level) {
        CHECK(lvl >= a.X1);
        CHECK(lvl <= a.X2);
        CHECK_FALSE(rg.vertex_provenance.at(v).empty());
      }
      auto evs = singular_event_census(a);
      CHECK(census_count(evs, "Tangency") == a.splitter_count);
      CHECK(census_count(evs, "Corner") == 2 * static_cast<int>(a.bites.size()));
    }
  }
}

TEST_CASE("full coverage over small trees doubles exactly the uncovered inner bands") {
  for (int n = 2; n <= 6; ++n) {
    for (const Multigraph& t : enumerate_trees(n)) {
      LeveledEmbedding e = level_tree(t);
      Arrangement a = build_arrangement(e, {1, 1, 1, 0});
      CAPTURE(n);
      CHECK(rational_event_certificate(a));
      ReebGraph rg = sweep_reeb(a);
      CHECK(rg.verified);
      // An uncovered band keeps two sheets; they rejoin at an internal child
      // vertex (one cycle) but end apart past a leaf child (pendant pair).
      int cycles = 0;
      for (const auto& [u, v] : a.uncovered_edges) {
        std::string child = (e.parent_of.count(v) && e.parent_of.at(v) == u) ? v : u;
        if (t.degree(*t.vertex_index(child)) > 1) ++cycles;
      }
      CHECK(first_betti(rg.skeleton) == cycles);
      auto evs = singular_event_census(a);
      CHECK(census_count(evs, "Corner") == 2 * static_cast<int>(a.bites.size()));
    }
  }
}
