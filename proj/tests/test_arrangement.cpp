#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reebforge/arrangement.hpp"
#include "reebforge/graph.hpp"
#include "reebforge/leveling.hpp"

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

bool is_corner(const BiteEnd& e) { return e.kind == BiteEnd::Kind::Corner; }
bool is_wallcut(const BiteEnd& e) { return e.kind == BiteEnd::Kind::WallCut; }

// Depth-based lca over the embedding's parent map, for checking splitter tips.
std::string lca_of(const LeveledEmbedding& e, std::string u, std::string v) {
  auto depth = [&](std::string w) {
    int d = 0;
    while (w != e.root) {
      w = e.parent_of.at(w);
      ++d;
    }
    return d;
  };
  int du = depth(u), dv = depth(v);
  while (du > dv) u = e.parent_of.at(u), --du;
  while (dv > du) v = e.parent_of.at(v), --dv;
  while (u != v) u = e.parent_of.at(u), v = e.parent_of.at(v);
  return u;
}

}  // namespace

TEST_CASE("single edge needs no splitters or markers") {
  Arrangement a = make(path(2));
  CHECK(a.curves.size() == 4);
  CHECK(a.splitter_count == 0);
  CHECK(a.bites.empty());
  CHECK(a.X1 == 0);
  CHECK(a.X2 == 3);
  CHECK(a.Y1 == 0);
  CHECK(a.Y2 == 1);
  CHECK(a.event_column.at("a") == 0);
  CHECK(a.event_column.at("b") == 3);
  CHECK(validate_preconditions(a).pass());
}

TEST_CASE("path on three vertices pins its middle vertex with one bite") {
  Arrangement a = make(path(3));
  CHECK(a.curves.size() == 5);
  CHECK(a.X2 == 4);
  CHECK(a.Y2 == 1);
  REQUIRE(a.bites.size() == 1);
  const BiteSpec& b = a.bites[0];
  CHECK(b.host == 2);  // bottom wall
  CHECK(b.band_above);
  REQUIRE(is_corner(b.left));
  CHECK(b.left.vertex == "b");
  CHECK(b.left.serves);
  CHECK(b.left.column == 2);
  CHECK(is_wallcut(b.right));
  CHECK(b.curve == 4);
  CHECK(a.curves[4].group == 4);
  CHECK(a.event_column.at("b") == 2);
  CHECK(validate_preconditions(a).pass());
}

TEST_CASE("degree-2 chains pair up: one bite serves two vertices") {
  Arrangement a = make(path(4));
  REQUIRE(a.bites.size() == 1);
  const BiteSpec& b = a.bites[0];
  REQUIRE(is_corner(b.left));
  REQUIRE(is_corner(b.right));
  CHECK(b.left.vertex == "b");
  CHECK(b.left.column == 2);
  CHECK(b.left.serves);
  CHECK(b.right.vertex == "c");
  CHECK(b.right.column == 3);
  CHECK(b.right.serves);
  CHECK(validate_preconditions(a).pass());

  Arrangement a5 = make(path(5));
  REQUIRE(a5.bites.size() == 2);
  CHECK(is_corner(a5.bites[0].left));
  CHECK(is_corner(a5.bites[0].right));
  REQUIRE(is_corner(a5.bites[1].left));
  CHECK(a5.bites[1].left.vertex == "d");
  CHECK(a5.bites[1].left.column == 4);
  CHECK(is_wallcut(a5.bites[1].right));
  CHECK(validate_preconditions(a5).pass());
}

TEST_CASE("claw gets one splitter whose tip sits at the branch column") {
  Arrangement a = make(from_edges({{"a", "b"}, {"b", "c"}, {"b", "d"}}));
  CHECK(a.curves.size() == 5);
  CHECK(a.splitter_count == 1);
  CHECK(a.bites.empty());
  CHECK(a.X2 == 4);
  CHECK(a.Y2 == 6);
  const Curve& s = a.curves[4];
  CHECK(s.group == 3);
  CHECK(s.is_circle());
  CHECK(s.cx == 4);
  CHECK(s.cy == 3);
  REQUIRE(s.radius.has_value());
  CHECK(*s.radius == 2);
  CHECK(s.r2 == 4);
  CHECK(a.event_column.at("b") == 2);
  CHECK(validate_preconditions(a).pass());
}

TEST_CASE("a corner ending at a branch vertex is absorbed, not serving") {
  // a-b-c with two leaves under c: the chain bite must close at c's column.
  Arrangement a = make(from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"c", "e"}}));
  CHECK(a.curves.size() == 6);
  CHECK(a.splitter_count == 1);
  REQUIRE(a.bites.size() == 1);
  const BiteSpec& b = a.bites[0];
  CHECK(b.host == 2);
  REQUIRE(is_corner(b.left));
  REQUIRE(is_corner(b.right));
  CHECK(b.left.vertex == "b");
  CHECK(b.left.serves);
  CHECK(b.left.column == 2);
  CHECK(b.right.vertex == "c");
  CHECK_FALSE(b.right.serves);
  CHECK(b.right.column == 3);
  CHECK(validate_preconditions(a).pass());
}

TEST_CASE("a bite hosted on a splitter moves its column to a rational circle point") {
  // b branches to c, e, g; e carries a degree-2 vertex whose band is
  // bounded by splitters on both sides.
  Arrangement a = make(
      from_edges({{"a", "b"}, {"b", "c"}, {"b", "e"}, {"b", "g"}, {"e", "f"}}));
  CHECK(a.splitter_count == 2);
  CHECK(a.curves.size() == 7);
  CHECK(a.X2 == 5);
  CHECK(a.Y2 == 15);
  // Equal radii: both gaps branch at b.
  CHECK(*a.curves[4].radius == 3);
  CHECK(*a.curves[5].radius == 3);
  CHECK(a.curves[4].cy == 4);
  CHECK(a.curves[5].cy == 11);
  REQUIRE(a.bites.size() == 1);
  const BiteSpec& b = a.bites[0];
  CHECK(b.host == 4);  // first splitter
  CHECK(b.band_above);
  REQUIRE(is_corner(b.left));
  CHECK(b.left.vertex == "e");
  CHECK(b.left.column == Rat(16, 5));
  CHECK(is_wallcut(b.right));
  CHECK(a.event_column.at("e") == Rat(16, 5));
  // The corner really is a rational point of the splitter circle.
  Rat dx = Rat(16, 5) - a.curves[4].cx;
  Rat dy = Rat(32, 5) - a.curves[4].cy;
  CHECK(dx * dx + dy * dy == a.curves[4].r2);
  CHECK(validate_preconditions(a).pass());
}

TEST_CASE("full coverage walks a path as alternating wall bites") {
  Arrangement a = make(path(4), {1, 1, 1, 0});
  CHECK(a.uncovered_edges.empty());
  REQUIRE(a.bites.size() == 3);
  CHECK(a.curves.size() == 7);

  CHECK(a.bites[0].host == 2);
  CHECK(is_wallcut(a.bites[0].left));
  REQUIRE(is_corner(a.bites[0].right));
  CHECK(a.bites[0].right.vertex == "b");
  CHECK(a.bites[0].right.serves);
  CHECK(a.bites[0].covers ==
        std::vector<std::pair<std::string, std::string>>{{"a", "b"}});

  CHECK(a.bites[1].host == 3);
  CHECK_FALSE(a.bites[1].band_above);
  REQUIRE(is_corner(a.bites[1].left));
  REQUIRE(is_corner(a.bites[1].right));
  CHECK(a.bites[1].left.vertex == "b");
  CHECK(a.bites[1].right.vertex == "c");
  CHECK(a.bites[1].covers ==
        std::vector<std::pair<std::string, std::string>>{{"b", "c"}});

  CHECK(a.bites[2].host == 2);
  REQUIRE(is_corner(a.bites[2].left));
  CHECK(a.bites[2].left.vertex == "c");
  CHECK(is_wallcut(a.bites[2].right));
  CHECK(a.bites[2].covers ==
        std::vector<std::pair<std::string, std::string>>{{"c", "d"}});
  CHECK(validate_preconditions(a).pass());
}

TEST_CASE("an omitted edge splits the walk and is recorded as uncovered") {
  CycleSelection sel{{{"b", "c"}}};
  Arrangement a = make(path(4), {1, 1, 1, 0}, sel);
  CHECK(a.uncovered_edges ==
        std::vector<std::pair<std::string, std::string>>{{"b", "c"}});
  REQUIRE(a.bites.size() == 2);
  CHECK(a.bites[0].host == 2);
  CHECK(is_wallcut(a.bites[0].left));
  REQUIRE(is_corner(a.bites[0].right));
  CHECK(a.bites[0].right.vertex == "b");
  CHECK(a.bites[0].right.serves);
  CHECK(a.bites[1].host == 2);
  REQUIRE(is_corner(a.bites[1].left));
  CHECK(a.bites[1].left.vertex == "c");
  CHECK(a.bites[1].left.serves);
  CHECK(is_wallcut(a.bites[1].right));
  CHECK(validate_preconditions(a).pass());
}

TEST_CASE("full coverage at a branch: run-through, fresh run, uncovered middle child") {
  Multigraph star = from_edges({{"a", "b"}, {"b", "c"}, {"b", "e"}, {"b", "g"}});
  Arrangement a = make(star, {1, 1, 1, 0});
  CHECK(a.splitter_count == 2);
  CHECK(a.curves.size() == 8);
  CHECK(a.uncovered_edges ==
        std::vector<std::pair<std::string, std::string>>{{"b", "e"}});
  bool noted = false;
  for (const auto& n : a.notes) noted = noted || n.find("middle child") != std::string::npos;
  CHECK(noted);
  REQUIRE(a.bites.size() == 2);
  // The root-edge run passes through b into its first child and exits at the
  // right wall: both ends are wall cuts.
  CHECK(a.bites[0].host == 2);
  CHECK(is_wallcut(a.bites[0].left));
  CHECK(is_wallcut(a.bites[0].right));
  CHECK(a.bites[0].covers == std::vector<std::pair<std::string, std::string>>{
                                 {"a", "b"}, {"b", "c"}});
  // The last child rides a fresh run on the top wall, opened by an absorbed
  // corner at b's column.
  CHECK(a.bites[1].host == 3);
  CHECK_FALSE(a.bites[1].band_above);
  REQUIRE(is_corner(a.bites[1].left));
  CHECK(a.bites[1].left.vertex == "b");
  CHECK_FALSE(a.bites[1].left.serves);
  CHECK(a.bites[1].left.column == 2);
  CHECK(is_wallcut(a.bites[1].right));
  CHECK(a.bites[1].covers ==
        std::vector<std::pair<std::string, std::string>>{{"b", "g"}});
  CHECK(validate_preconditions(a).pass());
}

TEST_CASE("full coverage of a single edge bites across the whole rectangle") {
  Arrangement a = make(path(2), {1, 1, 1, 0});
  CHECK(a.curves.size() == 5);
  REQUIRE(a.bites.size() == 1);
  CHECK(is_wallcut(a.bites[0].left));
  CHECK(is_wallcut(a.bites[0].right));
  CHECK(a.bites[0].covers ==
        std::vector<std::pair<std::string, std::string>>{{"a", "b"}});
  CHECK(a.uncovered_edges.empty());
  CHECK(validate_preconditions(a).pass());
}

TEST_CASE("exponent and selection errors are rejected") {
  Multigraph p4 = path(4);
  LeveledEmbedding e = level_tree(p4);
  CHECK_THROWS_AS(build_arrangement(e, {0, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_arrangement(e, {1, 0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_arrangement(e, {1, 1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_arrangement(e, {1, 1, 1, -1}), std::invalid_argument);
  // Omitting edges is meaningless while markers carry a sphere.
  CycleSelection sel{{{"b", "c"}}};
  CHECK_THROWS_AS(build_arrangement(e, {1, 1, 1, 1}, sel), std::invalid_argument);
  // Unknown edge in a selection.
  CycleSelection bogus{{{"b", "z"}}};
  CHECK_THROWS_AS(build_arrangement(e, {1, 1, 1, 0}, bogus), std::invalid_argument);
}

TEST_CASE("higher exponents only change the recorded powers") {
  Arrangement a = make(path(3), {2, 3, 1, 4});
  CHECK(a.exponents == std::array<int, 4>{2, 3, 1, 4});
  CHECK(a.exponent_of_group(2) == 3);
  CHECK(a.curves.size() == 5);
  CHECK(validate_preconditions(a).pass());
}

TEST_CASE("structural invariants hold across a family of trees") {
  std::vector<Multigraph> trees;
  for (int n = 2; n <= 9; ++n) trees.push_back(path(n));
  trees.push_back(from_edges({{"a", "b"}, {"b", "c"}, {"b", "d"}}));
  trees.push_back(from_edges({{"a", "b"}, {"b", "c"}, {"b", "d"}, {"b", "e"}}));
  trees.push_back(from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"c", "e"}}));
  trees.push_back(
      from_edges({{"a", "b"}, {"b", "c"}, {"b", "e"}, {"b", "g"}, {"e", "f"}}));
  trees.push_back(from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"},
                              {"c", "f"}, {"f", "g"}}));
  trees.push_back(from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"c", "e"},
                              {"b", "f"}, {"f", "g"}, {"g", "h"}}));

  for (const Multigraph& t : trees) {
    LeveledEmbedding e = level_tree(t);
    for (std::array<int, 4> exps : {std::array<int, 4>{1, 1, 1, 1},
                                    std::array<int, 4>{1, 1, 1, 0}}) {
      Arrangement a = build_arrangement(e, exps);
      ValidationReport rep = validate_preconditions(a);
      for (const auto& issue : rep.issues) {
        INFO(issue.check << ": " << issue.detail);
        CHECK(false);
      }
      CHECK(rep.pass());

      int K = static_cast<int>(e.leaf_order.size());
      CHECK(a.splitter_count == K - 1);

      // Event columns: root on the left wall, leaves on the right wall,
      // interior vertices within 1/4 of their level.
      for (int i = 0; i < t.vertex_count(); ++i) {
        const std::string v = t.vertex_id(i);
        Rat col = a.event_column.at(v);
        if (v == e.root) {
          CHECK(col == a.X1);
        } else if (t.degree(t.vertex_index(v).value()) == 1) {
          CHECK(col == a.X2);
        } else {
          Rat d = col - Rat(e.level_of.at(v));
          CHECK(d <= Rat(1, 4));
          CHECK(-d <= Rat(1, 4));
        }
      }

      // Splitter tips sit at the event column of the gap's branch vertex.
      for (int s = 0; s < a.splitter_count; ++s) {
        const Curve& c = a.curves[4 + s];
        CHECK(c.group == 3);
        REQUIRE(c.radius.has_value());
        std::string b = lca_of(e, e.leaf_order[s], e.leaf_order[s + 1]);
        CHECK(c.cx - *c.radius == a.event_column.at(b));
        CHECK(c.cx == a.X2);
      }

      // Marker bookkeeping: specs point at group-4 circles, corner columns
      // match the recorded event columns.
      for (const BiteSpec& b : a.bites) {
        REQUIRE(b.curve >= 0);
        CHECK(a.curves[b.curve].group == 4);
        CHECK(a.curves[b.curve].is_circle());
        CHECK(b.host >= 2);
        CHECK(b.host < 4 + a.splitter_count);
        for (const BiteEnd* end : {&b.left, &b.right})
          if (end->kind == BiteEnd::Kind::Corner && end->serves)
            CHECK(a.event_column.at(end->vertex) == end->column);
      }

      if (exps[3] >= 1) {
        // Minimal mode: exactly one serving corner per degree-2 vertex.
        std::map<std::string, int> served;
        for (const BiteSpec& b : a.bites)
          for (const BiteEnd* end : {&b.left, &b.right})
            if (end->kind == BiteEnd::Kind::Corner && end->serves) ++served[end->vertex];
        for (int i = 0; i < t.vertex_count(); ++i) {
          const std::string v = t.vertex_id(i);
          bool deg2 = v != e.root && t.degree(i) == 2;
          CHECK(served[v] == (deg2 ? 1 : 0));
        }
        CHECK(a.uncovered_edges.empty());
      } else {
        // Full mode: every tree edge is covered exactly once or uncovered.
        std::map<std::pair<std::string, std::string>, int> seen;
        for (const BiteSpec& b : a.bites)
          for (const auto& ed : b.covers) ++seen[ed];
        for (const auto& ed : a.uncovered_edges) ++seen[ed];
        CHECK(static_cast<int>(seen.size()) == t.edge_count());
        for (const auto& [ed, cnt] : seen) {
          INFO(ed.first << "-" << ed.second);
          CHECK(cnt == 1);
        }
      }
    }
  }
}
