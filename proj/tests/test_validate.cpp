#include <doctest.h>

#include <string>
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

// Bare rectangle fixture: passes every check until a test breaks something.
Arrangement rect() {
  Arrangement a;
  a.X1 = 0;
  a.X2 = 3;
  a.Y1 = 0;
  a.Y2 = 2;
  a.curves = {Curve::vline(a.X1, 1, 1, "S1"), Curve::vline(a.X2, -1, 1, "S2"),
              Curve::hline(a.Y1, 1, 2, "S3"), Curve::hline(a.Y2, -1, 2, "S4")};
  a.region_seed = {Rat(1, 2), Rat(1, 2)};
  return a;
}

bool has_check(const ValidationReport& r, const std::string& check) {
  for (const auto& i : r.issues)
    if (i.check == check) return true;
  return false;
}

}  // namespace

TEST_CASE("the bare rectangle validates") {
  ValidationReport r = validate_preconditions(rect());
  CHECK(r.pass());
}

TEST_CASE("unordered wall coordinates fail bounds") {
  Arrangement a = rect();
  std::swap(a.X1, a.X2);
  std::swap(a.curves[0], a.curves[1]);  // keep curve/bound pairing consistent
  ValidationReport r = validate_preconditions(a);
  CHECK_FALSE(r.pass());
  CHECK(has_check(r, "bounds"));
}

TEST_CASE("an outward-oriented wall fails the wall check") {
  Arrangement a = rect();
  a.curves[0] = Curve::vline(a.X1, -1, 1, "S1");
  CHECK(has_check(validate_preconditions(a), "walls"));
}

TEST_CASE("a stray extra line fails the wall check") {
  Arrangement a = rect();
  a.curves.push_back(Curve::hline(1, 1, 2, "extra"));
  CHECK(has_check(validate_preconditions(a), "walls"));
}

TEST_CASE("zero exponents on sphere groups are rejected") {
  Arrangement a = rect();
  a.exponents = {0, 1, 1, 1};
  CHECK(has_check(validate_preconditions(a), "exponents"));
  a.exponents = {1, 1, 1, -2};
  CHECK(has_check(validate_preconditions(a), "exponents"));
}

TEST_CASE("a seed outside the region is caught") {
  Arrangement a = rect();
  a.region_seed = {Rat(-1), Rat(1, 2)};
  CHECK(has_check(validate_preconditions(a), "seed-interior"));
}

TEST_CASE("a circle that misses the region entirely is caught") {
  Arrangement a = rect();
  a.curves.push_back(Curve::circle(10, 10, 1, 3, "far", Rat(1)));
  ValidationReport r = validate_preconditions(a);
  CHECK(has_check(r, "curve-meets-region"));
}

TEST_CASE("two same-group circles crossing inside the region are caught") {
  Arrangement a = rect();
  a.curves.push_back(Curve::circle(1, 1, 1, 3, "sp1", Rat(1)));
  a.curves.push_back(Curve::circle(2, 1, 1, 3, "sp2", Rat(1)));
  // They cross at x = 3/2, y = 1 +- sqrt(3)/2, both inside the rectangle.
  ValidationReport r = validate_preconditions(a);
  CHECK(has_check(r, "same-group-disjoint"));
}

TEST_CASE("coinciding curves are reported as a same-group failure") {
  Arrangement a = rect();
  a.curves.push_back(Curve::circle(1, 1, 1, 3, "sp1", Rat(1)));
  a.curves.push_back(Curve::circle(1, 1, 1, 3, "sp1b", Rat(1)));
  CHECK(has_check(validate_preconditions(a), "same-group-disjoint"));
}

TEST_CASE("an in-region tangency fails transversality") {
  Arrangement a = rect();
  // Tangent to the bottom wall at (3/2, 0) from above.
  a.curves.push_back(Curve::circle(Rat(3, 2), Rat(1, 2), Rat(1, 4), 3, "tan", Rat(1, 2)));
  CHECK(has_check(validate_preconditions(a), "transversal"));
}

TEST_CASE("three curves through one region point are caught") {
  Arrangement a = rect();
  // Both circles pass through (2, 0) on the bottom wall.
  a.curves.push_back(Curve::circle(Rat(3, 2), Rat(-3, 4), Rat(13, 16), 3, "A"));
  a.curves.push_back(Curve::circle(Rat(5, 2), Rat(-3, 4), Rat(13, 16), 3, "B"));
  ValidationReport r = validate_preconditions(a);
  CHECK(has_check(r, "no-triple-point"));
}

TEST_CASE("a marker that never crosses the band boundary is caught") {
  Arrangement a = rect();
  // Fully interior group-4 circle: zero crossings instead of two.
  a.curves.push_back(Curve::circle(Rat(3, 2), 1, Rat(1, 16), 4, "m1", Rat(1, 4)));
  ValidationReport r = validate_preconditions(a);
  CHECK(has_check(r, "marker-two-point"));
  CHECK_FALSE(has_check(r, "curve-meets-region"));
}

TEST_CASE("irrational crossing columns are caught") {
  Arrangement a = rect();
  // Crosses the bottom wall at x = 2 +- sqrt(2).
  a.curves.push_back(Curve::circle(2, -1, 3, 3, "irr"));
  ValidationReport r = validate_preconditions(a);
  CHECK(has_check(r, "rational-events"));
}

TEST_CASE("issues carry a printable witness") {
  Arrangement a = rect();
  a.curves.push_back(Curve::circle(2, -1, 3, 3, "irr"));
  for (const auto& i : validate_preconditions(a).issues) CHECK_FALSE(i.detail.empty());
}

TEST_CASE("region membership is exact") {
  Arrangement a = rect();
  CHECK(in_open_region(a, Rat(1, 2), Rat(1, 2)));
  CHECK_FALSE(in_open_region(a, Rat(0), Rat(1, 2)));
  CHECK(in_closed_region(a, QuadExt(Rat(0)), QuadExt(Rat(1, 2))));
  CHECK_FALSE(in_closed_region(a, QuadExt(Rat(-1)), QuadExt(Rat(1, 2))));
}

TEST_CASE("point classification reports the fiber over each stratum") {
  Multigraph p2 = from_edges({{"a", "b"}});
  Arrangement a = build_arrangement(level_tree(p2), {1, 1, 1, 1});

  PointClassification inside = classify_point(a, Rat(3, 2), Rat(1, 2));
  CHECK(inside.cls == PointClass::Interior);
  CHECK(inside.on_curves.empty());
  // Only the wall groups contribute: no splitters or markers exist here.
  CHECK(inside.fiber == "S^1 x S^1");

  PointClassification wall = classify_point(a, Rat(1), Rat(0));
  CHECK(wall.cls == PointClass::OneWall);
  CHECK(wall.on_curves == std::vector<int>{2});
  CHECK(wall.fiber == "S^1 x D^2");

  PointClassification corner = classify_point(a, Rat(0), Rat(0));
  CHECK(corner.cls == PointClass::Corner);
  CHECK(corner.on_curves == std::vector<int>{0, 2});
  CHECK(corner.fiber == "D^2 x D^2");

  PointClassification out = classify_point(a, Rat(-1), Rat(0));
  CHECK(out.cls == PointClass::Outside);
}

TEST_CASE("classification respects higher exponents and marker corners") {
  Multigraph p3 = from_edges({{"a", "b"}, {"b", "c"}});
  Arrangement a = build_arrangement(level_tree(p3), {2, 3, 1, 4});
  // The bite's serving corner sits at (2, 0): bottom wall times marker.
  PointClassification corner = classify_point(a, Rat(2), Rat(0));
  CHECK(corner.cls == PointClass::Corner);
  REQUIRE(corner.on_curves.size() == 2);
  CHECK(corner.on_curves[0] == 2);
  CHECK(corner.on_curves[1] == 4);
  CHECK(corner.fiber == "S^2 x D^4 x D^5");
}

TEST_CASE("a point on three curves refuses classification") {
  Arrangement a = rect();
  a.curves.push_back(Curve::circle(Rat(3, 2), Rat(-3, 4), Rat(13, 16), 3, "A"));
  a.curves.push_back(Curve::circle(Rat(5, 2), Rat(-3, 4), Rat(13, 16), 3, "B"));
  CHECK_THROWS_AS(classify_point(a, Rat(2), Rat(0)), std::runtime_error);
}

TEST_CASE("generated arrangements validate in both marker modes") {
  std::vector<Multigraph> trees = {
      from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}}),
      from_edges({{"a", "b"}, {"b", "c"}, {"b", "d"}, {"b", "e"}}),
      from_edges({{"a", "b"}, {"b", "c"}, {"b", "e"}, {"b", "g"}, {"e", "f"}}),
      from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"c", "g"}, {"c", "h"},
                  {"c", "i"}, {"d", "f"}}),
  };
  for (const Multigraph& t : trees) {
    LeveledEmbedding e = level_tree(t);
    for (std::array<int, 4> exps :
         {std::array<int, 4>{1, 1, 1, 1}, std::array<int, 4>{1, 1, 1, 0}}) {
      Arrangement a = build_arrangement(e, exps);
      ValidationReport rep = validate_preconditions(a);
      for (const auto& issue : rep.issues) {
        INFO(issue.check << ": " << issue.detail);
        CHECK(false);
      }
      CHECK(rep.pass());
    }
  }
}
