#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "reebforge/algebraic.hpp"
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

Arrangement arr_for(const std::vector<std::pair<std::string, std::string>>& edges,
                    std::array<int, 4> exps = {1, 1, 1, 1}) {
  return build_arrangement(level_tree(from_edges(edges)), exps);
}

std::vector<std::vector<double>> axis_directions(const AlgebraicSystem& s) {
  std::vector<std::vector<double>> dirs;
  for (const auto& eq : s.equations) {
    std::vector<double> d(eq.exponent + 1, 0.0);
    d[0] = 1.0;
    dirs.push_back(d);
  }
  return dirs;
}

}  // namespace

TEST_CASE("polynomial arithmetic expands curves exactly") {
  Curve c = Curve::circle(2, 3, 5, 3, "c");
  Poly2 p = poly_of_curve(c);
  // (x1-2)^2 + (x2-3)^2 - 5 = x1^2 + x2^2 - 4 x1 - 6 x2 + 8
  CHECK(p.at({2, 0}) == 1);
  CHECK(p.at({0, 2}) == 1);
  CHECK(p.at({1, 0}) == -4);
  CHECK(p.at({0, 1}) == -6);
  CHECK(p.at({0, 0}) == 8);
  CHECK(poly_eval(p, Rat(2), Rat(3)) == -5);

  Poly2 d = poly_diff(p, 0);
  CHECK(d.at({1, 0}) == 2);
  CHECK(d.at({0, 0}) == -4);
  CHECK(d.count({0, 1}) == 0);

  Poly2 q = poly_of_curve(Curve::vline(1, 1, 1, "w"));
  Poly2 prod = poly_mul(p, q);
  CHECK(poly_eval(prod, Rat(0), Rat(0)) == poly_eval(p, Rat(0), Rat(0)) * Rat(-1));
}

TEST_CASE("a single edge emits the two wall equations") {
  AlgebraicSystem s = emit_algebraic_system(arr_for({{"a", "b"}}));
  REQUIRE(s.equations.size() == 2);
  CHECK(s.equations[0].group == 1);
  CHECK(s.equations[1].group == 2);
  CHECK(s.ambient_dimension == 6);
  CHECK(s.manifold_dimension == 4);
  // Group 1: x1 (3 - x1) = -x1^2 + 3 x1.
  CHECK(s.equations[0].product.at({2, 0}) == -1);
  CHECK(s.equations[0].product.at({1, 0}) == 3);
  CHECK(s.equations[0].product.count({0, 0}) == 0);
}

TEST_CASE("a branching tree with markers emits all four group equations") {
  AlgebraicSystem s = emit_algebraic_system(arr_for({{"a", "b"},
                                                     {"b", "c"},
                                                     {"c", "d"},
                                                     {"c", "g"},
                                                     {"c", "h"},
                                                     {"c", "i"},
                                                     {"d", "f"}}));
  REQUIRE(s.equations.size() == 4);
  CHECK(s.ambient_dimension == 10);
  CHECK(s.manifold_dimension == 6);
  for (int e = 0; e < 4; ++e) CHECK(s.equations[e].group == e + 1);
}

TEST_CASE("higher exponents widen the y blocks") {
  AlgebraicSystem s = emit_algebraic_system(arr_for({{"a", "b"}, {"b", "c"}}, {2, 3, 1, 4}));
  // Groups 1, 2, 4 are nonempty (a path has no splitters).
  REQUIRE(s.equations.size() == 3);
  CHECK(s.equations[0].exponent == 2);
  CHECK(s.equations[1].exponent == 3);
  CHECK(s.equations[2].group == 4);
  CHECK(s.equations[2].exponent == 4);
  CHECK(s.ambient_dimension == 2 + 3 + 4 + 5);
  CHECK(s.manifold_dimension == 2 + 2 + 3 + 4);
  CHECK(s.equations[1].y_offset == 3);
  CHECK(s.equations[2].y_offset == 7);
}

TEST_CASE("lifting the seed satisfies every equation") {
  std::vector<std::vector<std::pair<std::string, std::string>>> trees = {
      {{"a", "b"}},
      {{"a", "b"}, {"b", "c"}, {"c", "d"}},
      {{"a", "b"}, {"b", "c"}, {"b", "e"}, {"b", "g"}, {"e", "f"}},
  };
  for (const auto& edges : trees) {
    Arrangement a = arr_for(edges);
    AlgebraicSystem s = emit_algebraic_system(a);
    for (const auto& eq : s.equations)
      CHECK(poly_eval(eq.product, a.region_seed.first, a.region_seed.second) > 0);
    std::vector<double> pt =
        lift_point(s, a.region_seed.first, a.region_seed.second, axis_directions(s));
    for (double r : system_residuals(s, pt)) CHECK(std::abs(r) < 1e-12);
  }
}

TEST_CASE("wall and corner lifts zero the collapsed blocks exactly") {
  Arrangement a = arr_for({{"a", "b"}});  // plain rectangle, Y2 = 1, X2 = 3
  AlgebraicSystem s = emit_algebraic_system(a);

  std::vector<double> wall = lift_point(s, Rat(1), Rat(0), axis_directions(s));
  CHECK(wall[2 + s.equations[1].y_offset] == 0.0);      // group 2 collapsed
  CHECK(wall[2 + s.equations[0].y_offset] != 0.0);      // group 1 intact
  for (double r : system_residuals(s, wall)) CHECK(std::abs(r) < 1e-12);

  std::vector<double> corner = lift_point(s, Rat(0), Rat(0), axis_directions(s));
  CHECK(corner[2 + s.equations[0].y_offset] == 0.0);
  CHECK(corner[2 + s.equations[1].y_offset] == 0.0);

  CHECK_THROWS_AS(lift_point(s, Rat(-1), Rat(0), axis_directions(s)),
                  std::invalid_argument);
  std::vector<std::vector<double>> bad = axis_directions(s);
  bad[0] = {0.0, 0.0};
  CHECK_THROWS_AS(lift_point(s, Rat(1), Rat(1, 2), bad), std::invalid_argument);
}

TEST_CASE("random interior lifts pass the rank check") {
  Arrangement a = arr_for({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"c", "e"}});
  AlgebraicSystem s = emit_algebraic_system(a);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(1, 4095);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<std::vector<double>> pts;
  while (pts.size() < 100) {
    Rat x(num(rng), 4096);
    Rat y(num(rng), 4096);
    x = a.X1 + x * (a.X2 - a.X1);
    y = a.Y1 + y * (a.Y2 - a.Y1);
    if (!in_open_region(a, x, y)) continue;
    std::vector<std::vector<double>> dirs;
    for (const auto& eq : s.equations) {
      std::vector<double> d(eq.exponent + 1);
      double n2 = 0;
      do {
        n2 = 0;
        for (double& v : d) {
          v = unit(rng);
          n2 += v * v;
        }
      } while (n2 < 1e-4);
      dirs.push_back(d);
    }
    pts.push_back(lift_point(s, x, y, dirs));
  }
  JacobianReport rep = jacobian_rank_check(s, pts);
  CHECK(rep.points_checked == 100);
  CHECK(rep.max_residual < 1e-9);
  CHECK(rep.worst_ratio > 1e-6);
  CHECK(rep.pass);
}

TEST_CASE("a tangency collapses the Jacobian rank") {
  // Hand-built arrangement with a circle tangent to the bottom wall: the
  // validator rejects it, and the lift at the tangency is rank-deficient.
  Arrangement a;
  a.X1 = 0;
  a.X2 = 3;
  a.Y1 = 0;
  a.Y2 = 2;
  a.curves = {Curve::vline(0, 1, 1, "S1"), Curve::vline(3, -1, 1, "S2"),
              Curve::hline(0, 1, 2, "S3"), Curve::hline(2, -1, 2, "S4"),
              Curve::circle(Rat(3, 2), Rat(1, 2), Rat(1, 4), 3, "tan", Rat(1, 2))};
  a.region_seed = {Rat(1, 4), Rat(1, 4)};
  CHECK_FALSE(validate_preconditions(a).pass());

  AlgebraicSystem s = emit_algebraic_system(a);
  REQUIRE(s.equations.size() == 3);
  std::vector<double> pt = lift_point(s, Rat(3, 2), Rat(0), axis_directions(s));
  JacobianReport rep = jacobian_rank_check(s, {pt});
  CHECK(rep.max_residual < 1e-9);
  CHECK(rep.worst_ratio < 1e-6);
  CHECK_FALSE(rep.pass);

  // A transversal wall point on the same region keeps full rank.
  std::vector<double> ok = lift_point(s, Rat(1, 2), Rat(0), axis_directions(s));
  JacobianReport rep2 = jacobian_rank_check(s, {ok});
  CHECK(rep2.worst_ratio > 1e-6);
  CHECK(rep2.pass);
}

TEST_CASE("polynomials print readably") {
  Poly2 p = poly_of_curve(Curve::circle(0, 0, 1, 3, "c"));
  CHECK(poly_to_string(p) == "x1^2 + x2^2 - 1");
  CHECK(poly_to_string(Poly2{}) == "0");
}
