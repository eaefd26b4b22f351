#pragma once
// Realizes a leveled tree embedding as a plane region: a rectangle bounded
// by four walls minus a stack of excluded disks.
//
//   group 1  two vertical walls x = X1, x = X2
//   group 2  two horizontal walls y = Y1, y = Y2
//   group 3  one "splitter" disk per branch gap, centered on the right
//            wall; its left tip at the branch column splits a band exactly
//            where the tree branches
//   group 4  small "marker" disks biting into band boundaries; each bite's
//            boundary crossings ("corners") pin one sweep event
//
// Sweeping x across the region reproduces the tree as a Reeb graph: wall
// segments give the root and leaf vertices, splitter tips give the branch
// vertices, and bite corners give the degree-2 vertices (which a smooth
// region would otherwise smooth away).
//
// Every sweep-relevant event is kept at a rational column. Degree-2 event
// columns default to the vertex's integer level; when the pinning corner
// must sit on a circle (a splitter boundary), the column moves by at most
// 1/4 to a rational point of that circle. Marker circles get rational
// centers and squared radii; their own leftmost/rightmost points stay
// outside the closed region, so no irrational event column ever enters the
// sweep.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reebforge/geometry.hpp"
#include "reebforge/leveling.hpp"

namespace reebforge {

// Edges deliberately left without marker coverage when the marker group's
// exponent is zero. Each such edge contributes two sheets instead of one,
// doubling it in the resulting Reeb graph.
struct CycleSelection {
  std::vector<std::pair<std::string, std::string>> omitted_edges;
};

// One marker disk: a bite on a host curve. Each end is either a corner at
// a prescribed rational column, or a wall cut (the bite crosses a vertical
// wall and swallows the region corner behind the crossing).
struct BiteEnd {
  enum class Kind { Corner, WallCut };
  Kind kind = Kind::Corner;
  Rat column;          // Corner only: the event column
  std::string vertex;  // vertex this end pins or is absorbed by ("" = wall)
  bool serves = false;  // true: realizes a degree-2 Reeb vertex here
};

struct BiteSpec {
  int host = -1;   // index into Arrangement::curves
  int curve = -1;  // the marker circle this spec produced
  bool band_above = true;  // band side of the host the bite protrudes into
  BiteEnd left, right;
  std::vector<std::pair<std::string, std::string>> covers;  // edges (parent, child)
};

struct Arrangement {
  std::vector<Curve> curves;  // walls, then splitters, then markers
  std::array<int, 4> exponents{1, 1, 1, 1};
  Rat X1, X2, Y1, Y2;
  std::pair<Rat, Rat> region_seed;

  // Construction record: one event column per tree vertex (root at X1,
  // leaves at X2), the marker plan, edges left uncovered under a zero
  // marker exponent (these double), and fallbacks taken.
  std::map<std::string, Rat> event_column;
  std::vector<BiteSpec> bites;
  std::vector<std::pair<std::string, std::string>> uncovered_edges;
  std::vector<std::string> notes;
  int splitter_count = 0;

  int exponent_of_group(int g) const { return exponents.at(g - 1); }
};

// Builds the region for a leveled tree. Exponents are the sphere dimensions
// attached to the four curve groups; groups 1..3 need exponents >= 1.
// exponents[3] >= 1 places markers minimally (only degree-2 vertices get
// corners); exponents[3] == 0 switches to full coverage, where every edge
// wants a marker, `selection` names edges to leave uncovered on purpose,
// and structurally uncoverable edges (middle children of a branch) are
// reported in uncovered_edges.
Arrangement build_arrangement(const LeveledEmbedding& e, const std::array<int, 4>& exponents,
                              const CycleSelection& selection = {});

// --- validation ---------------------------------------------------------

struct ValidationIssue {
  std::string check;   // stable identifier, e.g. "transversal"
  std::string detail;  // human-readable, includes a witness
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool pass() const { return issues.empty(); }
};

// Exact checks of every geometric precondition the sweep relies on:
//   bounds            X1 < X2, Y1 < Y2
//   walls             groups 1/2 are the two wall pairs, oriented inward
//   exponents         groups 1..3 carry exponent >= 1, group 4 >= 0
//   seed-interior     the recorded seed satisfies every f > 0
//   curve-meets-region  every curve touches the closed region
//   same-group-disjoint no two same-group curves meet inside the region
//   transversal       tangential curve contacts stay outside the region
//   no-triple-point   no point of the region lies on three curves
//   marker-two-point  each marker crosses lines+splitters in exactly 2
//                     region points
//   rational-events   in-region crossings and circle extremes have
//                     rational x
ValidationReport validate_preconditions(const Arrangement& a);

// --- point classification -------------------------------------------------

enum class PointClass { Interior, OneWall, Corner, Outside };

struct PointClassification {
  PointClass cls = PointClass::Outside;
  std::vector<int> on_curves;  // curve indices where f vanishes
  std::string fiber;  // sphere factor per group; disk factor where f vanishes
};

PointClassification classify_point(const Arrangement& a, const Rat& x, const Rat& y);

// Region membership, exact. The QuadExt overload serves crossing points.
bool in_open_region(const Arrangement& a, const Rat& x, const Rat& y);
bool in_closed_region(const Arrangement& a, const QuadExt& x, const QuadExt& y);

}  // namespace reebforge
