#pragma once
// Exact sweep-line computation of the Reeb graph of the height function
// (the x-coordinate) over a realized region, with sheet tracking for
// exponent-zero groups.
//
// Events are the x-coordinates where the slice structure can change:
// the two vertical walls, circle extremes inside the closed region, and
// curve crossings inside the closed region. Between consecutive events
// the slice is a fixed list of closed y-intervals, each bounded below and
// above by a known curve arc; the sweep samples each open slab at two
// rational points and asserts the structure agrees. Across an event,
// intervals are matched by taking each bounding arc to its exact value at
// the event column and locating the containing component of the closed
// event slice — all in quadratic-extension arithmetic, so coincident
// events (equal-x tangencies, corner stacks) are resolved exactly.
//
// Vertices are exactly the fiber components containing singular points:
// every point over a vertical wall, circle extremes, and crossings of two
// curves (a region corner). A topology change at a column with no singular
// point is an internal inconsistency and aborts the sweep.
//
// When a group's exponent is zero its sphere factor is S^0 = two points,
// so each fiber component doubles into two sheets unless it touches one
// of that group's curves, which glues the pair. Sheet merges and splits
// create vertices tagged SheetMerge/SheetSplit.
//
// Arrangements whose events are not all rational (no certificate) are
// swept in a best-effort floating mode with tolerance 1e-9; the result
// carries verified = false.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "reebforge/arrangement.hpp"
#include "reebforge/graph.hpp"

namespace reebforge {

struct ReebGraph {
  Multigraph skeleton;
  std::map<std::string, Rat> vertex_level;
  std::map<std::string, std::set<std::string>> vertex_provenance;
  std::vector<std::string> edge_fiber;  // aligned with skeleton.edges()
  bool verified = true;                 // false: floating fallback was used
};

// Every in-region crossing and in-region circle extreme has a rational
// x-coordinate, so the sweep can run fully exactly.
bool rational_event_certificate(const Arrangement& a);

// Reeb graph of the lifted height function, sheets tracked for
// exponent-zero groups. Identical to region_reeb when no exponent is zero.
ReebGraph sweep_reeb(const Arrangement& a);

// Reeb graph of the height function on the plane region itself (sheet
// tracking disabled).
ReebGraph region_reeb(const Arrangement& a);

struct SingularEvent {
  std::string kind;  // LeftWallSegment | RightWallSegment | Tangency | Corner
  Rat x;
  std::vector<std::string> curves;
};

// All vertex-generating events with exact coordinates, sorted by column.
// Requires the rational-event certificate.
std::vector<SingularEvent> singular_event_census(const Arrangement& a);

}  // namespace reebforge
