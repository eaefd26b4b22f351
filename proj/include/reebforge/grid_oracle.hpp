#pragma once
// Independent raster cross-check for the sweep. The open region is sampled
// on an n-by-n grid of cell centers with exact rational membership tests;
// each column becomes a list of cell intervals, intervals of neighboring
// columns are linked when their rows overlap, and straight runs are
// contracted so only topology changes (births, deaths, splits, merges)
// survive as vertices.
//
// For every group of exponent zero that owns curves, an interval doubles
// into two sheet nodes unless a neighboring cell just outside the interval
// lies inside one of the group's disks, which glues the pair — the raster
// analogue of the sweep's sheet tracking.
//
// The raster cannot see degree-2 events (corners move an interval's
// boundary without changing the component count), so the comparison
// contract is isomorphism against smooth_degree2 of the swept skeleton.

#include "reebforge/arrangement.hpp"
#include "reebforge/graph.hpp"

namespace reebforge {

Multigraph grid_oracle_reeb(const Arrangement& a, int resolution);

}  // namespace reebforge
