#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adeq/resolution.hpp"

namespace adeq {

// One entry of a cell boundary walk. Cells are the faces of H together with
// the non-prime arcs; since that graph is connected and spherical, every
// cell is a disk with a single cyclic walk.
struct WalkItem {
  enum Kind { Circ = 0, Seg = 1, Arc = 2 };
  Kind kind = Circ;
  int dart = -1;      // H-dart for Circ/Seg items
  int arc = -1;       // arc id for Arc items
  int arc_side = -1;  // 0/1: which flank of the arc
  // Arc endpoints subdivide circle items into portions; these track whether
  // a portion still touches its dart's origin or head endpoint.
  bool first_portion = true;
  bool last_portion = true;
  int piece = -1;     // covering piece, set by the flooding
};

// An embedded arc with both endpoints on one state circle, splitting a
// region of the circle complement into two parts that each keep a segment.
struct NonPrimeArc {
  int circle = -1;
  int dart_a = -1, dart_b = -1;  // walk-side darts carrying the endpoints
  int cell_a = -1, cell_b = -1;  // final cells flanking sides 0/1
};

struct Cell {
  std::vector<WalkItem> items;  // cyclic walk order
  bool disk = false;            // circle-only walk: an innermost disk
  int region = -1;              // polyhedral region, -1 for disks
};

// Non-trivial regions after all arc splittings; they partition the segments.
struct PolyhedralRegion {
  std::vector<int> cells;
  std::vector<int> segments;  // crossing ids
  std::vector<int> circles;
  std::vector<int> arcs;
  char letter = 0;
};

// A constituent of a shaded face. Disks seed the flooding; a tentacle enters
// through one gap, runs along its segment and then along one state circle;
// a switch shades a neighborhood of a non-prime arc, joining the two strips
// that flow into the arc ends and continuing past them.
struct Piece {
  enum Kind { Disk = 0, Tentacle = 1, Switch = 2 };
  Kind kind = Disk;
  int color = -1;        // shaded-face id after all switch merges
  int donor = -1;        // feeding piece; switches keep both attachments
  int donor2 = -1;
  int cell = -1;         // disk cell, or the cell holding a tentacle head
  int gap_vertex = -1;   // tentacle: vertex whose gap it enters
  int head_dart = -1;    // tentacle: dart of its segment item
  int far_vertex = -1;   // tentacle: far endpoint of that segment
  int arc = -1;          // switch: its arc
  std::vector<std::pair<int, int>> covered;  // (cell, item index) in order
};

// The white face kept by each non-disk cell: the shaded pieces visible
// around its boundary, deduplicated along the walk.
struct WhiteFace {
  int cell = -1;
  std::vector<int> pieces;
};

struct UpperPolyhedron {
  StateComplex sc;
  std::vector<NonPrimeArc> arcs;
  std::vector<Cell> cells;
  std::vector<PolyhedralRegion> regions;
  std::vector<Piece> pieces;
  std::vector<int> tentacle_of_vertex;  // gap vertex -> tentacle piece
  int disk_count = 0;
  int face_count = 0;  // shaded faces; always disk_count - arcs.size()
  std::vector<WhiteFace> whites;
  std::vector<int> piece_face;  // piece -> dense shaded-face id

  int face_of_piece(int p) const;
};

// Runs the whole construction: arc search, region splitting, flooding,
// switch merges, and the bookkeeping invariants. Requires a homogeneous
// state (PreconditionMissing otherwise); adequacy is the caller's business,
// which the corrupted-control tests exploit. Throws FloodingContradiction
// if coverage or the switch merges break down.
UpperPolyhedron build_upper_polyhedron(const StateComplex& sc);

std::vector<NonPrimeArc> find_nonprime_arcs(const StateComplex& sc);
std::vector<PolyhedralRegion> polyhedral_regions(const StateComplex& sc);

// Alternating subdiagram spanned by one polyhedral region: a crossing per
// segment, edges from the circle stretches between consecutive region
// vertices. Each subdiagram must parse, alternate, and be prime
// (NonPrimeRegion when the primeness contract fails).
struct LowerPolyhedron {
  int region = -1;
  std::string pd;
  int crossings = 0;
};
std::vector<LowerPolyhedron> lower_polyhedron_diagrams(const UpperPolyhedron& up);

// A maximal run of tentacles each spawned by the one before: the segments
// alternate sides along the circles they hang from, stepping monotonically
// downstream.
struct StaircaseStep {
  int tentacle = -1;
  int crossing = -1;
  int from_circle = -1;
  int to_circle = -1;
  char letter = 0;
};
struct Staircase {
  int face = -1;
  std::vector<StaircaseStep> steps;
};

// All maximal staircases inside one shaded face whose first step hangs from
// `origin_circle`.
std::vector<Staircase> enumerate_staircases(const UpperPolyhedron& up, int face,
                                            int origin_circle);

// A staircase returning to its starting circle is geometrically impossible
// for adequate states: same-side returns (type 1) and opposite-side returns
// (type 2, a directed loop) are both flagged.
struct EscherViolation {
  int type = 0;  // 1 same side, 2 opposite side
  int circle = -1;
  Staircase chain;
};
std::vector<EscherViolation> check_escher(const UpperPolyhedron& up);

}  // namespace adeq
