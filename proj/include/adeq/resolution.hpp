#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "adeq/diagram.hpp"

namespace adeq {

// A choice of smoothing letter per crossing. 'A' joins the (1,2) and (3,0)
// quadrant pairs of slots, 'B' joins (0,1) and (2,3).
struct State {
  std::string letters;

  static State uniform(int crossings, char letter) {
    return State{std::string(static_cast<size_t>(crossings), letter)};
  }
  // Validates length and alphabet against the diagram. Throws IncompleteState.
  static State parse(const std::string& s, int crossings);

  char at(int crossing) const { return letters[static_cast<size_t>(crossing)]; }
  int size() const { return static_cast<int>(letters.size()); }
  bool uniform_letter(char* out = nullptr) const;
};

// The smoothed diagram H as a trivalent planar map. Each crossing yields two
// vertices (one per smoothing arc), joined by one segment edge; the smoothing
// arcs close up into state circles. Vertex 2c+end carries three darts 3v+k,
// k counterclockwise; exactly one dart per vertex runs along the segment and
// the other two continue the state circle.
//
// Vertex end 0 owns slots {1,2} for an A-smoothed crossing and {0,1} for B;
// end 1 owns the complementary pair.
class StateComplex {
 public:
  StateComplex(const Diagram& d, const State& s);

  const Diagram& diagram() const { return d_; }
  const State& state() const { return s_; }

  int crossings() const { return d_.crossings(); }
  int vertices() const { return 2 * d_.crossings(); }
  int hdarts() const { return 6 * d_.crossings(); }

  static int hvertex(int h) { return h / 3; }
  static int hsigma(int h) { return (h / 3) * 3 + (h + 1) % 3; }
  static int hsigma_inv(int h) { return (h / 3) * 3 + (h + 2) % 3; }
  static int vertex_at(int crossing, int end) { return 2 * crossing + end; }
  static int crossing_of_vertex(int v) { return v / 2; }

  int halpha(int h) const { return halpha_[h]; }
  bool is_seg(int h) const { return kind_[h] != 0; }
  // For a circle dart: the diagram slot this germ points toward.
  int toward_slot(int h) const { return toward_slot_[h]; }

  int seg_dart(int v) const { return seg_dart_[v]; }
  // Circle germ on the side of the missing quadrant, always toward the odd
  // slot the vertex owns. For 'A' the gap follows the segment germ in the
  // rotation; for 'B' it precedes it.
  int gap_dart(int v) const { return gap_dart_[v]; }

  int circle_count() const { return static_cast<int>(circle_vertices_.size()); }
  int circle_of_vertex(int v) const { return circle_of_vertex_[v]; }
  int circle_of_dart(int h) const { return circle_of_vertex_[hvertex(h)]; }
  // Vertices in traversal order around the circle.
  const std::vector<int>& circle_vertices(int c) const { return circle_vertices_[c]; }
  // 0 if the dart points with the stored traversal, 1 against; -1 for segments.
  int circ_class(int h) const { return circ_class_[h]; }

  // Faces of H as left-hand boundary walks, each listed in walk order.
  int face_count() const { return static_cast<int>(faces_.size()); }
  const std::vector<int>& face(int f) const { return faces_[f]; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  int face_of(int h) const { return face_of_[h]; }
  int face_next(int h) const { return hsigma_inv(halpha_[h]); }

  // Complementary regions of the state circles alone: faces glued across
  // segment edges. A trivial region is a single circle-only face, the
  // innermost-disk case.
  struct Region {
    std::vector<int> faces;
    std::vector<int> segments;  // crossing ids
    std::vector<int> circles;
    bool trivial = false;
    // Uniform smoothing letter of the segments, or 0 when mixed/empty.
    char letter = 0;
  };
  int region_count() const { return static_cast<int>(regions_.size()); }
  const Region& region(int r) const { return regions_[r]; }
  const std::vector<Region>& regions() const { return regions_; }
  int region_of_face(int f) const { return region_of_face_[f]; }
  int region_of_segment(int crossing) const { return region_of_segment_[crossing]; }

 private:
  Diagram d_;
  State s_;
  std::vector<int> halpha_;
  std::vector<char> kind_;  // 0 circle, 1 segment
  std::vector<int> toward_slot_;
  std::vector<int> seg_dart_, gap_dart_;
  std::vector<int> circle_of_vertex_;
  std::vector<std::vector<int>> circle_vertices_;
  std::vector<int> circ_class_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> face_of_;
  std::vector<Region> regions_;
  std::vector<int> region_of_face_;
  std::vector<int> region_of_segment_;
};

// State graph: one vertex per state circle, one edge per segment.
struct StateGraph {
  int vertices = 0;
  struct Edge {
    int crossing;  // -1 after reduction merges parallels
    int a, b;      // circle ids, a <= b
  };
  std::vector<Edge> edges;
};

StateGraph state_graph(const StateComplex& sc);
// One edge per unordered endpoint pair; loops survive as single loops.
StateGraph reduce(const StateGraph& g);
// max(E - V, 0) of a connected graph. Throws DisconnectedGraph.
int euler_char_neg(const StateGraph& g);

struct AdequacyVerdict {
  bool adequate = false;
  std::optional<int> loop_crossing;
};
AdequacyVerdict check_adequate(const StateGraph& g);

struct HomogeneityVerdict {
  bool homogeneous = false;
  // Region id plus two crossings with different letters when mixed.
  std::optional<std::array<int, 3>> witness;
};
HomogeneityVerdict check_homogeneous(const StateComplex& sc);

}  // namespace adeq
