#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "adeq/errors.hpp"

namespace adeq {

// A dart (half-edge germ at a crossing) is encoded as 4*crossing + slot.
// Slots 0..3 list the incident edges counterclockwise, slot 0 being the
// incoming under-strand, so the under-strand occupies slots {0,2} and the
// over-strand slots {1,3}.
using Dart = int;

inline int crossing_of(Dart d) { return d / 4; }
inline int slot_of(Dart d) { return d % 4; }
inline Dart dart_at(int crossing, int slot) { return 4 * crossing + slot; }

// Counterclockwise rotation within a crossing.
inline Dart rot_next(Dart d) { return (d & ~3) | ((d + 1) & 3); }
inline Dart rot_prev(Dart d) { return (d & ~3) | ((d + 3) & 3); }

// A connected link diagram as a 4-valent planar combinatorial map: a
// fixed-point-free involution pairing darts into edges plus the rotation
// system inherited from the PD tuples. Immutable after construction.
class Diagram {
 public:
  // Parses PD text: whitespace/comma separated tuples `X[a,b,c,d]`, one per
  // crossing, each edge label appearing exactly twice. An optional enclosing
  // `PD[...]` wrapper is tolerated. Throws MalformedCode, DuplicateEdgeLabel,
  // Disconnected, or NonPlanar.
  static Diagram parse_pd(const std::string& text);

  int crossings() const { return n_; }
  int num_darts() const { return 4 * n_; }
  int num_edges() const { return 2 * n_; }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  Dart mate(Dart d) const { return mate_[d]; }
  int label_of(Dart d) const { return label_[d]; }
  int edge_of(Dart d) const { return edge_[d]; }
  // The two darts of an edge, lower dart first.
  std::array<Dart, 2> edge_darts(int edge) const { return edge_darts_[edge]; }
  int edge_label(int edge) const { return label_[edge_darts_[edge][0]]; }

  // Face to the right of d is the orbit of d under rot_next(mate(.)).
  Dart face_next(Dart d) const { return rot_next(mate_[d]); }
  const std::vector<std::vector<Dart>>& faces() const { return faces_; }
  int face_of(Dart d) const { return face_of_[d]; }

  // Canonical PD text with labels renumbered 1..2n preserving numeric order.
  std::string to_pd() const;
  std::string to_json() const;

  // Reflection of the diagram: reverses every rotation while keeping slot 0
  // on the incoming under-strand ([a,b,c,d] -> [a,d,c,b]). Swaps the roles of
  // the A- and B-resolutions downstream.
  Diagram mirrored() const;

 private:
  Diagram() = default;
  void build(std::vector<std::array<int, 4>> tuples);

  int n_ = 0;
  std::vector<std::array<int, 4>> tuples_;  // original labels per crossing
  std::vector<int> label_;                  // dart -> original label
  std::vector<int> edge_;                   // dart -> dense edge id
  std::vector<Dart> mate_;                  // involution
  std::vector<std::array<Dart, 2>> edge_darts_;
  std::vector<std::vector<Dart>> faces_;    // right-face orbits
  std::vector<int> face_of_;
};

struct PrimenessCertificate {
  bool prime = false;
  // Edge ids of a separating pair when not prime: removing both splits the
  // 4-valent graph into two parts, each containing a crossing.
  std::optional<std::array<int, 2>> witness;
};

// Exhaustive 2-edge-cut scan. Requires >= 1 crossing.
PrimenessCertificate is_prime(const Diagram& d);

}  // namespace adeq
