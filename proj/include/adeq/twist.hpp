#pragma once

#include <optional>
#include <vector>

#include "adeq/resolution.hpp"

namespace adeq {

// A maximal chain of crossings joined end to end through bigon faces. A
// single crossing flanked by no bigons forms a chain of size one. When the
// whole diagram closes into a necklace of bigons the chain is cyclic.
struct TwistRegion {
  std::vector<int> crossings;     // chain order
  std::vector<int> bigon_faces;   // face ids between consecutive crossings
  bool cyclic = false;
};

// Decomposes the crossings into maximal bigon chains. Throws
// ReducibleDiagram on a self-bigon (nugatory kink) or a non-alternating
// bigon (a Reidemeister-II pair); throws Internal if a crossing borders
// more than two bigons, which maximal chains cannot represent.
std::vector<TwistRegion> find_twist_regions(const Diagram& d);

inline int twist_region_of(const std::vector<TwistRegion>& regions, int crossing) {
  for (int i = 0; i < static_cast<int>(regions.size()); ++i)
    for (int c : regions[i].crossings)
      if (c == crossing) return i;
  return -1;
}

// How a uniformly smoothed twist region resolves: Short keeps one circle
// through the chain with all segments parallel, Long caps every bigon into
// its own small circle strung along the chain.
enum class Resolution { Short, Long };

// Throws SizeOne for single-crossing regions and MixedTwistState when the
// state is not constant on the region.
Resolution classify_resolution(const Diagram& d, const State& s, const TwistRegion& t);

// A pair of parallel edges in the state graph.
struct TwoEdgeLoop {
  int crossing_a = -1, crossing_b = -1;
  int circle_a = -1, circle_b = -1;
  // Both crossings sit in one twist region that this state resolves Short.
  bool same_short_twist = false;
};

std::vector<TwoEdgeLoop> two_edge_loops(const StateComplex& sc,
                                        const std::vector<TwistRegion>& regions);

struct LoopConditionVerdict {
  bool holds = false;
  std::vector<TwoEdgeLoop> loops;
  std::optional<TwoEdgeLoop> witness;  // first loop violating the condition
};

// Every two-edge loop must come from a single Short twist region.
LoopConditionVerdict loop_condition(const StateComplex& sc,
                                    const std::vector<TwistRegion>& regions);

}  // namespace adeq
