#include "adeq/twist.hpp"

#include <algorithm>

namespace adeq {

namespace {

bool long_verdict(char letter, int slot) {
  // The bigon quadrant at a crossing spans slots (slot-1, slot) seen from the
  // face dart. The smoothing caps quadrants (1,2) and (3,0) for 'A', (0,1)
  // and (2,3) for 'B'; a capped bigon quadrant pinches off its own circle.
  bool capped_a = slot % 2 == 0;
  return letter == 'A' ? capped_a : !capped_a;
}

}  // namespace

std::vector<TwistRegion> find_twist_regions(const Diagram& d) {
  const int n = d.crossings();
  // adj[c] = (bigon face, neighbor crossing) pairs.
  std::vector<std::vector<std::array<int, 2>>> adj(n);
  for (int f = 0; f < d.num_faces(); ++f) {
    const auto& orbit = d.faces()[f];
    if (orbit.size() != 2) continue;
    int c1 = crossing_of(orbit[0]);
    int c2 = crossing_of(orbit[1]);
    if (c1 == c2)
      fail(ErrorCode::ReducibleDiagram,
           "nugatory crossing " + std::to_string(c1) + " bounds its own bigon");
    for (Dart bd : orbit) {
      int s = slot_of(bd);
      int s_far = slot_of(d.mate(bd));
      if (s % 2 == s_far % 2)
        fail(ErrorCode::ReducibleDiagram,
             "bigon between crossings " + std::to_string(c1) + " and " +
                 std::to_string(c2) + " is a Reidemeister-II pair");
    }
    adj[c1].push_back({f, c2});
    adj[c2].push_back({f, c1});
  }
  for (int c = 0; c < n; ++c)
    require_internal(adj[c].size() <= 2, "crossing borders at most two bigons");

  std::vector<TwistRegion> regions;
  std::vector<char> done(n, 0);
  auto walk = [&](int start, bool cycle) {
    TwistRegion t;
    t.cyclic = cycle;
    int prev_face = -1;
    int c = start;
    while (true) {
      done[c] = 1;
      t.crossings.push_back(c);
      int next = -1, via = -1;
      for (auto [f, c2] : adj[c])
        if (f != prev_face && (next == -1 || f < via)) next = c2, via = f;
      if (next == -1 || done[next]) {
        if (cycle && next != -1) t.bigon_faces.push_back(via);  // closing bigon
        break;
      }
      t.bigon_faces.push_back(via);
      prev_face = via;
      c = next;
    }
    regions.push_back(std::move(t));
  };
  // Open chains first, entered from their lowest-id endpoint.
  for (int c = 0; c < n; ++c)
    if (!done[c] && adj[c].size() <= 1) walk(c, false);
  // Whatever remains is a closed necklace.
  for (int c = 0; c < n; ++c)
    if (!done[c]) walk(c, true);
  return regions;
}

Resolution classify_resolution(const Diagram& d, const State& s,
                               const TwistRegion& t) {
  if (t.crossings.size() < 2)
    fail(ErrorCode::SizeOne, "twist region of size one has no resolution type");
  char L = s.at(t.crossings[0]);
  for (int c : t.crossings)
    if (s.at(c) != L)
      fail(ErrorCode::MixedTwistState,
           "state mixes letters inside one twist region");
  std::optional<bool> verdict;
  for (int f : t.bigon_faces)
    for (Dart bd : d.faces()[f]) {
      bool lv = long_verdict(L, slot_of(bd));
      require_internal(!verdict || *verdict == lv,
                       "bigon chain resolves uniformly");
      verdict = lv;
    }
  require_internal(verdict.has_value(), "multi-crossing chain has a bigon");
  return *verdict ? Resolution::Long : Resolution::Short;
}

std::vector<TwoEdgeLoop> two_edge_loops(const StateComplex& sc,
                                        const std::vector<TwistRegion>& regions) {
  StateGraph g = state_graph(sc);
  std::vector<int> region_of(sc.crossings());
  for (int c = 0; c < sc.crossings(); ++c)
    region_of[c] = twist_region_of(regions, c);

  std::vector<TwoEdgeLoop> loops;
  const int m = static_cast<int>(g.edges.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto &e = g.edges[i], &f = g.edges[j];
      if (e.a != f.a || e.b != f.b) continue;
      TwoEdgeLoop loop;
      loop.crossing_a = e.crossing;
      loop.crossing_b = f.crossing;
      loop.circle_a = e.a;
      loop.circle_b = e.b;
      if (region_of[e.crossing] == region_of[f.crossing]) {
        const TwistRegion& t = regions[region_of[e.crossing]];
        try {
          loop.same_short_twist =
              classify_resolution(sc.diagram(), sc.state(), t) ==
              Resolution::Short;
        } catch (const Error& err) {
          // A state mixing letters inside the region cannot resolve it Short.
          if (err.code() != ErrorCode::MixedTwistState) throw;
          loop.same_short_twist = false;
        }
      }
      loops.push_back(loop);
    }
  return loops;
}

LoopConditionVerdict loop_condition(const StateComplex& sc,
                                    const std::vector<TwistRegion>& regions) {
  LoopConditionVerdict v;
  v.loops = two_edge_loops(sc, regions);
  v.holds = true;
  for (const auto& loop : v.loops)
    if (!loop.same_short_twist) {
      v.holds = false;
      if (!v.witness) v.witness = loop;
    }
  return v;
}

}  // namespace adeq
