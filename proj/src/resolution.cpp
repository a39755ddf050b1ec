#include "adeq/resolution.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace adeq {

State State::parse(const std::string& s, int crossings) {
  std::string up;
  up.reserve(s.size());
  for (char ch : s) {
    char u = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (u != 'A' && u != 'B')
      fail(ErrorCode::IncompleteState,
           std::string("state letters must be A or B, got '") + ch + "'");
    up.push_back(u);
  }
  if (static_cast<int>(up.size()) != crossings)
    fail(ErrorCode::IncompleteState,
         "state has " + std::to_string(up.size()) + " letters for " +
             std::to_string(crossings) + " crossings");
  return State{std::move(up)};
}

bool State::uniform_letter(char* out) const {
  if (letters.empty()) return false;
  for (char ch : letters)
    if (ch != letters[0]) return false;
  if (out) *out = letters[0];
  return true;
}

namespace {

// Germ layout per (letter, vertex end): kind and toward-slot for k = 0,1,2
// counterclockwise. -1 marks the segment germ.
struct VertexLayout {
  std::array<int, 3> toward;  // slot the circle germ points toward, -1 = segment
  int seg_k;
  int gap_k;
};

VertexLayout layout_for(char letter, int end) {
  if (letter == 'A') {
    if (end == 0) return {{2, -1, 1}, 1, 2};
    return {{3, 0, -1}, 2, 0};
  }
  if (end == 0) return {{-1, 0, 1}, 0, 2};
  return {{3, -1, 2}, 1, 0};
}

// (end, k) owning each diagram slot under the given letter.
std::array<std::array<int, 2>, 4> slot_homes(char letter) {
  if (letter == 'A') return {{{1, 1}, {0, 2}, {0, 0}, {1, 0}}};
  return {{{0, 1}, {0, 2}, {1, 2}, {1, 0}}};
}

}  // namespace

StateComplex::StateComplex(const Diagram& d, const State& s) : d_(d), s_(s) {
  const int n = d_.crossings();
  if (s_.size() != n)
    fail(ErrorCode::IncompleteState,
         "state has " + std::to_string(s_.size()) + " letters for " +
             std::to_string(n) + " crossings");

  const int H = 6 * n;
  halpha_.assign(H, -1);
  kind_.assign(H, 0);
  toward_slot_.assign(H, -1);
  seg_dart_.assign(2 * n, -1);
  gap_dart_.assign(2 * n, -1);

  // Dart kinds and the germ <-> diagram-slot dictionary.
  std::vector<int> germ_of_slot(4 * n, -1);
  for (int c = 0; c < n; ++c) {
    char L = s_.at(c);
    auto homes = slot_homes(L);
    for (int end = 0; end < 2; ++end) {
      int v = vertex_at(c, end);
      VertexLayout lay = layout_for(L, end);
      seg_dart_[v] = 3 * v + lay.seg_k;
      gap_dart_[v] = 3 * v + lay.gap_k;
      kind_[seg_dart_[v]] = 1;
      for (int k = 0; k < 3; ++k)
        if (lay.toward[k] >= 0) toward_slot_[3 * v + k] = lay.toward[k];
    }
    for (int slot = 0; slot < 4; ++slot) {
      auto [end, k] = homes[slot];
      germ_of_slot[dart_at(c, slot)] = 3 * vertex_at(c, end) + k;
    }
  }

  // Involution: segment germs pair within their crossing, circle germs follow
  // the diagram edges.
  for (int c = 0; c < n; ++c)
    halpha_[seg_dart_[vertex_at(c, 0)]] = seg_dart_[vertex_at(c, 1)],
    halpha_[seg_dart_[vertex_at(c, 1)]] = seg_dart_[vertex_at(c, 0)];
  for (int h = 0; h < H; ++h) {
    if (kind_[h]) continue;
    Dart dart = dart_at(crossing_of_vertex(hvertex(h)), toward_slot_[h]);
    halpha_[h] = germ_of_slot[d_.mate(dart)];
  }
  for (int h = 0; h < H; ++h)
    require_internal(halpha_[h] >= 0 && halpha_[halpha_[h]] == h &&
                         kind_[halpha_[h]] == kind_[h],
                     "smoothed-map involution closes");

  // State circles: oriented walks over circle germs. Each vertex has exactly
  // two, so leaving by "the other germ" is well defined.
  circle_of_vertex_.assign(2 * n, -1);
  circ_class_.assign(H, -1);
  auto other_circ = [&](int v, int not_this) {
    for (int k = 0; k < 3; ++k) {
      int h = 3 * v + k;
      if (!kind_[h] && h != not_this) return h;
    }
    require_internal(false, "vertex has two circle germs");
    return -1;
  };
  for (int h0 = 0; h0 < H; ++h0) {
    if (kind_[h0] || circ_class_[h0] >= 0) continue;
    int cid = static_cast<int>(circle_vertices_.size());
    std::vector<int> verts;
    int h = h0;
    do {
      int v = hvertex(h);
      require_internal(circle_of_vertex_[v] == -1 || circle_of_vertex_[v] == cid,
                       "vertex lies on one circle");
      circle_of_vertex_[v] = cid;
      verts.push_back(v);
      circ_class_[h] = 0;
      circ_class_[halpha_[h]] = 1;
      h = other_circ(hvertex(halpha_[h]), halpha_[h]);
    } while (h != h0);
    circle_vertices_.push_back(std::move(verts));
  }
  for (int v = 0; v < 2 * n; ++v)
    require_internal(circle_of_vertex_[v] >= 0, "every vertex on a circle");

  // Faces as left-hand walks.
  face_of_.assign(H, -1);
  for (int h0 = 0; h0 < H; ++h0) {
    if (face_of_[h0] >= 0) continue;
    int f = static_cast<int>(faces_.size());
    std::vector<int> walk;
    int h = h0;
    do {
      face_of_[h] = f;
      walk.push_back(h);
      h = face_next(h);
    } while (h != h0);
    faces_.push_back(std::move(walk));
  }
  require_internal(face_count() == n + 2, "smoothed map is spherical");

  // Regions: faces glued across segments.
  std::vector<int> parent(face_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int v = 0; v < 2 * n; v += 2) {
    int a = find(face_of_[seg_dart_[v]]);
    int b = find(face_of_[seg_dart_[v + 1]]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> region_id(face_count(), -1);
  region_of_face_.assign(face_count(), -1);
  for (int f = 0; f < face_count(); ++f) {
    int root = find(f);
    if (region_id[root] < 0) {
      region_id[root] = static_cast<int>(regions_.size());
      regions_.emplace_back();
    }
    region_of_face_[f] = region_id[root];
    regions_[region_id[root]].faces.push_back(f);
  }
  region_of_segment_.assign(n, -1);
  for (int c = 0; c < n; ++c) {
    int r = region_of_face_[face_of_[seg_dart_[vertex_at(c, 0)]]];
    require_internal(
        r == region_of_face_[face_of_[seg_dart_[vertex_at(c, 1)]]],
        "segment sides share a region");
    region_of_segment_[c] = r;
    regions_[r].segments.push_back(c);
  }
  for (auto& reg : regions_) {
    for (int f : reg.faces)
      for (int h : faces_[f])
        if (!kind_[h]) reg.circles.push_back(circle_of_dart(h));
    std::sort(reg.circles.begin(), reg.circles.end());
    reg.circles.erase(std::unique(reg.circles.begin(), reg.circles.end()),
                      reg.circles.end());
    reg.trivial = reg.segments.empty();
    if (reg.trivial)
      require_internal(reg.faces.size() == 1 && reg.circles.size() == 1,
                       "trivial region is one disk behind one circle");
    if (!reg.segments.empty()) {
      char L = s_.at(reg.segments[0]);
      bool uniform = true;
      for (int c : reg.segments)
        if (s_.at(c) != L) uniform = false;
      reg.letter = uniform ? L : 0;
    }
  }
}

StateGraph state_graph(const StateComplex& sc) {
  StateGraph g;
  g.vertices = sc.circle_count();
  for (int c = 0; c < sc.crossings(); ++c) {
    int a = sc.circle_of_vertex(StateComplex::vertex_at(c, 0));
    int b = sc.circle_of_vertex(StateComplex::vertex_at(c, 1));
    g.edges.push_back({c, std::min(a, b), std::max(a, b)});
  }
  return g;
}

StateGraph reduce(const StateGraph& g) {
  StateGraph r;
  r.vertices = g.vertices;
  std::vector<std::vector<int>> count(
      static_cast<size_t>(g.vertices),
      std::vector<int>(static_cast<size_t>(g.vertices), 0));
  for (const auto& e : g.edges) ++count[e.a][e.b];
  for (const auto& e : g.edges) {
    if (count[e.a][e.b] == 0) continue;
    StateGraph::Edge kept = e;
    if (count[e.a][e.b] > 1) kept.crossing = -1;  // merged parallel class
    count[e.a][e.b] = 0;
    r.edges.push_back(kept);
  }
  return r;
}

int euler_char_neg(const StateGraph& g) {
  if (g.vertices == 0) fail(ErrorCode::DisconnectedGraph, "empty state graph");
  std::vector<int> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) {
    int a = find(e.a), b = find(e.b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  for (int v = 0; v < g.vertices; ++v)
    if (find(v) != find(0))
      fail(ErrorCode::DisconnectedGraph, "state graph is disconnected");
  int excess = static_cast<int>(g.edges.size()) - g.vertices;
  return std::max(excess, 0);
}

AdequacyVerdict check_adequate(const StateGraph& g) {
  for (const auto& e : g.edges)
    if (e.a == e.b) return {false, e.crossing};
  return {true, std::nullopt};
}

HomogeneityVerdict check_homogeneous(const StateComplex& sc) {
  for (int r = 0; r < sc.region_count(); ++r) {
    const auto& reg = sc.region(r);
    if (reg.segments.empty() || reg.letter != 0) continue;
    int first = reg.segments[0];
    for (int c : reg.segments)
      if (sc.state().at(c) != sc.state().at(first))
        return {false, std::array<int, 3>{r, first, c}};
  }
  return {true, std::nullopt};
}

}  // namespace adeq
