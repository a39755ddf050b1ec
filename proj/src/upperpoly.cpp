#include "adeq/upperpoly.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace adeq {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Incrementally splits cells of H along non-prime arcs, then floods them.
struct Builder {
  const StateComplex& sc;
  std::vector<Cell> cells;
  std::vector<char> alive;
  std::vector<NonPrimeArc> arcs;

  explicit Builder(const StateComplex& s) : sc(s) {
    for (int f = 0; f < sc.face_count(); ++f) {
      Cell cell;
      bool all_circ = true;
      for (int h : sc.face(f)) {
        WalkItem it;
        it.kind = sc.is_seg(h) ? WalkItem::Seg : WalkItem::Circ;
        it.dart = h;
        all_circ = all_circ && it.kind == WalkItem::Circ;
        cell.items.push_back(it);
      }
      cell.disk = all_circ;
      cells.push_back(std::move(cell));
      alive.push_back(1);
    }
  }

  // Owner cell of every segment-side dart among live cells, with two slots
  // reserved for a hypothetical split of `skip` into parts P and Q.
  static constexpr int kPartP = -2, kPartQ = -3;

  bool valid_split(int cid, size_t i, size_t j) const {
    const auto& items = cells[cid].items;
    // Hypothetical owners of each seg dart: P gets positions (i, j), Q the
    // rest of the split cell, everything else keeps its own cell.
    std::map<int, int> owner;
    for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
      if (!alive[c] || c == cid) continue;
      for (const auto& it : cells[c].items)
        if (it.kind == WalkItem::Seg) owner[it.dart] = c;
    }
    for (size_t p = 0; p < items.size(); ++p)
      if (items[p].kind == WalkItem::Seg)
        owner[items[p].dart] = (p > i && p < j) ? kPartP : kPartQ;

    // Component structure across segments.
    std::map<int, int> id;  // owner key -> dense node
    auto node = [&](int key) {
      auto [it, fresh] = id.emplace(key, static_cast<int>(id.size()));
      (void)fresh;
      return it->second;
    };
    node(kPartP);
    node(kPartQ);
    for (auto& [dart, key] : owner) node(key);
    DisjointSets dsu(static_cast<int>(id.size()));
    for (auto& [dart, key] : owner) {
      auto partner = owner.find(sc.halpha(dart));
      require_internal(partner != owner.end(), "segment has two sides");
      dsu.unite(node(key), node(partner->second));
    }
    if (dsu.find(node(kPartP)) == dsu.find(node(kPartQ))) return false;

    std::map<int, int> seg_items;
    for (auto& [dart, key] : owner) ++seg_items[dsu.find(node(key))];
    int p_segs = seg_items[dsu.find(node(kPartP))];
    int q_segs = seg_items[dsu.find(node(kPartQ))];
    return p_segs >= 2 && q_segs >= 2;  // item counts; two per segment
  }

  void commit_split(int cid, size_t i, size_t j) {
    const auto items = cells[cid].items;  // copy; source dies below
    const WalkItem &I = items[i], &J = items[j];
    int arc_id = static_cast<int>(arcs.size());
    NonPrimeArc arc;
    arc.circle = sc.circle_of_dart(I.dart);
    arc.dart_a = I.dart;
    arc.dart_b = J.dart;
    arcs.push_back(arc);

    auto half = [](const WalkItem& src, bool first_half) {
      WalkItem h = src;
      if (first_half)
        h.last_portion = false;
      else
        h.first_portion = false;
      return h;
    };
    WalkItem arc_item;
    arc_item.kind = WalkItem::Arc;
    arc_item.arc = arc_id;

    Cell P, Q;
    P.items.push_back(half(I, false));
    for (size_t p = i + 1; p < j; ++p) P.items.push_back(items[p]);
    P.items.push_back(half(J, true));
    arc_item.arc_side = 0;
    P.items.push_back(arc_item);

    Q.items.push_back(half(J, false));
    for (size_t p = j + 1; p < items.size(); ++p) Q.items.push_back(items[p]);
    for (size_t p = 0; p < i; ++p) Q.items.push_back(items[p]);
    Q.items.push_back(half(I, true));
    arc_item.arc_side = 1;
    Q.items.push_back(arc_item);

    alive[cid] = 0;
    cells.push_back(std::move(P));
    alive.push_back(1);
    cells.push_back(std::move(Q));
    alive.push_back(1);
  }

  // One greedy pass: commit the first valid split in scan order.
  bool split_once() {
    for (int cid = 0; cid < static_cast<int>(cells.size()); ++cid) {
      if (!alive[cid] || cells[cid].disk) continue;
      const auto& items = cells[cid].items;
      for (size_t i = 0; i < items.size(); ++i) {
        if (items[i].kind != WalkItem::Circ) continue;
        for (size_t j = i + 1; j < items.size(); ++j) {
          if (items[j].kind != WalkItem::Circ) continue;
          if (sc.circle_of_dart(items[i].dart) != sc.circle_of_dart(items[j].dart))
            continue;
          if (!valid_split(cid, i, j)) continue;
          commit_split(cid, i, j);
          return true;
        }
      }
    }
    return false;
  }
};

int flow_of(const UpperPolyhedron& up, int cell) {
  return up.regions[up.cells[cell].region].letter == 'A' ? 1 : -1;
}

size_t step(size_t pos, int dir, size_t size) {
  return (pos + size + static_cast<size_t>(dir)) % size;
}

void flood(UpperPolyhedron& up) {
  const StateComplex& sc = up.sc;
  const int nv = sc.vertices();

  // Locators.
  std::map<int, std::pair<int, int>> seg_item;              // dart -> (cell,pos)
  std::map<std::pair<int, int>, std::pair<int, int>> arc_item;  // (arc,side)
  for (int c = 0; c < static_cast<int>(up.cells.size()); ++c)
    for (size_t p = 0; p < up.cells[c].items.size(); ++p) {
      const auto& it = up.cells[c].items[p];
      if (it.kind == WalkItem::Seg)
        seg_item[it.dart] = {c, static_cast<int>(p)};
      else if (it.kind == WalkItem::Arc)
        arc_item[{it.arc, it.arc_side}] = {c, static_cast<int>(p)};
    }

  // Gap feeding: which circle-dart portion wakes each vertex's tentacle.
  enum Want { First, Last };
  std::map<int, std::vector<std::pair<int, Want>>> feeds;
  for (int v = 0; v < nv; ++v) {
    char L = sc.state().at(StateComplex::crossing_of_vertex(v));
    if (L == 'A')
      feeds[sc.gap_dart(v)].push_back({v, First});
    else
      feeds[sc.halpha(sc.gap_dart(v))].push_back({v, Last});
  }

  // Switch attachments: the circle item flowing into each arc endpoint.
  std::map<std::pair<int, int>, std::pair<int, int>> attach_of;  // (cell,pos) -> (arc,side)
  for (auto& [key, loc] : arc_item) {
    int cell = loc.first;
    int dir = flow_of(up, cell);
    size_t prev = step(static_cast<size_t>(loc.second), -dir,
                       up.cells[cell].items.size());
    require_internal(up.cells[cell].items[prev].kind == WalkItem::Circ,
                     "arc flanked by circle portions");
    attach_of[{cell, static_cast<int>(prev)}] = key;
  }

  struct Event {
    enum { Spawn, Activate } type;
    int vertex = -1;  // Spawn
    int donor = -1;
    int arc = -1;  // Activate
  };
  std::deque<Event> queue;
  std::map<int, std::array<int, 2>> switch_attach;  // arc -> covering pieces
  for (size_t a = 0; a < up.arcs.size(); ++a)
    switch_attach[static_cast<int>(a)] = {-1, -1};
  // Colors are keyed by disk piece ids, which precede all other pieces.
  DisjointSets colors(static_cast<int>(up.cells.size()));

  up.tentacle_of_vertex.assign(nv, -1);
  std::vector<int> switch_of_arc(up.arcs.size(), -1);

  auto cover = [&](int piece, int cell, int pos) {
    WalkItem& it = up.cells[cell].items[static_cast<size_t>(pos)];
    if (it.piece >= 0)
      fail(ErrorCode::FloodingContradiction,
           "two shaded pieces claim one boundary portion");
    it.piece = piece;
    up.pieces[piece].covered.push_back({cell, pos});
    if (it.kind == WalkItem::Circ) {
      auto fit = feeds.find(it.dart);
      if (fit != feeds.end())
        for (auto [v, want] : fit->second)
          if ((want == First && it.first_portion) ||
              (want == Last && it.last_portion))
            queue.push_back({Event::Spawn, v, piece, -1});
      auto ait = attach_of.find({cell, pos});
      if (ait != attach_of.end()) {
        auto [arc, side] = ait->second;
        require_internal(switch_attach[arc][side] == -1,
                         "attachment covered once");
        switch_attach[arc][side] = piece;
        if (switch_attach[arc][0] >= 0 && switch_attach[arc][1] >= 0)
          queue.push_back({Event::Activate, -1, -1, arc});
      }
    }
  };

  auto cover_run = [&](int piece, int cell, int head_pos) {
    cover(piece, cell, head_pos);
    const auto& items = up.cells[cell].items;
    int dir = flow_of(up, cell);
    size_t pos = step(static_cast<size_t>(head_pos), dir, items.size());
    while (items[pos].kind == WalkItem::Circ &&
           pos != static_cast<size_t>(head_pos)) {
      cover(piece, cell, static_cast<int>(pos));
      pos = step(pos, dir, items.size());
    }
  };

  // Innermost disks seed the flood, one fresh color each.
  up.disk_count = 0;
  for (int c = 0; c < static_cast<int>(up.cells.size()); ++c) {
    if (!up.cells[c].disk) continue;
    ++up.disk_count;
    int id = static_cast<int>(up.pieces.size());
    Piece piece;
    piece.kind = Piece::Disk;
    piece.color = id;
    piece.cell = c;
    up.pieces.push_back(std::move(piece));
    for (size_t p = 0; p < up.cells[c].items.size(); ++p)
      cover(id, c, static_cast<int>(p));
  }

  while (!queue.empty()) {
    Event ev = queue.front();
    queue.pop_front();
    if (ev.type == Event::Spawn) {
      int v = ev.vertex;
      if (up.tentacle_of_vertex[v] >= 0)
        fail(ErrorCode::FloodingContradiction,
             "gap fed twice at vertex " + std::to_string(v));
      char L = sc.state().at(StateComplex::crossing_of_vertex(v));
      int head = L == 'A' ? sc.seg_dart(v) : sc.halpha(sc.seg_dart(v));
      auto loc = seg_item.at(head);
      int id = static_cast<int>(up.pieces.size());
      Piece piece;
      piece.kind = Piece::Tentacle;
      piece.color = colors.find(up.pieces[ev.donor].color);
      piece.donor = ev.donor;
      piece.cell = loc.first;
      piece.gap_vertex = v;
      piece.head_dart = head;
      piece.far_vertex = StateComplex::hvertex(sc.halpha(sc.seg_dart(v)));
      up.pieces.push_back(std::move(piece));
      up.tentacle_of_vertex[v] = id;
      cover_run(id, loc.first, loc.second);
    } else {
      int arc = ev.arc;
      auto [p0, p1] = std::pair(switch_attach[arc][0], switch_attach[arc][1]);
      int r0 = colors.find(up.pieces[p0].color);
      int r1 = colors.find(up.pieces[p1].color);
      if (r0 == r1)
        fail(ErrorCode::FloodingContradiction,
             "switch would merge a shaded face with itself");
      colors.unite(r0, r1);
      int id = static_cast<int>(up.pieces.size());
      Piece piece;
      piece.kind = Piece::Switch;
      piece.color = colors.find(r0);
      piece.donor = p0;
      piece.donor2 = p1;
      piece.arc = arc;
      up.pieces.push_back(std::move(piece));
      switch_of_arc[static_cast<size_t>(arc)] = id;
      for (int side = 0; side < 2; ++side) {
        auto loc = arc_item.at({arc, side});
        cover_run(id, loc.first, loc.second);
      }
    }
  }

  // Exactness: every portion shaded once, every gap entered, every arc
  // switched.
  for (const auto& cell : up.cells)
    for (const auto& it : cell.items)
      if (it.piece < 0)
        fail(ErrorCode::FloodingContradiction,
             "boundary portion left unshaded");
  for (int v = 0; v < nv; ++v)
    if (up.tentacle_of_vertex[v] < 0)
      fail(ErrorCode::FloodingContradiction,
           "gap never fed at vertex " + std::to_string(v));
  for (size_t a = 0; a < up.arcs.size(); ++a)
    require_internal(switch_of_arc[a] >= 0, "every arc carries a switch");

  // Dense shaded-face ids.
  std::map<int, int> face_id;
  for (auto& piece : up.pieces) {
    int root = colors.find(piece.color);
    face_id.emplace(root, static_cast<int>(face_id.size()));
  }
  up.piece_face.resize(up.pieces.size());
  for (size_t p = 0; p < up.pieces.size(); ++p)
    up.piece_face[p] = face_id.at(colors.find(up.pieces[p].color));
  up.face_count = static_cast<int>(face_id.size());
  require_internal(
      up.face_count == up.disk_count - static_cast<int>(up.arcs.size()),
      "each switch merges two shaded faces into one");

  // Each shaded face must be simply connected: its piece graph is a tree.
  int P = static_cast<int>(up.pieces.size());
  std::vector<std::vector<int>> adj(P);
  int edge_count = 0;
  auto link = [&](int a, int b) {
    require_internal(up.piece_face[a] == up.piece_face[b],
                     "piece feeds stay within one face");
    adj[a].push_back(b);
    adj[b].push_back(a);
    ++edge_count;
  };
  for (int p = 0; p < P; ++p) {
    if (up.pieces[p].donor >= 0) link(up.pieces[p].donor, p);
    if (up.pieces[p].donor2 >= 0) link(up.pieces[p].donor2, p);
  }
  std::vector<int> seen(P, 0);
  int comps = 0;
  for (int p = 0; p < P; ++p) {
    if (seen[p]) continue;
    ++comps;
    std::vector<int> stack{p};
    seen[p] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!seen[y]) seen[y] = 1, stack.push_back(y);
    }
  }
  if (comps != up.face_count || edge_count != P - comps)
    fail(ErrorCode::FloodingContradiction,
         "a shaded face is not simply connected");

  // White faces: one per non-disk cell.
  for (int c = 0; c < static_cast<int>(up.cells.size()); ++c) {
    if (up.cells[c].disk) continue;
    WhiteFace w;
    w.cell = c;
    for (const auto& it : up.cells[c].items)
      if (w.pieces.empty() || w.pieces.back() != it.piece)
        w.pieces.push_back(it.piece);
    if (w.pieces.size() > 1 && w.pieces.front() == w.pieces.back())
      w.pieces.pop_back();
    up.whites.push_back(std::move(w));
  }
}

}  // namespace

int UpperPolyhedron::face_of_piece(int p) const { return piece_face[p]; }

UpperPolyhedron build_upper_polyhedron(const StateComplex& sc) {
  // The arc search and the flooding both assume single-letter regions; a
  // mixed region would send tentacles across conflicting smoothings.
  if (auto verdict = check_homogeneous(sc); !verdict.homogeneous)
    fail(ErrorCode::PreconditionMissing,
         "state not homogeneous: region " +
             std::to_string((*verdict.witness)[0]) + " mixes crossings " +
             std::to_string((*verdict.witness)[1]) + " and " +
             std::to_string((*verdict.witness)[2]));
  Builder b(sc);
  while (b.split_once()) {
  }

  UpperPolyhedron up{sc, {}, {}, {}, {}, {}, 0, 0, {}, {}};
  up.arcs = b.arcs;
  std::vector<int> final_id(b.cells.size(), -1);
  for (int c = 0; c < static_cast<int>(b.cells.size()); ++c)
    if (b.alive[c]) {
      final_id[c] = static_cast<int>(up.cells.size());
      up.cells.push_back(std::move(b.cells[c]));
    }

  // Polyhedral regions over the final cells.
  const int C = static_cast<int>(up.cells.size());
  std::map<int, int> cell_of_seg;
  for (int c = 0; c < C; ++c)
    for (const auto& it : up.cells[c].items)
      if (it.kind == WalkItem::Seg) cell_of_seg[it.dart] = c;
  DisjointSets dsu(C);
  for (auto& [dart, c] : cell_of_seg) dsu.unite(c, cell_of_seg.at(sc.halpha(dart)));
  std::map<int, int> region_id;
  for (int c = 0; c < C; ++c) {
    if (up.cells[c].disk) continue;
    int root = dsu.find(c);
    auto [it, fresh] = region_id.emplace(root, static_cast<int>(up.regions.size()));
    if (fresh) up.regions.emplace_back();
    up.cells[c].region = it->second;
    up.regions[it->second].cells.push_back(c);
  }
  for (int c = 0; c < C; ++c) {
    if (up.cells[c].disk) continue;
    auto& reg = up.regions[up.cells[c].region];
    for (const auto& it : up.cells[c].items) {
      if (it.kind == WalkItem::Seg)
        reg.segments.push_back(
            StateComplex::crossing_of_vertex(StateComplex::hvertex(it.dart)));
      else if (it.kind == WalkItem::Circ)
        reg.circles.push_back(sc.circle_of_dart(it.dart));
      else
        reg.arcs.push_back(it.arc);
    }
  }
  for (auto& reg : up.regions) {
    auto dedupe = [](std::vector<int>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe(reg.segments);
    dedupe(reg.circles);
    dedupe(reg.arcs);
    require_internal(!reg.segments.empty(), "polyhedral region keeps a segment");
    reg.letter = sc.state().at(reg.segments[0]);
    for (int cr : reg.segments)
      if (sc.state().at(cr) != reg.letter)
        fail(ErrorCode::PreconditionMissing,
             "polyhedral region mixes smoothing letters; state not homogeneous");
  }
  int nontrivial = 0;
  for (int r = 0; r < sc.region_count(); ++r)
    if (!sc.region(r).trivial) ++nontrivial;
  require_internal(static_cast<int>(up.regions.size()) ==
                       nontrivial + static_cast<int>(up.arcs.size()),
                   "each arc adds one polyhedral region");

  for (auto& arc : up.arcs) arc.cell_a = arc.cell_b = -1;
  for (int c = 0; c < C; ++c)
    for (const auto& it : up.cells[c].items)
      if (it.kind == WalkItem::Arc)
        (it.arc_side == 0 ? up.arcs[it.arc].cell_a : up.arcs[it.arc].cell_b) = c;

  flood(up);
  return up;
}

std::vector<NonPrimeArc> find_nonprime_arcs(const StateComplex& sc) {
  return build_upper_polyhedron(sc).arcs;
}

std::vector<PolyhedralRegion> polyhedral_regions(const StateComplex& sc) {
  return build_upper_polyhedron(sc).regions;
}

std::vector<LowerPolyhedron> lower_polyhedron_diagrams(const UpperPolyhedron& up) {
  const StateComplex& sc = up.sc;
  std::vector<int> region_of_crossing(sc.crossings(), -1);
  for (int r = 0; r < static_cast<int>(up.regions.size()); ++r)
    for (int cr : up.regions[r].segments) region_of_crossing[cr] = r;

  std::vector<LowerPolyhedron> out;
  for (int r = 0; r < static_cast<int>(up.regions.size()); ++r) {
    const auto& reg = up.regions[r];
    std::vector<char> in_region(static_cast<size_t>(sc.vertices()), 0);
    for (int cr : reg.segments) {
      in_region[static_cast<size_t>(StateComplex::vertex_at(cr, 0))] = 1;
      in_region[static_cast<size_t>(StateComplex::vertex_at(cr, 1))] = 1;
    }
    auto other_circ = [&](int v, int not_this) {
      for (int k = 0; k < 3; ++k) {
        int h = 3 * v + k;
        if (!sc.is_seg(h) && h != not_this) return h;
      }
      require_internal(false, "vertex keeps two circle germs");
      return -1;
    };
    // Stretches: walk the circle from each region germ, passing through
    // vertices of foreign crossings, until the next region vertex.
    std::map<int, int> stretch_of_germ;
    int stretches = 0;
    for (int cr : reg.segments)
      for (int end = 0; end < 2; ++end) {
        int v = StateComplex::vertex_at(cr, end);
        for (int k = 0; k < 3; ++k) {
          int h = 3 * v + k;
          if (sc.is_seg(h) || stretch_of_germ.count(h)) continue;
          int cur = h;
          int g = sc.halpha(cur);
          while (!in_region[static_cast<size_t>(StateComplex::hvertex(g))]) {
            cur = other_circ(StateComplex::hvertex(g), g);
            g = sc.halpha(cur);
          }
          stretch_of_germ[h] = stretches;
          stretch_of_germ[g] = stretches;
          ++stretches;
        }
      }
    require_internal(stretches * 2 == static_cast<int>(stretch_of_germ.size()),
                     "stretches pair region germs");

    // PD tuple per segment: slot k uses the germ pointing toward slot k.
    std::ostringstream pd;
    for (size_t idx = 0; idx < reg.segments.size(); ++idx) {
      int cr = reg.segments[idx];
      if (idx) pd << ' ';
      pd << "X[";
      for (int slot = 0; slot < 4; ++slot) {
        int germ = -1;
        for (int end = 0; end < 2 && germ < 0; ++end)
          for (int k = 0; k < 3; ++k) {
            int h = 3 * StateComplex::vertex_at(cr, end) + k;
            if (!sc.is_seg(h) && sc.toward_slot(h) == slot) {
              germ = h;
              break;
            }
          }
        require_internal(germ >= 0, "every slot keeps a circle germ");
        if (slot) pd << ',';
        pd << stretch_of_germ.at(germ) + 1;
      }
      pd << ']';
    }

    LowerPolyhedron low;
    low.region = r;
    low.pd = pd.str();
    low.crossings = static_cast<int>(reg.segments.size());
    Diagram sub = [&] {
      try {
        return Diagram::parse_pd(low.pd);
      } catch (const Error& e) {
        fail(ErrorCode::Internal,
             std::string("region subdiagram failed validation: ") + e.what());
      }
    }();
    for (int e = 0; e < sub.num_edges(); ++e) {
      auto darts = sub.edge_darts(e);
      require_internal(slot_of(darts[0]) % 2 != slot_of(darts[1]) % 2,
                       "homogeneous region subdiagram alternates");
    }
    auto cert = is_prime(sub);
    if (!cert.prime)
      fail(ErrorCode::NonPrimeRegion,
           "polyhedral region " + std::to_string(r) +
               " yields a non-prime subdiagram; arc search missed a split");
    out.push_back(std::move(low));
  }
  return out;
}

namespace {

int side_of_vertex(const StateComplex& sc, int v) {
  return sc.circ_class(StateComplex::hsigma_inv(sc.seg_dart(v)));
}

StaircaseStep step_of(const UpperPolyhedron& up, int tentacle) {
  const Piece& t = up.pieces[static_cast<size_t>(tentacle)];
  StaircaseStep s;
  s.tentacle = tentacle;
  s.crossing = StateComplex::crossing_of_vertex(t.gap_vertex);
  s.from_circle = up.sc.circle_of_vertex(t.gap_vertex);
  s.to_circle = up.sc.circle_of_vertex(t.far_vertex);
  s.letter = up.sc.state().at(s.crossing);
  return s;
}

std::vector<std::vector<int>> tentacle_children(const UpperPolyhedron& up) {
  std::vector<std::vector<int>> kids(up.pieces.size());
  for (size_t p = 0; p < up.pieces.size(); ++p) {
    const Piece& piece = up.pieces[p];
    if (piece.kind != Piece::Tentacle) continue;
    if (piece.donor >= 0 && up.pieces[static_cast<size_t>(piece.donor)].kind ==
                                Piece::Tentacle)
      kids[static_cast<size_t>(piece.donor)].push_back(static_cast<int>(p));
  }
  return kids;
}

}  // namespace

std::vector<Staircase> enumerate_staircases(const UpperPolyhedron& up, int face,
                                            int origin_circle) {
  auto kids = tentacle_children(up);
  std::vector<Staircase> out;
  std::vector<int> path;
  auto dfs = [&](auto&& self, int t) -> void {
    path.push_back(t);
    if (kids[static_cast<size_t>(t)].empty()) {
      Staircase s;
      s.face = face;
      for (int node : path) s.steps.push_back(step_of(up, node));
      out.push_back(std::move(s));
    } else {
      for (int child : kids[static_cast<size_t>(t)]) self(self, child);
    }
    path.pop_back();
  };
  for (size_t p = 0; p < up.pieces.size(); ++p) {
    const Piece& piece = up.pieces[p];
    if (piece.kind != Piece::Tentacle) continue;
    if (up.piece_face[p] != face) continue;
    if (up.sc.circle_of_vertex(piece.gap_vertex) != origin_circle) continue;
    dfs(dfs, static_cast<int>(p));
  }
  return out;
}

std::vector<EscherViolation> check_escher(const UpperPolyhedron& up) {
  const StateComplex& sc = up.sc;
  auto kids = tentacle_children(up);
  std::vector<EscherViolation> out;
  std::vector<int> path;
  auto dfs = [&](auto&& self, int start, int t) -> void {
    path.push_back(t);
    const Piece& first = up.pieces[static_cast<size_t>(start)];
    const Piece& last = up.pieces[static_cast<size_t>(t)];
    int c_top = sc.circle_of_vertex(first.gap_vertex);
    int c_bot = sc.circle_of_vertex(last.far_vertex);
    if (c_top == c_bot) {
      EscherViolation v;
      v.circle = c_top;
      v.type = side_of_vertex(sc, first.gap_vertex) ==
                       side_of_vertex(sc, last.far_vertex)
                   ? 1
                   : 2;
      v.chain.face = up.piece_face[static_cast<size_t>(start)];
      for (int node : path) v.chain.steps.push_back(step_of(up, node));
      out.push_back(std::move(v));
    }
    for (int child : kids[static_cast<size_t>(t)]) self(self, start, child);
    path.pop_back();
  };
  for (size_t p = 0; p < up.pieces.size(); ++p) {
    if (up.pieces[p].kind != Piece::Tentacle) continue;
    path.clear();
    dfs(dfs, static_cast<int>(p), static_cast<int>(p));
  }
  return out;
}

}  // namespace adeq
