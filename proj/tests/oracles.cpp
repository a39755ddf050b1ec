#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracles {

using adeq::Diagram;
using adeq::State;
using adeq::StateComplex;
using adeq::UpperPolyhedron;
using adeq::dart_at;

namespace {

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(static_cast<size_t>(n)) {
    std::iota(p.begin(), p.end(), 0);
  }
  int find(int x) {
    while (p[static_cast<size_t>(x)] != x) {
      p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
      x = p[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

std::vector<int> dense_roots(DSU& u, int n, std::vector<int>* id_of = nullptr) {
  std::vector<int> dense(static_cast<size_t>(n), -1);
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    int r = u.find(i);
    if (dense[static_cast<size_t>(r)] < 0) {
      dense[static_cast<size_t>(r)] = static_cast<int>(roots.size());
      roots.push_back(r);
    }
    dense[static_cast<size_t>(i)] = dense[static_cast<size_t>(r)];
  }
  if (id_of) *id_of = dense;
  return roots;
}

}  // namespace

SplicedState splice(const Diagram& d, const State& s) {
  const int nd = d.num_darts();
  DSU u(nd);
  for (int h = 0; h < nd; ++h) u.unite(h, d.mate(h));
  for (int c = 0; c < d.crossings(); ++c) {
    if (s.at(c) == 'A') {
      u.unite(dart_at(c, 1), dart_at(c, 2));
      u.unite(dart_at(c, 3), dart_at(c, 0));
    } else {
      u.unite(dart_at(c, 0), dart_at(c, 1));
      u.unite(dart_at(c, 2), dart_at(c, 3));
    }
  }
  SplicedState out;
  auto roots = dense_roots(u, nd, &out.circle_of_dart);
  out.circles = static_cast<int>(roots.size());

  for (int c = 0; c < d.crossings(); ++c) {
    int x, y;
    if (s.at(c) == 'A') {
      x = out.circle_of_dart[static_cast<size_t>(dart_at(c, 1))];
      y = out.circle_of_dart[static_cast<size_t>(dart_at(c, 0))];
    } else {
      x = out.circle_of_dart[static_cast<size_t>(dart_at(c, 0))];
      y = out.circle_of_dart[static_cast<size_t>(dart_at(c, 2))];
    }
    out.edges.push_back({c, std::min(x, y), std::max(x, y)});
  }

  out.adequate = std::none_of(out.edges.begin(), out.edges.end(),
                              [](const SplicedState::Edge& e) { return e.a == e.b; });

  DSU cu(out.circles);
  std::set<std::pair<int, int>> distinct;
  for (const auto& e : out.edges) {
    cu.unite(e.a, e.b);
    distinct.insert({e.a, e.b});
  }
  int comps = static_cast<int>(dense_roots(cu, out.circles).size());
  out.connected = comps == 1;
  out.chi_neg = std::max(static_cast<int>(distinct.size()) - out.circles, 0);
  return out;
}

CornerRegions corner_regions(const Diagram& d, const State& s) {
  const int F = d.num_faces();
  DSU u(F);
  // The corner between slots k and k+1 of a crossing lies on the face to the
  // right of the slot-(k+1) dart.
  auto corner = [&](int c, int k) { return d.face_of(dart_at(c, (k + 1) % 4)); };
  for (int c = 0; c < d.crossings(); ++c) {
    if (s.at(c) == 'A')
      u.unite(corner(c, 0), corner(c, 2));  // segment spans corners (0,1),(2,3)
    else
      u.unite(corner(c, 1), corner(c, 3));  // segment spans corners (1,2),(3,0)
  }
  CornerRegions out;
  auto roots = dense_roots(u, F, &out.region_of_face);
  out.region_count = static_cast<int>(roots.size());

  out.region_of_crossing.resize(static_cast<size_t>(d.crossings()));
  std::vector<char> letter(roots.size(), 0);
  std::vector<bool> mixed(roots.size(), false), has_seg(roots.size(), false);
  for (int c = 0; c < d.crossings(); ++c) {
    int k = s.at(c) == 'A' ? 0 : 1;
    int r = out.region_of_face[static_cast<size_t>(corner(c, k))];
    out.region_of_crossing[static_cast<size_t>(c)] = r;
    has_seg[static_cast<size_t>(r)] = true;
    if (!letter[static_cast<size_t>(r)])
      letter[static_cast<size_t>(r)] = s.at(c);
    else if (letter[static_cast<size_t>(r)] != s.at(c))
      mixed[static_cast<size_t>(r)] = true;
  }
  out.trivial_count =
      static_cast<int>(std::count(has_seg.begin(), has_seg.end(), false));
  out.homogeneous = std::none_of(mixed.begin(), mixed.end(), [](bool m) { return m; });
  return out;
}

namespace {

std::vector<std::vector<int>> parse_labels(const std::string& pd) {
  std::vector<std::vector<int>> tuples;
  size_t i = 0;
  while (i < pd.size()) {
    if (pd[i] != 'X') {
      ++i;
      continue;
    }
    size_t j = i + 1;
    while (j < pd.size() && std::isalpha(static_cast<unsigned char>(pd[j]))) ++j;
    if (j >= pd.size() || pd[j] != '[') {
      ++i;
      continue;
    }
    std::vector<int> labels;
    int val = -1;
    for (++j; j < pd.size() && pd[j] != ']'; ++j) {
      if (std::isdigit(static_cast<unsigned char>(pd[j])))
        val = (val < 0 ? 0 : val * 10) + (pd[j] - '0');
      else if (val >= 0) {
        labels.push_back(val);
        val = -1;
      }
    }
    if (val >= 0) labels.push_back(val);
    if (labels.size() != 4) throw std::runtime_error("oracle: bad tuple in " + pd);
    tuples.push_back(labels);
    i = j + 1;
  }
  if (tuples.empty()) throw std::runtime_error("oracle: no tuples in " + pd);
  return tuples;
}

bool separates(const std::vector<std::vector<int>>& tuples, int x, int y) {
  const int n = static_cast<int>(tuples.size());
  // Flood crossings through shared labels other than x and y.
  std::map<int, std::vector<int>> at;
  for (int c = 0; c < n; ++c)
    for (int lab : tuples[static_cast<size_t>(c)])
      if (lab != x && lab != y) at[lab].push_back(c);
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> stack = {0};
  seen[0] = true;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int lab : tuples[static_cast<size_t>(c)]) {
      if (lab == x || lab == y) continue;
      for (int o : at[lab])
        if (!seen[static_cast<size_t>(o)]) {
          seen[static_cast<size_t>(o)] = true;
          stack.push_back(o);
        }
    }
  }
  return std::find(seen.begin(), seen.end(), false) != seen.end();
}

}  // namespace

bool prime_by_label_cuts(const std::string& pd) {
  auto tuples = parse_labels(pd);
  std::set<int> labels;
  for (const auto& t : tuples) labels.insert(t.begin(), t.end());
  std::vector<int> all(labels.begin(), labels.end());
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (separates(tuples, all[i], all[j])) return false;
  return true;
}

bool label_pair_separates(const std::string& pd, int label_x, int label_y) {
  return separates(parse_labels(pd), label_x, label_y);
}

std::vector<ParallelPair> parallel_pairs(const SplicedState& sp) {
  std::vector<ParallelPair> out;
  for (size_t i = 0; i < sp.edges.size(); ++i)
    for (size_t j = i + 1; j < sp.edges.size(); ++j)
      if (sp.edges[i].a == sp.edges[j].a && sp.edges[i].b == sp.edges[j].b)
        out.push_back({sp.edges[i].crossing, sp.edges[j].crossing, sp.edges[i].a,
                       sp.edges[i].b});
  return out;
}

std::vector<EscherHit> escher_by_donor_walk(const UpperPolyhedron& up) {
  const StateComplex& sc = up.sc;
  auto side = [&](int v) { return sc.circ_class(StateComplex::hsigma_inv(sc.seg_dart(v))); };
  std::vector<EscherHit> out;
  for (size_t s = 0; s < up.pieces.size(); ++s) {
    if (up.pieces[s].kind != adeq::Piece::Tentacle) continue;
    int end_circle = sc.circle_of_vertex(up.pieces[s].far_vertex);
    int cur = static_cast<int>(s);
    while (true) {
      const adeq::Piece& t = up.pieces[static_cast<size_t>(cur)];
      if (sc.circle_of_vertex(t.gap_vertex) == end_circle) {
        int type =
            side(t.gap_vertex) == side(up.pieces[s].far_vertex) ? 1 : 2;
        out.push_back({type, end_circle, cur, static_cast<int>(s)});
      }
      int d = t.donor;
      if (d < 0 || up.pieces[static_cast<size_t>(d)].kind != adeq::Piece::Tentacle)
        break;
      cur = d;
    }
  }
  return out;
}

int link_components(const Diagram& d) {
  DSU u(d.num_edges());
  for (int c = 0; c < d.crossings(); ++c) {
    u.unite(d.edge_of(dart_at(c, 0)), d.edge_of(dart_at(c, 2)));
    u.unite(d.edge_of(dart_at(c, 1)), d.edge_of(dart_at(c, 3)));
  }
  return static_cast<int>(dense_roots(u, d.num_edges()).size());
}

bool alternating(const Diagram& d) {
  for (int e = 0; e < d.num_edges(); ++e) {
    auto [p, q] = d.edge_darts(e);
    if (adeq::slot_of(p) % 2 == adeq::slot_of(q) % 2) return false;
  }
  return true;
}

bool has_monogon(const Diagram& d) {
  for (const auto& f : d.faces())
    if (f.size() == 1) return true;
  return false;
}

}  // namespace oracles
