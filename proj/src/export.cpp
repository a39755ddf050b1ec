#include "adeq/export.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace adeq {

namespace {

std::string fmt1(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", x);
  return buf;
}

const char* kind_name(WalkItem::Kind k) {
  switch (k) {
    case WalkItem::Circ: return "circle";
    case WalkItem::Seg: return "segment";
    case WalkItem::Arc: return "arc";
  }
  return "?";
}

const char* kind_name(Piece::Kind k) {
  switch (k) {
    case Piece::Disk: return "disk";
    case Piece::Tentacle: return "tentacle";
    case Piece::Switch: return "switch";
  }
  return "?";
}

}  // namespace

std::string state_graph_dot(const StateGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.vertices; ++v) out << "  v" << v << ";\n";
  for (const auto& e : g.edges) {
    out << "  v" << e.a << " -- v" << e.b;
    if (e.crossing >= 0) out << " [label=\"x" << e.crossing << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string piece_graph_dot(const UpperPolyhedron& up) {
  std::ostringstream out;
  out << "digraph pieces {\n";
  for (size_t p = 0; p < up.pieces.size(); ++p) {
    const Piece& piece = up.pieces[p];
    char tag = piece.kind == Piece::Disk ? 'D'
               : piece.kind == Piece::Tentacle ? 'T'
                                               : 'S';
    out << "  p" << p << " [label=\"" << tag << p << " face"
        << up.piece_face[p] << "\"];\n";
  }
  for (size_t p = 0; p < up.pieces.size(); ++p) {
    if (up.pieces[p].donor >= 0)
      out << "  p" << up.pieces[p].donor << " -> p" << p << ";\n";
    if (up.pieces[p].donor2 >= 0)
      out << "  p" << up.pieces[p].donor2 << " -> p" << p << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

ordered_json graph_to_json(const StateGraph& g) {
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"a", e.a}, {"b", e.b}, {"crossing", e.crossing}});
  return {{"vertices", g.vertices}, {"edges", std::move(edges)}};
}

}  // namespace

ordered_json complex_to_json(const StateComplex& sc) {
  ordered_json j;
  j["schema"] = kSchema;
  j["pd"] = sc.diagram().to_pd();
  j["state"] = sc.state().letters;
  ordered_json circles = ordered_json::array();
  for (int c = 0; c < sc.circle_count(); ++c) circles.push_back(sc.circle_vertices(c));
  j["circles"] = std::move(circles);
  ordered_json segments = ordered_json::array();
  for (int c = 0; c < sc.crossings(); ++c)
    segments.push_back(
        {{"crossing", c},
         {"circle_a", sc.circle_of_vertex(StateComplex::vertex_at(c, 0))},
         {"circle_b", sc.circle_of_vertex(StateComplex::vertex_at(c, 1))}});
  j["segments"] = std::move(segments);
  ordered_json regions = ordered_json::array();
  for (const auto& r : sc.regions())
    regions.push_back({{"letter", r.letter ? std::string(1, r.letter) : ""},
                       {"trivial", r.trivial},
                       {"faces", r.faces},
                       {"segments", r.segments},
                       {"circles", r.circles}});
  j["regions"] = std::move(regions);
  StateGraph g = state_graph(sc);
  StateGraph gp = reduce(g);
  j["graph"] = graph_to_json(g);
  j["reduced"] = graph_to_json(gp);
  j["chi_neg"] = euler_char_neg(gp);
  return j;
}

ordered_json upper_to_json(const UpperPolyhedron& up) {
  ordered_json j;
  j["schema"] = kSchema;
  j["state"] = up.sc.state().letters;
  ordered_json arcs = ordered_json::array();
  for (const auto& a : up.arcs)
    arcs.push_back({{"circle", a.circle},
                    {"dart_a", a.dart_a},
                    {"dart_b", a.dart_b},
                    {"cell_a", a.cell_a},
                    {"cell_b", a.cell_b}});
  j["arcs"] = std::move(arcs);
  ordered_json cells = ordered_json::array();
  for (const auto& cell : up.cells) {
    ordered_json walk = ordered_json::array();
    for (const auto& it : cell.items) {
      ordered_json w;
      w["kind"] = kind_name(it.kind);
      if (it.kind == WalkItem::Arc) {
        w["arc"] = it.arc;
        w["side"] = it.arc_side;
      } else {
        w["dart"] = it.dart;
      }
      if (it.kind == WalkItem::Circ) {
        w["first"] = it.first_portion;
        w["last"] = it.last_portion;
      }
      w["piece"] = it.piece;
      walk.push_back(std::move(w));
    }
    cells.push_back({{"disk", cell.disk},
                     {"region", cell.region},
                     {"walk", std::move(walk)}});
  }
  j["cells"] = std::move(cells);
  ordered_json regions = ordered_json::array();
  for (const auto& r : up.regions)
    regions.push_back({{"letter", std::string(1, r.letter)},
                       {"cells", r.cells},
                       {"segments", r.segments},
                       {"circles", r.circles},
                       {"arcs", r.arcs}});
  j["regions"] = std::move(regions);
  ordered_json pieces = ordered_json::array();
  for (size_t p = 0; p < up.pieces.size(); ++p) {
    const Piece& piece = up.pieces[p];
    ordered_json pj;
    pj["kind"] = kind_name(piece.kind);
    pj["face"] = up.piece_face[p];
    if (piece.kind != Piece::Disk) {
      pj["donor"] = piece.donor;
      if (piece.kind == Piece::Switch) {
        pj["donor2"] = piece.donor2;
        pj["arc"] = piece.arc;
      } else {
        pj["cell"] = piece.cell;
        pj["gap_vertex"] = piece.gap_vertex;
        pj["head_dart"] = piece.head_dart;
        pj["far_vertex"] = piece.far_vertex;
      }
    } else {
      pj["cell"] = piece.cell;
    }
    pieces.push_back(std::move(pj));
  }
  j["pieces"] = std::move(pieces);
  ordered_json whites = ordered_json::array();
  for (const auto& w : up.whites)
    whites.push_back({{"cell", w.cell}, {"pieces", w.pieces}});
  j["whites"] = std::move(whites);
  j["disks"] = up.disk_count;
  j["faces"] = up.face_count;
  return j;
}

ordered_json loop_to_json(const TwoEdgeLoop& loop) {
  return {{"crossing_a", loop.crossing_a},
          {"crossing_b", loop.crossing_b},
          {"circle_a", loop.circle_a},
          {"circle_b", loop.circle_b},
          {"same_short_twist", loop.same_short_twist}};
}

ordered_json loop_verdict_to_json(const LoopConditionVerdict& v) {
  ordered_json loops = ordered_json::array();
  for (const auto& l : v.loops) loops.push_back(loop_to_json(l));
  ordered_json j{{"holds", v.holds}, {"loops", std::move(loops)}};
  j["witness"] = v.witness ? loop_to_json(*v.witness) : ordered_json(nullptr);
  return j;
}

ordered_json bound_to_json(const BoundReport& r) {
  ordered_json j;
  j["schema"] = kSchema;
  j["prime"] = r.prime;
  j["adequate"] = r.adequate;
  j["homogeneous"] = r.homogeneous;
  j["chi_neg"] = r.chi_neg;
  j["loop_condition"] = loop_verdict_to_json(r.loop);
  j["ec"] = r.ec == ECStatus::CertifiedZero ? "certified_zero" : "unknown";
  j["guts_chi_neg"] = r.guts ? ordered_json(*r.guts) : ordered_json(nullptr);
  j["volume_bound"] =
      r.volume_bound ? ordered_json(*r.volume_bound) : ordered_json(nullptr);
  j["volume_bound_str"] =
      r.volume_bound ? ordered_json(format_decimal(*r.volume_bound, r.precision))
                     : ordered_json(nullptr);
  j["gromov_bound"] =
      r.gromov_bound ? ordered_json(*r.gromov_bound) : ordered_json(nullptr);
  j["hyperbolic_assumed"] = r.hyperbolic_assumed;
  j["precision"] = r.precision;
  return j;
}

std::string hsigma_svg(const UpperPolyhedron& up) {
  const StateComplex& sc = up.sc;
  static const std::array<const char*, 8> palette = {
      "#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
      "#ff7f00", "#a65628", "#f781bf", "#999999"};
  const double r = 70.0, pitch = 180.0, cy = 130.0;
  const int w = static_cast<int>(pitch) * sc.circle_count();
  auto pos = [&](int v) {
    int c = sc.circle_of_vertex(v);
    const auto& ring = sc.circle_vertices(c);
    size_t k = 0;
    while (ring[k] != v) ++k;
    double ang = -1.5707963267948966 +
                 6.283185307179586 * static_cast<double>(k) /
                     static_cast<double>(ring.size());
    double cx = pitch * c + pitch / 2;
    return std::pair<double, double>(cx + r * std::cos(ang),
                                     cy + r * std::sin(ang));
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"260\" viewBox=\"0 0 " << w << " 260\">\n";
  for (int c = 0; c < sc.circle_count(); ++c)
    out << "  <circle cx=\"" << fmt1(pitch * c + pitch / 2) << "\" cy=\""
        << fmt1(cy) << "\" r=\"" << fmt1(r)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int c = 0; c < sc.crossings(); ++c) {
    int v0 = StateComplex::vertex_at(c, 0), v1 = StateComplex::vertex_at(c, 1);
    auto [x0, y0] = pos(v0);
    auto [x1, y1] = pos(v1);
    double mx = (x0 + x1) / 2, my = (y0 + y1) / 2;
    for (int end = 0; end < 2; ++end) {
      int v = end == 0 ? v0 : v1;
      auto [x, y] = pos(v);
      int face = up.piece_face[static_cast<size_t>(up.tentacle_of_vertex[v])];
      out << "  <line x1=\"" << fmt1(x) << "\" y1=\"" << fmt1(y) << "\" x2=\""
          << fmt1(mx) << "\" y2=\"" << fmt1(my) << "\" stroke=\""
          << palette[static_cast<size_t>(face % 8)]
          << "\" stroke-width=\"2\"><title>x" << c << " tentacle at v" << v
          << "</title></line>\n";
    }
  }
  for (size_t a = 0; a < up.arcs.size(); ++a) {
    auto [x0, y0] = pos(StateComplex::hvertex(up.arcs[a].dart_a));
    auto [x1, y1] = pos(StateComplex::hvertex(up.arcs[a].dart_b));
    out << "  <line x1=\"" << fmt1(x0) << "\" y1=\"" << fmt1(y0) << "\" x2=\""
        << fmt1(x1) << "\" y2=\"" << fmt1(y1)
        << "\" stroke=\"#555555\" stroke-dasharray=\"6 4\"><title>arc " << a
        << "</title></line>\n";
  }
  for (int v = 0; v < sc.vertices(); ++v) {
    auto [x, y] = pos(v);
    out << "  <circle cx=\"" << fmt1(x) << "\" cy=\"" << fmt1(y)
        << "\" r=\"3\" fill=\"black\"><title>v" << v << "</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace adeq
