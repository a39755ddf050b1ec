#pragma once

#include <string>

#include "json.hpp"

#include "adeq/bound.hpp"
#include "adeq/upperpoly.hpp"

namespace adeq {

using ordered_json = nlohmann::ordered_json;

// Version tag stamped into every machine-readable record.
inline constexpr const char* kSchema = "adeq/1";

// Undirected DOT rendering of a state graph; merged edges lose their
// crossing label.
std::string state_graph_dot(const StateGraph& g, const std::string& name);

// Directed DOT rendering of the shaded-face piece forest, donors pointing at
// the pieces they feed.
std::string piece_graph_dot(const UpperPolyhedron& up);

ordered_json complex_to_json(const StateComplex& sc);
ordered_json upper_to_json(const UpperPolyhedron& up);
ordered_json loop_to_json(const TwoEdgeLoop& loop);
ordered_json loop_verdict_to_json(const LoopConditionVerdict& v);
ordered_json bound_to_json(const BoundReport& r);

// Schematic drawing of H: state circles in a row, half-segments colored by
// the shaded face of the tentacle running along them, non-prime arcs dashed.
std::string hsigma_svg(const UpperPolyhedron& up);

}  // namespace adeq
