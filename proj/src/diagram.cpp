#include "adeq/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace adeq {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedCode: return "MalformedCode";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DuplicateEdgeLabel: return "DuplicateEdgeLabel";
    case ErrorCode::IncompleteState: return "IncompleteState";
    case ErrorCode::MixedTwistState: return "MixedTwistState";
    case ErrorCode::SizeOne: return "SizeOne";
    case ErrorCode::ReducibleDiagram: return "ReducibleDiagram";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::FloodingContradiction: return "FloodingContradiction";
    case ErrorCode::PreconditionMissing: return "PreconditionMissing";
    case ErrorCode::NonPrimeRegion: return "NonPrimeRegion";
    case ErrorCode::Internal: return "Internal";
  }
  return "Internal";
}

namespace {

// Pulls `X[a,b,c,d]` tuples out of PD text. Accepts `X[..]`, `Xp[..]`,
// `Xm[..]` heads case-insensitively and an optional `PD[ ... ]` wrapper.
std::vector<std::array<int, 4>> tokenize_pd(const std::string& text) {
  std::string s = text;
  // Strip a leading `PD[` and its matching trailing `]` if present.
  auto first = s.find_first_not_of(" \t\r\n");
  if (first != std::string::npos &&
      (s.compare(first, 3, "PD[") == 0 || s.compare(first, 3, "pd[") == 0)) {
    auto last = s.find_last_of(']');
    if (last == std::string::npos || last <= first + 2)
      fail(ErrorCode::MalformedCode, "unterminated PD[ wrapper");
    s = s.substr(first + 3, last - first - 3);
  }

  std::vector<std::array<int, 4>> tuples;
  size_t i = 0;
  auto skip_sep = [&] {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ','))
      ++i;
  };
  skip_sep();
  while (i < s.size()) {
    if (s[i] != 'X' && s[i] != 'x')
      fail(ErrorCode::MalformedCode,
           "expected crossing tuple starting with X near '" + s.substr(i, 8) + "'");
    ++i;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size() || s[i] != '[')
      fail(ErrorCode::MalformedCode, "crossing tuple missing '['");
    ++i;
    std::array<int, 4> t{};
    for (int k = 0; k < 4; ++k) {
      while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ','))
        ++i;
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start) fail(ErrorCode::MalformedCode, "crossing tuple needs four positive integers");
      long v = std::stol(s.substr(start, i - start));
      if (v <= 0) fail(ErrorCode::MalformedCode, "edge labels must be positive");
      t[k] = static_cast<int>(v);
    }
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size() || s[i] != ']')
      fail(ErrorCode::MalformedCode, "crossing tuple missing ']'");
    ++i;
    tuples.push_back(t);
    skip_sep();
  }
  if (tuples.empty()) fail(ErrorCode::MalformedCode, "no crossings found");
  return tuples;
}

}  // namespace

Diagram Diagram::parse_pd(const std::string& text) {
  Diagram d;
  d.build(tokenize_pd(text));
  return d;
}

void Diagram::build(std::vector<std::array<int, 4>> tuples) {
  tuples_ = std::move(tuples);
  n_ = static_cast<int>(tuples_.size());
  label_.resize(4 * n_);
  for (int c = 0; c < n_; ++c)
    for (int s = 0; s < 4; ++s) label_[dart_at(c, s)] = tuples_[c][s];

  std::map<int, std::vector<Dart>> by_label;
  for (Dart d = 0; d < 4 * n_; ++d) by_label[label_[d]].push_back(d);
  for (auto& [lbl, darts] : by_label) {
    if (darts.size() > 2)
      fail(ErrorCode::DuplicateEdgeLabel,
           "edge label " + std::to_string(lbl) + " used " + std::to_string(darts.size()) +
               " times");
    if (darts.size() < 2)
      fail(ErrorCode::MalformedCode,
           "edge label " + std::to_string(lbl) + " used only once");
  }

  edge_.assign(4 * n_, -1);
  mate_.assign(4 * n_, -1);
  edge_darts_.clear();
  for (auto& [lbl, darts] : by_label) {
    int e = static_cast<int>(edge_darts_.size());
    edge_darts_.push_back({darts[0], darts[1]});
    edge_[darts[0]] = edge_[darts[1]] = e;
    mate_[darts[0]] = darts[1];
    mate_[darts[1]] = darts[0];
  }

  // Connectivity over crossings before the Euler test, so a split union of
  // two diagrams reports Disconnected rather than NonPlanar.
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      int c2 = crossing_of(mate_[dart_at(c, s)]);
      if (!seen[c2]) {
        seen[c2] = 1;
        ++reached;
        stack.push_back(c2);
      }
    }
  }
  if (reached != n_) fail(ErrorCode::Disconnected, "diagram has multiple components");

  faces_.clear();
  face_of_.assign(4 * n_, -1);
  for (Dart d0 = 0; d0 < 4 * n_; ++d0) {
    if (face_of_[d0] >= 0) continue;
    int f = static_cast<int>(faces_.size());
    std::vector<Dart> orbit;
    Dart d = d0;
    do {
      face_of_[d] = f;
      orbit.push_back(d);
      d = face_next(d);
    } while (d != d0);
    faces_.push_back(std::move(orbit));
  }
  int V = n_, E = 2 * n_, F = num_faces();
  if (V - E + F != 2)
    fail(ErrorCode::NonPlanar, "Euler characteristic V-E+F = " +
                                   std::to_string(V - E + F) + ", expected 2");
}

std::string Diagram::to_pd() const {
  // Dense edge ids were assigned in increasing label order, so emitting
  // edge+1 renumbers monotonically and round-trips through parse_pd.
  std::ostringstream out;
  for (int c = 0; c < n_; ++c) {
    if (c) out << ' ';
    out << "X[";
    for (int s = 0; s < 4; ++s) {
      if (s) out << ',';
      out << edge_[dart_at(c, s)] + 1;
    }
    out << ']';
  }
  return out.str();
}

std::string Diagram::to_json() const {
  std::ostringstream out;
  out << "{\"crossings\":" << n_ << ",\"edges\":" << num_edges()
      << ",\"faces\":" << num_faces() << ",\"pd\":[";
  for (int c = 0; c < n_; ++c) {
    if (c) out << ',';
    out << '[';
    for (int s = 0; s < 4; ++s) {
      if (s) out << ',';
      out << edge_[dart_at(c, s)] + 1;
    }
    out << ']';
  }
  out << "]}";
  return out.str();
}

Diagram Diagram::mirrored() const {
  std::vector<std::array<int, 4>> tuples(n_);
  for (int c = 0; c < n_; ++c) {
    const auto& t = tuples_[c];
    tuples[c] = {t[0], t[3], t[2], t[1]};
  }
  Diagram d;
  d.build(std::move(tuples));
  return d;
}

PrimenessCertificate is_prime(const Diagram& d) {
  const int n = d.crossings();
  const int E = d.num_edges();
  PrimenessCertificate cert;
  if (n == 1) {
    cert.prime = true;
    return cert;
  }
  std::vector<char> seen(n);
  for (int e1 = 0; e1 < E; ++e1) {
    for (int e2 = e1 + 1; e2 < E; ++e2) {
      std::fill(seen.begin(), seen.end(), 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      int reached = 1;
      while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
          Dart dart = dart_at(c, s);
          int e = d.edge_of(dart);
          if (e == e1 || e == e2) continue;
          int c2 = crossing_of(d.mate(dart));
          if (!seen[c2]) {
            seen[c2] = 1;
            ++reached;
            stack.push_back(c2);
          }
        }
      }
      if (reached != n) {
        cert.prime = false;
        cert.witness = {e1, e2};
        return cert;
      }
    }
  }
  cert.prime = true;
  return cert;
}

}  // namespace adeq
