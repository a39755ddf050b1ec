#pragma once

#include <string>
#include <vector>

namespace fixtures {

// Left-handed trefoil in the orientation that makes the all-A state smooth
// to 2 circles and the all-B state to 3.
inline constexpr const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

// Tuple list whose combinatorial map is connected but not spherical
// (V - E + F = 0); parsing must reject it.
inline constexpr const char* kNonPlanarTrefoilish =
    "X[1,4,2,3] X[3,6,4,5] X[5,2,6,1]";

// Single-crossing curl on the unknot.
inline constexpr const char* kKink = "X[1,2,2,1]";

// Two trefoils spliced along an edge: connected, planar, not prime.
// Edges labelled 2 and 8 form the separating pair.
inline constexpr const char* kConnectSum =
    "X[1,4,2,5] X[3,6,4,1] X[5,8,6,3] X[7,10,8,11] X[9,12,10,7] X[11,2,12,9]";

// Three trefoils in a chain; has two separating pairs, so the state
// complexes carry at least two non-prime arcs.
inline constexpr const char* kChainSum =
    "X[1,4,2,5] X[3,6,4,1] X[5,8,6,3] "
    "X[7,10,8,11] X[9,12,10,7] X[11,2,14,9] "
    "X[13,16,12,17] X[15,18,16,13] X[17,14,18,15]";

// Closure of a braid word on `strands` strands. Word entries are nonzero
// integers: +i crosses strands i,i+1 with strand i passing under, -i the
// reverse. Every strand must meet a crossing or the closure has a free loop.
std::string braid_pd(int strands, const std::vector<int>& word);

// Pretzel link P(a_1,...,a_k): k vertical twist stacks joined cyclically by
// top and bottom arcs. Always alternating; needs k >= 2 and every a_i >= 1.
std::string pretzel_pd(const std::vector<int>& stacks);

// Double twist link J(m,n): a horizontal stack of m crossings and a vertical
// stack of n, closed into the rational link with fraction m + 1/n. Reduced
// and alternating with twist regions of sizes {m,n} once m,n >= 2.
std::string jtwist_pd(int m, int n);

struct Named {
  std::string name;
  std::string pd;
};

// Connected planar diagrams of 3..8 crossings used as the search corpus.
// None is Reidemeister-I/II reducible.
const std::vector<Named>& corpus();

struct VolumeRow {
  std::string name;
  std::string source;  // generator descriptor, see pd_from_source
  std::string pd;
  double volume = 0.0;
};

// Loads the census table: tab-separated name/source/volume/note rows,
// '#' comment lines skipped.
std::vector<VolumeRow> load_volume_rows(const std::string& tsv_path);

// Expands "pretzel:a,b,c", "jtwist:m,n", "braid:k:w1,w2,..." or a literal
// "X[...]" PD string.
std::string pd_from_source(const std::string& source);

}  // namespace fixtures
