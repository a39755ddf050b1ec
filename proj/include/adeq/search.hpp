#pragma once

#include <cstdint>
#include <vector>

#include "adeq/resolution.hpp"
#include "adeq/twist.hpp"

namespace adeq {

enum class SearchMode { Full, TwistCoherent };

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

struct SearchEntry {
  State state;
  int chi_neg = 0;
  LoopConditionVerdict loop;
};

struct SearchStats {
  std::uint64_t examined = 0;
  // States never built because twist-coherent enumeration rules them out.
  std::uint64_t skipped = 0;
};

struct SearchResult {
  std::vector<SearchEntry> entries;  // descending chi_neg, then state string
  SearchStats stats;
};

// Enumerates smoothing states and keeps the adequate homogeneous ones,
// annotated with chi_neg of the reduced state graph and the two-edge-loop
// verdict. Full mode visits all 2^n states; TwistCoherent visits the 2^t
// states constant on each twist region, which cover every adequate state.
// Throws BudgetExceeded when the enumeration would visit more states than
// `budget`.
SearchResult find_homogeneously_adequate(const Diagram& d, SearchMode mode,
                                         std::uint64_t budget = kDefaultBudget);

}  // namespace adeq
