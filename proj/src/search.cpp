#include "adeq/search.hpp"

#include <algorithm>

namespace adeq {

namespace {

std::uint64_t pow2_or_throw(int bits, std::uint64_t budget, const char* what) {
  if (bits > 62 || (std::uint64_t{1} << bits) > budget)
    fail(ErrorCode::BudgetExceeded,
         std::string(what) + " would enumerate 2^" + std::to_string(bits) +
             " states, over the budget of " + std::to_string(budget));
  return std::uint64_t{1} << bits;
}

}  // namespace

SearchResult find_homogeneously_adequate(const Diagram& d, SearchMode mode,
                                         std::uint64_t budget) {
  const int n = d.crossings();
  auto regions = find_twist_regions(d);
  const int t = static_cast<int>(regions.size());

  SearchResult result;
  std::uint64_t total;
  if (mode == SearchMode::Full) {
    total = pow2_or_throw(n, budget, "full search");
  } else {
    total = pow2_or_throw(t, budget, "twist-coherent search");
    if (n <= 62)
      result.stats.skipped = (std::uint64_t{1} << n) - total;
  }

  auto consider = [&](const State& s) {
    ++result.stats.examined;
    StateComplex sc(d, s);
    StateGraph g = state_graph(sc);
    if (!check_adequate(g).adequate) return;
    if (!check_homogeneous(sc).homogeneous) return;
    SearchEntry entry{s, euler_char_neg(reduce(g)), loop_condition(sc, regions)};
    result.entries.push_back(std::move(entry));
  };

  if (mode == SearchMode::Full) {
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      State s = State::uniform(n, 'A');
      for (int i = 0; i < n; ++i)
        if (mask >> (n - 1 - i) & 1) s.letters[i] = 'B';
      consider(s);
    }
  } else {
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      State s = State::uniform(n, 'A');
      for (int i = 0; i < t; ++i)
        if (mask >> (t - 1 - i) & 1)
          for (int c : regions[i].crossings) s.letters[c] = 'B';
      consider(s);
    }
  }

  std::sort(result.entries.begin(), result.entries.end(),
            [](const SearchEntry& x, const SearchEntry& y) {
              if (x.chi_neg != y.chi_neg) return x.chi_neg > y.chi_neg;
              return x.state.letters < y.state.letters;
            });
  return result;
}

}  // namespace adeq
