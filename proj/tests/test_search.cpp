#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "adeq/search.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace adeq;

namespace {

// Brute-force reference: test every letter string with the dart-splice and
// corner-face oracles only.
std::set<std::pair<std::string, int>> brute_entries(const Diagram& d) {
  int n = d.crossings();
  std::set<std::pair<std::string, int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::string letters(static_cast<size_t>(n), 'A');
    for (int i = 0; i < n; ++i)
      if (mask & (1 << (n - 1 - i))) letters[static_cast<size_t>(i)] = 'B';
    State s{letters};
    auto sp = oracles::splice(d, s);
    if (!sp.adequate) continue;
    auto oc = oracles::corner_regions(d, s);
    if (!oc.homogeneous) continue;
    REQUIRE(sp.connected);
    out.insert({letters, sp.chi_neg});
  }
  return out;
}

std::set<std::pair<std::string, int>> result_entries(const SearchResult& r) {
  std::set<std::pair<std::string, int>> out;
  for (const auto& e : r.entries) out.insert({e.state.letters, e.chi_neg});
  return out;
}

}  // namespace

TEST_CASE("full search equals the oracle brute force") {
  for (const auto& [name, pd] : fixtures::corpus()) {
    CAPTURE(name);
    Diagram d = Diagram::parse_pd(pd);
    auto brute = brute_entries(d);
    auto full = find_homogeneously_adequate(d, SearchMode::Full);
    CHECK(result_entries(full) == brute);
  }
}

TEST_CASE("twist-coherent search misses no adequate state") {
  for (const auto& [name, pd] : fixtures::corpus()) {
    CAPTURE(name);
    Diagram d = Diagram::parse_pd(pd);
    auto full = find_homogeneously_adequate(d, SearchMode::Full);
    auto twist = find_homogeneously_adequate(d, SearchMode::TwistCoherent);
    CHECK(result_entries(full) == result_entries(twist));
    CHECK(full.stats.examined == (std::uint64_t{1} << d.crossings()));
    CHECK(full.stats.skipped == 0);
    CHECK(twist.stats.examined + twist.stats.skipped == full.stats.examined);
    // Loop verdicts stored per entry agree between the two modes.
    REQUIRE(full.entries.size() == twist.entries.size());
    for (size_t i = 0; i < full.entries.size(); ++i) {
      CHECK(full.entries[i].state.letters == twist.entries[i].state.letters);
      CHECK(full.entries[i].loop.holds == twist.entries[i].loop.holds);
      CHECK(full.entries[i].loop.loops.size() == twist.entries[i].loop.loops.size());
    }
  }
}

TEST_CASE("entries come sorted by chi_neg then letters") {
  for (const auto& [name, pd] : fixtures::corpus()) {
    CAPTURE(name);
    Diagram d = Diagram::parse_pd(pd);
    auto r = find_homogeneously_adequate(d, SearchMode::TwistCoherent);
    CHECK(!r.entries.empty());  // uniform states qualify on these diagrams
    for (size_t i = 1; i < r.entries.size(); ++i) {
      const auto& p = r.entries[i - 1];
      const auto& q = r.entries[i];
      bool ordered = p.chi_neg > q.chi_neg ||
                     (p.chi_neg == q.chi_neg && p.state.letters < q.state.letters);
      CHECK(ordered);
    }
  }
}

TEST_CASE("trefoil search results pinned") {
  Diagram d = Diagram::parse_pd(fixtures::kTrefoil);
  auto r = find_homogeneously_adequate(d, SearchMode::Full);
  // Only the two uniform states are adequate: any mixed state caps one bigon
  // and loops its segment.
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].chi_neg == 0);
  CHECK(r.entries[1].chi_neg == 0);
  std::set<std::string> letters = {r.entries[0].state.letters,
                                   r.entries[1].state.letters};
  CHECK(letters == std::set<std::string>{"AAA", "BBB"});
  for (const auto& e : r.entries) CHECK(e.loop.holds);
}

TEST_CASE("budget limits both modes") {
  Diagram d = Diagram::parse_pd(fixtures::pretzel_pd({2, 2, 2, 2}));
  REQUIRE(d.crossings() == 8);
  try {
    find_homogeneously_adequate(d, SearchMode::Full, 128);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  // Four twist regions: 16 coherent states fit the same budget.
  auto r = find_homogeneously_adequate(d, SearchMode::TwistCoherent, 128);
  CHECK(r.stats.examined == 16);
  CHECK(r.stats.skipped == 256 - 16);
}

TEST_CASE("a mixed-letter state can qualify and certify") {
  // One long stack smoothed A, the other B: both stacks stay internally
  // uniform, so the state is homogeneous despite mixing letters.
  Diagram d = Diagram::parse_pd(fixtures::jtwist_pd(4, 3));
  auto r = find_homogeneously_adequate(d, SearchMode::TwistCoherent);
  const SearchEntry* mixed = nullptr;
  int nonuniform = 0;
  for (const auto& e : r.entries)
    if (!e.state.uniform_letter()) {
      ++nonuniform;
      mixed = &e;
    }
  CHECK(nonuniform == 1);
  REQUIRE(mixed != nullptr);
  CHECK(mixed->state.letters == "AAAABBB");
  CHECK(mixed->chi_neg == 1);
  CHECK(mixed->loop.holds);
}
