#include "fixtures.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fixtures {

namespace {

std::string render(const std::vector<std::array<int, 4>>& tuples) {
  std::ostringstream out;
  for (size_t i = 0; i < tuples.size(); ++i) {
    if (i) out << ' ';
    out << "X[" << tuples[i][0] << ',' << tuples[i][1] << ',' << tuples[i][2]
        << ',' << tuples[i][3] << ']';
  }
  return out.str();
}

std::vector<int> parse_ints(const std::string& s, char sep) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (item.empty()) throw std::runtime_error("empty numeric field in " + s);
    out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace

std::string braid_pd(int strands, const std::vector<int>& word) {
  if (strands < 2) throw std::runtime_error("braid needs >= 2 strands");
  std::vector<int> init(static_cast<size_t>(strands));
  std::iota(init.begin(), init.end(), 1);
  std::vector<int> cur = init;
  int next = strands + 1;
  std::vector<std::array<int, 4>> tuples;
  for (int g : word) {
    int i = std::abs(g) - 1;
    if (g == 0 || i + 1 >= strands)
      throw std::runtime_error("braid letter out of range");
    int e1 = next++;
    int e2 = next++;
    if (g > 0)
      tuples.push_back({cur[i + 1], cur[i], e1, e2});
    else
      tuples.push_back({cur[i], e1, e2, cur[i + 1]});
    cur[i] = e1;
    cur[i + 1] = e2;
  }
  // Closure identifies the final strand labels with the initial ones. A
  // strand missed by every letter would close into a crossing-free loop.
  std::map<int, int> rename;
  for (int j = 0; j < strands; ++j) {
    if (cur[j] == init[j]) throw std::runtime_error("braid strand never crossed");
    rename[cur[j]] = init[j];
  }
  for (auto& t : tuples)
    for (int& x : t) {
      auto it = rename.find(x);
      if (it != rename.end()) x = it->second;
    }
  return render(tuples);
}

std::string pretzel_pd(const std::vector<int>& stacks) {
  int k = static_cast<int>(stacks.size());
  if (k < 2) throw std::runtime_error("pretzel needs >= 2 stacks");
  for (int a : stacks)
    if (a < 1) throw std::runtime_error("pretzel stack sizes must be >= 1");
  // Top arcs t_j join stack j-1 to stack j, bottom arcs b_j likewise.
  std::vector<int> t(static_cast<size_t>(k)), b(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    t[static_cast<size_t>(j)] = j + 1;
    b[static_cast<size_t>(j)] = k + j + 1;
  }
  int next = 2 * k + 1;
  std::vector<std::array<int, 4>> tuples;
  for (int j = 0; j < k; ++j) {
    int l = t[static_cast<size_t>((j + k - 1) % k)];
    int r = t[static_cast<size_t>(j)];
    for (int c = 0; c < stacks[static_cast<size_t>(j)]; ++c) {
      bool last = c + 1 == stacks[static_cast<size_t>(j)];
      int lp = last ? b[static_cast<size_t>((j + k - 1) % k)] : next++;
      int rp = last ? b[static_cast<size_t>(j)] : next++;
      tuples.push_back({l, lp, rp, r});
      l = lp;
      r = rp;
    }
  }
  return render(tuples);
}

std::string jtwist_pd(int m, int n) {
  if (m < 1 || n < 1) throw std::runtime_error("jtwist stacks must be >= 1");
  // Shared boundary labels: a,b join the stacks on one side, c,d close the
  // link around the outside.
  const int a = 1, b = 2, c = 3, d = 4;
  int next = 5;
  std::vector<std::array<int, 4>> tuples;
  int lt = c, lb = d;
  for (int i = 1; i <= m; ++i) {
    int rt = (i == m) ? a : next++;
    int rb = (i == m) ? b : next++;
    tuples.push_back({lb, rb, rt, lt});
    lt = rt;
    lb = rb;
  }
  int l = a, r = c;
  for (int j = 1; j <= n; ++j) {
    int lp = (j == n) ? b : next++;
    int rp = (j == n) ? d : next++;
    tuples.push_back({r, l, lp, rp});
    l = lp;
    r = rp;
  }
  return render(tuples);
}

const std::vector<Named>& corpus() {
  static const std::vector<Named> all = {
      {"trefoil", kTrefoil},
      {"trefoil-braid", braid_pd(2, {1, 1, 1})},
      {"trefoil-pretzel", pretzel_pd({1, 1, 1})},
      {"fig8-braid", braid_pd(3, {1, -2, 1, -2})},
      {"nonalt4-braid", braid_pd(3, {1, 2, 1, 2})},
      {"j22", jtwist_pd(2, 2)},
      {"torus24-braid", braid_pd(2, {1, 1, 1, 1})},
      {"p211", pretzel_pd({2, 1, 1})},
      {"j32", jtwist_pd(3, 2)},
      {"whitehead-braid", braid_pd(3, {1, -2, 1, -2, 1})},
      {"p221", pretzel_pd({2, 2, 1})},
      {"torus25-braid", braid_pd(2, {1, 1, 1, 1, 1})},
      {"p11111", pretzel_pd({1, 1, 1, 1, 1})},
      {"j42", jtwist_pd(4, 2)},
      {"p33", pretzel_pd({3, 3})},
      {"p222", pretzel_pd({2, 2, 2})},
      {"borromean-braid", braid_pd(3, {1, -2, 1, -2, 1, -2})},
      {"nonalt6-braid", braid_pd(3, {1, 2, 1, 2, 1, 2})},
      {"connectsum", kConnectSum},
      {"j52", jtwist_pd(5, 2)},
      {"j43", jtwist_pd(4, 3)},
      {"p331", pretzel_pd({3, 3, 1})},
      {"p322", pretzel_pd({3, 2, 2})},
      {"j62", jtwist_pd(6, 2)},
      {"j44", jtwist_pd(4, 4)},
      {"p332", pretzel_pd({3, 3, 2})},
      {"p2222", pretzel_pd({2, 2, 2, 2})},
      {"turks-braid", braid_pd(3, {1, -2, 1, -2, 1, -2, 1, -2})},
      {"braid5", braid_pd(5, {1, 2, 3, 4, 1, 2, 3, 4})},
  };
  return all;
}

std::string pd_from_source(const std::string& source) {
  if (source.rfind("pretzel:", 0) == 0)
    return pretzel_pd(parse_ints(source.substr(8), ','));
  if (source.rfind("jtwist:", 0) == 0) {
    auto mn = parse_ints(source.substr(7), ',');
    if (mn.size() != 2) throw std::runtime_error("jtwist needs two stack sizes");
    return jtwist_pd(mn[0], mn[1]);
  }
  if (source.rfind("braid:", 0) == 0) {
    auto rest = source.substr(6);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("braid source needs strands:word");
    int strands = std::stoi(rest.substr(0, colon));
    return braid_pd(strands, parse_ints(rest.substr(colon + 1), ','));
  }
  if (source.rfind("X[", 0) == 0 || source.rfind("PD[", 0) == 0) return source;
  throw std::runtime_error("unknown diagram source: " + source);
}

std::vector<VolumeRow> load_volume_rows(const std::string& tsv_path) {
  std::ifstream in(tsv_path);
  if (!in) throw std::runtime_error("cannot open " + tsv_path);
  std::vector<VolumeRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    VolumeRow row;
    std::string volume;
    if (!std::getline(ls, row.name, '\t') || !std::getline(ls, row.source, '\t') ||
        !std::getline(ls, volume, '\t'))
      throw std::runtime_error("short census row: " + line);
    row.volume = std::stod(volume);
    row.pd = pd_from_source(row.source);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("census table is empty");
  return rows;
}

}  // namespace fixtures
