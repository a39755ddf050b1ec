#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "adeq/bound.hpp"
#include "adeq/diagram.hpp"
#include "adeq/export.hpp"
#include "adeq/resolution.hpp"
#include "adeq/search.hpp"
#include "adeq/twist.hpp"
#include "adeq/upperpoly.hpp"

namespace {

using adeq::ordered_json;

struct InputLine {
  std::string file;
  int line = 0;
  std::string text;
};

// Severity accumulator; the worst class seen decides the exit code.
struct Status {
  bool input_error = false;
  bool budget = false;
  bool unknown_ec = false;
  bool check_failed = false;

  int exit_code() const {
    if (input_error) return 1;
    if (budget) return 3;
    if (unknown_ec) return 2;
    if (check_failed) return 1;
    return 0;
  }
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// One PD code per non-empty line; '#' starts a comment. Missing files are
// reported in-stream and flagged as input errors.
std::vector<InputLine> read_inputs(const std::vector<std::string>& paths,
                                   Status& status, const std::string& format) {
  std::vector<InputLine> out;
  auto drain = [&](std::istream& in, const std::string& name) {
    std::string line;
    int num = 0;
    while (std::getline(in, line)) {
      ++num;
      size_t hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      line = trim(line);
      if (line.empty()) continue;
      out.push_back({name, num, line});
    }
  };
  if (paths.empty()) {
    drain(std::cin, "-");
    return out;
  }
  for (const auto& p : paths) {
    std::ifstream in(p);
    if (!in) {
      status.input_error = true;
      if (format == "text") {
        std::cout << p << ":0: error MalformedCode: cannot open file\n";
      } else {
        ordered_json j{{"schema", adeq::kSchema},
                       {"file", p},
                       {"line", 0},
                       {"error",
                        ordered_json{{"code", "MalformedCode"},
                                     {"message", "cannot open file"}}}};
        std::cout << j.dump() << "\n";
      }
      continue;
    }
    drain(in, p);
  }
  return out;
}

void emit_error(const InputLine& in, const adeq::Error& e, Status& status,
                const std::string& format) {
  if (std::string(e.code_name()) == "BudgetExceeded")
    status.budget = true;
  else
    status.input_error = true;
  if (format == "text") {
    std::cout << in.file << ":" << in.line << ": error " << e.code_name()
              << ": " << e.what() << "\n";
    return;
  }
  ordered_json j{{"schema", adeq::kSchema},
                 {"file", in.file},
                 {"line", in.line},
                 {"error", ordered_json{{"code", e.code_name()},
                                        {"message", e.what()}}}};
  std::cout << j.dump() << "\n";
}

ordered_json record_head(const InputLine& in, const adeq::Diagram& d) {
  return {{"schema", adeq::kSchema},
          {"file", in.file},
          {"line", in.line},
          {"pd", d.to_pd()}};
}

adeq::Diagram parse_input(const InputLine& in, bool mirror) {
  adeq::Diagram d = adeq::Diagram::parse_pd(in.text);
  return mirror ? d.mirrored() : d;
}

adeq::SearchMode mode_of(const std::string& mode) {
  return mode == "full" ? adeq::SearchMode::Full
                        : adeq::SearchMode::TwistCoherent;
}

struct UniformVerdict {
  bool adequate = false;
  bool homogeneous = false;
  int chi_neg = 0;
};

UniformVerdict uniform_verdict(const adeq::Diagram& d, char letter) {
  adeq::StateComplex sc(d, adeq::State::uniform(d.crossings(), letter));
  adeq::StateGraph g = adeq::state_graph(sc);
  UniformVerdict v;
  v.adequate = adeq::check_adequate(g).adequate;
  v.homogeneous = adeq::check_homogeneous(sc).homogeneous;
  v.chi_neg = adeq::euler_char_neg(adeq::reduce(g));
  return v;
}

int cmd_parse(const std::vector<InputLine>& inputs, bool mirror,
              const std::string& format, Status& status) {
  for (const auto& in : inputs) {
    try {
      adeq::Diagram d = parse_input(in, mirror);
      auto cert = adeq::is_prime(d);
      if (format == "text") {
        std::cout << in.file << ":" << in.line << ": " << d.crossings()
                  << " crossings, " << d.num_edges() << " edges, "
                  << d.num_faces() << " faces, "
                  << (cert.prime ? "prime" : "not prime") << "\n";
        continue;
      }
      ordered_json j = record_head(in, d);
      j["crossings"] = d.crossings();
      j["edges"] = d.num_edges();
      j["faces"] = d.num_faces();
      j["prime"] = cert.prime;
      j["prime_witness"] =
          cert.prime ? ordered_json(nullptr)
                     : ordered_json{{"edge_a", (*cert.witness)[0]},
                                    {"edge_b", (*cert.witness)[1]}};
      j["diagram"] = ordered_json::parse(d.to_json());
      std::cout << j.dump() << "\n";
    } catch (const adeq::Error& e) {
      emit_error(in, e, status, format);
    }
  }
  return status.exit_code();
}

int cmd_check(const std::vector<InputLine>& inputs, bool mirror,
              const std::string& format, Status& status) {
  for (const auto& in : inputs) {
    try {
      adeq::Diagram d = parse_input(in, mirror);
      auto cert = adeq::is_prime(d);
      UniformVerdict a = uniform_verdict(d, 'A');
      UniformVerdict b = uniform_verdict(d, 'B');
      bool pass = cert.prime && ((a.adequate && a.homogeneous) ||
                                 (b.adequate && b.homogeneous));
      if (!pass) status.check_failed = true;
      if (format == "text") {
        auto describe = [](const UniformVerdict& v) {
          std::ostringstream s;
          s << (v.adequate ? "adequate" : "not adequate") << ", "
            << (v.homogeneous ? "homogeneous" : "not homogeneous")
            << ", chi_neg=" << v.chi_neg;
          return s.str();
        };
        std::cout << in.file << ":" << in.line << ": "
                  << (cert.prime ? "prime" : "not prime") << "; all-A: "
                  << describe(a) << "; all-B: " << describe(b) << "; "
                  << (pass ? "PASS" : "FAIL") << "\n";
        continue;
      }
      ordered_json j = record_head(in, d);
      j["prime"] = cert.prime;
      auto state_json = [](const UniformVerdict& v) {
        return ordered_json{{"adequate", v.adequate},
                            {"homogeneous", v.homogeneous},
                            {"chi_neg", v.chi_neg}};
      };
      j["all_a"] = state_json(a);
      j["all_b"] = state_json(b);
      j["pass"] = pass;
      std::cout << j.dump() << "\n";
    } catch (const adeq::Error& e) {
      emit_error(in, e, status, format);
    }
  }
  return status.exit_code();
}

int cmd_search(const std::vector<InputLine>& inputs, bool mirror,
               const std::string& mode, std::uint64_t budget, bool best,
               bool stats, const std::string& format, Status& status) {
  for (const auto& in : inputs) {
    try {
      adeq::Diagram d = parse_input(in, mirror);
      adeq::SearchResult res =
          adeq::find_homogeneously_adequate(d, mode_of(mode), budget);
      size_t take = best ? std::min<size_t>(1, res.entries.size())
                         : res.entries.size();
      for (size_t i = 0; i < take; ++i) {
        const auto& entry = res.entries[i];
        if (format == "text") {
          std::cout << in.file << ":" << in.line
                    << ": state=" << entry.state.letters
                    << " chi_neg=" << entry.chi_neg << " loop="
                    << (entry.loop.holds ? "holds" : "violated") << "\n";
          continue;
        }
        ordered_json j = record_head(in, d);
        j["state"] = entry.state.letters;
        j["chi_neg"] = entry.chi_neg;
        j["loop_condition"] = adeq::loop_verdict_to_json(entry.loop);
        std::cout << j.dump() << "\n";
      }
      if (stats) {
        if (format == "text") {
          std::cout << in.file << ":" << in.line
                    << ": examined=" << res.stats.examined
                    << " skipped=" << res.stats.skipped
                    << " found=" << res.entries.size() << "\n";
        } else {
          ordered_json j = record_head(in, d);
          j["stats"] = ordered_json{{"examined", res.stats.examined},
                                    {"skipped", res.stats.skipped},
                                    {"found", res.entries.size()}};
          std::cout << j.dump() << "\n";
        }
      }
    } catch (const adeq::Error& e) {
      emit_error(in, e, status, format);
    }
  }
  return status.exit_code();
}

int cmd_bound(const std::vector<InputLine>& inputs, bool mirror,
              const std::string& mode, std::uint64_t budget, bool all,
              int precision, bool hyperbolic, const std::string& format,
              Status& status) {
  for (const auto& in : inputs) {
    try {
      adeq::Diagram d = parse_input(in, mirror);
      auto cert = adeq::is_prime(d);
      adeq::SearchResult res =
          adeq::find_homogeneously_adequate(d, mode_of(mode), budget);

      auto emit = [&](const adeq::SearchEntry& entry) {
        bool certified = cert.prime && entry.loop.holds;
        adeq::BoundReport rep;
        if (cert.prime) {
          rep = adeq::volume_lower_bound(true, true, true, entry.chi_neg,
                                         entry.loop, hyperbolic, precision);
        } else {
          rep.prime = false;
          rep.adequate = true;
          rep.homogeneous = true;
          rep.chi_neg = entry.chi_neg;
          rep.loop = entry.loop;
          rep.precision = precision;
        }
        if (!certified) status.unknown_ec = true;
        if (format == "text") {
          std::cout << in.file << ":" << in.line
                    << ": state=" << entry.state.letters
                    << " chi_neg=" << entry.chi_neg << " ec="
                    << (rep.ec == adeq::ECStatus::CertifiedZero
                            ? "certified_zero"
                            : "unknown");
          if (rep.volume_bound)
            std::cout << " volume>="
                      << adeq::format_decimal(*rep.volume_bound, precision)
                      << " gromov>="
                      << adeq::format_decimal(*rep.gromov_bound, precision);
          std::cout << "\n";
          return;
        }
        ordered_json j = record_head(in, d);
        j["state"] = entry.state.letters;
        j["found_states"] = res.entries.size();
        ordered_json rj = adeq::bound_to_json(rep);
        for (auto& [k, v] : rj.items())
          if (k != "schema") j[k] = v;
        std::cout << j.dump() << "\n";
      };

      if (res.entries.empty()) {
        status.unknown_ec = true;
        if (format == "text") {
          std::cout << in.file << ":" << in.line
                    << ": no homogeneously adequate state; ec=unknown\n";
        } else {
          ordered_json j = record_head(in, d);
          j["state"] = nullptr;
          j["found_states"] = 0;
          j["prime"] = cert.prime;
          j["ec"] = "unknown";
          j["note"] = "no homogeneously adequate state found";
          std::cout << j.dump() << "\n";
        }
        continue;
      }
      if (all) {
        for (const auto& entry : res.entries) emit(entry);
        continue;
      }
      // Best = the certified entry with maximal chi_neg; entries are sorted,
      // so the first certifiable one wins. Without primeness or with every
      // loop verdict failing, report the top entry as unknown.
      const adeq::SearchEntry* pick = nullptr;
      if (cert.prime)
        for (const auto& entry : res.entries)
          if (entry.loop.holds) {
            pick = &entry;
            break;
          }
      emit(pick ? *pick : res.entries.front());
    } catch (const adeq::Error& e) {
      emit_error(in, e, status, format);
    }
  }
  return status.exit_code();
}

std::string artifact_stem(const InputLine& in) {
  std::string stem = in.file == "-"
                         ? "stdin"
                         : std::filesystem::path(in.file).stem().string();
  for (char& c : stem)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return stem + "-L" + std::to_string(in.line);
}

int cmd_export(const std::vector<InputLine>& inputs, bool mirror,
               const std::string& state_arg, const std::string& out_dir,
               bool svg, Status& status) {
  std::filesystem::create_directories(out_dir);
  for (const auto& in : inputs) {
    try {
      adeq::Diagram d = parse_input(in, mirror);
      adeq::State st =
          state_arg.size() == 1
              ? adeq::State::uniform(d.crossings(), std::toupper(state_arg[0]))
              : adeq::State::parse(state_arg, d.crossings());
      if (st.letters.find_first_not_of("AB") != std::string::npos)
        adeq::fail(adeq::ErrorCode::IncompleteState,
                   "state letters must be A or B");
      adeq::StateComplex sc(d, st);
      adeq::StateGraph g = adeq::state_graph(sc);
      adeq::UpperPolyhedron up = adeq::build_upper_polyhedron(sc);

      std::string stem = artifact_stem(in);
      auto write = [&](const std::string& name, const std::string& bytes) {
        std::filesystem::path path = std::filesystem::path(out_dir) / name;
        std::ofstream f(path, std::ios::binary);
        if (!f) adeq::fail(adeq::ErrorCode::Internal, "cannot write " + path.string());
        f << bytes;
        f.close();
        ordered_json j{{"schema", adeq::kSchema},
                       {"file", in.file},
                       {"line", in.line},
                       {"artifact", path.generic_string()},
                       {"bytes", bytes.size()}};
        std::cout << j.dump() << "\n";
      };
      write(stem + ".G.dot", adeq::state_graph_dot(g, "G"));
      write(stem + ".Gp.dot", adeq::state_graph_dot(adeq::reduce(g), "Gp"));
      write(stem + ".pieces.dot", adeq::piece_graph_dot(up));
      write(stem + ".complex.json", adeq::complex_to_json(sc).dump(2) + "\n");
      write(stem + ".upper.json", adeq::upper_to_json(up).dump(2) + "\n");
      if (svg) write(stem + ".H.svg", adeq::hsigma_svg(up));
    } catch (const adeq::Error& e) {
      emit_error(in, e, status, "json");
    }
  }
  return status.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adequate-state lower bounds for knot and link volumes"};
  app.require_subcommand(1);

  std::vector<std::string> paths;
  bool mirror = false;
  std::string format = "json";
  std::string mode = "twist";
  std::uint64_t budget = adeq::kDefaultBudget;
  bool all = false, best = false, stats = false, svg = false;
  int precision = 4;
  bool hyperbolic = false;
  std::string state_arg = "A";
  std::string out_dir = ".";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("paths", paths, "PD-code files, one diagram per line; stdin when omitted");
    sub->add_flag("--mirror", mirror, "reverse each crossing's rotation, swapping the A/B convention");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_search_opts = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "state enumeration: every state or one per twist-region choice")
        ->check(CLI::IsMember({"full", "twist"}));
    sub->add_option("--budget", budget, "largest state count an enumeration may visit")
        ->envname("ADEQ_BUDGET");
  };

  CLI::App* parse = app.add_subcommand("parse", "validate PD codes and dump the combinatorial map");
  add_common(parse);

  CLI::App* check = app.add_subcommand("check", "primeness plus all-A/all-B adequacy and homogeneity");
  add_common(check);

  CLI::App* search = app.add_subcommand("search", "enumerate homogeneously adequate states");
  add_common(search);
  add_search_opts(search);
  search->add_flag("--best", best, "only the top state per diagram");
  search->add_flag("--all", all, "every qualifying state per diagram (default)")
      ->excludes("--best");
  search->add_flag("--stats", stats, "append one enumeration-statistics record per diagram");

  CLI::App* bound = app.add_subcommand("bound", "certified volume lower bound per diagram");
  add_common(bound);
  add_search_opts(bound);
  bound->add_flag("--all", all, "report every qualifying state, not just the best certified one");
  bound->add_option("--precision", precision, "decimal digits in printed bounds")
      ->check(CLI::Range(0, 17));
  bound->add_flag("--hyperbolic", hyperbolic, "record that the link is assumed hyperbolic");

  CLI::App* exp = app.add_subcommand("export", "write DOT/JSON/SVG artifacts per diagram");
  add_common(exp);
  exp->add_option("--state", state_arg, "smoothing letters, or a single letter for a uniform state");
  exp->add_option("--out", out_dir, "output directory");
  exp->add_flag("--svg", svg, "also emit a schematic drawing of the smoothed diagram");

  CLI11_PARSE(app, argc, argv);

  Status status;
  std::vector<InputLine> inputs = read_inputs(paths, status, format);
  try {
    if (parse->parsed()) return cmd_parse(inputs, mirror, format, status);
    if (check->parsed()) return cmd_check(inputs, mirror, format, status);
    if (search->parsed())
      return cmd_search(inputs, mirror, mode, budget, best, stats, format, status);
    if (bound->parsed())
      return cmd_bound(inputs, mirror, mode, budget, all, precision, hyperbolic,
                       format, status);
    if (exp->parsed())
      return cmd_export(inputs, mirror, state_arg, out_dir, svg, status);
  } catch (const std::exception& e) {
    ordered_json j{{"schema", adeq::kSchema},
                   {"error", ordered_json{{"code", "Internal"},
                                          {"message", e.what()}}}};
    std::cout << j.dump() << "\n";
    return 1;
  }
  return 1;
}
