#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fatmark/fatmark.h"

namespace {

enum Exit { kSuccess = 0, kFailure = 1, kUsage = 2 };

struct GraphDeleter {
  void operator()(fm_graph* g) const { fm_graph_free(g); }
};
struct PathDeleter {
  void operator()(fm_path* p) const { fm_path_free(p); }
};
using GraphPtr = std::unique_ptr<fm_graph, GraphDeleter>;
using PathPtr = std::unique_ptr<fm_path, PathDeleter>;

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { fm_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

bool tsv = false;

int report(fm_status st) {
  std::cerr << "error: " << fm_last_error() << "\n";
  return st == FM_ERR_PARSE || st == FM_ERR_INVALID_ARGUMENT ? kUsage : kFailure;
}

void field(const std::string& key, const std::string& value) {
  std::cout << key << (tsv ? "\t" : ": ") << value << "\n";
}

bool read_file(const std::string& path, std::string& out) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) return false;
    ss << in.rdbuf();
  }
  out = ss.str();
  return true;
}

int load_graph(const std::string& path, GraphPtr& out) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return kUsage;
  }
  fm_graph* g = nullptr;
  if (fm_status st = fm_graph_parse(text.c_str(), &g); st != FM_OK) return report(st);
  out.reset(g);
  return kSuccess;
}

std::string half(const fm_half_edge& h) {
  return std::to_string(h.label) + (h.plus ? "+" : "-");
}

int print_path(const fm_path* p, char cocycle, bool assert_zero) {
  const size_t n = fm_path_length(p);
  if (tsv) std::cout << "step\tedge\ta\tb\tc\td\tnew\tvalue\n";
  for (size_t i = 0; i < n; ++i) {
    fm_step s;
    OwnedString v;
    if (fm_status st = fm_path_step(p, i, &s); st != FM_OK) return report(st);
    if (fm_status st = fm_path_step_value(p, cocycle, i, &v.s); st != FM_OK) return report(st);
    if (tsv) {
      std::cout << i + 1 << '\t' << half(s.edge) << '\t' << half(s.a) << '\t' << half(s.b) << '\t'
                << half(s.c) << '\t' << half(s.d) << '\t' << half(s.new_edge) << '\t' << v.str()
                << "\n";
    } else {
      std::cout << "step " << i + 1 << ": flip " << half(s.edge) << " a=" << half(s.a)
                << " b=" << half(s.b) << " c=" << half(s.c) << " d=" << half(s.d)
                << " new=" << half(s.new_edge) << " " << cocycle << "=" << v.str() << "\n";
    }
  }
  OwnedString total;
  int zero = 0;
  if (fm_status st = fm_path_total(p, cocycle, &total.s, &zero); st != FM_OK) return report(st);
  field("closed", fm_path_is_closed(p) ? "yes" : "no");
  field("total", total.str());
  if (assert_zero && !zero) {
    std::cerr << "error: total of " << cocycle << " is not zero\n";
    return kFailure;
  }
  return kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fatmark: marked fatgraphs, flips, cocycles and the Earle class"};
  app.require_subcommand(1);
  std::string format = "plain";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "tsv"}))
      ->capture_default_str();

  std::string file;
  auto* validate_cmd = app.add_subcommand("validate", "Check the fatgraph axioms");
  validate_cmd->add_option("file", file, "Graph file ('-' for stdin)")->required();

  auto* info_cmd = app.add_subcommand("info", "Vertex and edge counts, genus, boundary");
  info_cmd->add_option("file", file, "Graph file")->required();

  std::string edge;
  auto* flip_cmd = app.add_subcommand("flip", "Flip one edge and print the new graph");
  flip_cmd->add_option("file", file, "Graph file")->required();
  flip_cmd->add_option("--edge", edge, "Edge id, optionally with orientation")->required();

  std::string flips, cocycle = "m";
  bool assert_zero = false;
  auto* path_cmd = app.add_subcommand("path", "Evaluate a cocycle along a flip sequence");
  path_cmd->add_option("file", file, "Graph file")->required();
  path_cmd->add_option("--flips", flips, "Comma-separated edge ids")->required();
  path_cmd->add_option("--cocycle", cocycle, "m, j or s")->check(CLI::IsMember({"m", "j", "s"}));
  path_cmd->add_flag("--assert-zero", assert_zero, "Fail unless the total vanishes");

  std::string edges;
  auto* pentagon_cmd = app.add_subcommand("pentagon", "Evaluate a cocycle around a pentagon");
  pentagon_cmd->add_option("file", file, "Graph file")->required();
  pentagon_cmd->add_option("--edges", edges, "Two edge ids F,G sharing one endpoint")->required();
  pentagon_cmd->add_option("--cocycle", cocycle, "m, j or s")->check(CLI::IsMember({"m", "j", "s"}));

  auto* marking_cmd = app.add_subcommand("marking", "Marking operations");
  marking_cmd->require_subcommand(1);
  bool topological = false;
  auto* check_cmd = marking_cmd->add_subcommand("check", "Check the marking axioms");
  check_cmd->add_option("file", file, "Graph file")->required();
  check_cmd->add_flag("--topological", topological, "Also test the intersection criterion");
  auto* canonical_cmd =
      marking_cmd->add_subcommand("canonical", "Print the graph with its canonical H-marking");
  canonical_cmd->add_option("file", file, "Graph file")->required();

  auto* earle_cmd = app.add_subcommand("earle", "Morita's d and the Earle cocycle");
  earle_cmd->require_subcommand(1);
  std::string word, auto_file;
  std::size_t genus = 0, trials = 200;
  bool inverse = false;
  auto* d_cmd = earle_cmd->add_subcommand("d", "Evaluate d on a word");
  d_cmd->add_option("--word", word, "Word such as \"b a b' a'\"")->required();
  d_cmd->add_option("--genus", genus, "Surface genus (omit for words in a, b)");
  auto* eval_cmd = earle_cmd->add_subcommand("eval", "Evaluate the Earle cocycle");
  eval_cmd->add_option("--genus", genus, "Surface genus")->required()->check(CLI::PositiveNumber);
  eval_cmd->add_option("--auto", auto_file, "Automorphism file")->required();
  eval_cmd->add_flag("--inverse", inverse, "Evaluate on the inverse of the given map");
  eval_cmd->add_option("--trials", trials, "Random additivity probes")->capture_default_str();

  std::uint64_t seed = 1;
  std::size_t selftest_trials = 100;
  auto* selftest_cmd = app.add_subcommand("selftest", "Randomized property checks");
  selftest_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  selftest_cmd->add_option("--trials", selftest_trials, "Number of trials")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  tsv = format == "tsv";

  if (*selftest_cmd) {
    size_t checks = 0;
    OwnedString failures;
    const fm_status st = fm_selftest(seed, selftest_trials, &checks, &failures.s);
    std::cout << failures.str();
    field("trials", std::to_string(selftest_trials));
    field("checks", std::to_string(checks));
    if (st != FM_OK) return report(st);
    field("result", "ok");
    return kSuccess;
  }

  if (*earle_cmd) {
    if (*d_cmd) {
      int64_t d = 0;
      if (fm_status st = fm_earle_d(word.c_str(), genus, &d); st != FM_OK) return report(st);
      std::cout << d << "\n";
      return kSuccess;
    }
    std::string text;
    if (!read_file(auto_file, text)) {
      std::cerr << "error: cannot read " << auto_file << "\n";
      return kUsage;
    }
    std::vector<int64_t> diffs(2 * genus);
    OwnedString h;
    if (fm_status st = fm_earle_eval(text.c_str(), genus, inverse ? 1 : 0, trials, &h.s, diffs.data());
        st != FM_OK) {
      return report(st);
    }
    for (std::size_t g = 0; g < diffs.size(); ++g) {
      const std::string gen = std::string(g % 2 == 0 ? "a" : "b") + std::to_string(g / 2 + 1);
      field("d-difference " + gen, std::to_string(diffs[g]));
    }
    field("f", h.str());
    return kSuccess;
  }

  GraphPtr g;
  if (int rc = load_graph(file, g); rc != kSuccess) return rc;

  if (*validate_cmd) {
    if (fm_status st = fm_graph_validate(g.get()); st != FM_OK) return report(st);
    field("valid", "yes");
    return kSuccess;
  }
  if (*info_cmd) {
    fm_graph_info info;
    OwnedString word_text;
    if (fm_status st = fm_graph_get_info(g.get(), &info); st != FM_OK) return report(st);
    if (fm_status st = fm_graph_boundary_word(g.get(), &word_text.s); st != FM_OK) return report(st);
    field("vertices", std::to_string(info.vertices));
    field("edges", std::to_string(info.edges));
    field("genus", std::to_string(info.genus));
    field("boundary", std::to_string(info.boundary_number));
    field("boundary word", word_text.str());
    field("marking rank", info.has_marking ? std::to_string(info.marking_rank) : "none");
    return kSuccess;
  }
  if (*flip_cmd) {
    fm_graph* out = nullptr;
    if (fm_status st = fm_graph_flip(g.get(), edge.c_str(), &out); st != FM_OK) return report(st);
    GraphPtr flipped(out);
    OwnedString text;
    if (fm_status st = fm_graph_print(flipped.get(), &text.s); st != FM_OK) return report(st);
    std::cout << text.str();
    return kSuccess;
  }
  if (*path_cmd) {
    fm_path* p = nullptr;
    if (fm_status st = fm_path_apply(g.get(), flips.c_str(), &p); st != FM_OK) return report(st);
    PathPtr path(p);
    return print_path(path.get(), cocycle[0], assert_zero);
  }
  if (*pentagon_cmd) {
    const std::size_t comma = edges.find(',');
    if (comma == std::string::npos) {
      std::cerr << "error: --edges expects F,G\n";
      return kUsage;
    }
    fm_path* p = nullptr;
    const std::string f = edges.substr(0, comma), h = edges.substr(comma + 1);
    if (fm_status st = fm_path_pentagon(g.get(), f.c_str(), h.c_str(), &p); st != FM_OK) {
      return report(st);
    }
    PathPtr path(p);
    return print_path(path.get(), cocycle[0], true);
  }
  if (*check_cmd) {
    int top = 0;
    if (fm_status st = fm_marking_check(g.get(), topological ? 1 : 0, &top); st != FM_OK) {
      return report(st);
    }
    field("marking", "ok");
    if (topological) {
      field("topological", top ? "yes" : "no");
      if (!top) return kFailure;
    }
    return kSuccess;
  }
  if (*canonical_cmd) {
    fm_graph* out = nullptr;
    if (fm_status st = fm_marking_canonical(g.get(), &out); st != FM_OK) return report(st);
    GraphPtr marked(out);
    OwnedString text;
    if (fm_status st = fm_graph_print(marked.get(), &text.s); st != FM_OK) return report(st);
    std::cout << text.str();
    return kSuccess;
  }
  return kUsage;
}
