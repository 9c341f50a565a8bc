#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "fatmark/fatmark.h"

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(FATMARK_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string take(char* s) {
  std::string out = s ? s : "";
  fm_string_free(s);
  return out;
}

struct Graph {
  fm_graph* g = nullptr;
  ~Graph() { fm_graph_free(g); }
};

struct Path {
  fm_path* p = nullptr;
  ~Path() { fm_path_free(p); }
};

}  // namespace

TEST_CASE("graph queries") {
  Graph g;
  REQUIRE(fm_graph_parse(slurp("g1.fg").c_str(), &g.g) == FM_OK);
  CHECK(fm_graph_validate(g.g) == FM_OK);
  fm_graph_info info{};
  REQUIRE(fm_graph_get_info(g.g, &info) == FM_OK);
  CHECK(info.vertices == 4);
  CHECK(info.edges == 5);
  CHECK(info.genus == 1);
  CHECK(info.boundary_number == 1);
  CHECK(info.has_marking == 1);
  CHECK(info.marking_rank == 2);
  char* word = nullptr;
  REQUIRE(fm_graph_boundary_word(g.g, &word) == FM_OK);
  CHECK(take(word) == "(0+ 3- 1+ 2- 3+ 4+ 1- 2+ 4- 0-)");
  int topo = 0;
  CHECK(fm_marking_check(g.g, 1, &topo) == FM_OK);
  CHECK(topo == 1);

  char* text = nullptr;
  REQUIRE(fm_graph_print(g.g, &text) == FM_OK);
  Graph back;
  CHECK(fm_graph_parse(take(text).c_str(), &back.g) == FM_OK);
  char *c1 = nullptr, *c2 = nullptr;
  REQUIRE(fm_graph_canonical_form(g.g, &c1) == FM_OK);
  REQUIRE(fm_graph_canonical_form(back.g, &c2) == FM_OK);
  CHECK(take(c1) == take(c2));
}

TEST_CASE("errors are reported through status codes") {
  Graph g;
  CHECK(fm_graph_parse("fatgraph v1\nvertex 0: 0- 0-\n", &g.g) == FM_ERR_PARSE);
  CHECK(g.g == nullptr);
  CHECK(std::strstr(fm_last_error(), "line 2") != nullptr);
  CHECK(std::string(fm_last_error_kind()) == "parse error");
  CHECK(fm_graph_parse(nullptr, &g.g) == FM_ERR_INVALID_ARGUMENT);
  CHECK(std::string(fm_status_name(FM_ERR_FLIP)) == "flip error");

  Graph bad;
  REQUIRE(fm_graph_parse("fatgraph v1\nvertex 0: 0-\nvertex 1: 0+ 1+\nvertex 2: 1-\ntail 0+\n",
                         &bad.g) == FM_OK);
  CHECK(fm_graph_validate(bad.g) == FM_ERR_GRAPH);

  Graph g1;
  REQUIRE(fm_graph_parse(slurp("g1.fg").c_str(), &g1.g) == FM_OK);
  Graph flipped;
  CHECK(fm_graph_flip(g1.g, "0+", &flipped.g) == FM_ERR_FLIP);
  CHECK(fm_graph_flip(g1.g, "9+", &flipped.g) == FM_ERR_INVALID_ARGUMENT);
  CHECK(fm_graph_flip(g1.g, "3", &flipped.g) == FM_OK);
  fm_graph_info info{};
  REQUIRE(fm_graph_get_info(flipped.g, &info) == FM_OK);
  CHECK(info.genus == 1);
}

TEST_CASE("paths and cocycles") {
  Graph g;
  REQUIRE(fm_graph_parse(slurp("g2.fg").c_str(), &g.g) == FM_OK);
  Path p;
  REQUIRE(fm_path_pentagon(g.g, "1+", "2+", &p.p) == FM_OK);
  CHECK(fm_path_length(p.p) == 5);
  CHECK(fm_path_is_closed(p.p) == 1);
  for (char c : {'m', 'j', 's'}) {
    char* total = nullptr;
    int zero = 0;
    REQUIRE(fm_path_total(p.p, c, &total, &zero) == FM_OK);
    CHECK(zero == 1);
    CHECK(take(total) == "0");
  }
  fm_step step{};
  REQUIRE(fm_path_step(p.p, 0, &step) == FM_OK);
  CHECK(step.edge.label == 1);
  CHECK(fm_path_step(p.p, 5, &step) == FM_ERR_INVALID_ARGUMENT);
  char* v = nullptr;
  CHECK(fm_path_step_value(p.p, 'x', 0, &v) == FM_ERR_INVALID_ARGUMENT);

  Path open;
  REQUIRE(fm_path_apply(g.g, "1+", &open.p) == FM_OK);
  CHECK(fm_path_is_closed(open.p) == 0);
  for (char c : {'m', 'j', 's'}) {
    char* total = nullptr;
    char* first = nullptr;
    int zero = -1;
    REQUIRE(fm_path_total(open.p, c, &total, &zero) == FM_OK);
    REQUIRE(fm_path_step_value(open.p, c, 0, &first) == FM_OK);
    const std::string t = take(total);
    CHECK(t == take(first));
    CHECK(zero == (t == "0" ? 1 : 0));
  }
  Graph end;
  REQUIRE(fm_path_end_graph(open.p, &end.g) == FM_OK);
  int topo = 0;
  CHECK(fm_marking_check(end.g, 1, &topo) == FM_OK);
  CHECK(topo == 1);

  Path failing;
  CHECK(fm_path_apply(g.g, "1+,0+", &failing.p) == FM_ERR_FLIP);
  CHECK(std::strstr(fm_last_error(), "step") != nullptr);
}

TEST_CASE("Earle evaluation") {
  int64_t d = 0;
  REQUIRE(fm_earle_d("b a b' a'", 0, &d) == FM_OK);
  CHECK(d == -2);
  REQUIRE(fm_earle_d("b1 a1 b1' a1' b2 a2 b2' a2'", 2, &d) == FM_OK);
  CHECK(d == -4);
  CHECK(fm_earle_d("a2", 0, &d) != FM_OK);

  char* h = nullptr;
  int64_t diffs[4] = {9, 9, 9, 9};
  REQUIRE(fm_earle_eval(slurp("bp_proof.aut").c_str(), 2, 0, 200, &h, diffs) == FM_OK);
  CHECK(take(h) == "-2*B2");
  CHECK(diffs[0] == 0);
  CHECK(diffs[1] == 0);
  CHECK(diffs[2] == -2);
  CHECK(diffs[3] == 0);
  REQUIRE(fm_earle_eval(slurp("bp_proof.aut").c_str(), 2, 1, 200, &h, nullptr) == FM_OK);
  CHECK(take(h) == "+2*B2");
}

TEST_CASE("selftest entry point") {
  size_t checks = 0;
  char* report = nullptr;
  CHECK(fm_selftest(7, 20, &checks, &report) == FM_OK);
  CHECK(checks > 0);
  fm_string_free(report);
}
