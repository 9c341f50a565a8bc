#include "fatmark/fatmark.h"

#include <array>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "fatmark/cocycles.hpp"
#include "fatmark/earle.hpp"
#include "fatmark/error.hpp"
#include "fatmark/fatgraph.hpp"
#include "fatmark/flips.hpp"
#include "fatmark/graph_io.hpp"
#include "fatmark/markings.hpp"
#include "fatmark/selftest.hpp"

using namespace fatmark;

struct fm_graph {
  FatGraph graph;
  std::optional<Marking> marking;
};

struct fm_path {
  FlipPath path;
  Marking start_marking;
  std::array<PathSum, 3> sums;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_kind;

fm_status status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return FM_ERR_PARSE;
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kIndexRange:
    case ErrorKind::kUnknownGenerator:
      return FM_ERR_INVALID_ARGUMENT;
    case ErrorKind::kMissingHalfEdge:
    case ErrorKind::kDuplicateHalfEdge:
    case ErrorKind::kDuplicateLabel:
    case ErrorKind::kDisconnected:
    case ErrorKind::kValence:
    case ErrorKind::kMultipleUnivalent:
    case ErrorKind::kBadTail:
    case ErrorKind::kCorruptTopology:
    case ErrorKind::kBoundaryNumber:
    case ErrorKind::kGenus:
      return FM_ERR_GRAPH;
    case ErrorKind::kInversion:
    case ErrorKind::kCoherence:
    case ErrorKind::kSurjectivity:
    case ErrorKind::kMarkingShape:
    case ErrorKind::kPairing:
    case ErrorKind::kRankMismatch:
      return FM_ERR_MARKING;
    case ErrorKind::kTailFlip:
    case ErrorKind::kLoopFlip:
    case ErrorKind::kNotTrivalent:
    case ErrorKind::kEdgeRelation:
    case ErrorKind::kPathStep:
    case ErrorKind::kNotClosed:
      return FM_ERR_FLIP;
    case ErrorKind::kNoInducedAutomorphism:
    case ErrorKind::kNotInvertible:
    case ErrorKind::kCocycleMismatch:
    case ErrorKind::kNotHomomorphism:
    case ErrorKind::kMissingImage:
      return FM_ERR_CHECK;
    case ErrorKind::kOverflow:
      return FM_ERR_OVERFLOW;
  }
  return FM_ERR_INTERNAL;
}

fm_status fail(fm_status status, const std::string& kind, const std::string& message) {
  last_kind = kind;
  last_error = message;
  return status;
}

template <class Body>
fm_status guarded(Body&& body) {
  try {
    last_error.clear();
    last_kind.clear();
    return body();
  } catch (const PathError& e) {
    return fail(status_for(e.cause()), to_string(e.cause()), e.what());
  } catch (const Error& e) {
    return fail(status_for(e.kind()), to_string(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FM_ERR_INTERNAL, "internal", "out of memory");
  } catch (const std::exception& e) {
    return fail(FM_ERR_INTERNAL, "internal", e.what());
  }
}

fm_status null_argument() { return fail(FM_ERR_INVALID_ARGUMENT, "invalid-argument", "null argument"); }

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

OrientedEdge resolve_edge(const FatGraph& g, std::string token) {
  while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.erase(0, 1);
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.pop_back();
  if (!token.empty() && token.back() != '+' && token.back() != '-') token += '+';
  const auto h = parse_half_edge(g, token);
  if (!h) throw Error(ErrorKind::kInvalidArgument, "no edge '" + token + "' in the graph");
  return *h;
}

fm_half_edge export_half(const FatGraph& g, OrientedEdge h) {
  return {g.label(h.slot()), h.plus() ? 1 : 0};
}

Marking marking_or_canonical(const fm_graph& g) {
  if (g.marking) return *g.marking;
  return canonical_h_marking(g.graph).first;
}

std::size_t cocycle_index(char c) {
  switch (c) {
    case 'm': return 0;
    case 'j': return 1;
    case 's': return 2;
  }
  throw Error(ErrorKind::kInvalidArgument, std::string("unknown cocycle '") + c + "'");
}

fm_path* make_path(FlipPath path, Marking mu) {
  check_marking(path.start(), mu);
  std::array<PathSum, 3> sums{path_sum(path, mu, Cocycle::kM), path_sum(path, mu, Cocycle::kJ),
                              path_sum(path, mu, Cocycle::kS)};
  return new fm_path{std::move(path), std::move(mu), std::move(sums)};
}

}  // namespace

extern "C" {

const char* fm_last_error(void) { return last_error.c_str(); }
const char* fm_last_error_kind(void) { return last_kind.c_str(); }

const char* fm_status_name(fm_status status) {
  switch (status) {
    case FM_OK: return "ok";
    case FM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FM_ERR_PARSE: return "parse error";
    case FM_ERR_GRAPH: return "graph error";
    case FM_ERR_MARKING: return "marking error";
    case FM_ERR_FLIP: return "flip error";
    case FM_ERR_CHECK: return "check failed";
    case FM_ERR_OVERFLOW: return "integer overflow";
    case FM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void fm_string_free(char* s) { delete[] s; }

fm_status fm_graph_parse(const char* text, fm_graph** out) {
  if (!text || !out) return null_argument();
  return guarded([&] {
    GraphFile f = parse_graph(text);
    *out = new fm_graph{std::move(f.graph), std::move(f.marking)};
    return FM_OK;
  });
}

void fm_graph_free(fm_graph* g) { delete g; }

fm_status fm_graph_validate(const fm_graph* g) {
  if (!g) return null_argument();
  return guarded([&] {
    validate(g->graph);
    return FM_OK;
  });
}

fm_status fm_graph_get_info(const fm_graph* g, fm_graph_info* out) {
  if (!g || !out) return null_argument();
  return guarded([&] {
    out->vertices = g->graph.num_vertices();
    out->edges = g->graph.num_edges();
    out->boundary_number = boundary_number(g->graph);
    out->genus = genus(g->graph);
    out->has_marking = g->marking ? 1 : 0;
    out->marking_rank = g->marking ? g->marking->rank : 0;
    return FM_OK;
  });
}

fm_status fm_graph_boundary_word(const fm_graph* g, char** out) {
  if (!g || !out) return null_argument();
  return guarded([&] {
    *out = dup_string(to_string(g->graph, boundary_cycles(g->graph)));
    return FM_OK;
  });
}

fm_status fm_graph_print(const fm_graph* g, char** out) {
  if (!g || !out) return null_argument();
  return guarded([&] {
    *out = dup_string(print_graph(g->graph, g->marking ? &*g->marking : nullptr));
    return FM_OK;
  });
}

fm_status fm_graph_flip(const fm_graph* g, const char* edge, fm_graph** out) {
  if (!g || !edge || !out) return null_argument();
  return guarded([&] {
    FlipResult r = flip(g->graph, resolve_edge(g->graph, edge));
    std::optional<Marking> mu;
    if (g->marking) mu = propagate(*g->marking, r.context);
    *out = new fm_graph{std::move(r.graph), std::move(mu)};
    return FM_OK;
  });
}

fm_status fm_graph_canonical_form(const fm_graph* g, char** out) {
  if (!g || !out) return null_argument();
  return guarded([&] {
    *out = dup_string(print_graph(canonicalize(g->graph).graph));
    return FM_OK;
  });
}

fm_status fm_marking_check(const fm_graph* g, int topological, int* is_topological) {
  if (!g) return null_argument();
  return guarded([&] {
    if (!g->marking) throw Error(ErrorKind::kMarkingShape, "graph carries no marking");
    check_marking(g->graph, *g->marking);
    if (topological) {
      const bool top = is_topological_h(g->graph, *g->marking,
                                        SymplecticForm::standard(genus(g->graph)));
      if (is_topological) *is_topological = top ? 1 : 0;
    }
    return FM_OK;
  });
}

fm_status fm_marking_canonical(const fm_graph* g, fm_graph** out) {
  if (!g || !out) return null_argument();
  return guarded([&] {
    *out = new fm_graph{g->graph, canonical_h_marking(g->graph).first};
    return FM_OK;
  });
}

fm_status fm_path_apply(const fm_graph* g, const char* flips, fm_path** out) {
  if (!g || !flips || !out) return null_argument();
  return guarded([&] {
    Marking mu = marking_or_canonical(*g);
    FlipPath path(g->graph);
    std::stringstream ss(flips);
    std::string token;
    std::size_t step = 0;
    while (std::getline(ss, token, ',')) {
      if (token.find_first_not_of(" \t") == std::string::npos) {
        throw Error(ErrorKind::kInvalidArgument, "empty edge in flip list");
      }
      try {
        path.push(resolve_edge(path.end(), token));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kInvalidArgument) throw;
        throw PathError(step, e.kind(), e.what());
      }
      ++step;
    }
    *out = make_path(std::move(path), std::move(mu));
    return FM_OK;
  });
}

fm_status fm_path_pentagon(const fm_graph* g, const char* f, const char* h, fm_path** out) {
  if (!g || !f || !h || !out) return null_argument();
  return guarded([&] {
    Marking mu = marking_or_canonical(*g);
    FlipPath path = pentagon_path(g->graph, resolve_edge(g->graph, f), resolve_edge(g->graph, h));
    *out = make_path(std::move(path), std::move(mu));
    return FM_OK;
  });
}

void fm_path_free(fm_path* p) { delete p; }

size_t fm_path_length(const fm_path* p) { return p ? p->path.length() : 0; }

int fm_path_is_closed(const fm_path* p) {
  if (!p) return 0;
  try {
    return p->path.is_closed() ? 1 : 0;
  } catch (const std::exception& e) {
    fail(FM_ERR_INTERNAL, "internal", e.what());
    return 0;
  }
}

fm_status fm_path_step(const fm_path* p, size_t i, fm_step* out) {
  if (!p || !out) return null_argument();
  return guarded([&] {
    if (i >= p->path.length()) throw Error(ErrorKind::kIndexRange, "step index out of range");
    const FlipContext& c = p->path.steps()[i];
    const FatGraph& before = p->path.graph(i);
    const FatGraph& after = p->path.graph(i + 1);
    *out = fm_step{export_half(before, c.e), export_half(before, c.a), export_half(before, c.b),
                   export_half(before, c.c), export_half(before, c.d), export_half(after, c.e_new)};
    return FM_OK;
  });
}

fm_status fm_path_step_value(const fm_path* p, char cocycle, size_t i, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] {
    const PathSum& s = p->sums[cocycle_index(cocycle)];
    if (i >= s.steps.size()) throw Error(ErrorKind::kIndexRange, "step index out of range");
    *out = dup_string(to_string(s.steps[i]));
    return FM_OK;
  });
}

fm_status fm_path_total(const fm_path* p, char cocycle, char** out, int* zero) {
  if (!p || !out) return null_argument();
  return guarded([&] {
    const PathSum& s = p->sums[cocycle_index(cocycle)];
    *out = dup_string(to_string(s.total));
    if (zero) *zero = is_zero(s.total) ? 1 : 0;
    return FM_OK;
  });
}

fm_status fm_path_end_graph(const fm_path* p, fm_graph** out) {
  if (!p || !out) return null_argument();
  return guarded([&] {
    *out = new fm_graph{p->path.end(), p->sums[0].final};
    return FM_OK;
  });
}

fm_status fm_earle_d(const char* word, size_t genus, int64_t* out) {
  if (!word || !out) return null_argument();
  return guarded([&] {
    const FreeWord w = parse_word(word);
    *out = genus == 0 ? morita_d(w) : morita_d_surface(w, genus);
    return FM_OK;
  });
}

fm_status fm_earle_eval(const char* automorphism, size_t genus, int inverse, size_t trials,
                        char** h, int64_t* differences) {
  if (!automorphism || !h) return null_argument();
  return guarded([&] {
    if (genus == 0) throw Error(ErrorKind::kInvalidArgument, "genus must be positive");
    const FreeAutomorphism phi = parse_automorphism(automorphism, genus);
    const EarleResult r =
        earle_f(phi, inverse ? EarleMode::kInverse : EarleMode::kDirect, trials, 1);
    *h = dup_string(to_h_string(r.h));
    if (differences) {
      for (std::size_t i = 0; i < r.differences.size(); ++i) differences[i] = r.differences[i];
    }
    return FM_OK;
  });
}

fm_status fm_selftest(uint64_t seed, size_t trials, size_t* checks, char** report) {
  return guarded([&] {
    const SelftestReport r = run_selftest(seed, trials);
    if (checks) *checks = r.checks;
    if (report) {
      std::string text;
      for (const std::string& f : r.failures) text += f + "\n";
      *report = dup_string(text);
    }
    if (!r.ok()) {
      return fail(FM_ERR_CHECK, "selftest", std::to_string(r.failures.size()) + " of " +
                                                std::to_string(r.checks) + " checks failed");
    }
    return FM_OK;
  });
}

}  // extern "C"
