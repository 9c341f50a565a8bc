#include "fatmark/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "fatmark/error.hpp"

namespace fatmark {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (line[i] == ':') {
      out.push_back({line.substr(i, 1), i + 1});
      ++i;
      continue;
    }
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != ':') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

template <class Int>
std::optional<Int> to_int(std::string_view s) {
  Int v{};
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || first == s.data() + s.size()) {
    return std::nullopt;
  }
  return v;
}

struct RawHalf {
  std::int64_t label;
  bool plus;
  auto operator<=>(const RawHalf&) const = default;
};

std::optional<RawHalf> to_half(std::string_view s) {
  if (s.size() < 2 || (s.back() != '+' && s.back() != '-')) return std::nullopt;
  const std::string_view digits = s.substr(0, s.size() - 1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  auto v = to_int<std::int64_t>(digits);
  if (!v) return std::nullopt;
  return RawHalf{*v, s.back() == '+'};
}

RawHalf expect_half(const Token& t, std::size_t line) {
  auto h = to_half(t.text);
  if (!h) {
    throw ParseError(line, t.column, "expected a half-edge like 3+ or 3-, got '" +
                                         std::string(t.text) + "'");
  }
  return *h;
}

// ':' is always its own token, so "vertex 1:", "vertex 1 :" and "vertex 1:2+" agree.
std::string_view strip_colon(const std::vector<Token>& toks, std::size_t& next,
                             std::size_t line) {
  if (toks.size() < 2) throw ParseError(line, toks[0].column, "missing identifier");
  std::string_view id = toks[1].text;
  if (toks.size() > 2 && toks[2].text == ":") {
    next = 3;
  } else {
    throw ParseError(line, toks[1].column + toks[1].text.size(), "expected ':'");
  }
  return id;
}

}  // namespace

GraphFile parse_graph(std::string_view text) {
  struct RawVertex {
    std::int64_t id;
    std::vector<RawHalf> inward;
  };
  struct RawMark {
    RawHalf half;
    std::vector<std::int64_t> values;
    std::size_t line, column;
  };
  std::vector<RawVertex> vertices;
  std::map<RawHalf, std::pair<std::size_t, std::size_t>> seen;
  std::optional<RawHalf> tail;
  std::optional<std::size_t> rank;
  std::vector<RawMark> marks;
  bool header = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;

    if (!header) {
      if (toks.size() != 2 || toks[0].text != "fatgraph" || toks[1].text != "v1") {
        throw ParseError(line_no, toks[0].column, "expected header 'fatgraph v1'");
      }
      header = true;
      continue;
    }

    const std::string_view kw = toks[0].text;
    if (kw == "vertex") {
      if (rank) throw ParseError(line_no, toks[0].column, "vertex after marking section");
      std::size_t next = 0;
      const std::string_view id_text = strip_colon(toks, next, line_no);
      auto id = to_int<std::int64_t>(id_text);
      if (!id) throw ParseError(line_no, toks[1].column, "bad vertex id '" + std::string(id_text) + "'");
      for (const RawVertex& v : vertices) {
        if (v.id == *id) throw ParseError(line_no, toks[1].column, "vertex id used twice");
      }
      RawVertex v{*id, {}};
      if (next >= toks.size()) throw ParseError(line_no, toks.back().column, "vertex without half-edges");
      for (std::size_t i = next; i < toks.size(); ++i) {
        const RawHalf h = expect_half(toks[i], line_no);
        if (auto it = seen.find(h); it != seen.end()) {
          throw ParseError(line_no, toks[i].column,
                           "half-edge " + std::string(toks[i].text) + " already listed on line " +
                               std::to_string(it->second.first));
        }
        seen.emplace(h, std::make_pair(line_no, toks[i].column));
        v.inward.push_back(h);
      }
      vertices.push_back(std::move(v));
    } else if (kw == "tail") {
      if (tail) throw ParseError(line_no, toks[0].column, "tail given twice");
      if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "expected 'tail <h>'");
      tail = expect_half(toks[1], line_no);
    } else if (kw == "marking") {
      if (rank) throw ParseError(line_no, toks[0].column, "marking section given twice");
      if (toks.size() != 3 || toks[1].text != "rank") {
        throw ParseError(line_no, toks[0].column, "expected 'marking rank <r>'");
      }
      auto r = to_int<std::size_t>(toks[2].text);
      if (!r || *r == 0) throw ParseError(line_no, toks[2].column, "rank must be a positive integer");
      rank = *r;
    } else if (kw == "mark") {
      if (!rank) throw ParseError(line_no, toks[0].column, "mark before 'marking rank'");
      std::size_t next = 0;
      const std::string_view h_text = strip_colon(toks, next, line_no);
      RawMark m{expect_half({h_text, toks[1].column}, line_no), {}, line_no, toks[1].column};
      for (const RawMark& other : marks) {
        if (other.half == m.half) throw ParseError(line_no, toks[1].column, "half-edge marked twice");
      }
      for (std::size_t i = next; i < toks.size(); ++i) {
        auto v = to_int<std::int64_t>(toks[i].text);
        if (!v) throw ParseError(line_no, toks[i].column, "expected an integer");
        m.values.push_back(*v);
      }
      if (m.values.size() != *rank) {
        throw ParseError(line_no, toks[0].column, "expected " + std::to_string(*rank) +
                                                      " values, got " +
                                                      std::to_string(m.values.size()));
      }
      marks.push_back(std::move(m));
    } else {
      throw ParseError(line_no, toks[0].column, "unknown keyword '" + std::string(kw) + "'");
    }
  }
  if (!header) throw ParseError(line_no + 1, 1, "missing header 'fatgraph v1'");
  if (!tail) throw ParseError(line_no + 1, 1, "missing tail line");

  std::set<std::int64_t> label_set;
  for (const auto& [h, where] : seen) label_set.insert(h.label);
  std::vector<std::int64_t> labels(label_set.begin(), label_set.end());
  std::map<std::int64_t, int> slot_of;
  for (std::size_t s = 0; s < labels.size(); ++s) slot_of[labels[s]] = static_cast<int>(s);

  auto resolve = [&](const RawHalf& h, std::size_t line, std::size_t column) {
    auto it = slot_of.find(h.label);
    if (it == slot_of.end()) {
      throw ParseError(line, column, "edge " + std::to_string(h.label) + " is not on any vertex");
    }
    return OrientedEdge::of(it->second, h.plus);
  };

  std::vector<Vertex> vs;
  for (const RawVertex& rv : vertices) {
    Vertex v{rv.id, {}};
    for (const RawHalf& h : rv.inward) v.inward.push_back(OrientedEdge::of(slot_of[h.label], h.plus));
    vs.push_back(std::move(v));
  }
  if (label_set.find(tail->label) == label_set.end()) {
    throw ParseError(line_no, 1, "tail edge " + std::to_string(tail->label) + " is not on any vertex");
  }
  FatGraph g(std::move(labels), std::move(vs), OrientedEdge::of(slot_of[tail->label], tail->plus));

  std::optional<Marking> mu;
  if (rank) {
    std::vector<std::optional<KElement>> by_code(g.num_half_edges());
    for (const RawMark& m : marks) {
      const OrientedEdge h = resolve(m.half, m.line, m.column);
      by_code[static_cast<std::size_t>(h.code())] = KElement(m.values);
    }
    mu = make_marking(g, *rank, by_code);
  }
  return {std::move(g), std::move(mu)};
}

std::string print_graph(const FatGraph& g, const Marking* mu) {
  std::ostringstream os;
  os << "fatgraph v1\n";
  for (const Vertex& v : g.vertices()) {
    os << "vertex " << v.id << ':';
    for (OrientedEdge h : v.inward) os << ' ' << g.name(h);
    os << '\n';
  }
  os << "tail " << g.name(g.tail()) << '\n';
  if (mu) {
    os << "marking rank " << mu->rank << '\n';
    std::vector<int> slots(g.num_edges());
    for (std::size_t s = 0; s < slots.size(); ++s) slots[s] = static_cast<int>(s);
    std::sort(slots.begin(), slots.end(), [&](int x, int y) { return g.label(x) < g.label(y); });
    for (int s : slots) {
      const OrientedEdge h = OrientedEdge::of(s, true);
      os << "mark " << g.name(h) << ':';
      for (std::int64_t c : (*mu)[h].coords()) os << ' ' << c;
      os << '\n';
    }
  }
  return os.str();
}

std::optional<OrientedEdge> parse_half_edge(const FatGraph& g, std::string_view token) {
  auto h = to_half(token);
  if (!h) return std::nullopt;
  return g.find(h->label, h->plus);
}

}  // namespace fatmark
