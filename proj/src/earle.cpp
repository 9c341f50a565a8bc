#include "fatmark/earle.hpp"

#include <random>
#include <sstream>

#include "fatmark/error.hpp"

namespace fatmark {

FreeWord reduce(const std::vector<Letter>& raw) {
  FreeWord out;
  for (const Letter& l : raw) {
    if (!out.letters.empty() && out.letters.back() == l.inverted()) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

FreeWord operator*(const FreeWord& x, const FreeWord& y) {
  std::vector<Letter> raw = x.letters;
  raw.insert(raw.end(), y.letters.begin(), y.letters.end());
  return reduce(raw);
}

FreeWord inverse(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(it->inverted());
  }
  return out;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Parses text[begin, end) of line `line`; `column0` is the 1-based
// column of text[0].
FreeWord parse_word_at(std::string_view text, std::size_t line, std::size_t column0) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  bool saw_one = false;
  while (i < text.size()) {
    const char ch = text[i];
    if (is_space(ch)) {
      ++i;
      continue;
    }
    const std::size_t column = column0 + i;
    if (ch == '1' && (i + 1 == text.size() || is_space(text[i + 1]))) {
      saw_one = true;
      ++i;
      continue;
    }
    if (ch != 'a' && ch != 'b') {
      throw ParseError(line, column, std::string("unexpected character '") + ch + "' in word");
    }
    ++i;
    std::size_t index = 1;
    if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      index = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        index = index * 10 + static_cast<std::size_t>(text[i] - '0');
        if (index > 100000) throw ParseError(line, column, "generator index too large");
        ++i;
      }
      if (index == 0) throw ParseError(line, column, "generator indices start at 1");
    }
    bool inv = false;
    while (i < text.size() && text[i] == '\'') {
      inv = !inv;
      ++i;
    }
    raw.push_back({static_cast<int>(2 * (index - 1) + (ch == 'b' ? 1 : 0)), inv});
  }
  if (saw_one && !raw.empty()) {
    throw ParseError(line, column0, "'1' stands for the empty word and cannot be combined");
  }
  return reduce(raw);
}

}  // namespace

FreeWord parse_word(std::string_view text) { return parse_word_at(text, 1, 1); }

std::string to_string(const FreeWord& w, WordStyle style) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.letters) {
    if (!first) os << ' ';
    first = false;
    os << ((l.gen % 2 == 0) ? 'a' : 'b');
    if (style == WordStyle::kSurface) os << (l.gen / 2 + 1);
    if (l.inverse) os << '\'';
  }
  return os.str();
}

std::vector<std::pair<int, int>> morita_normal_form(const FreeWord& w) {
  for (const Letter& l : w.letters) {
    if (l.gen > 1) {
      throw Error(ErrorKind::kUnknownGenerator,
                  "normal form is defined on words in a and b only");
    }
  }
  std::vector<std::pair<int, int>> out;
  std::size_t i = 0;
  const auto& ls = w.letters;
  while (i < ls.size()) {
    int eps = 0, del = 0;
    if (ls[i].gen == 0) {
      eps = ls[i].inverse ? -1 : 1;
      ++i;
    }
    if (i < ls.size() && ls[i].gen == 1) {
      del = ls[i].inverse ? -1 : 1;
      ++i;
    }
    out.emplace_back(eps, del);
  }
  return out;
}

std::int64_t morita_d(const FreeWord& w) {
  const auto nf = morita_normal_form(w);
  // Suffix sums: sum_{l >= k} delta_l and sum_{l > k} epsilon_l.
  std::int64_t delta_from = 0, eps_after = 0, d = 0;
  for (auto it = nf.rbegin(); it != nf.rend(); ++it) {
    delta_from += it->second;
    d += it->first * delta_from - it->second * eps_after;
    eps_after += it->first;
  }
  return d;
}

FreeWord project(const FreeWord& w, std::size_t i, std::size_t genus) {
  if (i < 1 || i > genus) {
    throw Error(ErrorKind::kIndexRange, "projection index " + std::to_string(i) +
                                            " outside 1.." + std::to_string(genus));
  }
  std::vector<Letter> raw;
  for (const Letter& l : w.letters) {
    if (static_cast<std::size_t>(l.gen) >= 2 * genus) {
      throw Error(ErrorKind::kUnknownGenerator, "generator outside genus " + std::to_string(genus));
    }
    if (static_cast<std::size_t>(l.gen / 2) == i - 1) raw.push_back({l.gen % 2, l.inverse});
  }
  return reduce(raw);
}

std::int64_t morita_d_surface(const FreeWord& w, std::size_t genus) {
  std::int64_t d = 0;
  for (std::size_t i = 1; i <= genus; ++i) d = checked::add(d, morita_d(project(w, i, genus)));
  return d;
}

void FreeAutomorphism::set_image(int gen, FreeWord image) {
  if (gen < 0 || static_cast<std::size_t>(gen) >= images_.size()) {
    throw Error(ErrorKind::kUnknownGenerator, "generator outside genus " + std::to_string(genus()));
  }
  images_[static_cast<std::size_t>(gen)] = std::move(image);
}

const std::optional<FreeWord>& FreeAutomorphism::image(int gen) const {
  if (gen < 0 || static_cast<std::size_t>(gen) >= images_.size()) {
    throw Error(ErrorKind::kUnknownGenerator, "generator outside genus " + std::to_string(genus()));
  }
  return images_[static_cast<std::size_t>(gen)];
}

FreeWord FreeAutomorphism::apply(const FreeWord& w) const {
  std::vector<Letter> raw;
  for (const Letter& l : w.letters) {
    const auto& img = image(l.gen);
    if (!img) {
      throw Error(ErrorKind::kMissingImage,
                  "no image for generator " + to_string(FreeWord{{{l.gen, false}}}));
    }
    const FreeWord piece = l.inverse ? inverse(*img) : *img;
    raw.insert(raw.end(), piece.letters.begin(), piece.letters.end());
  }
  return reduce(raw);
}

FreeAutomorphism identity_automorphism(std::size_t genus) {
  FreeAutomorphism phi(genus);
  for (int g = 0; g < static_cast<int>(2 * genus); ++g) phi.set_image(g, FreeWord{{{g, false}}});
  return phi;
}

FreeAutomorphism parse_automorphism(std::string_view text, std::size_t genus) {
  FreeAutomorphism phi(genus);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      if (eol == text.size()) break;
      continue;
    }
    const std::size_t arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError(line_no, 1, "expected 'gen -> word'");
    }
    const FreeWord lhs = parse_word_at(line.substr(0, arrow), line_no, 1);
    if (lhs.size() != 1 || lhs.letters[0].inverse) {
      throw ParseError(line_no, 1, "left-hand side must be a single generator");
    }
    const int gen = lhs.letters[0].gen;
    if (static_cast<std::size_t>(gen) >= 2 * genus) {
      throw ParseError(line_no, 1, "generator outside genus " + std::to_string(genus));
    }
    if (phi.image(gen)) throw ParseError(line_no, 1, "generator given twice");
    FreeWord rhs = parse_word_at(line.substr(arrow + 2), line_no, arrow + 3);
    for (const Letter& l : rhs.letters) {
      if (static_cast<std::size_t>(l.gen) >= 2 * genus) {
        throw ParseError(line_no, arrow + 3, "image uses a generator outside genus " +
                                                 std::to_string(genus));
      }
    }
    phi.set_image(gen, std::move(rhs));
    if (eol == text.size()) break;
  }
  return phi;
}

IntMatrix abelianization(const FreeAutomorphism& phi) {
  const std::size_t n = 2 * phi.genus();
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& img = phi.image(static_cast<int>(j));
    if (!img) throw Error(ErrorKind::kMissingImage, "automorphism is not given on every generator");
    for (const Letter& l : img->letters) {
      auto& entry = m(static_cast<std::size_t>(l.gen), j);
      entry += l.inverse ? -1 : 1;
    }
  }
  return m;
}

EarleResult earle_f(const FreeAutomorphism& phi, EarleMode mode, std::size_t trials,
                    std::uint64_t seed) {
  const std::size_t genus = phi.genus();
  const std::size_t n = 2 * genus;
  auto lambda = [&](const FreeWord& x) {
    return checked::sub(morita_d_surface(phi.apply(x), genus), morita_d_surface(x, genus));
  };

  EarleResult out{KElement(n), {}};
  for (std::size_t j = 0; j < n; ++j) {
    out.differences.push_back(lambda(FreeWord{{{static_cast<int>(j), false}}}));
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gen_dist(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> len_dist(0, 12);
  std::bernoulli_distribution coin(0.5);
  auto random_word = [&] {
    std::vector<Letter> raw(static_cast<std::size_t>(len_dist(rng)));
    for (Letter& l : raw) l = {gen_dist(rng), coin(rng)};
    return reduce(raw);
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const FreeWord x = random_word();
    const FreeWord y = random_word();
    const std::int64_t lx = lambda(x), ly = lambda(y), lxy = lambda(x * y);
    if (lxy != lx + ly) {
      throw Error(ErrorKind::kNotHomomorphism,
                  "d-difference is not additive on " + to_string(x) + " and " + to_string(y));
    }
  }

  // h . A_i = lambda(alpha_i) and h . B_i = lambda(beta_i) for
  // h = sum x_i A_i + y_i B_i give x_i = lambda(beta_i), y_i = -lambda(alpha_i).
  std::vector<std::int64_t> h(n);
  for (std::size_t i = 0; i < genus; ++i) {
    h[2 * i] = out.differences[2 * i + 1];
    h[2 * i + 1] = checked::neg(out.differences[2 * i]);
  }
  // lambda built from phi computes the cocycle on phi^-1; the cocycle
  // identity 0 = f(phi phi^-1) = f(phi) + phi . f(phi^-1) recovers f(phi).
  out.h = KElement(std::move(h));
  if (mode == EarleMode::kDirect) out.h = -apply(abelianization(phi), out.h);
  return out;
}

std::string to_h_string(const KElement& h) {
  if (h.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < h.rank(); ++i) {
    if (h[i] == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << (h[i] > 0 ? "+" : "") << h[i] << '*' << (i % 2 == 0 ? 'A' : 'B') << (i / 2 + 1);
  }
  return os.str();
}

}  // namespace fatmark
