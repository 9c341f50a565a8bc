#include "fatmark/selftest.hpp"

#include <functional>

#include "fatmark/cocycles.hpp"
#include "fatmark/error.hpp"
#include "fatmark/flips.hpp"
#include "fatmark/graph_io.hpp"
#include "fatmark/markings.hpp"
#include "fatmark/random.hpp"

namespace fatmark {

namespace {

class Checker {
 public:
  Checker(SelftestReport& report, std::size_t trial) : report_(report), trial_(trial) {}

  void operator()(const std::string& name, const std::function<bool()>& body) {
    ++report_.checks;
    std::string why;
    try {
      if (body()) return;
      why = "property does not hold";
    } catch (const std::exception& e) {
      why = e.what();
    }
    report_.failures.push_back("trial " + std::to_string(trial_) + ": " + name + ": " + why);
  }

 private:
  SelftestReport& report_;
  std::size_t trial_;
};

bool loop_vanishes(const FlipPath& path, const Marking& mu) {
  if (!path.is_closed()) return false;
  if (induced_k_automorphism(path, mu) != IntMatrix::identity(mu.rank)) return false;
  for (Cocycle c : {Cocycle::kM, Cocycle::kJ, Cocycle::kS}) {
    if (!is_zero(path_sum(path, mu, c).total)) return false;
  }
  return true;
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed, std::size_t trials) {
  SelftestReport report;
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    ++report.trials;
    Checker check(report, t);
    const std::size_t genus = 1 + t % 3;
    const FatGraph g = random_fatgraph(rng, genus, 20);
    check("graph axioms", [&] {
      validate(g);
      return genus == fatmark::genus(g) && boundary_number(g) == 1;
    });
    check("canonical form is a relabeling invariant", [&] {
      return canonicalize(random_relabel(rng, g).graph).graph == canonicalize(g).graph;
    });
    check("canonical H-marking is topological", [&] {
      const auto [mu, form] = canonical_h_marking(g);
      check_marking(g, mu);
      return is_topological_h(g, mu, form);
    });

    const std::size_t rank = std::uniform_int_distribution<std::size_t>(1, 2 * genus)(rng);
    const Marking mu = random_marking(rng, g, rank);
    check("random marking satisfies the axioms", [&] {
      check_marking(g, mu);
      return true;
    });
    check("file round trip", [&] {
      const GraphFile f = parse_graph(print_graph(g, &mu));
      if (!f.marking) return false;
      const Canonical cg = canonicalize(g), cf = canonicalize(f.graph);
      if (cg.graph != cf.graph) return false;
      std::vector<OrientedEdge> from_canonical(cf.relabel.size());
      for (std::size_t x = 0; x < cf.relabel.size(); ++x) {
        from_canonical[static_cast<std::size_t>(cf.relabel[x].code())] =
            OrientedEdge::from_code(static_cast<int>(x));
      }
      for (std::size_t x = 0; x < cg.relabel.size(); ++x) {
        const OrientedEdge y = from_canonical[static_cast<std::size_t>(cg.relabel[x].code())];
        if ((*f.marking)[y] != mu.values[x]) return false;
      }
      return true;
    });

    const std::vector<int> slots = flippable_slots(g);
    check("involution pair vanishes", [&] {
      const int s = pick(rng, slots);
      return loop_vanishes(involution_pair(g, OrientedEdge::of(s, true)), mu);
    });
    if (const auto pairs = pentagon_pairs(g); !pairs.empty()) {
      check("pentagon vanishes", [&] {
        const auto [f, h] = pick(rng, pairs);
        return loop_vanishes(pentagon_path(g, OrientedEdge::of(f, true), OrientedEdge::of(h, true)), mu);
      });
    }
    if (const auto pairs = commuting_pairs(g); !pairs.empty()) {
      check("commuting square vanishes", [&] {
        const auto [f, h] = pick(rng, pairs);
        return loop_vanishes(commuting_loop(g, OrientedEdge::of(f, true), OrientedEdge::of(h, false)), mu);
      });
    }

    check("flips preserve topology and markings", [&] {
      FatGraph cur = g;
      Marking m = mu;
      Marking h = canonical_h_marking(g).first;
      const SymplecticForm form = SymplecticForm::standard(genus);
      for (int i = 0; i < 10; ++i) {
        OrientedEdge e;
        if (!random_flip_edge(rng, cur, e)) return false;
        FlipResult r = flip(cur, e);
        m = propagate(m, r.context);
        h = propagate(h, r.context);
        cur = std::move(r.graph);
        check_marking(cur, m);
        if (fatmark::genus(cur) != genus || boundary_number(cur) != 1) return false;
        if (!is_topological_h(cur, h, form)) return false;
      }
      return true;
    });

    check("cocycles are equivariant", [&] {
      FlipPath path(g);
      for (int i = 0; i < 6; ++i) {
        OrientedEdge e;
        if (!random_flip_edge(rng, path.end(), e)) return false;
        path.push(e);
      }
      const IntMatrix tm = random_unimodular(rng, rank);
      const Marking moved = transform(tm, mu);
      for (Cocycle c : {Cocycle::kM, Cocycle::kJ, Cocycle::kS}) {
        if (path_sum(path, moved, c).total != act(tm, path_sum(path, mu, c).total)) return false;
      }
      return true;
    });
  }
  return report;
}

}  // namespace fatmark
