#include "edgereg/closure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "edgereg/error.hpp"
#include "edgereg/lp.hpp"

namespace edgereg {

namespace {

void require_power_input(const Graph& g, int s) {
  if (s < 1) throw InputError("power must be at least 1");
  if (g.edge_count() == 0) throw InputError("graph has no edges");
}

VertexSet cycle_vertices(const Cycle& c) {
  VertexSet out;
  for (int v : c) out.insert(v);
  return out;
}

// Minimal generators of I^b, each with one factorization into edges.
std::map<ExponentVec, std::vector<Edge>> power_with_edges(const Graph& g, int b) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::map<ExponentVec, std::vector<Edge>> layer{{ExponentVec(n), {}}};
  for (int step = 0; step < b; ++step) {
    std::map<ExponentVec, std::vector<Edge>> next;
    for (const auto& [m, edges] : layer) {
      for (const Edge& e : g.edges()) {
        ExponentVec grown = m;
        ++grown[static_cast<std::size_t>(e.first)];
        ++grown[static_cast<std::size_t>(e.second)];
        if (next.count(grown) != 0) continue;
        auto witness = edges;
        witness.push_back(e);
        next.emplace(std::move(grown), std::move(witness));
      }
    }
    layer = std::move(next);
  }
  return layer;
}

struct CyclePair {
  const Cycle* first;
  const Cycle* second;
  ExponentVec product;
  int weight;  // (|C_1| + |C_2|) / 2
};

}  // namespace

ClosureGenerators closure_generators(const Graph& g, int s) {
  require_power_input(g, s);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  ClosureGenerators out;
  out.s = s;
  out.power = power(edge_ideal(g), s);

  // A pair of cycles has weight at least 3, so each cycle has length at most 2s - 3.
  const auto cycles = s >= 3 ? enumerate_odd_cycles(g, false, 2 * s - 3) : std::vector<Cycle>{};
  std::vector<CyclePair> pairs;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      const int weight = static_cast<int>(cycles[i].size() + cycles[j].size()) / 2;
      if (weight > s || cycle_vertices(cycles[i]).intersects(cycle_vertices(cycles[j]))) continue;
      ExponentVec product(n);
      for (int v : cycles[i]) ++product[static_cast<std::size_t>(v)];
      for (int v : cycles[j]) ++product[static_cast<std::size_t>(v)];
      pairs.push_back(CyclePair{&cycles[i], &cycles[j], std::move(product), weight});
    }
  }

  std::map<int, std::map<ExponentVec, std::vector<Edge>>> edge_powers;
  std::map<ExponentVec, ClosureWitness> candidates;
  // Multisets of pairs in nondecreasing index order, then edges for the rest.
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, int, const ExponentVec&)> extend = [&](std::size_t from, int used,
                                                                        const ExponentVec& base) {
    if (!chosen.empty()) {
      const int b = s - used;
      auto it = edge_powers.find(b);
      if (it == edge_powers.end()) it = edge_powers.emplace(b, power_with_edges(g, b)).first;
      for (const auto& [m, edges] : it->second) {
        ExponentVec f = base + m;
        if (candidates.count(f) != 0) continue;
        ClosureWitness w;
        for (std::size_t p : chosen) {
          w.cycles.push_back(*pairs[p].first);
          w.cycles.push_back(*pairs[p].second);
        }
        w.edges = edges;
        candidates.emplace(std::move(f), std::move(w));
      }
    }
    for (std::size_t p = from; p < pairs.size(); ++p) {
      if (used + pairs[p].weight > s) continue;
      chosen.push_back(p);
      extend(p, used + pairs[p].weight, base + pairs[p].product);
      chosen.pop_back();
    }
  };
  extend(0, 0, ExponentVec(n));

  std::vector<ExponentVec> gens = out.power.generators();
  for (const auto& [f, w] : candidates) gens.push_back(f);
  out.closure = MonomialIdeal(n, std::move(gens));
  for (const auto& f : out.closure.generators()) {
    if (contains(out.power, f)) continue;
    out.extra.push_back(ClosureGenerator{f, candidates.at(f)});
  }
  return out;
}

MonomialIdeal integral_closure_edge_power(const Graph& g, int s) { return closure_generators(g, s).closure; }

bool newton_membership(const MonomialIdeal& ideal, const ExponentVec& a) {
  if (ideal.is_zero()) throw InputError("Newton polyhedron of the zero ideal");
  require_same_length(ideal.generators().front(), a, "Newton membership");
  if (contains(ideal, a)) return true;
  return lp_feasible_convex_cover(ideal.generators(), a);
}

MonomialIdeal lp_closure_edge_power(const Graph& g, int s) {
  require_power_input(g, s);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const MonomialIdeal p = power(edge_ideal(g), s);
  std::vector<ExponentVec> found;
  ExponentVec a(n);
  // Compositions of 2s into n parts bounded by s.
  std::function<void(std::size_t, int)> place = [&](std::size_t j, int left) {
    if (j + 1 == n) {
      if (left > s) return;
      a[j] = left;
      if (newton_membership(p, a)) found.push_back(a);
      a[j] = 0;
      return;
    }
    for (int e = std::min(left, s); e >= 0; --e) {
      a[j] = e;
      place(j + 1, left - e);
    }
    a[j] = 0;
  };
  if (n > 0) place(0, 2 * s);
  return MonomialIdeal(n, std::move(found));
}

NormalityVerdict is_normal_edge(const Graph& g) {
  const auto cycles = enumerate_odd_cycles(g, true);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const VertexSet ci = cycle_vertices(cycles[i]);
    const VertexSet reach = closed_neighborhood(g, ci);
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (!cycle_vertices(cycles[j]).intersects(reach)) return NormalityVerdict{false, std::make_pair(cycles[i], cycles[j])};
    }
  }
  return {};
}

MonomialIdeal symbolic_power(const Graph& g, int s) {
  require_power_input(g, s);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::optional<MonomialIdeal> acc;
  for (VertexSet cover : minimal_vertex_covers(g)) {
    // (x_C)^s: every monomial of degree s in the variables of C.
    const MonomialIdeal prime = MonomialIdeal::squarefree(n, [&] {
      std::vector<VertexSet> vars;
      for (int v : cover) vars.push_back(VertexSet::singleton(v));
      return vars;
    }());
    const MonomialIdeal part = power(prime, s);
    acc = acc ? intersection(*acc, part) : part;
  }
  return *acc;
}

bool symbolic_power_contains(const Graph& g, int s, const ExponentVec& a) {
  require_power_input(g, s);
  if (a.size() != static_cast<std::size_t>(g.vertex_count())) throw InputError("exponent length differs from the graph");
  for (VertexSet cover : minimal_vertex_covers(g)) {
    int total = 0;
    for (int v : cover) total += a[static_cast<std::size_t>(v)];
    if (total < s) return false;
  }
  return true;
}

std::vector<IntermediateIdeal> enumerate_intermediate_ideals(const Graph& g, int s, std::size_t cap,
                                                             std::uint64_t seed) {
  if (cap == 0) throw InputError("cap must be positive");
  const ClosureGenerators cg = closure_generators(g, s);
  const std::size_t t = cg.extra.size();
  auto build = [&](const std::vector<bool>& mask) {
    IntermediateIdeal out;
    std::vector<ExponentVec> extra;
    for (std::size_t k = 0; k < t; ++k) {
      if (mask[k]) {
        out.chosen.push_back(k);
        extra.push_back(cg.extra[k].f);
      }
    }
    out.ideal = sum(cg.power, extra);
    return out;
  };
  std::vector<IntermediateIdeal> out;
  if (t < 63 && (std::uint64_t{1} << t) <= cap) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t); ++bits) {
      std::vector<bool> mask(t);
      for (std::size_t k = 0; k < t; ++k) mask[k] = ((bits >> k) & 1U) != 0;
      out.push_back(build(mask));
    }
    return out;
  }
  std::set<std::vector<bool>> seen;
  auto take = [&](std::vector<bool> mask) {
    if (out.size() < cap && seen.insert(mask).second) out.push_back(build(mask));
  };
  take(std::vector<bool>(t, false));
  take(std::vector<bool>(t, true));
  std::mt19937_64 rng(seed);
  while (out.size() < cap) {
    std::vector<bool> mask(t);
    for (std::size_t k = 0; k < t; ++k) mask[k] = (rng() & 1U) != 0;
    take(std::move(mask));
  }
  return out;
}

}  // namespace edgereg
