#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "edgereg/exponent.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/monomial.hpp"

namespace edgereg {

/// f = x_{C_1} ... x_{C_2a} * e_1 ... e_b with (|C_1| + ... + |C_2a|)/2 + b = s.
struct ClosureWitness {
  std::vector<Cycle> cycles;
  std::vector<Edge> edges;
};

struct ClosureGenerator {
  ExponentVec f;
  ClosureWitness witness;
};

struct ClosureGenerators {
  int s = 0;
  MonomialIdeal power;    // I^s
  MonomialIdeal closure;  // integral closure of I^s
  /// Minimal generators of the closure outside I^s, in generator order.
  std::vector<ClosureGenerator> extra;
};

/// Builds the closure of I(G)^s from products of pairs of vertex-disjoint odd
/// cycles and edges. Throws InputError unless s >= 1 and G has an edge.
ClosureGenerators closure_generators(const Graph& g, int s);
MonomialIdeal integral_closure_edge_power(const Graph& g, int s);

/// x^a lies in the integral closure of I: a is in the Newton polyhedron.
/// Throws InputError for the zero ideal.
bool newton_membership(const MonomialIdeal& ideal, const ExponentVec& a);

/// Reference closure of I(G)^s: every a with |a| = 2s and a_j <= s that
/// passes newton_membership, minimalized.
MonomialIdeal lp_closure_edge_power(const Graph& g, int s);

struct NormalityVerdict {
  bool normal = true;
  /// Two chordless odd cycles, disjoint and with no edge between them.
  std::optional<std::pair<Cycle, Cycle>> witness;
};

NormalityVerdict is_normal_edge(const Graph& g);

/// Intersection over minimal vertex covers C of (x_j : j in C)^s. Throws
/// InputError unless s >= 1 and G has an edge.
MonomialIdeal symbolic_power(const Graph& g, int s);
/// Membership in I(G)^(s) without building it: sum_{j in C} a_j >= s for
/// every minimal vertex cover C.
bool symbolic_power_contains(const Graph& g, int s, const ExponentVec& a);

struct IntermediateIdeal {
  /// Indices into ClosureGenerators::extra.
  std::vector<std::size_t> chosen;
  MonomialIdeal ideal;
};

/// I^s + (any subset of the extra closure generators). All subsets in
/// increasing bit order when 2^t <= cap; otherwise the empty subset, the
/// full subset and distinct random subsets from `seed` until `cap` ideals.
/// Throws InputError when cap is 0.
std::vector<IntermediateIdeal> enumerate_intermediate_ideals(const Graph& g, int s, std::size_t cap,
                                                             std::uint64_t seed);

}  // namespace edgereg
