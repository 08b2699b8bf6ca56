#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "edgereg/exponent.hpp"
#include "edgereg/graph.hpp"

namespace edgereg {

/// Monomial ideal in k[x_1, ..., x_n], held by its minimal generators in
/// graded-lex order. No generators is the zero ideal; the single generator
/// x^0 = 1 is the unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes `gens`. Throws InputError on a length other than n.
  MonomialIdeal(std::size_t n, std::vector<ExponentVec> gens);

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {ExponentVec(n)}); }
  /// (x_F) for each F in `sets`.
  static MonomialIdeal squarefree(std::size_t n, const std::vector<VertexSet>& sets);

  std::size_t ambient() const { return n_; }
  const std::vector<ExponentVec>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }
  bool is_squarefree() const;
  /// Supports of the generators; meaningful for squarefree ideals.
  std::vector<VertexSet> supports() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExponentVec> gens_;
};

/// Canonical form: drops duplicates and multiples of other generators.
MonomialIdeal minimalize(std::size_t n, std::vector<ExponentVec> gens);

/// I(G) = (x_i x_j : ij an edge).
MonomialIdeal edge_ideal(const Graph& g);

bool contains(const MonomialIdeal& ideal, const ExponentVec& a);
/// J ⊆ I, checked on generators.
bool is_subideal(const MonomialIdeal& j, const MonomialIdeal& i);

/// Throws InputError if either factor is the unit ideal or ambients differ.
MonomialIdeal product(const MonomialIdeal& i, const MonomialIdeal& j);
/// Repeated product with minimalization after each step; s >= 1.
MonomialIdeal power(const MonomialIdeal& ideal, int s);
MonomialIdeal sum(const MonomialIdeal& i, const MonomialIdeal& j);
/// I + (x^f : f in extra)
MonomialIdeal sum(const MonomialIdeal& i, std::span<const ExponentVec> extra);
/// Minimalized pairwise lcm of generators.
MonomialIdeal intersection(const MonomialIdeal& i, const MonomialIdeal& j);

/// sqrt(I : x^a), generated by sqrt(f / gcd(f, x^a)) over minimal
/// generators f. This is the unit ideal exactly when x^a lies in I.
MonomialIdeal radical_colon(const MonomialIdeal& ideal, const ExponentVec& a);

/// I_V: minimal generators whose support lies in V (same ambient ring).
MonomialIdeal restriction(const MonomialIdeal& ideal, VertexSet v);

/// rho_j(I): largest exponent of x_j among minimal generators (j is 0-based).
int rho(const MonomialIdeal& ideal, std::size_t j);
std::vector<int> rho_vector(const MonomialIdeal& ideal);

/// ord_I(x^f) = max{t : x^f in I^t}, with 0 when x^f is not in I. Exact
/// memoized branch and bound. Throws InputError for the zero or unit ideal.
int ord(const MonomialIdeal& ideal, const ExponentVec& f);

}  // namespace edgereg
