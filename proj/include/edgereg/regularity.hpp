#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "edgereg/exponent.hpp"
#include "edgereg/field.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/monomial.hpp"
#include "edgereg/simplicial.hpp"
#include "edgereg/vertex_set.hpp"

namespace edgereg {

/// Witness (a, i, F): dim H~_{i-1}(lk F) = hom_dim > 0 in Δ_a(I) with
/// F ∩ supp a = ∅, so that reg(S/I) >= |a| + i.
struct RegCertificate {
  ExponentVec a;
  int i = 0;
  VertexSet face;
  std::size_t hom_dim = 0;
  FieldSpec field;

  friend bool operator==(const RegCertificate&, const RegCertificate&) = default;
};

struct RegOptions {
  /// Cone and degree-bound pruning plus join splitting of links. Off gives
  /// the plain reference sweep.
  bool prune = true;
  /// Search a_j <= rho_j instead of a_j < rho_j.
  bool full_box = false;
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct RegResult {
  /// reg(I) = reg(S/I) + 1
  int reg = 0;
  /// |a| + i of the certificate equals reg(S/I).
  RegCertificate certificate;
};

/// Δ_a(I) = Δ(sqrt(I : x^a)); VOID when x^a lies in I.
SimplicialComplex degree_complex(const MonomialIdeal& ideal, const ExponentVec& a);

/// The box {a : a_j < rho_j(I)} (rho_j = 0 forces a_j = 0), or with
/// `full` the box a_j <= rho_j. Indices run through it in lex order.
class GammaBox {
 public:
  /// Throws InputError for the zero or unit ideal, or when the box has more
  /// than 2^62 points.
  explicit GammaBox(const MonomialIdeal& ideal, bool full = false);

  /// Number of values of each coordinate.
  const std::vector<int>& extent() const { return extent_; }
  std::uint64_t cardinality() const { return cardinality_; }
  /// k-th point in lex order.
  ExponentVec at(std::uint64_t k) const;
  /// Points with x^a not in I, in lex order.
  std::vector<ExponentVec> members() const;

 private:
  const MonomialIdeal* ideal_;
  std::vector<int> extent_;
  std::uint64_t cardinality_ = 1;
};

/// Regularity via Takayama's formula, with a certificate that is lex-least
/// in (a, F) among the maximizers. Throws InputError for the zero or unit
/// ideal.
RegResult takayama_regularity(const MonomialIdeal& ideal, const FieldSpec& field, const RegOptions& options = {});

/// Every certificate attaining the maximum, sorted by (a, F). Throws
/// std::logic_error if some maximizing Δ_a is a cone over a vertex of supp a.
std::vector<RegCertificate> extremal_exponents(const MonomialIdeal& ideal, const FieldSpec& field,
                                               const RegOptions& options = {});

/// sum_{j in N(F)} a_j + ord_I(prod_{u not in N[F]} x_u^{a_u}) >= s for
/// I = I(G). Throws InputError when F is not independent or G has no edges.
bool criterion_in_power_check(const Graph& g, int s, const ExponentVec& a, VertexSet face);

/// reg P^s for P = I + J in disjoint variables, given regs_a[k] = reg I^{k+1}
/// and regs_b[k] = reg J^{k+1}. Throws InputError when a list is shorter than s.
int mixed_sum_regularity(const std::vector<int>& regs_a, const std::vector<int>& regs_b, int s);

}  // namespace edgereg
