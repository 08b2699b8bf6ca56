#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "edgereg/field.hpp"
#include "edgereg/monomial.hpp"
#include "edgereg/vertex_set.hpp"

namespace edgereg {

/// Reduced homology dimensions dim H~_d for d = -1, 0, 1, ...; trailing
/// zeros are trimmed, so an acyclic (or void) complex holds no entries.
class HomologyDims {
 public:
  HomologyDims() = default;
  /// values[k] is the dimension in degree k - 1.
  explicit HomologyDims(std::vector<std::size_t> values);

  std::size_t at(int degree) const;
  bool acyclic() const { return values_.empty(); }
  /// Largest degree with nonzero homology.
  std::optional<int> top_degree() const;
  const std::vector<std::size_t>& values() const { return values_; }

  friend bool operator==(const HomologyDims&, const HomologyDims&) = default;

 private:
  std::vector<std::size_t> values_;
};

/// H~(A * B) for the simplicial join, via the Kunneth formula over a field.
HomologyDims join(const HomologyDims& a, const HomologyDims& b);

/// Simplicial complex on the ground set {0, ..., n-1}, held by its facets.
/// VOID has no faces at all; EMPTY is {∅}.
class SimplicialComplex {
 public:
  enum class State { Void, Empty, Facets };

  SimplicialComplex() = default;
  static SimplicialComplex void_complex(int n);
  static SimplicialComplex empty_complex(int n);
  static SimplicialComplex simplex(int n, VertexSet vertices);
  /// Keeps the inclusion-maximal sets. No sets gives VOID, {∅} gives EMPTY.
  static SimplicialComplex from_facets(int n, std::vector<VertexSet> facets);

  int ground_size() const { return n_; }
  State state() const { return state_; }
  bool is_void() const { return state_ == State::Void; }
  bool is_empty() const { return state_ == State::Empty; }
  /// Sorted by lex_less. VOID: none. EMPTY: the single facet ∅.
  const std::vector<VertexSet>& facets() const { return facets_; }
  /// nullopt for VOID, -1 for EMPTY.
  std::optional<int> dimension() const;
  bool contains(VertexSet face) const;
  /// Union of the facets.
  VertexSet vertices() const;
  /// Entry k lists the faces with k vertices, sorted by bit pattern; entry 0
  /// holds ∅ unless the complex is VOID.
  std::vector<std::vector<VertexSet>> faces_by_size() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  State state_ = State::Void;
  std::vector<VertexSet> facets_;
};

/// Δ(J) = {F : x_F not in J}; facets are complements of the minimal vertex
/// covers of the generator supports. Zero ideal gives the full simplex,
/// unit ideal gives VOID. Throws InputError for non-squarefree J.
SimplicialComplex sr_complex(const MonomialIdeal& j);
/// I_Δ = (x_F : F not in Δ) by its minimal non-faces. Throws on VOID.
MonomialIdeal sr_ideal(const SimplicialComplex& delta);

/// lk F = {G : G ∪ F in Δ, G ∩ F = ∅}. Throws InputError when F is not a face.
SimplicialComplex link(const SimplicialComplex& delta, VertexSet face);
/// v lies in every facet. Throws InputError on VOID.
bool is_cone(const SimplicialComplex& delta, int v);

/// Reduced homology from explicit boundary matrices (the empty face spans
/// degree -1 and the augmentation is the boundary of each vertex).
HomologyDims reduced_homology_dims(const SimplicialComplex& delta, const FieldSpec& field);
/// True when every reduced homology group vanishes; v must be a cone point.
bool cone_acyclicity_check(const SimplicialComplex& delta, int v, const FieldSpec& field);

/// Homology straight from faces grouped as in faces_by_size(). Verifies the
/// Euler characteristic identity and throws std::logic_error on failure.
HomologyDims homology_from_faces(const std::vector<std::vector<VertexSet>>& faces_by_size,
                                 const FieldSpec& field);
/// sum (-1)^d dim H~_d == sum (-1)^d f_d, the empty face counted in degree -1.
bool euler_consistent(const HomologyDims& dims, const std::vector<std::vector<VertexSet>>& faces_by_size);

/// Homology of the complex on `vertices` with the given minimal non-faces
/// (each a nonempty subset of `vertices`). With `split_joins`, connected
/// components of the non-face hypergraph are treated separately and
/// recombined by join(); uncovered vertices short-circuit to a cone.
HomologyDims sr_homology(VertexSet vertices, std::span<const VertexSet> minimal_nonfaces,
                         const FieldSpec& field, bool split_joins = true);

/// Faces of the complex on `vertices` avoiding every set in `nonfaces`,
/// grouped by size like SimplicialComplex::faces_by_size().
std::vector<std::vector<VertexSet>> faces_avoiding(VertexSet vertices, std::span<const VertexSet> nonfaces);

}  // namespace edgereg
