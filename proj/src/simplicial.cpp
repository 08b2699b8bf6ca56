#include "edgereg/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

#include "edgereg/error.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/linalg.hpp"

namespace edgereg {

HomologyDims::HomologyDims(std::vector<std::size_t> values) : values_(std::move(values)) {
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
}

std::size_t HomologyDims::at(int degree) const {
  const int k = degree + 1;
  if (k < 0 || k >= static_cast<int>(values_.size())) return 0;
  return values_[static_cast<std::size_t>(k)];
}

std::optional<int> HomologyDims::top_degree() const {
  if (values_.empty()) return std::nullopt;
  return static_cast<int>(values_.size()) - 2;
}

HomologyDims join(const HomologyDims& a, const HomologyDims& b) {
  // Index k carries degree k - 1, and H~_{p+q+1}(A*B) = sum H~_p(A) ⊗ H~_q(B),
  // so indices add.
  const auto& va = a.values();
  const auto& vb = b.values();
  if (va.empty() || vb.empty()) return {};
  std::vector<std::size_t> out(va.size() + vb.size() - 1, 0);
  for (std::size_t i = 0; i < va.size(); ++i)
    for (std::size_t j = 0; j < vb.size(); ++j) out[i + j] += va[i] * vb[j];
  return HomologyDims(std::move(out));
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
  SimplicialComplex c;
  c.n_ = n;
  return c;
}

SimplicialComplex SimplicialComplex::empty_complex(int n) {
  SimplicialComplex c;
  c.n_ = n;
  c.state_ = State::Empty;
  c.facets_ = {VertexSet()};
  return c;
}

SimplicialComplex SimplicialComplex::simplex(int n, VertexSet vertices) { return from_facets(n, {vertices}); }

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<VertexSet> facets) {
  if (n < 0 || n > kMaxVertices) throw InputError("complexes live on at most 64 vertices");
  for (VertexSet f : facets) {
    if (!f.is_subset_of(VertexSet::range(n))) throw InputError("facet exceeds the ground set");
  }
  if (facets.empty()) return void_complex(n);
  // Maximal sets: sort by decreasing size, keep those not inside a kept one.
  std::sort(facets.begin(), facets.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() > b.size() : a.bits() < b.bits();
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<VertexSet> kept;
  for (VertexSet f : facets) {
    if (std::none_of(kept.begin(), kept.end(), [f](VertexSet k) { return f.is_subset_of(k); })) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end(), LexLess{});
  SimplicialComplex c;
  c.n_ = n;
  c.state_ = (kept.size() == 1 && kept.front().empty()) ? State::Empty : State::Facets;
  c.facets_ = std::move(kept);
  return c;
}

std::optional<int> SimplicialComplex::dimension() const {
  if (is_void()) return std::nullopt;
  int best = -1;
  for (VertexSet f : facets_) best = std::max(best, f.size() - 1);
  return best;
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](VertexSet f) { return face.is_subset_of(f); });
}

VertexSet SimplicialComplex::vertices() const {
  VertexSet out;
  for (VertexSet f : facets_) out |= f;
  return out;
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_size() const {
  if (is_void()) return {};
  std::vector<std::uint64_t> all;
  for (VertexSet f : facets_) {
    // Enumerate the subsets of f.
    const std::uint64_t full = f.bits();
    std::uint64_t sub = full;
    for (;;) {
      all.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & full;
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<std::vector<VertexSet>> out(static_cast<std::size_t>(*dimension() + 2));
  for (auto bits : all) out[static_cast<std::size_t>(std::popcount(bits))].emplace_back(bits);
  return out;
}

SimplicialComplex sr_complex(const MonomialIdeal& j) {
  if (!j.is_squarefree()) throw InputError("Stanley-Reisner complexes need a squarefree ideal");
  const int n = static_cast<int>(j.ambient());
  if (j.is_unit()) return SimplicialComplex::void_complex(n);
  const VertexSet ground = VertexSet::range(n);
  std::vector<VertexSet> facets;
  for (VertexSet cover : minimal_transversals(n, j.supports())) facets.push_back(ground - cover);
  return SimplicialComplex::from_facets(n, std::move(facets));
}

MonomialIdeal sr_ideal(const SimplicialComplex& delta) {
  if (delta.is_void()) throw InputError("the void complex has no Stanley-Reisner ideal");
  // F is a non-face iff it meets the complement of every facet.
  const int n = delta.ground_size();
  const VertexSet ground = VertexSet::range(n);
  std::vector<VertexSet> complements;
  for (VertexSet f : delta.facets()) complements.push_back(ground - f);
  return MonomialIdeal::squarefree(static_cast<std::size_t>(n), minimal_transversals(n, complements));
}

SimplicialComplex link(const SimplicialComplex& delta, VertexSet face) {
  if (!delta.contains(face) || delta.is_void()) throw InputError("link of a set that is not a face");
  std::vector<VertexSet> facets;
  for (VertexSet b : delta.facets()) {
    if (face.is_subset_of(b)) facets.push_back(b - face);
  }
  return SimplicialComplex::from_facets(delta.ground_size(), std::move(facets));
}

bool is_cone(const SimplicialComplex& delta, int v) {
  if (delta.is_void()) throw InputError("cone test on the void complex");
  return std::all_of(delta.facets().begin(), delta.facets().end(), [v](VertexSet f) { return f.contains(v); });
}

namespace {

std::size_t index_of(const std::vector<VertexSet>& sorted, VertexSet face) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), face,
                             [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  return static_cast<std::size_t>(it - sorted.begin());
}

SparseIntMatrix boundary_matrix(const std::vector<VertexSet>& faces, const std::vector<VertexSet>& facets_below) {
  SparseIntMatrix m(facets_below.size(), faces.size());
  for (std::size_t c = 0; c < faces.size(); ++c) {
    std::vector<SparseIntMatrix::Entry> entries;
    std::int64_t sign = 1;
    for (int v : faces[c]) {
      VertexSet below = faces[c] - VertexSet::singleton(v);
      entries.emplace_back(static_cast<std::uint32_t>(index_of(facets_below, below)), sign);
      sign = -sign;
    }
    m.set_column(c, std::move(entries));
  }
  return m;
}

}  // namespace

bool euler_consistent(const HomologyDims& dims, const std::vector<std::vector<VertexSet>>& faces_by_size) {
  long lhs = 0;
  long rhs = 0;
  for (std::size_t k = 0; k < faces_by_size.size(); ++k) {
    // index k is degree k - 1
    const long sign = (k % 2 == 1) ? 1 : -1;
    rhs += sign * static_cast<long>(faces_by_size[k].size());
    lhs += sign * static_cast<long>(dims.at(static_cast<int>(k) - 1));
  }
  for (std::size_t k = faces_by_size.size(); k < dims.values().size(); ++k) {
    if (dims.values()[k] != 0) return false;
  }
  return lhs == rhs;
}

HomologyDims homology_from_faces(const std::vector<std::vector<VertexSet>>& faces_by_size, const FieldSpec& field) {
  if (faces_by_size.empty()) return {};
  const std::size_t top = faces_by_size.size() - 1;
  // rank[k] = rank of the boundary from size-k faces to size-(k-1) faces.
  std::vector<std::size_t> rank(top + 2, 0);
  // Clearing: a pivot row of one map marks a column of the next map down
  // that reduces to zero anyway.
  std::unique_ptr<bool[]> cleared(new bool[faces_by_size[top].size()]());
  for (std::size_t k = top; k >= 1; --k) {
    const auto& faces = faces_by_size[k];
    SparseIntMatrix m = boundary_matrix(faces, faces_by_size[k - 1]);
    auto pivots = reduce_columns(m, field, std::span<const bool>(cleared.get(), faces.size()));
    std::unique_ptr<bool[]> next(new bool[faces_by_size[k - 1].size()]());
    for (auto p : pivots) {
      if (p >= 0) {
        ++rank[k];
        next[static_cast<std::size_t>(p)] = true;
      }
    }
    cleared = std::move(next);
  }
  std::vector<std::size_t> values(top + 1, 0);
  for (std::size_t k = 0; k <= top; ++k) values[k] = faces_by_size[k].size() - rank[k] - rank[k + 1];
  HomologyDims dims(std::move(values));
  if (!euler_consistent(dims, faces_by_size)) throw std::logic_error("Euler characteristic mismatch in homology");
  return dims;
}

HomologyDims reduced_homology_dims(const SimplicialComplex& delta, const FieldSpec& field) {
  return homology_from_faces(delta.faces_by_size(), field);
}

bool cone_acyclicity_check(const SimplicialComplex& delta, int v, const FieldSpec& field) {
  if (!is_cone(delta, v)) throw InputError("vertex " + std::to_string(v) + " is not a cone point");
  return reduced_homology_dims(delta, field).acyclic();
}

std::vector<std::vector<VertexSet>> faces_avoiding(VertexSet vertices, std::span<const VertexSet> nonfaces) {
  for (VertexSet m : nonfaces) {
    if (m.empty()) return {};
  }
  const int bound = vertices.bound();
  std::vector<std::vector<VertexSet>> containing(static_cast<std::size_t>(bound));
  for (VertexSet m : nonfaces) {
    for (int v : m) {
      if (v < bound) containing[v].push_back(m);
    }
  }
  std::vector<std::vector<VertexSet>> out(1, std::vector<VertexSet>{VertexSet()});
  std::vector<int> order = vertices.to_vector();
  // Depth-first over increasing vertices; F + v is a face iff no non-face
  // through v fits inside it.
  auto extend = [&](auto&& self, VertexSet face, std::size_t next) -> void {
    for (std::size_t k = next; k < order.size(); ++k) {
      const int v = order[k];
      const VertexSet grown = face | VertexSet::singleton(v);
      bool ok = true;
      for (VertexSet m : containing[v]) {
        if (m.is_subset_of(grown)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const auto size = static_cast<std::size_t>(grown.size());
      if (out.size() <= size) out.resize(size + 1);
      out[size].push_back(grown);
      self(self, grown, k + 1);
    }
  };
  extend(extend, VertexSet(), 0);
  for (auto& level : out) {
    std::sort(level.begin(), level.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  }
  return out;
}

HomologyDims sr_homology(VertexSet vertices, std::span<const VertexSet> minimal_nonfaces, const FieldSpec& field,
                         bool split_joins) {
  VertexSet excluded;
  std::vector<VertexSet> nonfaces;
  for (VertexSet m : minimal_nonfaces) {
    if (m.empty()) return {};
    if (!m.is_subset_of(vertices)) throw InputError("non-face outside the vertex set");
    if (m.size() == 1) {
      excluded |= m;
    } else {
      nonfaces.push_back(m);
    }
  }
  const VertexSet live = vertices - excluded;
  std::erase_if(nonfaces, [excluded](VertexSet m) { return m.intersects(excluded); });
  if (live.empty()) return HomologyDims({1});
  if (!split_joins) return homology_from_faces(faces_avoiding(live, nonfaces), field);

  VertexSet covered;
  for (VertexSet m : nonfaces) covered |= m;
  if (!live.is_subset_of(covered)) return {};

  // Connected components of the non-face hypergraph; the complex is the join
  // of the complexes induced on them.
  std::vector<VertexSet> components;
  for (VertexSet m : nonfaces) {
    VertexSet merged = m;
    std::vector<VertexSet> rest;
    for (VertexSet c : components) {
      if (c.intersects(merged)) {
        merged |= c;
      } else {
        rest.push_back(c);
      }
    }
    rest.push_back(merged);
    components = std::move(rest);
  }
  std::sort(components.begin(), components.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  HomologyDims result({1});
  for (VertexSet c : components) {
    std::vector<VertexSet> local;
    for (VertexSet m : nonfaces) {
      if (m.is_subset_of(c)) local.push_back(m);
    }
    result = join(result, homology_from_faces(faces_avoiding(c, local), field));
    if (result.acyclic()) break;
  }
  return result;
}

}  // namespace edgereg
