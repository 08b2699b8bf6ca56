#include "edgereg/monomial.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "edgereg/error.hpp"

namespace edgereg {

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<ExponentVec> gens) : n_(n) {
  if (n > static_cast<std::size_t>(kMaxVertices)) throw InputError("at most 64 variables are supported");
  for (const auto& g : gens) {
    if (g.size() != n) {
      throw InputError("generator of length " + std::to_string(g.size()) + " in a ring with " +
                       std::to_string(n) + " variables");
    }
  }
  std::sort(gens.begin(), gens.end(), grlex_before);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // After the degree sort a divisor always precedes its multiples.
  std::vector<VertexSet> supports;
  for (auto& g : gens) {
    const VertexSet s = g.support();
    bool redundant = false;
    for (std::size_t k = 0; k < gens_.size() && !redundant; ++k) {
      redundant = supports[k].is_subset_of(s) && gens_[k].divides(g);
    }
    if (!redundant) {
      gens_.push_back(std::move(g));
      supports.push_back(s);
    }
  }
}

MonomialIdeal MonomialIdeal::squarefree(std::size_t n, const std::vector<VertexSet>& sets) {
  std::vector<ExponentVec> gens;
  gens.reserve(sets.size());
  for (VertexSet s : sets) gens.push_back(ExponentVec::indicator(n, s));
  return MonomialIdeal(n, std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const ExponentVec& g) { return g.is_squarefree(); });
}

std::vector<VertexSet> MonomialIdeal::supports() const {
  std::vector<VertexSet> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.support());
  return out;
}

MonomialIdeal minimalize(std::size_t n, std::vector<ExponentVec> gens) { return MonomialIdeal(n, std::move(gens)); }

MonomialIdeal edge_ideal(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<ExponentVec> gens;
  gens.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) gens.push_back(ExponentVec::indicator(n, VertexSet{u, v}));
  return MonomialIdeal(n, std::move(gens));
}

namespace {

void require_same_ring(const MonomialIdeal& i, const MonomialIdeal& j, const char* what) {
  if (i.ambient() != j.ambient()) throw InputError(std::string(what) + ": ideals live in different rings");
}

}  // namespace

bool contains(const MonomialIdeal& ideal, const ExponentVec& a) {
  if (a.size() != ideal.ambient()) throw InputError("membership: exponent length differs from the ring");
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const ExponentVec& g) { return g.divides(a); });
}

bool is_subideal(const MonomialIdeal& j, const MonomialIdeal& i) {
  require_same_ring(i, j, "containment");
  return std::all_of(j.generators().begin(), j.generators().end(),
                     [&](const ExponentVec& g) { return contains(i, g); });
}

MonomialIdeal product(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_same_ring(i, j, "product");
  if (i.is_unit() || j.is_unit()) throw InputError("product with the unit ideal is not supported");
  std::vector<ExponentVec> gens;
  gens.reserve(i.size() * j.size());
  for (const auto& f : i.generators())
    for (const auto& g : j.generators()) gens.push_back(f + g);
  return MonomialIdeal(i.ambient(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, int s) {
  if (s < 1) throw InputError("powers are taken with exponent s >= 1");
  MonomialIdeal out = ideal;
  for (int k = 1; k < s; ++k) out = product(out, ideal);
  return out;
}

MonomialIdeal sum(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_same_ring(i, j, "sum");
  std::vector<ExponentVec> gens = i.generators();
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return MonomialIdeal(i.ambient(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& i, std::span<const ExponentVec> extra) {
  std::vector<ExponentVec> gens = i.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return MonomialIdeal(i.ambient(), std::move(gens));
}

MonomialIdeal intersection(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_same_ring(i, j, "intersection");
  std::vector<ExponentVec> gens;
  gens.reserve(i.size() * j.size());
  for (const auto& f : i.generators())
    for (const auto& g : j.generators()) gens.push_back(lcm(f, g));
  return MonomialIdeal(i.ambient(), std::move(gens));
}

MonomialIdeal radical_colon(const MonomialIdeal& ideal, const ExponentVec& a) {
  if (a.size() != ideal.ambient()) throw InputError("colon: exponent length differs from the ring");
  std::vector<ExponentVec> gens;
  gens.reserve(ideal.size());
  for (const auto& f : ideal.generators()) gens.push_back(radical(colon_quotient(f, a)));
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

MonomialIdeal restriction(const MonomialIdeal& ideal, VertexSet v) {
  std::vector<ExponentVec> gens;
  for (const auto& f : ideal.generators()) {
    if (f.support().is_subset_of(v)) gens.push_back(f);
  }
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

int rho(const MonomialIdeal& ideal, std::size_t j) {
  if (j >= ideal.ambient()) throw InputError("rho: variable index out of range");
  int best = 0;
  for (const auto& f : ideal.generators()) best = std::max(best, f[j]);
  return best;
}

std::vector<int> rho_vector(const MonomialIdeal& ideal) {
  std::vector<int> out(ideal.ambient(), 0);
  for (const auto& f : ideal.generators())
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::max(out[j], f[j]);
  return out;
}

namespace {

class OrderSearch {
 public:
  explicit OrderSearch(const MonomialIdeal& ideal) : ideal_(ideal) {
    min_degree_ = ideal.generators().front().degree();
    for (const auto& g : ideal.generators()) min_degree_ = std::min(min_degree_, g.degree());
  }

  int run(const ExponentVec& f) {
    if (auto it = memo_.find(f.entries()); it != memo_.end()) return it->second;
    const int bound = f.degree() / min_degree_;
    int best = 0;
    for (const auto& g : ideal_.generators()) {
      if (best == bound) break;
      if (!g.divides(f)) continue;
      ExponentVec rest = f;
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= g[j];
      best = std::max(best, 1 + run(rest));
    }
    memo_.emplace(f.entries(), best);
    return best;
  }

 private:
  const MonomialIdeal& ideal_;
  int min_degree_ = 1;
  std::map<std::vector<int>, int> memo_;
};

}  // namespace

int ord(const MonomialIdeal& ideal, const ExponentVec& f) {
  if (!ideal.is_proper_nonzero()) throw InputError("ord needs a nonzero proper ideal");
  if (f.size() != ideal.ambient()) throw InputError("ord: exponent length differs from the ring");
  return OrderSearch(ideal).run(f);
}

}  // namespace edgereg
