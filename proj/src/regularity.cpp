#include "edgereg/regularity.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "edgereg/error.hpp"

namespace edgereg {

SimplicialComplex degree_complex(const MonomialIdeal& ideal, const ExponentVec& a) {
  return sr_complex(radical_colon(ideal, a));
}

GammaBox::GammaBox(const MonomialIdeal& ideal, bool full) : ideal_(&ideal) {
  if (!ideal.is_proper_nonzero()) throw InputError("the search box needs a nonzero proper ideal");
  for (int r : rho_vector(ideal)) {
    const int values = full ? r + 1 : std::max(r, 1);
    extent_.push_back(values);
    if (cardinality_ > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(values))
      throw InputError("exponent search box is too large");
    cardinality_ *= static_cast<std::uint64_t>(values);
  }
}

ExponentVec GammaBox::at(std::uint64_t k) const {
  ExponentVec a(extent_.size());
  for (std::size_t j = extent_.size(); j-- > 0;) {
    const auto base = static_cast<std::uint64_t>(extent_[j]);
    a[j] = static_cast<int>(k % base);
    k /= base;
  }
  return a;
}

std::vector<ExponentVec> GammaBox::members() const {
  std::vector<ExponentVec> out;
  for (std::uint64_t k = 0; k < cardinality_; ++k) {
    ExponentVec a = at(k);
    if (!contains(*ideal_, a)) out.push_back(std::move(a));
  }
  return out;
}

namespace {

using Mask = std::uint64_t;

// Generators as dense 16-bit rows plus support masks.
struct PackedIdeal {
  int n = 0;
  std::vector<std::uint16_t> exps;
  std::vector<Mask> supports;

  explicit PackedIdeal(const MonomialIdeal& ideal) : n(static_cast<int>(ideal.ambient())) {
    for (const auto& g : ideal.generators()) {
      for (int e : g.entries()) {
        if (e > std::numeric_limits<std::uint16_t>::max()) throw InputError("exponent too large for the sweep");
        exps.push_back(static_cast<std::uint16_t>(e));
      }
      supports.push_back(g.support().bits());
    }
  }

  // Supports of sqrt(I : x^a); nullopt when x^a is in I.
  std::optional<std::vector<Mask>> colon_masks(const std::vector<int>& a) const {
    std::vector<Mask> masks;
    masks.reserve(supports.size());
    for (std::size_t g = 0; g < supports.size(); ++g) {
      const std::uint16_t* row = exps.data() + g * static_cast<std::size_t>(n);
      Mask m = 0;
      for (int j : VertexSet(supports[g])) {
        if (row[j] > a[static_cast<std::size_t>(j)]) m |= Mask{1} << j;
      }
      if (m == 0) return std::nullopt;
      masks.push_back(m);
    }
    return masks;
  }
};

// Inclusion-minimal masks, sorted by bit pattern.
void minimalize_masks(std::vector<Mask>& masks) {
  std::sort(masks.begin(), masks.end(), [](Mask x, Mask y) {
    const int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px < py : x < y;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::size_t kept = 0;
  for (std::size_t k = 0; k < masks.size(); ++k) {
    bool redundant = false;
    for (std::size_t q = 0; q < kept; ++q) {
      if ((masks[q] & ~masks[k]) == 0) {
        redundant = true;
        break;
      }
    }
    if (!redundant) masks[kept++] = masks[k];
  }
  masks.resize(kept);
  std::sort(masks.begin(), masks.end());
}

struct KeyHash {
  std::size_t operator()(const std::vector<Mask>& key) const {
    std::size_t h = key.size();
    for (Mask m : key) h ^= std::hash<Mask>{}(m) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct Found {
  int value = -1;
  ExponentVec a;
  VertexSet face;
  int i = 0;
  std::size_t hom_dim = 0;
};

bool lex_before(const Found& x, const Found& y) {
  if (x.a != y.a) return x.a < y.a;
  return lex_less(x.face, y.face);
}

// One worker of the sweep. Exponents must be visited in lex order so that
// the first maximizer seen is the lex-least one.
class Sweep {
 public:
  Sweep(const PackedIdeal& ideal, const FieldSpec& field, bool prune, std::atomic<int>* shared)
      : ideal_(ideal), field_(field), prune_(prune), shared_(shared) {}

  // Maximize mode.
  void visit(const ExponentVec& a) { scan(a, -1, nullptr); }
  // Collect every (a, F) reaching `target`, without skipping whole cones.
  void collect(const ExponentVec& a, int target, std::vector<Found>* out) { scan(a, target, out); }

  const Found& best() const { return best_; }

 private:
  int threshold_strict() const { return shared_ ? shared_->load(std::memory_order_relaxed) : -1; }

  // True when the value bound cannot improve on what is known.
  bool hopeless(int bound) const {
    if (!prune_) return false;
    if (target_ >= 0) return bound < target_;
    return bound <= best_.value || bound < threshold_strict();
  }

  void scan(const ExponentVec& a, int target, std::vector<Found>* out) {
    target_ = target;
    out_ = out;
    auto masks = ideal_.colon_masks(a.entries());
    if (!masks) return;
    minimalize_masks(*masks);
    Mask singles = 0;
    big_.clear();
    for (Mask m : *masks) {
      if (std::popcount(m) == 1) {
        singles |= m;
      } else {
        big_.push_back(m);
      }
    }
    const Mask ground = VertexSet::range(ideal_.n).bits();
    vertices_ = ground & ~singles;
    const Mask supp = a.support().bits();
    degree_ = a.degree();
    if (hopeless(degree_ + std::max(0, std::popcount(vertices_) - 1))) return;
    if (prune_ && target_ < 0) {
      // A cone over a vertex of supp a makes every admissible link a cone.
      Mask covered = 0;
      for (Mask m : big_) covered |= m;
      if ((vertices_ & supp & ~covered) != 0) return;
    }
    const Mask allowed = vertices_ & ~supp;
    through_.assign(static_cast<std::size_t>(ideal_.n), {});
    for (Mask m : big_) {
      if ((m & ~allowed) != 0) continue;
      for (int v : VertexSet(m)) through_[static_cast<std::size_t>(v)].push_back(m);
    }
    order_ = VertexSet(allowed).to_vector();
    current_a_ = &a;
    visit_face(0, 0);
  }

  void visit_face(Mask face, std::size_t next) {
    evaluate_link(face);
    for (std::size_t k = next; k < order_.size(); ++k) {
      const int v = order_[k];
      const Mask grown = face | (Mask{1} << v);
      bool ok = true;
      for (Mask m : through_[static_cast<std::size_t>(v)]) {
        if ((m & ~grown) == 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      // Links of larger faces live on fewer vertices.
      if (hopeless(degree_ + std::max(0, std::popcount(vertices_ & ~grown) - 1))) continue;
      visit_face(grown, k + 1);
    }
  }

  void evaluate_link(Mask face) {
    link_.clear();
    for (Mask m : big_) link_.push_back(m & ~face);
    minimalize_masks(link_);
    Mask singles = 0;
    std::vector<Mask> nonfaces;
    for (Mask m : link_) {
      if (std::popcount(m) == 1) {
        singles |= m;
      } else {
        nonfaces.push_back(m);
      }
    }
    const Mask live = vertices_ & ~face & ~singles;
    int i = 0;
    std::size_t dim = 1;
    if (live != 0) {
      if (hopeless(degree_ + std::popcount(live) - 1)) return;
      if (prune_) {
        Mask covered = 0;
        for (Mask m : nonfaces) covered |= m;
        if ((live & ~covered) != 0) return;
      }
      auto [top, top_dim] = homology_top(live, nonfaces);
      if (top_dim == 0) return;
      i = top + 1;
      dim = top_dim;
    }
    const int value = degree_ + i;
    if (out_ != nullptr) {
      if (value == target_) out_->push_back(Found{value, *current_a_, VertexSet(face), i, dim});
      return;
    }
    if (value > best_.value) {
      best_ = Found{value, *current_a_, VertexSet(face), i, dim};
      if (shared_ != nullptr) {
        int seen = shared_->load(std::memory_order_relaxed);
        while (seen < value && !shared_->compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
        }
      }
    }
  }

  std::pair<int, std::size_t> homology_top(Mask live, const std::vector<Mask>& nonfaces) {
    key_.assign(1, live);
    key_.insert(key_.end(), nonfaces.begin(), nonfaces.end());
    auto it = cache_.find(key_);
    if (it != cache_.end()) return it->second;
    std::vector<VertexSet> sets;
    sets.reserve(nonfaces.size());
    for (Mask m : nonfaces) sets.emplace_back(m);
    HomologyDims h = sr_homology(VertexSet(live), sets, field_, prune_);
    std::pair<int, std::size_t> result{-2, 0};
    if (auto top = h.top_degree()) result = {*top, h.at(*top)};
    cache_.emplace(key_, result);
    return result;
  }

  const PackedIdeal& ideal_;
  FieldSpec field_;
  bool prune_;
  std::atomic<int>* shared_;
  Found best_;
  int target_ = -1;
  std::vector<Found>* out_ = nullptr;
  const ExponentVec* current_a_ = nullptr;
  int degree_ = 0;
  Mask vertices_ = 0;
  std::vector<Mask> big_;
  std::vector<Mask> link_;
  std::vector<std::vector<Mask>> through_;
  std::vector<int> order_;
  std::vector<Mask> key_;
  std::unordered_map<std::vector<Mask>, std::pair<int, std::size_t>, KeyHash> cache_;
};

unsigned worker_count(const RegOptions& options, std::uint64_t work) {
  unsigned t = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(work, 1)));
}

}  // namespace

RegResult takayama_regularity(const MonomialIdeal& ideal, const FieldSpec& field, const RegOptions& options) {
  if (!ideal.is_proper_nonzero()) throw InputError("regularity needs a nonzero proper ideal");
  const GammaBox box(ideal, options.full_box);
  const PackedIdeal packed(ideal);
  const unsigned workers = worker_count(options, box.cardinality());
  std::atomic<int> shared{-1};
  std::vector<Sweep> sweeps;
  sweeps.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) sweeps.emplace_back(packed, field, options.prune, &shared);
  auto run = [&](unsigned w) {
    for (std::uint64_t k = w; k < box.cardinality(); k += workers) sweeps[w].visit(box.at(k));
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  const Found* winner = nullptr;
  for (const auto& s : sweeps) {
    const Found& f = s.best();
    if (f.value < 0) continue;
    if (winner == nullptr || f.value > winner->value || (f.value == winner->value && lex_before(f, *winner)))
      winner = &f;
  }
  if (winner == nullptr) throw std::logic_error("regularity sweep found no witness");
  RegResult result;
  result.reg = winner->value + 1;
  result.certificate = RegCertificate{winner->a, winner->i, winner->face, winner->hom_dim, field};
  return result;
}

std::vector<RegCertificate> extremal_exponents(const MonomialIdeal& ideal, const FieldSpec& field,
                                               const RegOptions& options) {
  const int target = takayama_regularity(ideal, field, options).reg - 1;
  const GammaBox box(ideal, options.full_box);
  const PackedIdeal packed(ideal);
  Sweep sweep(packed, field, options.prune, nullptr);
  std::vector<Found> found;
  for (std::uint64_t k = 0; k < box.cardinality(); ++k) sweep.collect(box.at(k), target, &found);
  std::vector<RegCertificate> out;
  for (const auto& f : found) {
    const SimplicialComplex delta = degree_complex(ideal, f.a);
    for (int t : f.a.support()) {
      if (delta.vertices().contains(t) && is_cone(delta, t))
        throw std::logic_error("extremal degree complex is a cone over a vertex of supp a");
    }
    out.push_back(RegCertificate{f.a, f.i, f.face, f.hom_dim, field});
  }
  return out;
}

bool criterion_in_power_check(const Graph& g, int s, const ExponentVec& a, VertexSet face) {
  if (!is_independent(g, face)) throw InputError("criterion needs an independent set");
  if (g.edge_count() == 0) throw InputError("criterion needs a graph with edges");
  if (a.size() != static_cast<std::size_t>(g.vertex_count())) throw InputError("exponent length differs from the graph");
  const VertexSet open = open_neighborhood(g, face);
  const VertexSet closed = closed_neighborhood(g, face);
  int total = 0;
  ExponentVec rest(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    const int v = static_cast<int>(j);
    if (open.contains(v)) total += a[j];
    if (!closed.contains(v)) rest[j] = a[j];
  }
  return total + ord(edge_ideal(g), rest) >= s;
}

int mixed_sum_regularity(const std::vector<int>& regs_a, const std::vector<int>& regs_b, int s) {
  if (s < 1) throw InputError("mixed sum needs s >= 1");
  if (regs_a.size() < static_cast<std::size_t>(s) || regs_b.size() < static_cast<std::size_t>(s))
    throw InputError("mixed sum needs regularities of the first s powers");
  auto ra = [&](int k) { return regs_a[static_cast<std::size_t>(k - 1)]; };
  auto rb = [&](int k) { return regs_b[static_cast<std::size_t>(k - 1)]; };
  int best = std::numeric_limits<int>::min();
  for (int i = 1; i <= s - 1; ++i) best = std::max(best, ra(i) + rb(s - i));
  for (int j = 1; j <= s; ++j) best = std::max(best, ra(j) + rb(s - j + 1) - 1);
  return best;
}

}  // namespace edgereg
