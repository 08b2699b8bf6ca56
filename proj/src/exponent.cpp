#include "edgereg/exponent.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "edgereg/error.hpp"

namespace edgereg {

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw InputError("vertex " + std::to_string(v) + " out of range");
    insert(v);
  }
}

VertexSet VertexSet::from_vector(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw InputError("vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

std::vector<int> VertexSet::to_vector() const { return {begin(), end()}; }

bool lex_less(VertexSet a, VertexSet b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [s](VertexSet k) { return k.is_subset_of(s); });
    if (!redundant) kept.push_back(s);
  }
  return kept;
}

ExponentVec::ExponentVec(std::initializer_list<int> entries) : ExponentVec(std::vector<int>(entries)) {}

ExponentVec::ExponentVec(std::vector<int> entries) : entries_(std::move(entries)) {
  if (std::any_of(entries_.begin(), entries_.end(), [](int e) { return e < 0; })) {
    throw InputError("exponent vectors have nonnegative entries");
  }
}

ExponentVec ExponentVec::indicator(std::size_t n, VertexSet support) {
  ExponentVec a(n);
  for (int v : support) {
    if (static_cast<std::size_t>(v) >= n) throw InputError("indicator support exceeds ambient dimension");
    a.entries_[v] = 1;
  }
  return a;
}

int ExponentVec::degree() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

VertexSet ExponentVec::support() const {
  if (entries_.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw InputError("at most 64 variables are supported");
  }
  VertexSet s;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j] > 0) s.insert(static_cast<int>(j));
  }
  return s;
}

bool ExponentVec::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

bool ExponentVec::is_squarefree() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e <= 1; });
}

bool ExponentVec::divides(const ExponentVec& multiple) const {
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j] > multiple.entries_[j]) return false;
  }
  return true;
}

ExponentVec operator+(const ExponentVec& a, const ExponentVec& b) {
  require_same_length(a, b, "monomial product");
  ExponentVec out = a;
  for (std::size_t j = 0; j < a.size(); ++j) out.entries_[j] += b.entries_[j];
  return out;
}

ExponentVec lcm(const ExponentVec& a, const ExponentVec& b) {
  require_same_length(a, b, "lcm");
  ExponentVec out = a;
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = std::max(a[j], b[j]);
  return out;
}

ExponentVec gcd(const ExponentVec& a, const ExponentVec& b) {
  require_same_length(a, b, "gcd");
  ExponentVec out = a;
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = std::min(a[j], b[j]);
  return out;
}

ExponentVec colon_quotient(const ExponentVec& f, const ExponentVec& a) {
  require_same_length(f, a, "colon");
  ExponentVec out = f;
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = std::max(0, f[j] - a[j]);
  return out;
}

ExponentVec radical(const ExponentVec& a) {
  ExponentVec out = a;
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] > 0 ? 1 : 0;
  return out;
}

bool grlex_before(const ExponentVec& a, const ExponentVec& b) {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da < db;
  return a.entries() > b.entries();
}

void require_same_length(const ExponentVec& a, const ExponentVec& b, const char* what) {
  if (a.size() != b.size()) {
    throw InputError(std::string(what) + ": exponent vectors of lengths " + std::to_string(a.size()) +
                     " and " + std::to_string(b.size()));
  }
}

}  // namespace edgereg
