#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "edgereg/vertex_set.hpp"

namespace edgereg {

/// Exponent vector a in N^n of the monomial x^a.
class ExponentVec {
 public:
  ExponentVec() = default;
  /// Zero vector of length n.
  explicit ExponentVec(std::size_t n) : entries_(n, 0) {}
  ExponentVec(std::initializer_list<int> entries);
  /// Throws InputError on negative entries.
  explicit ExponentVec(std::vector<int> entries);

  /// 0/1 vector of the squarefree monomial x_S.
  static ExponentVec indicator(std::size_t n, VertexSet support);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t j) const { return entries_[j]; }
  /// Caller keeps the entry nonnegative.
  int& operator[](std::size_t j) { return entries_[j]; }
  const std::vector<int>& entries() const { return entries_; }

  /// |a|
  int degree() const;
  VertexSet support() const;
  bool is_zero() const;
  bool is_squarefree() const;
  /// x^b | x^a, i.e. b <= a componentwise.
  bool divides(const ExponentVec& multiple) const;

  friend ExponentVec operator+(const ExponentVec& a, const ExponentVec& b);
  friend bool operator==(const ExponentVec&, const ExponentVec&) = default;
  friend auto operator<=>(const ExponentVec&, const ExponentVec&) = default;

 private:
  std::vector<int> entries_;
};

ExponentVec lcm(const ExponentVec& a, const ExponentVec& b);
ExponentVec gcd(const ExponentVec& a, const ExponentVec& b);
/// Exponent of f / gcd(f, x^a).
ExponentVec colon_quotient(const ExponentVec& f, const ExponentVec& a);
/// Exponent of sqrt(x^a).
ExponentVec radical(const ExponentVec& a);

/// Graded lex: lower degree first; within a degree the lex-larger vector
/// (x_1 > x_2 > ...) first. This is the storage order of ideal generators.
bool grlex_before(const ExponentVec& a, const ExponentVec& b);

/// Throws InputError if a.size() != b.size().
void require_same_length(const ExponentVec& a, const ExponentVec& b, const char* what);

}  // namespace edgereg
