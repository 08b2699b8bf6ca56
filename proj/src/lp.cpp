#include "edgereg/lp.hpp"

#include <vector>

#include <gmpxx.h>

#include "edgereg/error.hpp"

namespace edgereg {

namespace {

// Dense phase-one tableau: rows are constraints in equality form with a
// nonnegative right-hand side, `basis[r]` is the basic column of row r.
class Tableau {
 public:
  Tableau(std::vector<std::vector<mpq_class>> rows, std::vector<mpq_class> rhs,
          std::vector<std::size_t> basis, std::vector<mpq_class> cost)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)), cost_(std::move(cost)) {
    // Price out the basic columns so the cost row holds reduced costs.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      mpq_class f = cost_[basis_[r]];
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < cost_.size(); ++c) cost_[c] -= f * rows_[r][c];
      objective_ -= f * rhs_[r];
    }
  }

  // Minimizes the cost; Bland's rule (lowest index enters, lowest basic
  // index leaves among ratio ties) guarantees termination.
  void minimize() {
    for (;;) {
      std::size_t entering = cost_.size();
      for (std::size_t c = 0; c < cost_.size(); ++c) {
        if (sgn(cost_[c]) < 0) {
          entering = c;
          break;
        }
      }
      if (entering == cost_.size()) return;

      std::size_t leaving = rows_.size();
      mpq_class best_ratio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (sgn(rows_[r][entering]) <= 0) continue;
        mpq_class ratio = rhs_[r] / rows_[r][entering];
        if (leaving == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      // Phase one is bounded below by zero, so a leaving row always exists.
      pivot(leaving, entering);
    }
  }

  // Value of the minimized cost, i.e. -(objective offset).
  mpq_class value() const { return -objective_; }

 private:
  void pivot(std::size_t row, std::size_t col) {
    mpq_class p = rows_[row][col];
    for (auto& v : rows_[row]) v /= p;
    rhs_[row] /= p;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r == row || sgn(rows_[r][col]) == 0) continue;
      mpq_class f = rows_[r][col];
      for (std::size_t c = 0; c < cost_.size(); ++c) rows_[r][c] -= f * rows_[row][c];
      rhs_[r] -= f * rhs_[row];
    }
    mpq_class f = cost_[col];
    if (sgn(f) != 0) {
      for (std::size_t c = 0; c < cost_.size(); ++c) cost_[c] -= f * rows_[row][c];
      objective_ -= f * rhs_[row];
    }
    basis_[row] = col;
  }

  std::vector<std::vector<mpq_class>> rows_;
  std::vector<mpq_class> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<mpq_class> cost_;
  mpq_class objective_ = 0;
};

}  // namespace

bool lp_feasible_convex_cover(std::span<const ExponentVec> points, const ExponentVec& target) {
  if (points.empty()) throw InputError("convex cover needs at least one point");
  for (const auto& p : points) require_same_length(p, target, "convex cover");

  // A point with b_j > 0 where target_j = 0 can only carry zero weight.
  const VertexSet support = target.support();
  std::vector<const ExponentVec*> usable;
  for (const auto& p : points) {
    if (p.support().is_subset_of(support)) usable.push_back(&p);
  }
  if (usable.empty()) return false;

  // Columns: weights c_i, slacks for each coordinate in the support, one
  // artificial on the convexity row. Slacks start basic on their rows.
  const std::vector<int> coords = support.to_vector();
  const std::size_t m = usable.size();
  const std::size_t k = coords.size();
  const std::size_t columns = m + k + 1;
  std::vector<std::vector<mpq_class>> rows(k + 1, std::vector<mpq_class>(columns));
  std::vector<mpq_class> rhs(k + 1);
  std::vector<std::size_t> basis(k + 1);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t i = 0; i < m; ++i) rows[r][i] = (*usable[i])[coords[r]];
    rows[r][m + r] = 1;
    rhs[r] = target[coords[r]];
    basis[r] = m + r;
  }
  for (std::size_t i = 0; i < m; ++i) rows[k][i] = 1;
  rows[k][m + k] = 1;
  rhs[k] = 1;
  basis[k] = m + k;

  std::vector<mpq_class> cost(columns);
  cost[m + k] = 1;
  Tableau tableau(std::move(rows), std::move(rhs), std::move(basis), std::move(cost));
  tableau.minimize();
  return sgn(tableau.value()) == 0;
}

}  // namespace edgereg
