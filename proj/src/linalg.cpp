#include "edgereg/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "edgereg/error.hpp"

namespace edgereg {

ExactMatrix ExactMatrix::from_integers(const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = rows[r][c];
  }
  return m;
}

void ExactMatrix::set(std::size_t r, std::size_t c, mpq_class v) {
  v.canonicalize();
  data_[r * cols_ + c] = std::move(v);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

namespace {

struct RationalOps {
  using Value = mpq_class;
  bool is_zero(const Value& v) const { return sgn(v) == 0; }
  // a - f * b
  Value sub_mul(const Value& a, const Value& f, const Value& b) const { return a - f * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
};

struct ModOps {
  using Value = std::uint32_t;
  ModP mod;
  bool is_zero(Value v) const { return v == 0; }
  Value sub_mul(Value a, Value f, Value b) const { return mod.sub(a, mod.mul(f, b)); }
  Value div(Value a, Value b) const { return mod.mul(a, mod.inv(b)); }
};

template <class Ops>
std::size_t dense_rank(std::vector<std::vector<typename Ops::Value>> m, const Ops& ops) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && ops.is_zero(m[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (ops.is_zero(m[r][c])) continue;
      auto f = ops.div(m[r][c], m[rank][c]);
      for (std::size_t k = c; k < cols; ++k) m[r][k] = ops.sub_mul(m[r][k], f, m[rank][k]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const ExactMatrix& m, const FieldSpec& field) {
  if (field.is_rational()) {
    std::vector<std::vector<mpq_class>> rows(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
    return dense_rank(std::move(rows), RationalOps{});
  }
  const ModP mod(field.characteristic());
  const mpz_class p = field.characteristic();
  std::vector<std::vector<std::uint32_t>> rows(m.rows(), std::vector<std::uint32_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& v = m(r, c);
      mpz_class num = v.get_num() % p;
      mpz_class den = v.get_den() % p;
      if (den == 0) throw InputError("matrix entry has denominator divisible by " + field.name());
      if (num < 0) num += p;
      auto n = static_cast<std::uint32_t>(num.get_ui());
      auto d = static_cast<std::uint32_t>(den.get_ui());
      rows[r][c] = mod.mul(n, mod.inv(d));
    }
  }
  return dense_rank(std::move(rows), ModOps{mod});
}

void SparseIntMatrix::set_column(std::size_t c, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (const auto& [row, value] : entries) {
    if (row >= rows_) throw InputError("sparse matrix row out of range");
    if (!merged.empty() && merged.back().first == row) {
      merged.back().second += value;
    } else {
      merged.emplace_back(row, value);
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
  columns_[c] = std::move(merged);
}

ExactMatrix SparseIntMatrix::to_dense() const {
  ExactMatrix m(rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [row, value] : columns_[c]) m.set(row, c, mpq_class(static_cast<long>(value)));
  return m;
}

namespace {

struct Overflow {};

// Fraction-free integer elimination in 64-bit words; throws Overflow.
struct CheckedIntArith {
  using Coef = std::int64_t;
  static Coef from(std::int64_t v) { return v; }
  static Coef mul(Coef a, Coef b) {
    Coef r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Coef sub(Coef a, Coef b) {
    Coef r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Coef gcd(Coef a, Coef b) { return std::gcd(a, b); }
  static bool is_zero(Coef a) { return a == 0; }
  static Coef div_exact(Coef a, Coef b) { return a / b; }
};

struct BigIntArith {
  using Coef = mpz_class;
  static Coef from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
  static Coef mul(const Coef& a, const Coef& b) { return a * b; }
  static Coef sub(const Coef& a, const Coef& b) { return a - b; }
  static Coef gcd(const Coef& a, const Coef& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static bool is_zero(const Coef& a) { return sgn(a) == 0; }
  static Coef div_exact(const Coef& a, const Coef& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

template <class Arith>
struct IntegerEliminator {
  using Coef = typename Arith::Coef;
  using Column = std::vector<std::pair<std::uint32_t, Coef>>;

  static Column convert(const std::vector<SparseIntMatrix::Entry>& col) {
    Column out;
    out.reserve(col.size());
    for (const auto& [row, value] : col) out.emplace_back(row, Arith::from(value));
    return out;
  }

  // col := (p/g) col - (c/g) pivot, then divide out the content.
  static Column eliminate(const Column& col, const Column& pivot) {
    const Coef& c = col.back().second;
    const Coef& p = pivot.back().second;
    Coef g = Arith::gcd(c, p);
    Coef fc = Arith::div_exact(p, g);
    Coef fp = Arith::div_exact(c, g);
    Column out;
    out.reserve(col.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < col.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
        out.emplace_back(col[i].first, Arith::mul(fc, col[i].second));
        ++i;
      } else if (i == col.size() || pivot[j].first < col[i].first) {
        out.emplace_back(pivot[j].first, Arith::sub(Arith::from(0), Arith::mul(fp, pivot[j].second)));
        ++j;
      } else {
        Coef v = Arith::sub(Arith::mul(fc, col[i].second), Arith::mul(fp, pivot[j].second));
        if (!Arith::is_zero(v)) out.emplace_back(col[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    if (!out.empty()) {
      Coef content = out.front().second;
      for (const auto& e : out) content = Arith::gcd(content, e.second);
      if (content != Arith::from(1) && content != Arith::from(-1)) {
        for (auto& e : out) e.second = Arith::div_exact(e.second, content);
      }
    }
    return out;
  }
};

struct ModEliminator {
  using Column = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  ModP mod;

  Column convert(const std::vector<SparseIntMatrix::Entry>& col) const {
    Column out;
    out.reserve(col.size());
    for (const auto& [row, value] : col) {
      std::uint32_t r = mod.reduce(value);
      if (r != 0) out.emplace_back(row, r);
    }
    return out;
  }

  Column eliminate(const Column& col, const Column& pivot) const {
    std::uint32_t f = mod.mul(col.back().second, mod.inv(pivot.back().second));
    Column out;
    out.reserve(col.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < col.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
        out.push_back(col[i++]);
      } else if (i == col.size() || pivot[j].first < col[i].first) {
        out.emplace_back(pivot[j].first, mod.sub(0, mod.mul(f, pivot[j].second)));
        ++j;
      } else {
        std::uint32_t v = mod.sub(col[i].second, mod.mul(f, pivot[j].second));
        if (v != 0) out.emplace_back(col[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }
};

template <class Eliminator>
std::vector<std::int64_t> reduce_with(const SparseIntMatrix& m, std::span<const bool> skip,
                                      const Eliminator& elim) {
  using Column = typename Eliminator::Column;
  std::vector<Column> reduced(m.cols());
  std::vector<std::int64_t> pivot_owner(m.rows(), -1);
  std::vector<std::int64_t> pivots(m.cols(), -1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!skip.empty() && skip[c]) continue;
    Column col = elim.convert(m.column(c));
    while (!col.empty()) {
      std::int64_t owner = pivot_owner[col.back().first];
      if (owner < 0) break;
      col = elim.eliminate(col, reduced[owner]);
    }
    if (col.empty()) continue;
    pivot_owner[col.back().first] = static_cast<std::int64_t>(c);
    pivots[c] = col.back().first;
    reduced[c] = std::move(col);
  }
  return pivots;
}

}  // namespace

std::vector<std::int64_t> reduce_columns(const SparseIntMatrix& m, const FieldSpec& field,
                                         std::span<const bool> skip) {
  if (!skip.empty() && skip.size() != m.cols()) throw InputError("skip mask length mismatch");
  if (!field.is_rational()) return reduce_with(m, skip, ModEliminator{ModP(field.characteristic())});
  try {
    return reduce_with(m, skip, IntegerEliminator<CheckedIntArith>{});
  } catch (const Overflow&) {
    return reduce_with(m, skip, IntegerEliminator<BigIntArith>{});
  }
}

std::size_t rank(const SparseIntMatrix& m, const FieldSpec& field) {
  auto pivots = reduce_columns(m, field);
  return static_cast<std::size_t>(std::count_if(pivots.begin(), pivots.end(), [](auto p) { return p >= 0; }));
}

}  // namespace edgereg
