// Brute-force reference implementations for tests. Nothing here calls the
// library's algorithms; only its value types cross the boundary.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "edgereg/exponent.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/monomial.hpp"
#include "edgereg/vertex_set.hpp"

namespace oracle {

using edgereg::ExponentVec;
using edgereg::Graph;
using edgereg::MonomialIdeal;
using edgereg::VertexSet;

// Exact rational with 128-bit parts; test inputs keep them small.
struct Fraction {
  __int128 num = 0;
  __int128 den = 1;

  Fraction() = default;
  Fraction(long long v) : num(v) {}  // NOLINT
  Fraction(__int128 n, __int128 d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num, b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
  }
  bool zero() const { return num == 0; }
  friend Fraction operator+(Fraction a, Fraction b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Fraction operator-(Fraction a, Fraction b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Fraction operator*(Fraction a, Fraction b) { return {a.num * b.num, a.den * b.den}; }
  friend Fraction operator/(Fraction a, Fraction b) { return {a.num * b.den, a.den * b.num}; }
  friend bool operator<=(Fraction a, Fraction b) { return a.num * b.den <= b.num * a.den; }
};

// Rank over Q (p = 0) or GF(p) by textbook Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<long long>> m, unsigned p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  if (p == 0) {
    std::vector<std::vector<Fraction>> f(rows, std::vector<Fraction>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) f[i][j] = Fraction(m[i][j]);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t piv = r;
      while (piv < rows && f[piv][c].zero()) ++piv;
      if (piv == rows) continue;
      std::swap(f[piv], f[r]);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || f[i][c].zero()) continue;
        Fraction factor = f[i][c] / f[r][c];
        for (std::size_t j = c; j < cols; ++j) f[i][j] = f[i][j] - factor * f[r][j];
      }
      ++r;
    }
    return r;
  }
  const long long P = p;
  auto md = [P](long long v) { return ((v % P) + P) % P; };
  auto inv = [&](long long a) {
    long long result = 1, e = P - 2, b = a;
    while (e > 0) {
      if (e & 1) result = result * b % P;
      b = b * b % P;
      e >>= 1;
    }
    return result;
  };
  for (auto& row : m)
    for (auto& v : row) v = md(v);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const long long iv = inv(m[r][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const long long factor = m[i][c] * iv % P;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = md(m[i][j] - factor * m[r][j]);
    }
    ++r;
  }
  return r;
}

// Exists c >= 0, sum c = 1, sum c_i b_i <= t? Vertex enumeration: a nonempty
// polytope has a vertex, and a vertex is cut out by m independent tight
// constraints, one of them sum c = 1.
inline bool convex_cover(const std::vector<std::vector<long long>>& points, const std::vector<long long>& t) {
  const std::size_t m = points.size(), n = t.size();
  // Inequalities: index k < m means c_k >= 0; k = m + j means row j <= t_j.
  const std::size_t total = m + n;
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> choose = [&](std::size_t from) -> bool {
    if (pick.size() + 1 == m) {
      std::vector<std::vector<Fraction>> a(m, std::vector<Fraction>(m + 1));
      for (std::size_t i = 0; i < m; ++i) a[0][i] = Fraction(1LL);
      a[0][m] = Fraction(1LL);
      for (std::size_t r = 0; r < pick.size(); ++r) {
        const std::size_t k = pick[r];
        if (k < m) {
          a[r + 1][k] = Fraction(1LL);
        } else {
          for (std::size_t i = 0; i < m; ++i) a[r + 1][i] = Fraction(points[i][k - m]);
          a[r + 1][m] = Fraction(t[k - m]);
        }
      }
      // Gauss-Jordan; skip singular systems.
      for (std::size_t c = 0; c < m; ++c) {
        std::size_t piv = c;
        while (piv < m && a[piv][c].zero()) ++piv;
        if (piv == m) return false;
        std::swap(a[piv], a[c]);
        for (std::size_t i = 0; i < m; ++i) {
          if (i == c || a[i][c].zero()) continue;
          Fraction f = a[i][c] / a[c][c];
          for (std::size_t j = c; j <= m; ++j) a[i][j] = a[i][j] - f * a[c][j];
        }
      }
      std::vector<Fraction> c(m);
      for (std::size_t i = 0; i < m; ++i) {
        c[i] = a[i][m] / a[i][i];
        if (!(Fraction(0LL) <= c[i])) return false;
      }
      for (std::size_t j = 0; j < n; ++j) {
        Fraction s(0LL);
        for (std::size_t i = 0; i < m; ++i) s = s + c[i] * Fraction(points[i][j]);
        if (!(s <= Fraction(t[j]))) return false;
      }
      return true;
    }
    for (std::size_t k = from; k < total; ++k) {
      pick.push_back(k);
      if (choose(k + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return choose(0);
}

inline bool divides(const ExponentVec& g, const ExponentVec& f) {
  for (std::size_t j = 0; j < f.size(); ++j)
    if (g[j] > f[j]) return false;
  return true;
}

inline bool member(const std::vector<ExponentVec>& gens, const ExponentVec& f) {
  return std::any_of(gens.begin(), gens.end(), [&](const ExponentVec& g) { return divides(g, f); });
}

inline bool member(const MonomialIdeal& ideal, const ExponentVec& f) { return member(ideal.generators(), f); }

// All products of s generators, not minimalized.
inline std::vector<ExponentVec> naive_power(const std::vector<ExponentVec>& gens, int s) {
  std::set<std::vector<int>> out;
  std::vector<int> acc(gens.empty() ? 0 : gens[0].size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      out.insert(acc);
      return;
    }
    for (std::size_t g = from; g < gens.size(); ++g) {
      for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += gens[g][j];
      rec(g, left - 1);
      for (std::size_t j = 0; j < acc.size(); ++j) acc[j] -= gens[g][j];
    }
  };
  rec(0, s);
  std::vector<ExponentVec> v;
  for (const auto& e : out) v.emplace_back(e);
  return v;
}

// Inclusion-minimal elements of a family of monomials.
inline std::set<std::vector<int>> minimal(const std::vector<ExponentVec>& gens) {
  std::set<std::vector<int>> out;
  for (const auto& f : gens) {
    bool redundant = false;
    for (const auto& g : gens) {
      if (g != f && divides(g, f)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.insert(f.entries());
  }
  return out;
}

inline std::set<std::vector<int>> as_set(const MonomialIdeal& ideal) {
  std::set<std::vector<int>> out;
  for (const auto& g : ideal.generators()) out.insert(g.entries());
  return out;
}

inline ExponentVec indicator(std::size_t n, unsigned mask) {
  ExponentVec e(n);
  for (std::size_t j = 0; j < n; ++j)
    if ((mask >> j) & 1U) e[j] = 1;
  return e;
}

// x_F in sqrt(I : x^a) by definition: x_F^k x^a in I for k = max exponent.
inline bool in_radical_colon(const MonomialIdeal& ideal, const ExponentVec& a, unsigned mask) {
  int k = 1;
  for (const auto& g : ideal.generators())
    for (int e : g.entries()) k = std::max(k, e);
  ExponentVec f = a;
  for (std::size_t j = 0; j < a.size(); ++j)
    if ((mask >> j) & 1U) f[j] += k;
  return member(ideal, f);
}

// Minimal squarefree generators of sqrt(I : x^a), as bit masks.
inline std::set<unsigned> radical_colon_masks(const MonomialIdeal& ideal, const ExponentVec& a) {
  const std::size_t n = a.size();
  std::vector<unsigned> in;
  for (unsigned m = 0; m < (1U << n); ++m)
    if (in_radical_colon(ideal, a, m)) in.push_back(m);
  std::set<unsigned> out;
  for (unsigned m : in) {
    bool minimal_mask = true;
    for (unsigned q : in)
      if (q != m && (q & ~m) == 0) minimal_mask = false;
    if (minimal_mask) out.insert(m);
  }
  return out;
}

// Faces of a complex given as a membership predicate on masks of [n].
struct Complex {
  std::size_t n = 0;
  std::vector<unsigned> faces;  // includes 0 unless void
};

inline Complex complex_from_nonfaces(std::size_t n, const std::set<unsigned>& nonfaces) {
  Complex c;
  c.n = n;
  for (unsigned m = 0; m < (1U << n); ++m) {
    bool face = true;
    for (unsigned q : nonfaces)
      if ((q & ~m) == 0) face = false;
    if (face) c.faces.push_back(m);
  }
  return c;
}

inline Complex link(const Complex& c, unsigned f) {
  Complex out;
  out.n = c.n;
  std::set<unsigned> all(c.faces.begin(), c.faces.end());
  for (unsigned g : c.faces)
    if ((g & f) == 0 && all.count(g | f)) out.faces.push_back(g);
  return out;
}

// dim H~_d over Q or GF(p) for d = -1 .. n-1 from dense boundary matrices.
inline std::vector<std::size_t> homology(const Complex& c, unsigned p) {
  std::vector<std::vector<unsigned>> by(c.n + 2);
  for (unsigned f : c.faces) by[static_cast<std::size_t>(__builtin_popcount(f))].push_back(f);
  std::vector<std::size_t> rk(c.n + 2, 0);  // rk[k]: boundary from size k to k-1
  for (std::size_t k = 1; k <= c.n; ++k) {
    if (by[k].empty() || by[k - 1].empty()) continue;
    std::vector<std::vector<long long>> m(by[k - 1].size(), std::vector<long long>(by[k].size(), 0));
    for (std::size_t col = 0; col < by[k].size(); ++col) {
      const unsigned f = by[k][col];
      long long sign = 1;
      for (std::size_t v = 0; v < c.n; ++v) {
        if (!((f >> v) & 1U)) continue;
        const unsigned g = f & ~(1U << v);
        const auto row = std::find(by[k - 1].begin(), by[k - 1].end(), g) - by[k - 1].begin();
        m[static_cast<std::size_t>(row)][col] = sign;
        sign = -sign;
      }
    }
    rk[k] = rank(m, p);
  }
  std::vector<std::size_t> out(c.n + 1, 0);
  for (std::size_t k = 0; k <= c.n; ++k) out[k] = by[k].size() - rk[k] - (k + 1 < rk.size() ? rk[k + 1] : 0);
  return out;  // out[k] is degree k - 1
}

// reg(S/I) by the definition: max |a| + i over a with a_j <= rho_j, faces F
// of Delta_a disjoint from supp a, H~_{i-1}(lk F) != 0.
inline int takayama(const MonomialIdeal& ideal, unsigned p) {
  const std::size_t n = ideal.ambient();
  std::vector<int> rho(n, 0);
  for (const auto& g : ideal.generators())
    for (std::size_t j = 0; j < n; ++j) rho[j] = std::max(rho[j], g[j]);
  int best = -1;
  ExponentVec a(n);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == n) {
      const Complex delta = complex_from_nonfaces(n, radical_colon_masks(ideal, a));
      unsigned supp = 0;
      for (std::size_t q = 0; q < n; ++q)
        if (a[q] > 0) supp |= 1U << q;
      for (unsigned f : delta.faces) {
        if (f & supp) continue;
        const auto h = homology(link(delta, f), p);
        for (std::size_t k = 0; k < h.size(); ++k)
          if (h[k] != 0) best = std::max(best, a.degree() + static_cast<int>(k));
      }
      return;
    }
    for (int e = 0; e <= rho[j]; ++e) {
      a[j] = e;
      rec(j + 1);
    }
    a[j] = 0;
  };
  rec(0);
  return best;
}

inline int induced_matching(const Graph& g) {
  const auto& edges = g.edges();
  int best = 0;
  const std::size_t m = edges.size();
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    std::vector<edgereg::Edge> chosen;
    for (std::size_t k = 0; k < m; ++k)
      if ((mask >> k) & 1UL) chosen.push_back(edges[k]);
    bool ok = true;
    for (std::size_t x = 0; x < chosen.size() && ok; ++x)
      for (std::size_t y = x + 1; y < chosen.size() && ok; ++y) {
        auto [a, b] = chosen[x];
        auto [c, d] = chosen[y];
        if (a == c || a == d || b == c || b == d || g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) ||
            g.adjacent(b, d))
          ok = false;
      }
    if (ok) best = std::max(best, static_cast<int>(chosen.size()));
  }
  return best;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Random monomial ideal with `count` generators of degree 1..max_degree.
inline MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, int count, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::vector<ExponentVec> gens;
  for (int k = 0; k < count; ++k) {
    ExponentVec e(n);
    const int d = deg(rng);
    for (int t = 0; t < d; ++t) ++e[var(rng)];
    gens.push_back(e);
  }
  return MonomialIdeal(n, gens);
}

inline MonomialIdeal random_squarefree(std::mt19937_64& rng, std::size_t n, int count) {
  std::uniform_int_distribution<unsigned> mask(1, (1U << n) - 1);
  std::vector<ExponentVec> gens;
  for (int k = 0; k < count; ++k) gens.push_back(indicator(n, mask(rng)));
  return MonomialIdeal(n, gens);
}

}  // namespace oracle
