// Independent reference computations used to freeze expected values.
// Everything here is brute-force dense linear algebra over F_p on
// explicit exponent vectors; none of it touches the Gröbner engine.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "condlab/ring.hpp"

namespace oracle {

using condlab::Coeff;
using condlab::Polynomial;
using condlab::RingPtr;
using Row = std::vector<std::uint32_t>;
using Exps = std::vector<int>;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

// Row-reduces in place; returns the rank.
inline std::size_t rank(std::vector<Row> m, std::uint64_t p) {
  if (m.empty()) return 0;
  std::size_t cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    std::uint64_t inv = invmod(m[r][c], p);
    for (auto& x : m[r]) x = static_cast<std::uint32_t>(mulmod(x, inv, p));
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::uint64_t f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        m[i][k] = static_cast<std::uint32_t>((m[i][k] + p - mulmod(f, m[r][k], p)) % p);
    }
    ++r;
  }
  return r;
}

// Kernel basis of the linear map x -> M x (M has `cols` columns).
inline std::vector<Row> nullspace(std::vector<Row> m, std::size_t cols, std::uint64_t p) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    std::uint64_t inv = invmod(m[r][c], p);
    for (auto& x : m[r]) x = static_cast<std::uint32_t>(mulmod(x, inv, p));
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::uint64_t f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        m[i][k] = static_cast<std::uint32_t>((m[i][k] + p - mulmod(f, m[r][k], p)) % p);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = static_cast<std::uint32_t>((p - m[i][free]) % p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Exponent vectors of a given total degree (standard grading).
inline std::vector<Exps> monomials(int n, int degree) {
  std::vector<Exps> out;
  if (degree < 0) return out;
  Exps e(n, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Coefficient vector of a homogeneous polynomial in the monomial basis of its degree.
inline Row coefficients(const Polynomial& f, const std::vector<Exps>& basis) {
  std::map<Exps, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  Row row(basis.size(), 0);
  int n = f.ring()->num_vars();
  for (const auto& t : f.terms()) {
    auto it = index.find(t.m.exponents(n));
    if (it == index.end()) throw std::logic_error("oracle: term outside basis");
    row[it->second] = t.c;
  }
  return row;
}

inline Polynomial monomial(const RingPtr& ring, const Exps& e) {
  return Polynomial::monomial(ring, condlab::Monomial::from_exponents(e));
}

// Spanning rows of I_e for I generated by homogeneous gens.
inline std::vector<Row> ideal_degree_span(const std::vector<Polynomial>& gens, int e) {
  const RingPtr& ring = gens.front().ring();
  int n = ring->num_vars();
  auto basis = monomials(n, e);
  std::vector<Row> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int dg = *g.homogeneous_degree();
    for (const auto& m : monomials(n, e - dg)) rows.push_back(coefficients(monomial(ring, m) * g, basis));
  }
  if (rows.empty()) rows.push_back(Row(basis.size(), 0));
  return rows;
}

// dim_K (S/I)_e
inline std::int64_t hilbert_function(const std::vector<Polynomial>& gens, int e) {
  const RingPtr& ring = gens.front().ring();
  auto rows = ideal_degree_span(gens, e);
  return static_cast<std::int64_t>(monomials(ring->num_vars(), e).size()) -
         static_cast<std::int64_t>(rank(rows, ring->characteristic()));
}

inline bool in_ideal(const std::vector<Polynomial>& gens, const Polynomial& f) {
  if (f.is_zero()) return true;
  const RingPtr& ring = f.ring();
  int e = *f.homogeneous_degree();
  auto rows = ideal_degree_span(gens, e);
  std::size_t r0 = rank(rows, ring->characteristic());
  rows.push_back(coefficients(f, monomials(ring->num_vars(), e)));
  return rank(rows, ring->characteristic()) == r0;
}

// Affine representatives of projective points in P^2.
using Point = std::vector<Coeff>;

// Rank of the evaluation matrix of degree-e monomials at the points, with
// first derivatives too when `doubled` (conditions for vanishing to order 2).
inline std::size_t evaluation_rank(const RingPtr& ring, const std::vector<Point>& pts, int e, bool doubled) {
  auto basis = monomials(ring->num_vars(), e);
  std::uint64_t p = ring->characteristic();
  std::vector<Row> rows;
  auto eval = [&](const Exps& m, const Point& x, int dvar) -> std::uint32_t {
    std::uint64_t coef = 1;
    Exps mm = m;
    if (dvar >= 0) {
      if (mm[dvar] == 0) return 0;
      coef = static_cast<std::uint64_t>(mm[dvar]) % p;
      --mm[dvar];
    }
    std::uint64_t v = coef;
    for (std::size_t i = 0; i < mm.size(); ++i) v = v * powmod(x[i], mm[i], p) % p;
    return static_cast<std::uint32_t>(v);
  };
  for (const auto& x : pts) {
    int nconds = doubled ? ring->num_vars() : 0;
    for (int d = -1; d < nconds; ++d) {
      Row row;
      for (const auto& m : basis) row.push_back(eval(m, x, d));
      rows.push_back(std::move(row));
    }
  }
  return rank(rows, p);
}

// Rank of the degree-e forms vanishing (doubly) at the points, i.e. dim of
// the degree-e piece of the (symbolic square of the) point ideal.
inline std::int64_t forms_through(const RingPtr& ring, const std::vector<Point>& pts, int e, bool doubled) {
  return static_cast<std::int64_t>(monomials(ring->num_vars(), e).size()) -
         static_cast<std::int64_t>(evaluation_rank(ring, pts, e, doubled));
}

// Basis of the degree-e forms vanishing at the points (kernel of evaluation).
inline std::vector<Polynomial> forms_vanishing(const RingPtr& ring, const std::vector<Point>& pts, int e) {
  auto basis = monomials(ring->num_vars(), e);
  std::uint64_t p = ring->characteristic();
  std::vector<Row> rows;
  for (const auto& x : pts) {
    Row row;
    for (const auto& m : basis) {
      std::uint64_t v = 1;
      for (std::size_t i = 0; i < m.size(); ++i) v = v * powmod(x[i], m[i], p) % p;
      row.push_back(static_cast<std::uint32_t>(v));
    }
    rows.push_back(std::move(row));
  }
  std::vector<Polynomial> out;
  for (const auto& v : nullspace(rows, basis.size(), p)) {
    std::vector<condlab::Term> terms;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (v[k]) terms.push_back({condlab::Monomial::from_exponents(basis[k]), v[k]});
    out.push_back(Polynomial::from_terms(ring, terms));
  }
  return out;
}

// Monomial ideal colon (I : m) for monomial generators, computed by exponent arithmetic.
inline std::vector<Exps> monomial_colon(const std::vector<Exps>& gens, const Exps& m) {
  std::vector<Exps> out;
  for (const auto& g : gens) {
    Exps q(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) q[i] = std::max(0, g[i] - m[i]);
    out.push_back(q);
  }
  return out;
}

}  // namespace oracle
