// Exact integer matrix algebra: Smith normal form, integer kernels,
// cokernel invariants, exterior powers, and lattice arithmetic built on them.
//
// All decompositions are deterministic: the Smith pivot is always the
// minimum-absolute-value nonzero entry of the trailing submatrix, ties broken
// by smallest (row, col).
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "smalehom/integer.hpp"

namespace smalehom {

// U * A * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ... | d_r,
// trailing zeros last. `factors` is the full diagonal of S (zeros included).
// The inverses of U and V are tracked because several consumers need the
// adapted basis itself (columns of u_inverse) and not just the coordinates.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
  IntMatrix u_inverse;
  IntMatrix v_inverse;
  std::vector<Integer> factors;

  Index rank() const {
    Index r = 0;
    while (r < static_cast<Index>(factors.size()) && factors[r] != 0) ++r;
    return r;
  }
};

inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  const Index mn = std::min(rows, cols);

  SmithDecomposition d;
  d.s = a;
  d.u = IntMatrix::Identity(rows, rows);
  d.u_inverse = IntMatrix::Identity(rows, rows);
  d.v = IntMatrix::Identity(cols, cols);
  d.v_inverse = IntMatrix::Identity(cols, cols);
  IntMatrix& s = d.s;

  for (Index t = 0; t < mn; ++t) {
    for (;;) {
      // Pivot: smallest |entry| != 0 in s[t.., t..], ties by (row, col).
      Index pi = -1, pj = -1;
      Integer best;
      for (Index i = t; i < rows; ++i) {
        for (Index j = t; j < cols; ++j) {
          if (s(i, j) == 0) continue;
          Integer mag = abs(s(i, j));
          if (pi < 0 || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) {
        t = mn;  // trailing submatrix is zero
        break;
      }
      if (pi != t) {
        s.row(t).swap(s.row(pi));
        d.u.row(t).swap(d.u.row(pi));
        d.u_inverse.col(t).swap(d.u_inverse.col(pi));
      }
      if (pj != t) {
        s.col(t).swap(s.col(pj));
        d.v.col(t).swap(d.v.col(pj));
        d.v_inverse.row(t).swap(d.v_inverse.row(pj));
      }

      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = s(i, t) / s(t, t);
        if (q != 0) {
          s.row(i) -= q * s.row(t);
          d.u.row(i) -= q * d.u.row(t);
          d.u_inverse.col(t) += q * d.u_inverse.col(i);
        }
        if (s(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = s(t, j) / s(t, t);
        if (q != 0) {
          s.col(j) -= q * s.col(t);
          d.v.col(j) -= q * d.v.col(t);
          d.v_inverse.row(t) += q * d.v_inverse.row(j);
        }
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot row/column are clear; enforce the divisibility chain.
      bool fixed = false;
      for (Index i = t + 1; i < rows && !fixed; ++i) {
        for (Index j = t + 1; j < cols && !fixed; ++j) {
          if (s(i, j) % s(t, t) != 0) {
            s.row(t) += s.row(i);
            d.u.row(t) += d.u.row(i);
            d.u_inverse.col(i) -= d.u_inverse.col(t);
            fixed = true;
          }
        }
      }
      if (fixed) continue;

      if (s(t, t) < 0) {
        s.row(t) = -s.row(t);
        d.u.row(t) = -d.u.row(t);
        d.u_inverse.col(t) = -d.u_inverse.col(t);
      }
      break;
    }
  }

  d.factors.resize(static_cast<std::size_t>(mn));
  for (Index i = 0; i < mn; ++i) d.factors[static_cast<std::size_t>(i)] = s(i, i);
  return d;
}

inline Index rank_of(const IntMatrix& a) { return smith_normal_form(a).rank(); }

// Basis of the full integer null space {v : A v = 0}. The basis is a block
// of columns of the unimodular V, hence primitive: the span is saturated.
inline IntMatrix kernel_basis(const IntMatrix& a) {
  SmithDecomposition d = smith_normal_form(a);
  Index r = d.rank();
  return d.v.rightCols(a.cols() - r);
}

struct GroupInvariants {
  Index free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors >= 2, divisibility order

  bool operator==(const GroupInvariants& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  std::string to_string() const {
    if (is_trivial()) return "0";
    std::string out;
    if (free_rank == 1) out = "Z";
    if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
    for (const Integer& t : torsion) {
      if (!out.empty()) out += " ⊕ ";
      out += "Z/" + t.get_str();
    }
    return out;
  }
};

// Invariants of Z^rows / A Z^cols.
inline GroupInvariants cokernel_invariants(const IntMatrix& a) {
  SmithDecomposition d = smith_normal_form(a);
  GroupInvariants inv;
  inv.free_rank = a.rows() - d.rank();
  for (const Integer& f : d.factors)
    if (f >= 2) inv.torsion.push_back(f);
  return inv;
}

// Fraction-free (Bareiss) determinant; empty matrix has determinant 1.
inline Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant: matrix not square");
  const Index n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index piv = -1;
      for (Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      m.row(k).swap(m.row(piv));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign < 0 ? Integer(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

// Lexicographically ordered k-subsets of {0, ..., n-1}.
inline std::vector<std::vector<Index>> k_subsets(Index n, Index k) {
  std::vector<std::vector<Index>> out;
  if (k < 0 || k > n) return out;
  std::vector<Index> cur(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(cur);
    Index i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// Matrix of k x k minors indexed by lex-ordered k-subsets of rows/columns.
// Functorial: ext^k(AB) = ext^k(A) ext^k(B).
inline IntMatrix exterior_power(const IntMatrix& a, Index k) {
  if (a.rows() != a.cols())
    throw DimensionError("exterior_power: matrix not square");
  const Index n = a.rows();
  if (k < 0 || k > n)
    throw DimensionError("exterior_power: k out of range [0, n]");
  const auto subsets = k_subsets(n, k);
  const Index m = static_cast<Index>(subsets.size());
  IntMatrix out(m, m);
  IntMatrix minor(k, k);
  for (Index r = 0; r < m; ++r)
    for (Index c = 0; c < m; ++c) {
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
          minor(i, j) = a(subsets[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)],
                          subsets[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)]);
      out(r, c) = determinant(minor);
    }
  return out;
}

// Solve A X = B over the integers; free coordinates are set to zero, so the
// solution is deterministic (and unique when A has full column rank).
inline bool try_solve_exact(const IntMatrix& a, const IntMatrix& b, IntMatrix& x) {
  if (a.rows() != b.rows()) throw DimensionError("solve: row count mismatch");
  SmithDecomposition d = smith_normal_form(a);
  const Index r = d.rank();
  IntMatrix c = d.u * b;
  IntMatrix y = IntMatrix::Zero(a.cols(), b.cols());
  for (Index col = 0; col < b.cols(); ++col) {
    for (Index i = 0; i < r; ++i) {
      if (c(i, col) % d.s(i, i) != 0) return false;
      y(i, col) = c(i, col) / d.s(i, i);
    }
    for (Index i = r; i < a.rows(); ++i)
      if (c(i, col) != 0) return false;
  }
  x = d.v * y;
  return true;
}

inline IntMatrix solve_exact(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix x;
  if (!try_solve_exact(a, b, x))
    throw Error("solve_exact: system has no integer solution");
  return x;
}

// Does the column lattice of A contain every column of B?
inline bool lattice_contains(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix x;
  return try_solve_exact(a, b, x);
}

inline bool lattices_equal(const IntMatrix& a, const IntMatrix& b) {
  return lattice_contains(a, b) && lattice_contains(b, a);
}

// Basis of the column lattice of A: the first rank(A) columns of A*V are
// d_i * (U^-1 e_i), which are independent and generate the image.
inline IntMatrix image_lattice_basis(const IntMatrix& a) {
  SmithDecomposition d = smith_normal_form(a);
  IntMatrix av = a * d.v;
  return av.leftCols(d.rank());
}

// Basis of the saturation of the column lattice of A (the smallest direct
// summand of Z^rows containing it).
inline IntMatrix saturation_basis(const IntMatrix& a) {
  SmithDecomposition d = smith_normal_form(a);
  return d.u_inverse.leftCols(d.rank());
}

}  // namespace smalehom
