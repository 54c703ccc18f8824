#pragma once

// Exact integer linear algebra over Eigen dense matrices.
//
// Everything here is templated on the scalar type. BigInt is the default for
// anything user-facing; builtin integers are only safe when the caller has
// bounded the entry growth (see randgen).

#include "metab/errors.hpp"
#include "metab/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace metab {

enum class OpKind {
  swap_rows,
  swap_cols,
  negate_row,
  negate_col,
  add_row_multiple,
  add_col_multiple,
};

inline bool is_row_kind(OpKind k) {
  return k == OpKind::swap_rows || k == OpKind::negate_row || k == OpKind::add_row_multiple;
}

inline const char* to_string(OpKind k) {
  switch (k) {
    case OpKind::swap_rows: return "swap_rows";
    case OpKind::swap_cols: return "swap_cols";
    case OpKind::negate_row: return "negate_row";
    case OpKind::negate_col: return "negate_col";
    case OpKind::add_row_multiple: return "add_row_multiple";
    case OpKind::add_col_multiple: return "add_col_multiple";
  }
  return "?";
}

inline std::optional<OpKind> op_kind_from_string(const std::string& s) {
  for (OpKind k : {OpKind::swap_rows, OpKind::swap_cols, OpKind::negate_row, OpKind::negate_col,
                   OpKind::add_row_multiple, OpKind::add_col_multiple}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

/// One elementary row or column operation.
///
///   swap_*:          exchange lines `target` and `source`
///   negate_*:        line `target` *= -1 (`source` unused)
///   add_*_multiple:  line `target` += multiplier * line `source`
template <typename Scalar>
struct ElementaryOp {
  OpKind kind = OpKind::swap_rows;
  Index target = 0;
  Index source = 0;
  Scalar multiplier = 0;

  bool is_row() const { return is_row_kind(kind); }
  friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

template <typename Scalar>
void apply_op(Matrix<Scalar>& m, const ElementaryOp<Scalar>& op) {
  switch (op.kind) {
    case OpKind::swap_rows: m.row(op.target).swap(m.row(op.source)); break;
    case OpKind::swap_cols: m.col(op.target).swap(m.col(op.source)); break;
    case OpKind::negate_row: m.row(op.target) = -m.row(op.target); break;
    case OpKind::negate_col: m.col(op.target) = -m.col(op.target); break;
    case OpKind::add_row_multiple:
      for (Index c = 0; c < m.cols(); ++c) m(op.target, c) += op.multiplier * m(op.source, c);
      break;
    case OpKind::add_col_multiple:
      for (Index r = 0; r < m.rows(); ++r) m(r, op.target) += op.multiplier * m(r, op.source);
      break;
  }
}

/// U * M * V = D with U, V unimodular and D in Smith normal form.
template <typename Scalar>
struct SmithDecomposition {
  Matrix<Scalar> U;
  Matrix<Scalar> D;
  Matrix<Scalar> V;
  std::vector<Scalar> invariant_factors;  // d_1 | d_2 | ... , all > 0
  std::vector<ElementaryOp<Scalar>> op_log;

  Index rank() const { return static_cast<Index>(invariant_factors.size()); }
};

namespace detail {

// Fraction-free (Bareiss) forward elimination in place. Returns the rank and
// the sign flips from row swaps; for square full-rank input the determinant is
// sign * a(n-1, n-1).
template <typename Scalar>
std::pair<Index, int> bareiss(Matrix<Scalar>& a) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  Scalar prev = 1;
  Index r = 0;
  int sign = 1;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      a.row(pivot).swap(a.row(r));
      sign = -sign;
    }
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) {
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return {r, sign};
}

template <typename Scalar>
bool divides(const Scalar& a, const Scalar& b) {
  return a == 0 ? b == 0 : b % a == 0;
}

}  // namespace detail

/// Rank over the rationals, by fraction-free elimination.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  Matrix<typename Derived::Scalar> a = m;
  return detail::bareiss(a).first;
}

/// Exact determinant of a square matrix.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  Matrix<Scalar> a = m;
  auto [r, sign] = detail::bareiss(a);
  if (r < a.rows()) return Scalar(0);
  return sign > 0 ? Scalar(a(a.rows() - 1, a.cols() - 1)) : Scalar(-a(a.rows() - 1, a.cols() - 1));
}

/// Smith normal form by elementary operations, recording every step.
///
/// Pivot rule: the nonzero entry of least absolute value in the active
/// submatrix, ties to the lowest (row, col). Once row and column of the pivot
/// are cleared, an entry not divisible by the pivot is folded into the pivot
/// row and elimination resumes. Diagonal entries end positive via negate_row.
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  SmithDecomposition<Scalar> s;
  s.D = m;
  const Index rows = s.D.rows();
  const Index cols = s.D.cols();
  s.U = Matrix<Scalar>::Identity(rows, rows);
  s.V = Matrix<Scalar>::Identity(cols, cols);
  Matrix<Scalar>& a = s.D;

  auto apply = [&](const ElementaryOp<Scalar>& op) {
    apply_op(a, op);
    apply_op(op.is_row() ? s.U : s.V, op);
    s.op_log.push_back(op);
  };

  for (Index t = 0; t < std::min(rows, cols); ++t) {
    bool done = false;
    bool any = true;
    while (!done) {
      // locate pivot
      std::optional<std::pair<Index, Index>> best;
      Scalar best_abs = 0;
      for (Index i = t; i < rows; ++i) {
        for (Index j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          Scalar v = abs_value(Scalar(a(i, j)));
          if (!best || v < best_abs) {
            best = {i, j};
            best_abs = v;
          }
        }
      }
      if (!best) {
        any = false;
        break;
      }
      auto [pi, pj] = *best;
      if (pi != t) apply({OpKind::swap_rows, t, pi, Scalar(0)});
      if (pj != t) apply({OpKind::swap_cols, t, pj, Scalar(0)});

      const Scalar pivot = a(t, t);
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Scalar q = Scalar(a(i, t)) / pivot;
        if (q != 0) apply({OpKind::add_row_multiple, i, t, Scalar(-q)});
        if (a(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Scalar q = Scalar(a(t, j)) / pivot;
        if (q != 0) apply({OpKind::add_col_multiple, j, t, Scalar(-q)});
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column are clear; enforce divisibility of the remainder.
      std::optional<Index> offending;
      for (Index i = t + 1; i < rows && !offending; ++i) {
        for (Index j = t + 1; j < cols; ++j) {
          if (!detail::divides(pivot, Scalar(a(i, j)))) {
            offending = i;
            break;
          }
        }
      }
      if (offending) {
        apply({OpKind::add_row_multiple, t, *offending, Scalar(1)});
        continue;
      }
      done = true;
    }
    if (!any) break;
    if (a(t, t) < 0) apply({OpKind::negate_row, t, t, Scalar(0)});
    s.invariant_factors.push_back(a(t, t));
  }
  return s;
}

/// D_k = gcd of all k x k minors for k = 1..min(rows, cols). Enumerates every
/// minor, so it refuses matrices whose smaller dimension exceeds `max_dim`.
template <typename Derived>
std::vector<typename Derived::Scalar> determinantal_divisors(const Eigen::MatrixBase<Derived>& m,
                                                             Index max_dim = 6) {
  using Scalar = typename Derived::Scalar;
  const Index rows = m.rows();
  const Index cols = m.cols();
  const Index kmax = std::min(rows, cols);
  if (kmax > max_dim) {
    throw LimitError("determinantal divisors: min dimension " + std::to_string(kmax) +
                     " exceeds limit " + std::to_string(max_dim));
  }
  std::vector<Scalar> out;
  for (Index k = 1; k <= kmax; ++k) {
    Scalar g = 0;
    std::vector<bool> row_mask(static_cast<std::size_t>(rows), false);
    std::fill(row_mask.begin(), row_mask.begin() + k, true);
    do {
      std::vector<bool> col_mask(static_cast<std::size_t>(cols), false);
      std::fill(col_mask.begin(), col_mask.begin() + k, true);
      do {
        Matrix<Scalar> minor(k, k);
        Index mi = 0;
        for (Index i = 0; i < rows; ++i) {
          if (!row_mask[static_cast<std::size_t>(i)]) continue;
          Index mj = 0;
          for (Index j = 0; j < cols; ++j) {
            if (col_mask[static_cast<std::size_t>(j)]) minor(mi, mj++) = m(i, j);
          }
          ++mi;
        }
        g = gcd_value(g, abs_value(determinant(minor)));
      } while (std::prev_permutation(col_mask.begin(), col_mask.end()));
    } while (std::prev_permutation(row_mask.begin(), row_mask.end()));
    out.push_back(g);
  }
  return out;
}

/// Checks every SmithDecomposition invariant against the source matrix:
/// U*M*V = D exactly, |det U| = |det V| = 1, D diagonal with d_i = D(i,i) > 0
/// for i < k and zero elsewhere, d_i | d_{i+1}, and replaying op_log on M
/// yields D.
template <typename Derived>
bool verify_decomposition(const Eigen::MatrixBase<Derived>& m,
                          const SmithDecomposition<typename Derived::Scalar>& s) {
  using Scalar = typename Derived::Scalar;
  const Index rows = m.rows();
  const Index cols = m.cols();
  if (s.U.rows() != rows || s.U.cols() != rows || s.V.rows() != cols || s.V.cols() != cols ||
      s.D.rows() != rows || s.D.cols() != cols) {
    return false;
  }
  const Matrix<Scalar> source = m;
  const Matrix<Scalar> product = (s.U * source).eval() * s.V;
  if (product != s.D) return false;
  if (abs_value(determinant(s.U)) != 1 || abs_value(determinant(s.V)) != 1) return false;

  const Index k = s.rank();
  if (k > std::min(rows, cols)) return false;
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      const bool on_diag = i == j && i < k;
      if (on_diag) {
        if (s.D(i, j) <= 0 || s.D(i, j) != s.invariant_factors[static_cast<std::size_t>(i)]) {
          return false;
        }
      } else if (s.D(i, j) != 0) {
        return false;
      }
    }
  }
  for (Index i = 0; i + 1 < k; ++i) {
    if (!detail::divides(s.invariant_factors[static_cast<std::size_t>(i)],
                         s.invariant_factors[static_cast<std::size_t>(i + 1)])) {
      return false;
    }
  }

  Matrix<Scalar> replay = source;
  for (const auto& op : s.op_log) {
    const Index bound = op.is_row() ? rows : cols;
    if (op.target < 0 || op.target >= bound || op.source < 0 || op.source >= bound) return false;
    apply_op(replay, op);
  }
  return replay == s.D;
}

}  // namespace metab
