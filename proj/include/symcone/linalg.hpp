#pragma once

// Exact dense linear algebra over a field scalar (Rational in practice).
// Pivoting always takes the first nonzero entry, so results are
// reproducible bit for bit.

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "symcone/rational.hpp"

namespace symcone {

template <typename Scalar>
struct EchelonForm {
  MatrixX<Scalar> reduced;            // reduced row echelon form
  std::vector<Eigen::Index> pivots;   // pivot column of each nonzero row
};

template <typename Derived>
EchelonForm<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> m = input;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar f = m(r, col);
      m.row(r) -= f * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(rref(m).pivots.size());
}

/// Columns form a basis of {x : m x = 0}.
template <typename Derived>
MatrixX<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = rref(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (auto p : ech.pivots) is_pivot[static_cast<size_t>(p)] = true;
  MatrixX<Scalar> basis(n, n - static_cast<Eigen::Index>(ech.pivots.size()));
  basis.setZero();
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    basis(free, k) = 1;
    for (size_t r = 0; r < ech.pivots.size(); ++r)
      basis(ech.pivots[r], k) = -ech.reduced(static_cast<Eigen::Index>(r), free);
    ++k;
  }
  return basis;
}

/// Fraction-free (Bareiss) determinant.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw DomainError("determinant: matrix is not square");
  MatrixX<Scalar> m = input;
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      m.row(p).swap(m.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Solves a square nonsingular system exactly by Gaussian elimination.
template <typename DerivedA, typename DerivedB>
VectorX<typename DerivedA::Scalar> solve(const Eigen::MatrixBase<DerivedA>& a,
                                         const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw DomainError("solve: dimension mismatch");
  MatrixX<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto ech = rref(aug);
  if (static_cast<Eigen::Index>(ech.pivots.size()) != a.cols() ||
      (!ech.pivots.empty() && ech.pivots.back() == a.cols()))
    throw DomainError("solve: singular system");
  return ech.reduced.col(a.cols()).head(a.cols());
}

/// Positive rescaling of a rational vector to coprime integer entries.
inline VectorXq primitive(const VectorXq& v) {
  Integer den = 1;
  for (const auto& x : v) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, Integer(boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x))));
  if (g == 0) return v;
  VectorXq out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) * Rational(den) / Rational(g);
  return out;
}

/// True iff u = c v for some c > 0.
inline bool positively_parallel(const VectorXq& u, const VectorXq& v) {
  if (u.size() != v.size()) return false;
  Rational ratio = 0;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if ((u(i) == 0) != (v(i) == 0)) return false;
    if (u(i) == 0) continue;
    const Rational r = u(i) / v(i);
    if (r <= 0) return false;
    if (ratio == 0) ratio = r;
    else if (r != ratio) return false;
  }
  return ratio != 0;
}

inline bool lex_less(const VectorXq& a, const VectorXq& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

/// Stacks column vectors into a matrix.
inline MatrixXq as_columns(const std::vector<VectorXq>& cols, Eigen::Index dim) {
  MatrixXq m(dim, static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = cols[j];
  return m;
}

}  // namespace symcone
