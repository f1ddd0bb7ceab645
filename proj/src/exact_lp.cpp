#include "symcone/exact_lp.hpp"

namespace symcone {

std::optional<VectorXq> feasible_point(const MatrixXq& a, const VectorXq& b) {
  if (a.rows() != b.size()) throw DomainError("feasible_point: dimension mismatch");
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  const Eigen::Index rhs = n + m;

  // constraint rows [a | I | b] with b >= 0, then the phase-one cost row
  MatrixXq t = MatrixXq::Zero(m + 1, n + m + 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool flip = b(i) < 0;
    for (Eigen::Index j = 0; j < n; ++j) t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    t(i, n + i) = 1;
    t(i, rhs) = flip ? Rational(-b(i)) : b(i);
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    Rational s = 0;
    for (Eigen::Index i = 0; i < m; ++i) s += t(i, j);
    t(m, j) = -s;
  }
  {
    Rational s = 0;
    for (Eigen::Index i = 0; i < m; ++i) s += t(i, rhs);
    t(m, rhs) = -s;
  }
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

  while (true) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + m; ++j)
      if (t(m, j) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    Rational best;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      const Rational ratio = t(i, rhs) / t(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded direction; cannot happen for a bounded-below objective

    const Rational inv = Rational(1) / t(leave, enter);
    for (Eigen::Index j = 0; j <= rhs; ++j)
      if (t(leave, j) != 0) t(leave, j) *= inv;
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      const Rational f = t(i, enter);
      for (Eigen::Index j = 0; j <= rhs; ++j)
        if (t(leave, j) != 0) t(i, j) -= f * t(leave, j);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  if (t(m, rhs) != 0) return std::nullopt;
  VectorXq x = VectorXq::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index v = basis[static_cast<std::size_t>(i)];
    if (v < n) x(v) = t(i, rhs);
  }
  return x;
}

bool in_convex_hull(const std::vector<VectorXq>& points, const VectorXq& p) {
  if (points.empty()) return false;
  const Eigen::Index dim = p.size();
  MatrixXq a(dim + 1, static_cast<Eigen::Index>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    const auto col = static_cast<Eigen::Index>(j);
    a.block(0, col, dim, 1) = points[j];
    a(dim, col) = 1;
  }
  VectorXq b(dim + 1);
  b.head(dim) = p;
  b(dim) = 1;
  return feasible_point(a, b).has_value();
}

}  // namespace symcone
