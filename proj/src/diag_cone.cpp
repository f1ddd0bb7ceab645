#include "symcone/diag_cone.hpp"

#include <algorithm>
#include <string>

#include "symcone/linalg.hpp"

namespace symcone {

namespace {

void check_dimension(const RingContext& ctx, int n) {
  if (n < 1 || n > ctx.d - 1) throw DomainError("n must lie in [1, d-1], got " + std::to_string(n));
}

std::vector<Partition> sorted(std::vector<Partition> ps) {
  std::sort(ps.begin(), ps.end(), std::greater<>());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

VectorXq w_coordinates(const RingContext& ctx, int n, const WBasis& basis, const Partition& lambda) {
  return to_w_coords(normalized_diagonal(ctx, n, lambda), basis);
}

}  // namespace

std::vector<Partition> diagonal_partitions(const RingContext& ctx, int n) {
  check_dimension(ctx, n);
  return enumerate_partitions(ctx.d - n, std::min(n, ctx.d - n));
}

RationalCone build_diagonal_cone(const RingContext& ctx, int n, ConeLimits limits) {
  const WBasis basis = w_basis(ctx, n);
  std::vector<VectorXq> gens;
  for (const auto& lambda : diagonal_partitions(ctx, n)) gens.push_back(w_coordinates(ctx, n, basis, lambda));
  return RationalCone(ctx.rank_bound(n) + 1, gens, limits);
}

std::vector<Partition> predicted_balanced_vertices(int t, int s, int r) {
  if (!(t >= s && s >= r && r >= 1)) throw DomainError("need t >= s >= r >= 1");
  std::vector<Partition> out;
  if (r == 1) {
    out.push_back(balanced(t, 1).partition);
    return out;
  }
  for (int j = 1; j <= s; ++j) {
    const bool end = j == 1 || j == s;
    const bool keep = r >= 4 || end || (r == 3 && is_break(t, j, s));
    if (keep) out.push_back(balanced(t, j).partition);
  }
  return sorted(std::move(out));
}

std::vector<Partition> predicted_extremal_rays(const RingContext& ctx, int n) {
  check_dimension(ctx, n);
  const int t = ctx.d - n;
  return predicted_balanced_vertices(t, std::min(n, t), ctx.rank_bound(n));
}

DiagConeReport analyze(const RingContext& ctx, int n, ConeLimits limits) {
  check_dimension(ctx, n);
  DiagConeReport rep;
  rep.ctx = ctx;
  rep.n = n;
  rep.r = ctx.rank_bound(n);
  rep.s = std::min(n, ctx.d - n);
  const int t = ctx.d - n;

  const auto parts = diagonal_partitions(ctx, n);
  const WBasis basis = w_basis(ctx, n);
  const TautClass eta = eta_class(ctx, n);

  std::vector<TautClass> classes;
  std::vector<VectorXq> wcoords;
  bool eta_zero = true;
  for (const auto& lambda : parts) {
    classes.push_back(normalized_diagonal(ctx, n, lambda));
    wcoords.push_back(to_w_coords(classes.back(), basis));
    if (pair(eta, classes.back()) != 0) eta_zero = false;
  }

  // span of the generators has dimension r, which is the hyperplane eta = 0
  std::vector<VectorXq> std_coords;
  for (const auto& c : classes) std_coords.push_back(c.coeffs());
  const auto span_dim = rank(as_columns(std_coords, rep.r + 1).transpose());
  rep.dim_ok = span_dim == rep.r;
  const VectorXq eta_functional = pairing_matrix(ctx, n).transpose() * eta.coeffs();
  const bool eta_nonzero =
      std::any_of(eta_functional.begin(), eta_functional.end(), [](const Rational& q) { return q != 0; });
  rep.eta_supported = eta_zero && eta_nonzero && span_dim == rep.r;

  if (rep.r == 1) {
    rep.brute_extremal = {balanced(t, 1).partition};
  } else {
    std::vector<VectorXq> section;
    for (const auto& w : wcoords) {
      if (w(0) != 1 || w(1) != t) throw DomainError("analyze: w coordinates off the expected section");
      section.push_back(w.tail(rep.r - 1));
    }
    const PolytopePoints hull = hull_vertices(section, limits);
    std::vector<Partition> found;
    for (int i : hull.vertex_indices) found.push_back(parts[static_cast<std::size_t>(i)]);
    rep.brute_extremal = sorted(std::move(found));

    if (rep.r <= 3) {
      const RationalCone std_cone(rep.r + 1, std_coords, limits);
      const auto rays = extremal_rays(std_cone);
      std::vector<Partition> from_std;
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (const auto& ray : rays)
          if (positively_parallel(std_coords[i], ray)) from_std.push_back(parts[i]);
      rep.basis_check = sorted(std::move(from_std)) == rep.brute_extremal;
    }
  }
  rep.predicted_extremal = predicted_extremal_rays(ctx, n);
  rep.match = rep.brute_extremal == rep.predicted_extremal;
  return rep;
}

PolytopeReport polytope_pi(int t, int s, int r, const PolytopeSizeGuards& guards) {
  if (!(t >= s && s >= r && r >= 2)) throw DomainError("polytope_pi: need t >= s >= r >= 2");
  if (t > guards.max_t || r > guards.max_r)
    throw ResourceError("polytope_pi: size guard exceeded (t <= " + std::to_string(guards.max_t) +
                        ", r <= " + std::to_string(guards.max_r) + ")");
  PolytopeReport rep;
  rep.t = t;
  rep.s = s;
  rep.r = r;
  rep.partitions = enumerate_partitions(t, s);
  std::vector<VectorXq> points;
  for (const auto& p : rep.partitions) {
    VectorXq v(r - 1);
    for (int k = 2; k <= r; ++k) v(k - 2) = sigma<Rational>(p, k);
    points.push_back(std::move(v));
  }
  rep.polytope = hull_vertices(points, ConeLimits{std::max(8, r)});
  std::vector<Partition> found;
  for (int i : rep.polytope.vertex_indices) found.push_back(rep.partitions[static_cast<std::size_t>(i)]);
  rep.vertices = sorted(std::move(found));
  rep.predicted = predicted_balanced_vertices(t, s, r);
  rep.affine_dim = affine_dimension(points);
  rep.match = rep.vertices == rep.predicted && rep.affine_dim == r - 1;
  return rep;
}

}  // namespace symcone
