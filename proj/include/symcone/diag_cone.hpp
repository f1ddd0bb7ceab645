#pragma once

// The cone spanned by n-dimensional diagonal classes: its generators in
// w coordinates, the predicted extremal rays, and a brute-force comparison.

#include <optional>
#include <vector>

#include "symcone/cone.hpp"
#include "symcone/diagonals.hpp"
#include "symcone/partitions.hpp"

namespace symcone {

struct DiagConeReport {
  RingContext ctx;
  int n = 0;
  int r = 0;  // min(n, d-n, g)
  int s = 0;  // min(n, d-n)
  std::vector<Partition> brute_extremal;
  std::vector<Partition> predicted_extremal;
  bool dim_ok = false;
  bool eta_supported = false;
  /// Extremal rays recomputed from standard-basis generators agree; only
  /// run when r <= 3.
  std::optional<bool> basis_check;
  bool match = false;
};

/// Partitions of d-n with at most min(n, d-n) parts, in enumeration order.
std::vector<Partition> diagonal_partitions(const RingContext& ctx, int n);

/// Cone over the w coordinates (1, d-n, sigma_2, ..., sigma_r) of the
/// normalized diagonals, one generator per partition (duplicates merged).
RationalCone build_diagonal_cone(const RingContext& ctx, int n, ConeLimits limits = {});

/// Balanced partitions of d-n predicted to span the extremal rays.
std::vector<Partition> predicted_extremal_rays(const RingContext& ctx, int n);

DiagConeReport analyze(const RingContext& ctx, int n, ConeLimits limits = {});

struct PolytopeSizeGuards {
  int max_t = 20;
  int max_r = 6;
};

struct PolytopeReport {
  int t = 0;
  int s = 0;
  int r = 0;
  std::vector<Partition> partitions;  // one per point
  PolytopePoints polytope;
  std::vector<Partition> vertices;    // partitions at hull vertices
  std::vector<Partition> predicted;
  int affine_dim = 0;
  bool match = false;
};

/// Hull of (sigma_2, ..., sigma_r)(lambda) over partitions of t with at
/// most s parts, compared with the balanced-partition prediction.
PolytopeReport polytope_pi(int t, int s, int r, const PolytopeSizeGuards& guards = {});

/// Prediction shared by the cone and the polytope: r = 2 keeps both ends,
/// r = 3 adds the t-breaks, r >= 4 keeps every balanced partition.
std::vector<Partition> predicted_balanced_vertices(int t, int s, int r);

}  // namespace symcone
