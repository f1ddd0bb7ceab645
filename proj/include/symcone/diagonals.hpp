#pragma once

// Classes of diagonal cycles in the symmetric product, the basis adapted to
// normalized diagonals, the eta classes that vanish on them, and the
// degree-changing operators relating C_d and C_{d+1}.

#include <vector>

#include "symcone/partitions.hpp"
#include "symcone/taut_ring.hpp"

namespace symcone {

/// The diagonal {a_1 p_1 + ... + a_n p_n} in C_d, for a partition a of d.
struct DiagonalSpec {
  RingContext ctx;
  int n = 0;
  Partition parts;

  /// Throws DomainError unless parts sum to d and 1 <= n <= d - 1.
  DiagonalSpec(RingContext ctx, Partition parts);
};

/// The class of the diagonal in R^{d-n}(C_d).
TautClass diagonal_class(const DiagonalSpec& spec);

/// Class of the diagonal for lambda + 1 (padded with ones to n parts),
/// divided by prod(lambda_i + 1). lambda is a partition of d - n with at
/// most n parts.
TautClass normalized_diagonal(const RingContext& ctx, int n, const Partition& lambda);

struct WBasis {
  RingContext ctx;
  int n = 0;
  std::vector<TautClass> vectors;  // w_0 .. w_r in R^{d-n}
  MatrixXq to_standard;            // column s holds the coefficients of w_s
};

WBasis w_basis(const RingContext& ctx, int n);

/// Coordinates of c with respect to the w basis.
VectorXq to_w_coords(const TautClass& c, const WBasis& basis);

/// (dg/n) x^n - x^{n-1} theta in R^n(C_d).
TautClass eta_class(const RingContext& ctx, int n);

/// Pairing of eta_class(ctx, n) with the diagonal class.
Rational eta_pair_diagonal(const DiagonalSpec& spec);

/// R^m(C_d) -> R^m(C_{d+1}):
/// x^a theta^b -> (d+1-a-2b) x^a theta^b + b(g-b+1) x^{a+1} theta^{b-1}.
TautClass push_up(const TautClass& c);

/// R^m(C_{d+1}) -> R^{m-1}(C_d), m >= 1:
/// x^a theta^b -> a x^{a-1} theta^b + b(g-b+1) x^a theta^{b-1}.
TautClass pull_down(const TautClass& c);

/// g/(d-1) * 2(g-1)/(d(d-1) + 2(g-1)).
Rational divisor_constant(const RingContext& ctx);

/// eta_{n,d} == ((d-n)(g-1)/n) x^n + [diag(n+1, 1, ..., 1)] / ((n+1)(d-n-1)!).
bool eta_decomposition_check(const RingContext& ctx, int n);

/// eta_{d-1,d} == ((g-d+1)/(d-1)) x^{d-1} + ((g+1)x - theta) x^{d-2}.
bool top_eta_identity_check(const RingContext& ctx);

}  // namespace symcone
