#include "symcone/diagonals.hpp"

#include <string>

#include "symcone/linalg.hpp"

namespace symcone {

namespace {

Rational binomial(int n, int k) { return generalized_binomial(Rational(n), k); }

Rational signed_one(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

DiagonalSpec::DiagonalSpec(RingContext ctx_, Partition parts_)
    : ctx(ctx_), n(parts_.size()), parts(std::move(parts_)) {
  if (parts.total() != ctx.d)
    throw DomainError("diagonal parts sum to " + std::to_string(parts.total()) + ", expected d = " +
                      std::to_string(ctx.d));
  if (n < 1 || n > ctx.d - 1) throw DomainError("diagonal dimension must lie in [1, d-1]");
}

TautClass diagonal_class(const DiagonalSpec& spec) {
  const RingContext& ctx = spec.ctx;
  const int n = spec.n;
  const int r = ctx.rank_bound(n);
  const int codim = ctx.d - n;

  std::vector<int> shifted;
  for (int a : spec.parts.parts()) shifted.push_back(a - 1);
  std::vector<Rational> sig(static_cast<std::size_t>(r) + 1);
  for (int s = 0; s <= r; ++s) sig[s] = sigma<Rational>(std::span<const int>(shifted), s);

  // q_sum[b] = sum_s (n-s)! s! C(g-b, s) sigma_s(a-1)
  std::vector<Rational> q_sum(static_cast<std::size_t>(r) + 1);
  for (int b = 0; b <= r; ++b) {
    Rational acc = 0;
    for (int s = 0; s <= r; ++s)
      acc += factorial(n - s) * factorial(s) * generalized_binomial(Rational(ctx.g - b), s) * sig[s];
    q_sum[b] = acc;
  }

  Rational prod = 1;
  for (int a : spec.parts.parts()) prod *= a;

  VectorXq coeffs(r + 1);
  for (int alpha = 0; alpha <= r; ++alpha) {
    Rational inner = 0;
    for (int b = 0; b <= alpha; ++b) inner += signed_one(b) * binomial(alpha, b) * q_sum[b];
    coeffs(alpha) = prod * signed_one(alpha) / factorial(alpha) * inner;
  }
  return {ctx, codim, std::move(coeffs)};
}

TautClass normalized_diagonal(const RingContext& ctx, int n, const Partition& lambda) {
  if (n < 1 || n > ctx.d - 1) throw DomainError("normalized_diagonal: n must lie in [1, d-1]");
  if (lambda.total() != ctx.d - n || lambda.size() > n)
    throw DomainError("normalized_diagonal: lambda must partition d-n into at most n parts");
  std::vector<int> a = lambda.padded(n);
  Rational prod = 1;
  for (int& v : a) {
    v += 1;
    prod *= v;
  }
  return diagonal_class(DiagonalSpec(ctx, Partition(std::move(a)))) * (Rational(1) / prod);
}

WBasis w_basis(const RingContext& ctx, int n) {
  if (n < 0 || n > ctx.d) throw DomainError("w_basis: n must lie in [0, d]");
  const int codim = ctx.d - n;
  const int r = ctx.rank_bound(codim);
  WBasis basis{ctx, n, {}, MatrixXq::Zero(r + 1, r + 1)};
  for (int s = 0; s <= r; ++s) {
    VectorXq c = VectorXq::Zero(r + 1);
    for (int alpha = 0; alpha <= s; ++alpha) {
      Rational inner = 0;
      for (int b = 0; b <= alpha; ++b)
        inner += signed_one(b) * binomial(alpha, b) * generalized_binomial(Rational(ctx.g - b), s);
      c(alpha) = factorial(s) * factorial(n - s) * signed_one(alpha) / factorial(alpha) * inner;
    }
    basis.to_standard.col(s) = c;
    basis.vectors.emplace_back(ctx, codim, std::move(c));
  }
  return basis;
}

VectorXq to_w_coords(const TautClass& c, const WBasis& basis) {
  if (!(c.ctx() == basis.ctx) || c.codim() != basis.ctx.d - basis.n)
    throw DomainError("to_w_coords: class does not live in R^{d-n} of this basis");
  return solve(basis.to_standard, c.coeffs());
}

TautClass eta_class(const RingContext& ctx, int n) {
  if (n < 1 || n > ctx.d - 1) throw DomainError("eta_class: n must lie in [1, d-1]");
  VectorXq c = VectorXq::Zero(ctx.rank_bound(n) + 1);
  c(0) = Rational(ctx.d * ctx.g, n);
  c(1) = -1;
  return {ctx, n, std::move(c)};
}

Rational eta_pair_diagonal(const DiagonalSpec& spec) {
  return pair(eta_class(spec.ctx, spec.n), diagonal_class(spec));
}

TautClass push_up(const TautClass& c) {
  const RingContext& src = c.ctx();
  const RingContext dst(src.g, src.d + 1);
  const int m = c.codim();
  MonomialSum out(dst, m);
  for (int b = 0; b < static_cast<int>(c.coeffs().size()); ++b) {
    const Rational& k = c.coeff(b);
    if (k == 0) continue;
    const int a = m - b;
    out.add(b, k * (src.d + 1 - a - 2 * b));
    if (b > 0) out.add(b - 1, k * b * (src.g - b + 1));
  }
  return reduce(out);
}

TautClass pull_down(const TautClass& c) {
  const RingContext& src = c.ctx();
  const int m = c.codim();
  if (m < 1) throw DomainError("pull_down: codimension must be >= 1");
  if (src.d < 3) throw DomainError("pull_down: target degree d-1 must be >= 2");
  const RingContext dst(src.g, src.d - 1);
  if (m - 1 > dst.d) throw DomainError("pull_down: codimension exceeds the target degree");
  MonomialSum out(dst, m - 1);
  for (int b = 0; b < static_cast<int>(c.coeffs().size()); ++b) {
    const Rational& k = c.coeff(b);
    if (k == 0) continue;
    const int a = m - b;
    if (a > 0) out.add(b, k * a);
    if (b > 0) out.add(b - 1, k * b * (src.g - b + 1));
  }
  return reduce(out);
}

Rational divisor_constant(const RingContext& ctx) {
  const int g = ctx.g, d = ctx.d;
  return Rational(g, d - 1) * Rational(2 * (g - 1), d * (d - 1) + 2 * (g - 1));
}

bool eta_decomposition_check(const RingContext& ctx, int n) {
  if (n < 1 || n > ctx.d - 1) throw DomainError("eta_decomposition_check: n must lie in [1, d-1]");
  std::vector<int> b(static_cast<std::size_t>(ctx.d - n), 1);
  b[0] = n + 1;
  const TautClass diag = diagonal_class(DiagonalSpec(ctx, Partition(std::move(b))));
  const TautClass rhs = TautClass::basis(ctx, n, 0) * Rational((ctx.d - n) * (ctx.g - 1), n) +
                        diag * (Rational(1) / ((n + 1) * factorial(ctx.d - n - 1)));
  return rhs == eta_class(ctx, n);
}

bool top_eta_identity_check(const RingContext& ctx) {
  const int g = ctx.g, d = ctx.d;
  const int m = d - 1;
  VectorXq lin(ctx.rank_bound(1) + 1);
  lin.setZero();
  lin(0) = g + 1;
  lin(1) = -1;
  const TautClass divisor(ctx, 1, lin);
  const TautClass rhs = TautClass::basis(ctx, m, 0) * Rational(g - d + 1, d - 1) +
                        multiply(divisor, TautClass::basis(ctx, d - 2, 0));
  return rhs == eta_class(ctx, m);
}

}  // namespace symcone
