#pragma once

// Integer partitions, elementary symmetric and power sums, balanced
// partitions and the positivity certificate for symmetric affine forms
// a0 + a2*sigma_2 + ... + ar*sigma_r.

#include <span>
#include <vector>

#include "symcone/rational.hpp"

namespace symcone {

class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int total() const;

  /// Parts followed by zeros up to the given length.
  std::vector<int> padded(int length) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Partitions of t with at most max_parts parts, decreasing lexicographic.
std::vector<Partition> enumerate_partitions(int t, int max_parts);

/// Elementary symmetric polynomial of degree k in the entries.
template <typename Scalar = Integer>
Scalar sigma(std::span<const int> entries, int k) {
  if (k < 0) throw DomainError("sigma: degree must be >= 0");
  if (k > static_cast<int>(entries.size())) return Scalar(0);
  std::vector<Scalar> e(static_cast<std::size_t>(k) + 1, Scalar(0));
  e[0] = 1;
  for (int x : entries)
    for (int j = k; j >= 1; --j) e[j] += Scalar(x) * e[j - 1];
  return e[k];
}

template <typename Scalar = Integer>
Scalar sigma(const Partition& p, int k) {
  return sigma<Scalar>(std::span<const int>(p.parts()), k);
}

template <typename Scalar = Integer>
Scalar power_sum(std::span<const int> entries, int k) {
  if (k < 1) throw DomainError("power_sum: degree must be >= 1");
  Scalar total = 0;
  for (int x : entries) {
    Scalar term = 1;
    for (int i = 0; i < k; ++i) term *= x;
    total += term;
  }
  return total;
}

template <typename Scalar = Integer>
Scalar power_sum(const Partition& p, int k) {
  return power_sum<Scalar>(std::span<const int>(p.parts()), k);
}

/// sigma_0 .. sigma_k recovered from p_1 .. p_k by Newton's identities.
std::vector<Rational> newton_sigmas(std::span<const Rational> power_sums);

/// sigma_k with k = power_sums.size().
Rational newton_sigma_from_power(std::span<const Rational> power_sums);

struct BalancedInfo {
  int t = 0;
  int j = 0;
  int alpha = 0;  // floor(t / j)
  int rho = 0;    // t mod j
  int tau = 0;    // rho * (alpha + 1)
  Partition partition;
};

/// The partition of t into j parts differing by at most one.
BalancedInfo balanced(int t, int j);

/// ceil(t/(j-1)) > floor(t/(j+1)) + 1, for 2 <= j <= s-1 and s <= t.
bool is_break(int t, int j, int s);

/// det [[s2(j2)-s2(j1), s2(j3)-s2(j2)], [s3(j2)-s3(j1), s3(j3)-s3(j2)]]
/// on the balanced partitions of t with j1 < j2 < j3 parts.
Rational det_criterion(int t, int j1, int j2, int j3);

/// The same determinant from the closed form in alpha, tau of each index.
Rational det_criterion_closed_form(int t, int j1, int j2, int j3);

/// a0 + a2*sigma_2 + ... + ar*sigma_r in r variables.
struct SymAffineForm {
  int r = 2;
  Rational constant;
  std::vector<Rational> higher;  // a2 .. ar, size r - 1

  SymAffineForm() = default;
  SymAffineForm(int r, Rational constant, std::vector<Rational> higher);

  Rational operator()(std::span<const int> point) const;
  Rational operator()(const Partition& p) const { return (*this)(std::span<const int>(p.parts())); }
};

struct SizeGuards {
  int max_t = 30;
  int max_r = 6;
};

struct MinResult {
  Rational value;
  Partition witness;
};

/// True iff f is nonnegative at every balanced partition of t with at most
/// r parts, which certifies f >= 0 at all nonnegative integer points.
bool cheb_certify(const SymAffineForm& f, int t);

/// Exhaustive minimum over partitions of t with at most r parts. The
/// witness is the lexicographically largest minimizer.
MinResult brute_min(const SymAffineForm& f, int t, const SizeGuards& guards = {});

/// Pairwise balancing descent from start (r nonnegative entries summing to
/// t). Ends at a permutation of a balanced partition padded with zeros.
std::vector<int> balance_descend(const SymAffineForm& f, int t, std::vector<int> start);

/// sum_j (-1)^j C(n, j) Q(j) for Q = b0 + b1 x + ... .
Rational alt_binom_sum(std::span<const Rational> coeffs, int n);

}  // namespace symcone
