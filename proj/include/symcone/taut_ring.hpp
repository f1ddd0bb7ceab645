#pragma once

// Exact arithmetic in the tautological ring R*(C_d) of the d-th symmetric
// product of a genus-g curve, generated by the divisor classes x and theta.
//
// A class of codimension m is stored by its coordinates in the standard
// monomial basis x^m, x^{m-1} theta, ..., x^{m-r} theta^r with
// r = min(m, d - m, g). Everything else (theta^a with a > r) is reduced into
// that basis through the nondegenerate complementary pairing.

#include <map>
#include <string>

#include "symcone/rational.hpp"

namespace symcone {

struct RingContext {
  int g = 1;
  int d = 2;

  RingContext() = default;
  RingContext(int genus, int degree);

  /// r(m) = min(m, d - m, g); R^m(C_d) has dimension r(m) + 1.
  int rank_bound(int m) const;

  friend bool operator==(const RingContext&, const RingContext&) = default;
};

class TautClass {
 public:
  /// coeffs.size() must equal ctx.rank_bound(codim) + 1.
  TautClass(RingContext ctx, int codim, VectorXq coeffs);

  static TautClass zero(RingContext ctx, int codim);
  /// The standard basis monomial x^{codim - alpha} theta^alpha.
  static TautClass basis(RingContext ctx, int codim, int alpha);

  const RingContext& ctx() const { return ctx_; }
  int codim() const { return codim_; }
  const VectorXq& coeffs() const { return coeffs_; }
  const Rational& coeff(int alpha) const { return coeffs_(alpha); }
  bool is_zero() const;

  TautClass operator+(const TautClass& other) const;
  TautClass operator-(const TautClass& other) const;
  TautClass operator-() const;
  TautClass operator*(const Rational& s) const;
  friend TautClass operator*(const Rational& s, const TautClass& c) { return c * s; }

  friend bool operator==(const TautClass& a, const TautClass& b);

  /// Human readable, e.g. "15*x^2 - 6*x*theta".
  std::string to_string() const;

 private:
  void require_compatible(const TautClass& other) const;

  RingContext ctx_;
  int codim_;
  VectorXq coeffs_;
};

/// Unreduced linear combination of monomials x^{m - alpha} theta^alpha.
/// Terms with alpha > g vanish on insertion (theta^{g+1} = 0).
class MonomialSum {
 public:
  MonomialSum(RingContext ctx, int codim);

  MonomialSum& add(int alpha, const Rational& coeff);

  const RingContext& ctx() const { return ctx_; }
  int codim() const { return codim_; }
  const std::map<int, Rational>& terms() const { return terms_; }

 private:
  RingContext ctx_;
  int codim_;
  std::map<int, Rational> terms_;
};

/// theta^s . x^{d-s} = g (g-1) ... (g-s+1), and 1 for s = 0.
Rational intersection_number(const RingContext& ctx, int s);

/// r (r-1) ... (r-n+1) / n!, with the value 1 for n = 0.
Rational generalized_binomial(const Rational& r, int n);

/// M[a][b] = intersection_number(a + b), the pairing of the standard bases
/// of R^m and R^{d-m}.
MatrixXq pairing_matrix(const RingContext& ctx, int m);

TautClass reduce(const MonomialSum& mono);

/// Formal product followed by reduction.
TautClass multiply(const TautClass& u, const TautClass& v);

/// Intersection pairing of complementary-degree classes.
Rational pair(const TautClass& u, const TautClass& v);

/// Pairing of a possibly unreduced monomial sum against a reduced class of
/// complementary degree.
Rational pair(const MonomialSum& u, const TautClass& v);

/// Checks that alpha * x^{d-2g+1} reduces to zero, where
/// alpha = sum_i (-1)^i theta^i / i! x^{g-i}. Requires d >= 2g - 1.
bool verify_presentation(const RingContext& ctx);

/// "x^2", "x*theta", "theta^2", "1", ...
std::string monomial_name(int codim, int alpha);

}  // namespace symcone
