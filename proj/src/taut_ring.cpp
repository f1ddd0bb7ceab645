#include "symcone/taut_ring.hpp"

#include <algorithm>
#include <sstream>

#include "symcone/linalg.hpp"

namespace symcone {

RingContext::RingContext(int genus, int degree) : g(genus), d(degree) {
  if (g < 1) throw DomainError("genus must be >= 1, got " + std::to_string(g));
  if (d < 2) throw DomainError("degree must be >= 2, got " + std::to_string(d));
}

int RingContext::rank_bound(int m) const {
  if (m < 0 || m > d)
    throw DomainError("codimension " + std::to_string(m) + " outside [0, " + std::to_string(d) + "]");
  return std::min({m, d - m, g});
}

TautClass::TautClass(RingContext ctx, int codim, VectorXq coeffs)
    : ctx_(ctx), codim_(codim), coeffs_(std::move(coeffs)) {
  const int r = ctx_.rank_bound(codim_);
  if (coeffs_.size() != r + 1)
    throw DomainError("R^" + std::to_string(codim_) + " has dimension " + std::to_string(r + 1) +
                      ", got " + std::to_string(coeffs_.size()) + " coefficients");
}

TautClass TautClass::zero(RingContext ctx, int codim) {
  return {ctx, codim, VectorXq::Zero(ctx.rank_bound(codim) + 1)};
}

TautClass TautClass::basis(RingContext ctx, int codim, int alpha) {
  VectorXq c = VectorXq::Zero(ctx.rank_bound(codim) + 1);
  if (alpha < 0 || alpha >= c.size()) throw DomainError("basis index out of range");
  c(alpha) = 1;
  return {ctx, codim, std::move(c)};
}

bool TautClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

void TautClass::require_compatible(const TautClass& other) const {
  if (!(ctx_ == other.ctx_) || codim_ != other.codim_)
    throw DomainError("classes live in different graded pieces");
}

TautClass TautClass::operator+(const TautClass& other) const {
  require_compatible(other);
  return {ctx_, codim_, coeffs_ + other.coeffs_};
}

TautClass TautClass::operator-(const TautClass& other) const {
  require_compatible(other);
  return {ctx_, codim_, coeffs_ - other.coeffs_};
}

TautClass TautClass::operator-() const { return {ctx_, codim_, -coeffs_}; }

TautClass TautClass::operator*(const Rational& s) const { return {ctx_, codim_, coeffs_ * s}; }

bool operator==(const TautClass& a, const TautClass& b) {
  return a.ctx_ == b.ctx_ && a.codim_ == b.codim_ && a.coeffs_ == b.coeffs_;
}

std::string monomial_name(int codim, int alpha) {
  const int xe = codim - alpha;
  std::string out;
  if (xe > 0) out = xe == 1 ? "x" : "x^" + std::to_string(xe);
  if (alpha > 0) {
    if (!out.empty()) out += "*";
    out += alpha == 1 ? "theta" : "theta^" + std::to_string(alpha);
  }
  return out.empty() ? "1" : out;
}

std::string TautClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index a = 0; a < coeffs_.size(); ++a) {
    const Rational& c = coeffs_(a);
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    os << mag << "*" << monomial_name(codim_, static_cast<int>(a));
    first = false;
  }
  return first ? "0" : os.str();
}

MonomialSum::MonomialSum(RingContext ctx, int codim) : ctx_(ctx), codim_(codim) {
  ctx_.rank_bound(codim_);  // validates the range
}

MonomialSum& MonomialSum::add(int alpha, const Rational& coeff) {
  if (alpha < 0 || alpha > codim_)
    throw DomainError("theta exponent " + std::to_string(alpha) + " outside [0, " +
                      std::to_string(codim_) + "]");
  if (alpha > ctx_.g || coeff == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(alpha, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Rational intersection_number(const RingContext& ctx, int s) {
  if (s < 0 || s > ctx.d)
    throw DomainError("intersection exponent " + std::to_string(s) + " outside [0, " +
                      std::to_string(ctx.d) + "]");
  Rational v = 1;
  for (int i = 0; i < s; ++i) v *= ctx.g - i;
  return v;
}

Rational generalized_binomial(const Rational& r, int n) {
  if (n < 0) throw DomainError("generalized_binomial: n must be >= 0");
  Rational v = 1;
  for (int i = 0; i < n; ++i) v = v * (r - i) / (i + 1);
  return v;
}

MatrixXq pairing_matrix(const RingContext& ctx, int m) {
  const int r = ctx.rank_bound(m);
  MatrixXq M(r + 1, r + 1);
  for (int a = 0; a <= r; ++a)
    for (int b = 0; b <= r; ++b) M(a, b) = intersection_number(ctx, a + b);
  return M;
}

Rational pair(const MonomialSum& u, const TautClass& v) {
  if (!(u.ctx() == v.ctx())) throw DomainError("pair: ring contexts differ");
  if (u.codim() + v.codim() != u.ctx().d) throw DomainError("pair: degrees are not complementary");
  Rational total = 0;
  for (const auto& [alpha, c] : u.terms())
    for (Eigen::Index b = 0; b < v.coeffs().size(); ++b)
      if (v.coeff(static_cast<int>(b)) != 0)
        total += c * v.coeff(static_cast<int>(b)) * intersection_number(u.ctx(), alpha + static_cast<int>(b));
  return total;
}

TautClass reduce(const MonomialSum& mono) {
  const RingContext& ctx = mono.ctx();
  const int m = mono.codim();
  const int r = ctx.rank_bound(m);
  VectorXq rhs(r + 1);
  for (int b = 0; b <= r; ++b) {
    Rational s = 0;
    for (const auto& [alpha, c] : mono.terms()) s += c * intersection_number(ctx, alpha + b);
    rhs(b) = s;
  }
  return {ctx, m, solve(pairing_matrix(ctx, m), rhs)};
}

TautClass multiply(const TautClass& u, const TautClass& v) {
  if (!(u.ctx() == v.ctx())) throw DomainError("multiply: ring contexts differ");
  const int m = u.codim() + v.codim();
  if (m > u.ctx().d) throw DomainError("multiply: total codimension exceeds d");
  MonomialSum prod(u.ctx(), m);
  for (Eigen::Index a = 0; a < u.coeffs().size(); ++a)
    for (Eigen::Index b = 0; b < v.coeffs().size(); ++b)
      prod.add(static_cast<int>(a + b), u.coeffs()(a) * v.coeffs()(b));
  return reduce(prod);
}

Rational pair(const TautClass& u, const TautClass& v) {
  if (!(u.ctx() == v.ctx())) throw DomainError("pair: ring contexts differ");
  if (u.codim() + v.codim() != u.ctx().d) throw DomainError("pair: degrees are not complementary");
  Rational total = 0;
  for (Eigen::Index a = 0; a < u.coeffs().size(); ++a)
    for (Eigen::Index b = 0; b < v.coeffs().size(); ++b)
      total += u.coeffs()(a) * v.coeffs()(b) * intersection_number(u.ctx(), static_cast<int>(a + b));
  return total;
}

bool verify_presentation(const RingContext& ctx) {
  const int g = ctx.g, d = ctx.d;
  if (d < 2 * g - 1)
    throw DomainError("verify_presentation needs d >= 2g - 1 (colon-ideal range not supported)");
  MonomialSum rel(ctx, d - g + 1);
  for (int i = 0; i <= g; ++i) {
    Rational c = factorial(i);
    c = (i % 2 == 0 ? Rational(1) : Rational(-1)) / c;
    rel.add(i, c);
  }
  return reduce(rel).is_zero();
}

}  // namespace symcone
