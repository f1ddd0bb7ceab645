#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

namespace symcone {

// Expression templates are disabled so the scalar composes cleanly with
// Eigen's own expression templates.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorXq = VectorX<Rational>;
using MatrixXq = MatrixX<Rational>;

/// Precondition violated by the caller (bad degree, malformed partition, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured size guard would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Canonical "p/q" form: q > 0, gcd(p, q) = 1, zero is "0/1".
std::string to_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws DomainError on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

std::vector<std::string> to_strings(const VectorXq& v);

inline Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline int sign(const Rational& q) { return q.sign(); }

}  // namespace symcone
