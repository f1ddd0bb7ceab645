#include "symcone/partitions.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>

namespace symcone {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be non-increasing");
  }
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int length) const {
  if (length < size()) throw DomainError("padded: length shorter than the partition");
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(length), 0);
  return out;
}

namespace {

void enumerate_into(int remaining, int max_part, int parts_left, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (parts_left == 0) return;
  for (int first = std::min(remaining, max_part); first >= 1; --first) {
    // the rest must fit into parts_left - 1 parts no larger than first
    if (static_cast<long long>(first) * parts_left < remaining) break;
    prefix.push_back(first);
    enumerate_into(remaining - first, first, parts_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int t, int max_parts) {
  if (t < 0) throw DomainError("enumerate_partitions: t must be >= 0");
  if (max_parts < 1) throw DomainError("enumerate_partitions: max_parts must be >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(t, t, max_parts, prefix, out);
  return out;
}

std::vector<Rational> newton_sigmas(std::span<const Rational> power_sums) {
  const int k = static_cast<int>(power_sums.size());
  std::vector<Rational> e(static_cast<std::size_t>(k) + 1);
  e[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rational acc = 0;
    for (int i = 1; i <= m; ++i) {
      const Rational term = e[m - i] * power_sums[i - 1];
      acc += (i % 2 == 1) ? term : Rational(-term);
    }
    e[m] = acc / m;
  }
  return e;
}

Rational newton_sigma_from_power(std::span<const Rational> power_sums) {
  if (power_sums.empty()) throw DomainError("newton_sigma_from_power: need at least p_1");
  return newton_sigmas(power_sums).back();
}

BalancedInfo balanced(int t, int j) {
  if (j < 1 || j > t)
    throw DomainError("balanced: need 1 <= j <= t, got t=" + std::to_string(t) + ", j=" + std::to_string(j));
  BalancedInfo info;
  info.t = t;
  info.j = j;
  info.alpha = t / j;
  info.rho = t % j;
  info.tau = info.rho * (info.alpha + 1);
  std::vector<int> parts(static_cast<std::size_t>(info.rho), info.alpha + 1);
  parts.resize(static_cast<std::size_t>(j), info.alpha);
  info.partition = Partition(std::move(parts));
  return info;
}

bool is_break(int t, int j, int s) {
  if (s > t) throw DomainError("is_break: need s <= t");
  if (j < 2 || j > s - 1)
    throw DomainError("is_break: j must lie in [2, s-1], got j=" + std::to_string(j));
  const int ceil_lower = (t + j - 2) / (j - 1);
  const int floor_upper = t / (j + 1);
  return ceil_lower > floor_upper + 1;
}

namespace {

void check_triple(int t, int j1, int j2, int j3) {
  if (!(1 <= j1 && j1 < j2 && j2 < j3 && j3 <= t))
    throw DomainError("need 1 <= j1 < j2 < j3 <= t");
}

}  // namespace

Rational det_criterion(int t, int j1, int j2, int j3) {
  check_triple(t, j1, j2, j3);
  const Partition p1 = balanced(t, j1).partition;
  const Partition p2 = balanced(t, j2).partition;
  const Partition p3 = balanced(t, j3).partition;
  const Rational a = sigma<Rational>(p2, 2) - sigma<Rational>(p1, 2);
  const Rational b = sigma<Rational>(p3, 2) - sigma<Rational>(p2, 2);
  const Rational c = sigma<Rational>(p2, 3) - sigma<Rational>(p1, 3);
  const Rational d = sigma<Rational>(p3, 3) - sigma<Rational>(p2, 3);
  return a * d - b * c;
}

Rational det_criterion_closed_form(int t, int j1, int j2, int j3) {
  check_triple(t, j1, j2, j3);
  // j1 uses a remainder in (0, j1], the others in [0, j)
  Rational a1 = t / j1, r1 = t % j1;
  if (r1 == 0) {
    a1 -= 1;
    r1 = j1;
  }
  const Rational a2 = t / j2, r2 = t % j2;
  const Rational a3 = t / j3, r3 = t % j3;
  const Rational t1 = r1 * (a1 + 1), t2 = r2 * (a2 + 1), t3 = r3 * (a3 + 1);
  const Rational tt = t;
  const Rational six_d =
      tt * tt * (a1 - a2) * (a2 - a3) * (a1 - a3) + tt * t1 * (a2 - a3) * (2 * a1 - a2 - a3 + 1) -
      tt * t2 * (a1 - a3) * (2 * a2 - a1 - a3 + 1) + tt * t3 * (a1 - a2) * (2 * a3 - a1 - a2 + 1) +
      2 * t1 * t2 * (a1 - a2) - 2 * t1 * t3 * (a1 - a3) + 2 * t2 * t3 * (a2 - a3);
  return six_d / 6;
}

SymAffineForm::SymAffineForm(int r_, Rational constant_, std::vector<Rational> higher_)
    : r(r_), constant(std::move(constant_)), higher(std::move(higher_)) {
  if (r < 2) throw DomainError("SymAffineForm: r must be >= 2");
  if (static_cast<int>(higher.size()) != r - 1)
    throw DomainError("SymAffineForm: expected " + std::to_string(r - 1) + " coefficients a2..ar");
}

Rational SymAffineForm::operator()(std::span<const int> point) const {
  std::vector<Integer> e(static_cast<std::size_t>(r) + 1, Integer(0));
  e[0] = 1;
  for (int x : point)
    for (int j = r; j >= 1; --j) e[j] += Integer(x) * e[j - 1];
  Rational v = constant;
  for (int k = 2; k <= r; ++k) v += higher[k - 2] * Rational(e[k]);
  return v;
}

bool cheb_certify(const SymAffineForm& f, int t) {
  if (t < f.r) throw DomainError("cheb_certify: need t >= r");
  for (int j = 1; j <= f.r; ++j)
    if (f(balanced(t, j).partition) < 0) return false;
  return true;
}

MinResult brute_min(const SymAffineForm& f, int t, const SizeGuards& guards) {
  if (t < f.r) throw DomainError("brute_min: need t >= r");
  if (t > guards.max_t || f.r > guards.max_r)
    throw ResourceError("brute_min: size guard exceeded (t <= " + std::to_string(guards.max_t) +
                        ", r <= " + std::to_string(guards.max_r) + ")");
  std::optional<MinResult> best;
  for (const auto& p : enumerate_partitions(t, f.r)) {
    Rational v = f(p);
    if (!best || v < best->value) best = MinResult{std::move(v), p};
  }
  return *best;
}

std::vector<int> balance_descend(const SymAffineForm& f, int t, std::vector<int> w) {
  if (static_cast<int>(w.size()) != f.r) throw DomainError("balance_descend: start must have r entries");
  if (std::any_of(w.begin(), w.end(), [](int v) { return v < 0; }))
    throw DomainError("balance_descend: entries must be nonnegative");
  if (std::accumulate(w.begin(), w.end(), 0) != t) throw DomainError("balance_descend: entries must sum to t");

  auto value_with = [&](std::size_t i, std::size_t j, int zi, int zj) {
    std::vector<int> trial(w);
    trial[i] = zi;
    trial[j] = zj;
    return f(std::span<const int>(trial));
  };

  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < w.size() && !moved; ++i) {
      for (std::size_t j = i + 1; j < w.size() && !moved; ++j) {
        if (std::abs(w[i] - w[j]) < 2) continue;
        const int c = w[i] + w[j];
        // along z -> (z, c - z) the form is slope * z (c - z) + const
        const Rational slope = (value_with(i, j, 1, c - 1) - value_with(i, j, 0, c)) / (c - 1);
        const int half = c / 2;
        if (slope < 0) {
          if (value_with(i, j, half + 1, c - half - 1) < value_with(i, j, half, c - half)) {
            w[i] = half + 1;
            w[j] = c - half - 1;
          } else {
            w[i] = half;
            w[j] = c - half;
          }
          moved = true;
        } else if (slope == 0) {
          w[i] = half;
          w[j] = c - half;
          moved = true;
        } else if (w[i] != 0 && w[j] != 0) {
          w[i] = c;
          w[j] = 0;
          moved = true;
        }
      }
    }
  }
  return w;
}

Rational alt_binom_sum(std::span<const Rational> coeffs, int n) {
  if (n < 0) throw DomainError("alt_binom_sum: n must be >= 0");
  Rational total = 0;
  Rational binom = 1;
  for (int j = 0; j <= n; ++j) {
    Rational q = 0;
    Rational power = 1;
    for (const auto& b : coeffs) {
      q += b * power;
      power *= j;
    }
    total += (j % 2 == 0 ? binom : Rational(-binom)) * q;
    binom = binom * (n - j) / (j + 1);
  }
  return total;
}

}  // namespace symcone
