#pragma once

// Membership tests for the permutation classes V, W, Y, Y', X.

#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "soslift/permutation.hpp"

namespace soslift {

/// Congruential recurrence theta(i+1) - theta(i) = theta(1) - [theta(m) <= theta(i)] (mod m).
inline bool in_V(const Permutation& theta) {
  const int m = theta.degree();
  if (m < 2) throw std::domain_error("in_V: degree must be at least 2");
  const int first = theta(1);
  const int last = theta(m);
  for (int i = 1; i < m; ++i) {
    const std::int64_t lhs = theta(i + 1) - theta(i);
    const std::int64_t rhs = first - (last <= theta(i) ? 1 : 0);
    if (mod_m(lhs - rhs, m) != 0) return false;
  }
  return true;
}

/// The same recurrence as an exact integer equation, with the wraparound
/// made explicit by m([theta(i) <= theta(i+1)] - 1).
inline bool in_W(const Permutation& theta) {
  const int m = theta.degree();
  if (m < 2) throw std::domain_error("in_W: degree must be at least 2");
  const int first = theta(1);
  const int last = theta(m);
  for (int i = 1; i < m; ++i) {
    const int a = theta(i);
    const int b = theta(i + 1);
    const int rhs = first - (last <= a ? 1 : 0) + m * ((a <= b ? 1 : 0) - 1);
    if (b - a != rhs) return false;
  }
  return true;
}

/// Delta_theta constant; every permutation of degree 2 qualifies.
inline bool in_Y(const Permutation& theta) {
  const int m = theta.degree();
  if (m < 2) throw std::domain_error("in_Y: degree must be at least 2");
  if (m == 2) return true;
  const auto d = delta(theta);
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i] != d[0]) return false;
  }
  return true;
}

/// Delta_theta(i) = -A_theta for every i.
inline bool in_Yprime(const Permutation& theta) {
  if (theta.degree() < 3) throw std::domain_error("in_Yprime: degree must be at least 3");
  const std::int64_t target = -ascents(theta);
  for (std::int64_t v : delta(theta)) {
    if (v != target) return false;
  }
  return true;
}

/// Quasi-progression of diameter 1: cds(theta) within {k, k+1} for some k in [m-1].
inline bool in_X(const Permutation& theta) {
  const int m = theta.degree();
  if (m < 2) throw std::domain_error("in_X: degree must be at least 2");
  const auto set = cds(theta);
  if (set.front() == 0) return false;
  if (set.size() == 1) return true;
  return set.size() == 2 && set[1] == set[0] + 1;
}

/// theta = theta_{a,0} for some a coprime to m.
inline bool in_VL0(const Permutation& theta) {
  const int m = theta.degree();
  const std::int64_t a = theta(1);
  if (std::gcd(a, static_cast<std::int64_t>(m)) != 1) return false;
  return theta == affine_permutation(m, a, 0);
}

/// theta = theta_{a,1} for some a coprime to m.
inline bool in_VL1(const Permutation& theta) {
  const int m = theta.degree();
  const std::int64_t a = supermod_m(theta(1) - 1, m);
  if (std::gcd(a, static_cast<std::int64_t>(m)) != 1) return false;
  return theta == affine_permutation(m, a, 1);
}

}  // namespace soslift
