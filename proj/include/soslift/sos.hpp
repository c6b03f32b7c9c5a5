#pragma once

// Sos permutations sigma_alpha for rational alpha, their inverses tau_alpha
// (by counting and by the floor-sum closed form), the affine family
// theta_{a,b}, Sos's recurrence and the Suranyi interval table.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "soslift/farey.hpp"
#include "soslift/permutation.hpp"
#include "soslift/report.hpp"

namespace soslift {

namespace detail {

inline void check_degree(int m, const char* what) {
  if (m < 1 || m > kMaxDegree) {
    throw std::invalid_argument(std::string(what) + ": degree out of range: " + std::to_string(m));
  }
}

// Numerators of the fractional parts {i*alpha} = r_i / den for i in [m].
// Rejects alpha outside (0, 1) and alpha whose parts collide; the parts are
// pairwise distinct exactly when den >= m, with den == m the a/m boundary case.
inline std::vector<BigInt> fractional_residues(int m, const Fraction& alpha, const char* what) {
  check_degree(m, what);
  if (alpha.num() <= 0 || alpha.num() >= alpha.den()) {
    throw std::invalid_argument(std::string(what) + ": alpha must lie in (0, 1), got " +
                                alpha.to_string());
  }
  if (alpha.den() < m) {
    throw std::invalid_argument(std::string(what) + ": alpha too coarse (" + alpha.to_string() +
                                " has repeated fractional parts for m = " + std::to_string(m) + ")");
  }
  std::vector<BigInt> r;
  r.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) r.push_back((alpha.num() * i) % alpha.den());
  return r;
}

}  // namespace detail

/// sigma_alpha: the order of i in [m] sorting {i*alpha} increasingly.
///
/// At alpha = a/m the part {m*alpha} = 0 comes first (the leftmost strict
/// inequality is relaxed to <=).
inline Permutation sos_from_alpha(int m, const Fraction& alpha) {
  const auto r = detail::fractional_residues(m, alpha, "sos_from_alpha");
  std::vector<int> sigma(static_cast<std::size_t>(m));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::sort(sigma.begin(), sigma.end(), [&](int i, int j) {
    return r[static_cast<std::size_t>(i - 1)] < r[static_cast<std::size_t>(j - 1)];
  });
  return Permutation::from_trusted(std::move(sigma));
}

/// tau_alpha = sigma_alpha^{-1}, evaluated as tau(i) = #{j : {j alpha} <= {i alpha}}.
inline Permutation tau_from_alpha(int m, const Fraction& alpha) {
  const auto r = detail::fractional_residues(m, alpha, "tau_from_alpha");
  std::vector<int> tau(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    int count = 0;
    for (const auto& rj : r) count += rj <= r[i] ? 1 : 0;
    tau[i] = count;
  }
  return Permutation(std::move(tau));
}

/// tau_alpha from the floor-sum closed form
///   tau(i) = m(1 - floor(i a)) + sum_j floor(j a) + sum_j floor((i - j) a),
/// valid only for alpha off the order-m Farey sequence.
inline Permutation tau_explicit(int m, const Fraction& alpha) {
  detail::check_degree(m, "tau_explicit");
  if (alpha.num() <= 0 || alpha.num() >= alpha.den()) {
    throw std::invalid_argument("tau_explicit: alpha must lie in (0, 1), got " + alpha.to_string());
  }
  if (alpha.den() <= m) {
    throw std::domain_error("tau_explicit: " + alpha.to_string() +
                            " is a term of the order-" + std::to_string(m) + " Farey sequence");
  }
  const BigInt& p = alpha.num();
  const BigInt& q = alpha.den();
  auto fl = [&](std::int64_t k) { return floor_div(p * k, q); };

  BigInt floor_sum = 0;
  for (int j = 1; j <= m; ++j) floor_sum += fl(j);

  std::vector<int> tau(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    BigInt value = BigInt(m) * (1 - fl(i)) + floor_sum;
    for (int j = 1; j <= m; ++j) value += fl(i - j);
    if (value < 1 || value > m) {
      throw std::logic_error("tau_explicit: closed form left [m] at i = " + std::to_string(i));
    }
    tau[static_cast<std::size_t>(i - 1)] = value.convert_to<int>();
  }
  return Permutation(std::move(tau));
}

/// theta_{a,b}(i) = Mod_m-bar(a i + b).
inline Permutation theta_ab(int m, std::int64_t a, std::int64_t b) { return affine_permutation(m, a, b); }

/// Sos's three-case recurrence, cases tried in the order they are stated.
inline bool satisfies_sos_recurrence(const Permutation& sigma) {
  const int m = sigma.degree();
  if (m < 2) throw std::domain_error("satisfies_sos_recurrence: degree must be at least 2");
  const int first = sigma(1);
  const int last = sigma(m);
  for (int i = 1; i < m; ++i) {
    const int s = sigma(i);
    int expected;
    if (s <= m - first) {
      expected = s + first;
    } else if (s < last) {
      expected = s + first - last;
    } else {
      expected = s - last;
    }
    if (sigma(i + 1) != expected) return false;
  }
  return true;
}

struct SuranyiEntry {
  FareyInterval interval;
  Permutation tau;
};

/// The bijection between order-m Farey intervals and inverses of Sos permutations.
struct SuranyiTable {
  int m = 0;
  std::vector<SuranyiEntry> entries;

  std::vector<Permutation> permutations() const {
    std::vector<Permutation> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.tau);
    return out;
  }

  /// Index into entries of the interval paired with tau, or entries.size() if absent.
  std::size_t find(const Permutation& tau) const {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].tau == tau) return i;
    }
    return entries.size();
  }
};

/// Evaluates tau at the mediant of every order-m Farey interval, in interval order.
inline SuranyiTable suranyi_table(int m) {
  detail::check_degree(m, "suranyi_table");
  SuranyiTable table{m, {}};
  for (auto& interval : farey_intervals(m)) {
    Fraction alpha = mediant(interval);
    table.entries.push_back({std::move(interval), tau_from_alpha(m, alpha)});
  }
  auto perms = table.permutations();
  std::sort(perms.begin(), perms.end());
  if (std::adjacent_find(perms.begin(), perms.end()) != perms.end()) {
    throw std::logic_error("suranyi_table: two intervals share a permutation at m = " +
                           std::to_string(m));
  }
  return table;
}

enum class Side { below, at, above };

/// The offset used around a/m: 1/(2 m^2), inside (0, 1/m^2).
inline Fraction boundary_epsilon(int m) { return {BigInt(1), BigInt(2) * m * m}; }

/// tau evaluated at a/m - eps, a/m, or a/m + eps.
inline Permutation tau_near_fraction(int m, std::int64_t a, Side side) {
  if (m < 2) throw std::domain_error("tau_near_fraction: degree must be at least 2");
  if (a < 1 || a > m) throw std::invalid_argument("tau_near_fraction: a must lie in [m]");
  if (std::gcd(a, static_cast<std::int64_t>(m)) != 1) {
    throw std::invalid_argument("not invertible: gcd(" + std::to_string(a) + ", " +
                                std::to_string(m) + ") != 1");
  }
  const Fraction center{BigInt(a), BigInt(m)};
  switch (side) {
    case Side::below:
      return tau_from_alpha(m, center - boundary_epsilon(m));
    case Side::above:
      return tau_from_alpha(m, center + boundary_epsilon(m));
    case Side::at:
      break;
  }
  return tau_from_alpha(m, center);
}

/// Ranges for the alpha-side invariant suite.
struct SosCheckOptions {
  int m_min = 2;
  int m_max = 30;
  int mediant_m_max = 50;   // tau_from_alpha vs inverse(sos_from_alpha)
  int samples_per_m = 200;  // random interior rationals for the closed form
  std::uint64_t seed = 20240229;
};

/// Uniform reduced p/q in (0, 1) with m < q <= 4m.
template <typename Rng>
Fraction random_interior_alpha(int m, Rng& rng) {
  std::uniform_int_distribution<std::int64_t> den_dist(m + 1, 4 * static_cast<std::int64_t>(m));
  for (;;) {
    const std::int64_t q = den_dist(rng);
    std::uniform_int_distribution<std::int64_t> num_dist(1, q - 1);
    const std::int64_t p = num_dist(rng);
    if (std::gcd(p, q) == 1) return {p, q};
  }
}

/// Runs the alpha-side identities: counting vs sorting, counting vs closed
/// form, the first/last term formulas, Psi-Gamma compatibility across
/// degrees, and the behavior of tau around a/m.
inline Report verify_sos(const SosCheckOptions& opt = {}) {
  Report report;
  std::mt19937_64 rng(opt.seed);

  for (int m = std::max(opt.m_min, 2); m <= opt.mediant_m_max; ++m) {
    bool ok = true;
    std::string detail;
    for (const auto& interval : farey_intervals(m)) {
      const Fraction alpha = mediant(interval);
      if (tau_from_alpha(m, alpha) != inverse(sos_from_alpha(m, alpha))) {
        ok = false;
        detail = "alpha = " + alpha.to_string();
        break;
      }
    }
    report.add("tau_from_alpha == inverse(sos_from_alpha) at mediants", m, ok, detail);
  }

  for (int m = std::max(opt.m_min, 2); m <= opt.m_max; ++m) {
    bool explicit_ok = true;
    bool first_last_ok = true;
    std::string detail;
    for (int s = 0; s < opt.samples_per_m; ++s) {
      const Fraction alpha = random_interior_alpha(m, rng);
      const Permutation tau = tau_from_alpha(m, alpha);
      if (tau_explicit(m, alpha) != tau) {
        explicit_ok = false;
        detail = "alpha = " + alpha.to_string();
      }
      const BigInt m_alpha_floor = floor_div(alpha.num() * m, alpha.den());
      BigInt floor_sum = 0;
      for (int j = 1; j <= m; ++j) floor_sum += floor_div(alpha.num() * j, alpha.den());
      const BigInt first = 1 + m_alpha_floor;
      const BigInt last = BigInt(2 * m + 1) - BigInt(m + 1) * first + 2 * floor_sum;
      if (BigInt(tau(1)) != first || BigInt(tau(m)) != last) {
        first_last_ok = false;
        detail = "alpha = " + alpha.to_string();
      }
    }
    report.add("tau_explicit == tau_from_alpha (random interior alpha)", m, explicit_ok, detail);
    report.add("tau(1) = 1 + floor(m alpha), tau(m) closed form", m, first_last_ok, detail);
  }

  for (int m = std::max(opt.m_min, 3); m <= opt.m_max; ++m) {
    bool ok = true;
    std::string detail;
    for (const auto& interval : farey_intervals(m)) {
      const Fraction alpha = mediant(interval);
      if (psi(gamma(tau_from_alpha(m, alpha))) != tau_from_alpha(m - 1, alpha)) {
        ok = false;
        detail = "alpha = " + alpha.to_string();
        break;
      }
    }
    report.add("psi(gamma(tau^m_alpha)) == tau^{m-1}_alpha at mediants", m, ok, detail);
  }

  for (int m = std::max(opt.m_min, 2); m <= opt.m_max; ++m) {
    bool ok = true;
    std::string detail;
    for (int a = 1; a <= m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      const bool below = tau_near_fraction(m, a, Side::below) == theta_ab(m, a, 0);
      const bool at = tau_near_fraction(m, a, Side::at) == theta_ab(m, a, 1);
      const bool above = tau_near_fraction(m, a, Side::above) == theta_ab(m, a, 1);
      if (!(below && at && above)) {
        ok = false;
        detail = "a = " + std::to_string(a);
        break;
      }
    }
    report.add("tau around a/m: theta_{a,0} below, theta_{a,1} at and above", m, ok, detail);
  }
  return report;
}

}  // namespace soslift
