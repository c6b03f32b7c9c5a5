#pragma once

// Brute-force reference computations used only by the tests. Each one
// follows the textbook definition and shares no code path with the library
// routine it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Line = std::vector<int>;

inline Line parse(const char* digits) {
  Line v;
  for (const char* c = digits; *c; ++c) v.push_back(*c - '0');
  return v;
}

/// theta' = theta + k (mod m, range [m]) for some k in [m].
inline bool shift_equivalent(const Line& a, const Line& b) {
  const int m = static_cast<int>(a.size());
  for (int k = 1; k <= m; ++k) {
    bool all = true;
    for (int i = 0; i < m && all; ++i) all = ((a[i] + k - 1) % m) + 1 == b[i];
    if (all) return true;
  }
  return false;
}

/// Reduced p/q, q <= m, in [0, 1], sorted by cross multiplication.
inline std::vector<std::pair<std::int64_t, std::int64_t>> farey(std::int64_t m) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t q = 1; q <= m; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end(), [](auto x, auto y) { return x.first * y.second < y.first * x.second; });
  return out;
}

inline std::int64_t totient_sum(std::int64_t m) {
  std::int64_t s = 0;
  for (std::int64_t k = 1; k <= m; ++k) {
    for (std::int64_t j = 1; j <= k; ++j) s += std::gcd(j, k) == 1 ? 1 : 0;
  }
  return s;
}

/// sigma_alpha for alpha = p/q by sorting i in [m] on (i p mod q).
inline Line sigma(int m, std::int64_t p, std::int64_t q) {
  Line idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 1);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return (i * p) % q < (j * p) % q; });
  return idx;
}

inline Line inverse(const Line& v) {
  Line inv(v.size());
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == static_cast<int>(pos + 1)) inv[pos] = static_cast<int>(j + 1);
    }
  }
  return inv;
}

inline std::vector<Line> all_permutations(int m) {
  Line v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Line> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// V_m as the set of inverses of Sos permutations over all alpha = p/q with
/// q up to 2m + 1 (every order-m Farey interval contains such a fraction).
inline std::vector<Line> sos_inverses(int m) {
  std::vector<Line> out;
  for (std::int64_t q = m + 1; q <= 2 * m + 1; ++q) {
    for (std::int64_t p = 1; p < q; ++p) out.push_back(inverse(sigma(m, p, q)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace oracle
