#pragma once

// Permutations of [m] in one-line notation, the shift action and the
// degree-changing maps used throughout the library.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace soslift {

/// Largest degree accepted anywhere in the library.
inline constexpr int kMaxDegree = 10000;

/// Standard residue of j modulo m, in {0, ..., m-1}.
constexpr std::int64_t mod_m(std::int64_t j, std::int64_t m) {
  std::int64_t r = j % m;
  return r < 0 ? r + m : r;
}

/// Residue of j modulo m taken in [m] = {1, ..., m}: 0 is replaced by m.
constexpr std::int64_t supermod_m(std::int64_t j, std::int64_t m) {
  return mod_m(j - 1, m) + 1;
}

/// A bijection of [m] stored as values[i-1] = theta(i).
///
/// Instances are immutable; every operation below returns a new value.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    validate();
  }

  Permutation(std::initializer_list<int> values)
      : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int m) {
    if (m < 1 || m > kMaxDegree) {
      throw std::invalid_argument("degree out of range: " + std::to_string(m));
    }
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v), Trusted{});
  }

  /// Builds from values already known to form a bijection of [m].
  static Permutation from_trusted(std::vector<int> values) {
    return Permutation(std::move(values), Trusted{});
  }

  int degree() const { return static_cast<int>(values_.size()); }

  /// theta(i) for i in [m].
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> values() const { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  struct Trusted {};
  Permutation(std::vector<int> values, Trusted) : values_(std::move(values)) {}

  void validate() const {
    const auto m = values_.size();
    if (m < 1 || m > static_cast<std::size_t>(kMaxDegree)) {
      throw std::invalid_argument("permutation degree out of range: " + std::to_string(m));
    }
    std::vector<bool> seen(m + 1, false);
    for (int v : values_) {
      if (v < 1 || static_cast<std::size_t>(v) > m || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("not a permutation of [" + std::to_string(m) +
                                    "]: offending value " + std::to_string(v));
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  std::vector<int> values_;
};

/// lambda^k(theta): adds k to every value, range kept in [m].
inline Permutation shift(const Permutation& theta, std::int64_t k) {
  const int m = theta.degree();
  std::vector<int> v(theta.values().begin(), theta.values().end());
  for (int& x : v) x = static_cast<int>(supermod_m(x + k, m));
  return Permutation::from_trusted(std::move(v));
}

/// True iff theta2 is a shift of theta1.
inline bool shift_equivalent(const Permutation& theta1, const Permutation& theta2) {
  if (theta1.degree() != theta2.degree()) {
    throw std::invalid_argument("shift_equivalent: degree mismatch (" +
                                std::to_string(theta1.degree()) + " vs " +
                                std::to_string(theta2.degree()) + ")");
  }
  const int m = theta1.degree();
  // The only candidate k is fixed by position 1.
  const std::int64_t k = mod_m(theta2(1) - theta1(1), m);
  for (int i = 1; i <= m; ++i) {
    if (mod_m(theta2(i) - theta1(i) - k, m) != 0) return false;
  }
  return true;
}

/// Union of the shift orbits of the given permutations, sorted and deduplicated.
inline std::vector<Permutation> shift_closure(std::span<const Permutation> set) {
  std::vector<Permutation> out;
  if (set.empty()) return out;
  const int m = set.front().degree();
  out.reserve(set.size() * static_cast<std::size_t>(m));
  for (const auto& theta : set) {
    if (theta.degree() != m) throw std::invalid_argument("shift_closure: mixed degrees");
    for (int k = 0; k < m; ++k) out.push_back(shift(theta, k));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The unique shift of theta that fixes 1.
inline Permutation gamma(const Permutation& theta) {
  return shift(theta, 1 - static_cast<std::int64_t>(theta(1)));
}

/// Drops the leading 1 of a permutation fixing 1: i -> theta(i+1) - 1.
inline Permutation psi(const Permutation& theta) {
  if (theta.degree() < 2) throw std::domain_error("psi: degree must be at least 2");
  if (theta(1) != 1) {
    throw std::domain_error("psi: permutation does not fix 1 (theta(1) = " +
                            std::to_string(theta(1)) + ")");
  }
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(theta.degree() - 1));
  for (int i = 2; i <= theta.degree(); ++i) v.push_back(theta(i) - 1);
  return Permutation::from_trusted(std::move(v));
}

/// Prepends a fixed point 1: the inverse of psi.
inline Permutation psi_inverse(const Permutation& pi) {
  if (pi.degree() + 1 > kMaxDegree) throw std::invalid_argument("psi_inverse: degree too large");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(pi.degree() + 1));
  v.push_back(1);
  for (int x : pi.values()) v.push_back(x + 1);
  return Permutation::from_trusted(std::move(v));
}

/// The four-term difference functional; entry i-1 holds Delta_theta(i).
inline std::vector<std::int64_t> delta(const Permutation& theta) {
  const int m = theta.degree();
  if (m < 2) throw std::domain_error("delta: degree must be at least 2");
  std::vector<std::int64_t> d;
  d.reserve(static_cast<std::size_t>(m - 1));
  const int first = theta(1);
  const int last = theta(m);
  for (int i = 1; i < m; ++i) {
    const int a = theta(i);
    const int b = theta(i + 1);
    d.push_back(static_cast<std::int64_t>(b) - a + (last <= a ? 1 : 0) - (first <= b ? 1 : 0) -
                static_cast<std::int64_t>(m - 1) * (a <= b ? 1 : 0));
  }
  return d;
}

/// Number of positions j in [m-1] with theta(j) <= theta(j+1).
inline int ascents(const Permutation& theta) {
  int count = 0;
  for (int j = 1; j < theta.degree(); ++j) count += theta(j) <= theta(j + 1) ? 1 : 0;
  return count;
}

/// Congruential difference set {Mod_m(theta(i+1) - theta(i)) : i in [m-1]}, sorted.
inline std::vector<int> cds(const Permutation& theta) {
  const int m = theta.degree();
  if (m < 2) throw std::domain_error("cds: degree must be at least 2");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m - 1));
  for (int i = 1; i < m; ++i) out.push_back(static_cast<int>(mod_m(theta(i + 1) - theta(i), m)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Permutation inverse(const Permutation& theta) {
  std::vector<int> v(static_cast<std::size_t>(theta.degree()));
  for (int i = 1; i <= theta.degree(); ++i) v[static_cast<std::size_t>(theta(i) - 1)] = i;
  return Permutation::from_trusted(std::move(v));
}

/// The affine permutation i -> Mod_m-bar(a*i + b); requires gcd(a, m) = 1.
inline Permutation affine_permutation(int m, std::int64_t a, std::int64_t b) {
  if (m < 1 || m > kMaxDegree) throw std::invalid_argument("degree out of range");
  if (std::gcd(a < 0 ? -a : a, static_cast<std::int64_t>(m)) != 1) {
    throw std::invalid_argument("not invertible: gcd(" + std::to_string(a) + ", " +
                                std::to_string(m) + ") != 1");
  }
  std::vector<int> v(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    v[static_cast<std::size_t>(i - 1)] = static_cast<int>(supermod_m(mod_m(a, m) * i + mod_m(b, m), m));
  }
  return Permutation::from_trusted(std::move(v));
}

}  // namespace soslift

template <>
struct std::hash<soslift::Permutation> {
  std::size_t operator()(const soslift::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : p.values()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    return h;
  }
};
