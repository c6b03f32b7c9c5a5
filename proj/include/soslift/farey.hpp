#pragma once

// Exact fractions and order-m Farey sequences.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace soslift {

using BigInt = boost::multiprecision::cpp_int;

/// Floor of num/den for den > 0, correct for negative num.
inline BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) --q;
  return q;
}

/// Reduced rational number with positive denominator.
class Fraction {
 public:
  Fraction(BigInt num = 0, BigInt den = 1) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("fraction with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  Fraction(std::int64_t num, std::int64_t den) : Fraction(BigInt(num), BigInt(den)) {}
  Fraction(int num, int den) : Fraction(BigInt(num), BigInt(den)) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  BigInt floor() const { return floor_div(num_, den_); }

  std::string to_string() const { return num_.str() + "/" + den_.str(); }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend bool operator<(const Fraction& a, const Fraction& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
  friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
  friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }

  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.to_string(); }

 private:
  BigInt num_;
  BigInt den_;
};

/// Parses "p/q" (or a bare integer "p"). Decimal and exponent forms are rejected.
inline Fraction parse_fraction(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed fraction '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw bad();
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw bad();
    }
    return BigInt(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text), 1);
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw bad();
  return Fraction(parse_int(text.substr(0, slash)), std::move(den));
}

/// Open interval (lo, hi) between successive Farey terms; index is 1-based.
struct FareyInterval {
  Fraction lo;
  Fraction hi;
  std::size_t index = 0;

  bool contains(const Fraction& x) const { return lo < x && x < hi; }
  bool contains(const FareyInterval& other) const { return lo <= other.lo && other.hi <= hi; }
  std::string to_string() const { return "(" + lo.to_string() + ", " + hi.to_string() + ")"; }

  friend bool operator==(const FareyInterval&, const FareyInterval&) = default;
};

/// phi(0..n) by a linear sieve.
inline std::vector<std::int64_t> totient_sieve(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("totient_sieve: negative bound");
  std::vector<std::int64_t> phi(static_cast<std::size_t>(n + 1), 0);
  std::vector<std::int64_t> primes;
  if (n >= 1) phi[1] = 1;
  for (std::int64_t i = 2; i <= n; ++i) {
    if (phi[static_cast<std::size_t>(i)] == 0) {
      phi[static_cast<std::size_t>(i)] = i - 1;
      primes.push_back(i);
    }
    for (std::int64_t p : primes) {
      const std::int64_t ip = i * p;
      if (ip > n) break;
      if (i % p == 0) {
        phi[static_cast<std::size_t>(ip)] = phi[static_cast<std::size_t>(i)] * p;
        break;
      }
      phi[static_cast<std::size_t>(ip)] = phi[static_cast<std::size_t>(i)] * (p - 1);
    }
  }
  return phi;
}

/// Euler's totient of a single n (trial division).
inline std::int64_t totient(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("totient: n must be positive");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Sum of phi(k) for k = 1..m, i.e. the number of order-m Farey intervals.
inline std::int64_t totient_sum(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("totient_sum: m must be positive");
  std::int64_t sum = 0;
  for (std::int64_t v : totient_sieve(m)) sum += v;
  return sum;
}

/// All reduced p/q in [0, 1] with q <= m, ascending.
///
/// Uses the next-term recurrence: after a/b < c/d the following term is
/// (k*c - a)/(k*d - b) with k = floor((m + b)/d).
inline std::vector<Fraction> farey_sequence(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("farey_sequence: m must be positive");
  std::vector<Fraction> out;
  out.reserve(static_cast<std::size_t>(totient_sum(m) + 1));
  std::int64_t a = 0, b = 1, c = 1, d = m;
  out.emplace_back(a, b);
  while (c <= m) {
    out.emplace_back(c, d);
    if (c == d) break;
    const std::int64_t k = (m + b) / d;
    const std::int64_t e = k * c - a;
    const std::int64_t f = k * d - b;
    a = c;
    b = d;
    c = e;
    d = f;
  }
  return out;
}

/// The open intervals between successive order-m Farey terms, indexed 1..N.
inline std::vector<FareyInterval> farey_intervals(std::int64_t m) {
  const auto terms = farey_sequence(m);
  std::vector<FareyInterval> out;
  out.reserve(terms.size() - 1);
  for (std::size_t t = 1; t < terms.size(); ++t) out.push_back({terms[t - 1], terms[t], t});
  return out;
}

inline Fraction mediant(const Fraction& lo, const Fraction& hi) {
  return {lo.num() + hi.num(), lo.den() + hi.den()};
}

/// The mediant of the interval endpoints; lies strictly inside.
inline Fraction mediant(const FareyInterval& interval) { return mediant(interval.lo, interval.hi); }

}  // namespace soslift
