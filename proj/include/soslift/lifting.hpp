#pragma once

// Integer-only lifting of V_{m-1} to V_m and the projection V_m -> V_{m-1}.
// Deliberately independent of farey.hpp and sos.hpp: no alpha, no fractions.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "soslift/perm_class.hpp"
#include "soslift/permutation.hpp"
#include "soslift/predicates.hpp"

namespace soslift {

/// Provenance of a lifted child: theta_{a,0}, theta_{a,1}, or the unique child.
enum class BranchTag { none, zero, one };

struct LiftChild {
  Permutation perm;
  BranchTag tag;
};

/// Degrees above this need an explicit force flag.
inline constexpr int kLiftSoftLimit = 500;

/// Children of pi in V_m, in (0)-left, (1)-right order.
inline std::vector<LiftChild> lift_children(const Permutation& pi) {
  const Permutation theta = psi_inverse(pi);
  const int m = theta.degree();
  const auto set = cds(theta);
  if (set.size() == 1) {
    const int a = set[0];
    if (std::gcd(a, m) != 1) {
      throw std::logic_error("lift: singleton difference set {" + std::to_string(a) +
                             "} not coprime to m = " + std::to_string(m));
    }
    return {{affine_permutation(m, a, 0), BranchTag::zero},
            {affine_permutation(m, a, 1), BranchTag::one}};
  }
  if (set.size() == 2 && set[1] == set[0] + 1) {
    return {{shift(theta, set[0]), BranchTag::none}};
  }
  std::string listing;
  for (int v : set) listing += (listing.empty() ? "" : ",") + std::to_string(v);
  throw std::logic_error("lift: difference set {" + listing +
                         "} is neither a singleton nor a consecutive pair; input is not V_{m-1}");
}

/// V_m from V_{m-1}, sorted. Parents are processed in the given order.
inline std::vector<Permutation> lift_once(std::span<const Permutation> previous) {
  std::vector<Permutation> out;
  out.reserve(previous.size() * 2);
  for (const auto& pi : previous) {
    for (auto& child : lift_children(pi)) out.push_back(std::move(child.perm));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline PermClass lift_once(const PermClass& previous) {
  if (previous.label != ClassLabel::V && previous.label != ClassLabel::Sstar) {
    throw std::invalid_argument("lift_once: input must be V_{m-1}");
  }
  return {previous.m + 1, ClassLabel::V, lift_once(std::span<const Permutation>(previous.members))};
}

/// V_1, ..., V_M by repeated lifting from V_1 = {1}.
inline std::vector<PermClass> generate_up_to(int max_m, bool force = false) {
  if (max_m < 1) throw std::invalid_argument("generate_up_to: M must be positive");
  if (max_m > kMaxDegree) throw std::invalid_argument("generate_up_to: M exceeds degree ceiling");
  if (max_m > kLiftSoftLimit && !force) {
    throw std::length_error("generate_up_to: M = " + std::to_string(max_m) + " exceeds " +
                            std::to_string(kLiftSoftLimit) + " (pass force to proceed)");
  }
  std::vector<PermClass> levels;
  levels.reserve(static_cast<std::size_t>(max_m));
  levels.push_back({1, ClassLabel::V, {Permutation::identity(1)}});
  for (int m = 2; m <= max_m; ++m) levels.push_back(lift_once(levels.back()));
  return levels;
}

/// Psi_m(Gamma_m(theta)) for theta in V_m.
inline Permutation project(const Permutation& theta) {
  if (theta.degree() < 2) throw std::domain_error("project: degree must be at least 2");
  if (!in_V(theta)) throw std::domain_error("project: permutation is not in V_m");
  return psi(gamma(theta));
}

/// Parent counts by number of children for one lifting step.
struct FiberCensus {
  int m = 0;  // degree of the children
  std::size_t parents = 0;
  std::size_t one_child = 0;
  std::size_t two_children = 0;
  std::size_t children = 0;
};

inline FiberCensus fiber_census(std::span<const Permutation> previous) {
  FiberCensus census;
  census.m = previous.empty() ? 0 : previous.front().degree() + 1;
  for (const auto& pi : previous) {
    const auto kids = lift_children(pi);
    ++census.parents;
    census.children += kids.size();
    if (kids.size() == 2) {
      ++census.two_children;
    } else {
      ++census.one_child;
    }
  }
  return census;
}

}  // namespace soslift
