#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "soslift/permutation.hpp"

namespace soslift {

enum class ClassLabel { V, W, Y, Yprime, X, Sstar, SstarTilde, VL0, VL1, Vminus, SosRec };

inline constexpr std::array<std::pair<ClassLabel, std::string_view>, 11> kClassLabelNames{{
    {ClassLabel::V, "V"},
    {ClassLabel::W, "W"},
    {ClassLabel::Y, "Y"},
    {ClassLabel::Yprime, "Yprime"},
    {ClassLabel::X, "X"},
    {ClassLabel::Sstar, "Sstar"},
    {ClassLabel::SstarTilde, "SstarTilde"},
    {ClassLabel::VL0, "VL0"},
    {ClassLabel::VL1, "VL1"},
    {ClassLabel::Vminus, "Vminus"},
    {ClassLabel::SosRec, "SosRec"},
}};

inline std::string_view to_string(ClassLabel label) {
  for (const auto& [l, name] : kClassLabelNames) {
    if (l == label) return name;
  }
  return "?";
}

inline ClassLabel parse_class_label(std::string_view text) {
  for (const auto& [l, name] : kClassLabelNames) {
    if (name == text) return l;
  }
  throw std::invalid_argument("unknown permutation class '" + std::string(text) + "'");
}

/// A finite set of permutations of one degree, sorted lexicographically.
struct PermClass {
  int m = 0;
  ClassLabel label = ClassLabel::V;
  std::vector<Permutation> members;

  static PermClass from_unsorted(int m, ClassLabel label, std::vector<Permutation> members) {
    for (const auto& p : members) {
      if (p.degree() != m) throw std::invalid_argument("PermClass: member of wrong degree");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return {m, label, std::move(members)};
  }

  std::size_t size() const { return members.size(); }
  bool contains(const Permutation& p) const {
    return std::binary_search(members.begin(), members.end(), p);
  }
};

}  // namespace soslift
