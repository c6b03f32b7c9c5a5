#pragma once

// The generation tree T_M of the lifting, the Farey-interval tree T_{F,M},
// the isomorphism check between them, and DOT / JSON export.

#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "soslift/farey.hpp"
#include "soslift/io.hpp"
#include "soslift/lifting.hpp"
#include "soslift/permutation.hpp"
#include "soslift/predicates.hpp"
#include "soslift/report.hpp"
#include "soslift/sos.hpp"

namespace soslift {

inline constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

struct GenNode {
  Permutation perm;
  BranchTag tag = BranchTag::none;
  std::size_t parent = kNoParent;
  std::vector<std::size_t> children;  // indices into the next level

  friend bool operator==(const GenNode&, const GenNode&) = default;
};

/// levels[m-1] holds the degree-m nodes, left to right.
struct GenTree {
  int depth = 0;
  std::vector<std::vector<GenNode>> levels;

  friend bool operator==(const GenTree&, const GenTree&) = default;
};

struct FareyNode {
  FareyInterval interval;
  std::size_t parent = kNoParent;
  std::vector<std::size_t> children;
};

struct FareyTree {
  int depth = 0;
  std::vector<std::vector<FareyNode>> levels;
};

inline std::string_view tag_label(BranchTag tag) {
  switch (tag) {
    case BranchTag::zero:
      return "(0)";
    case BranchTag::one:
      return "(1)";
    case BranchTag::none:
      break;
  }
  return "";
}

/// T_M grown forward: each node's children are its lift, (0) left of (1).
inline GenTree build_gen_tree(int depth) {
  if (depth < 1) throw std::invalid_argument("build_gen_tree: depth must be positive");
  if (depth > kLiftSoftLimit) throw std::length_error("build_gen_tree: depth too large");
  GenTree tree{depth, {}};
  tree.levels.push_back({GenNode{Permutation::identity(1), BranchTag::none, kNoParent, {}}});
  for (int m = 2; m <= depth; ++m) {
    auto& parents = tree.levels.back();
    std::vector<GenNode> level;
    for (std::size_t p = 0; p < parents.size(); ++p) {
      for (auto& child : lift_children(parents[p].perm)) {
        parents[p].children.push_back(level.size());
        level.push_back({std::move(child.perm), child.tag, p, {}});
      }
    }
    tree.levels.push_back(std::move(level));
  }
  return tree;
}

/// T_M rebuilt backward from the sets V_m and the projection edges alone.
inline GenTree build_gen_tree_by_projection(int depth) {
  if (depth < 1) throw std::invalid_argument("build_gen_tree_by_projection: depth must be positive");
  const auto sets = generate_up_to(depth);
  GenTree tree{depth, {}};
  tree.levels.push_back({GenNode{Permutation::identity(1), BranchTag::none, kNoParent, {}}});
  for (int m = 2; m <= depth; ++m) {
    auto& parents = tree.levels.back();
    std::map<Permutation, std::size_t> parent_index;
    for (std::size_t p = 0; p < parents.size(); ++p) parent_index.emplace(parents[p].perm, p);

    std::vector<std::vector<Permutation>> fibers(parents.size());
    for (const auto& theta : sets[static_cast<std::size_t>(m - 1)].members) {
      const auto it = parent_index.find(project(theta));
      if (it == parent_index.end()) throw std::logic_error("projection left V_{m-1}");
      fibers[it->second].push_back(theta);
    }
    std::vector<GenNode> level;
    for (std::size_t p = 0; p < parents.size(); ++p) {
      auto& fiber = fibers[p];
      if (fiber.size() == 2) {
        if (in_VL1(fiber[0])) std::swap(fiber[0], fiber[1]);
        parents[p].children = {level.size(), level.size() + 1};
        level.push_back({fiber[0], BranchTag::zero, p, {}});
        level.push_back({fiber[1], BranchTag::one, p, {}});
      } else if (fiber.size() == 1) {
        parents[p].children = {level.size()};
        level.push_back({fiber[0], BranchTag::none, p, {}});
      } else {
        throw std::logic_error("projection fiber of size " + std::to_string(fiber.size()));
      }
    }
    tree.levels.push_back(std::move(level));
  }
  return tree;
}

/// T_{F,M}: level m lists the order-m Farey intervals; edges by containment.
inline FareyTree build_farey_tree(int depth) {
  if (depth < 1) throw std::invalid_argument("build_farey_tree: depth must be positive");
  FareyTree tree{depth, {}};
  for (int m = 1; m <= depth; ++m) {
    std::vector<FareyNode> level;
    for (auto& interval : farey_intervals(m)) level.push_back({std::move(interval), kNoParent, {}});
    if (m > 1) {
      auto& parents = tree.levels.back();
      std::size_t p = 0;
      for (std::size_t c = 0; c < level.size(); ++c) {
        while (p < parents.size() && !parents[p].interval.contains(level[c].interval)) ++p;
        if (p == parents.size()) throw std::logic_error("Farey interval without a parent");
        level[c].parent = p;
        parents[p].children.push_back(c);
      }
    }
    tree.levels.push_back(std::move(level));
  }
  return tree;
}

/// Checks that T_M equals T_{S,M}, the Farey tree with every interval
/// replaced by its Suranyi permutation, node for node and in horizontal
/// order, plus the interval-splitting rule at every parent.
inline Report check_isomorphism(int depth) {
  Report report;
  const GenTree gen = build_gen_tree(depth);
  const FareyTree farey = build_farey_tree(depth);
  const auto phi = totient_sieve(depth);

  std::vector<SuranyiTable> tables;
  for (int m = 1; m <= depth; ++m) tables.push_back(suranyi_table(m));

  for (int m = 1; m <= depth; ++m) {
    const auto& gl = gen.levels[static_cast<std::size_t>(m - 1)];
    const auto& fl = farey.levels[static_cast<std::size_t>(m - 1)];
    const auto& table = tables[static_cast<std::size_t>(m - 1)];

    bool same = gl.size() == fl.size() && fl.size() == table.entries.size();
    std::string detail;
    for (std::size_t t = 0; same && t < fl.size(); ++t) {
      if (!(table.entries[t].interval == fl[t].interval)) {
        same = false;
        detail = "table and tree disagree on interval " + std::to_string(t + 1);
      } else if (table.entries[t].tau != gl[t].perm) {
        same = false;
        detail = "position " + std::to_string(t + 1) + ": " + format_permutation(gl[t].perm) +
                 " vs " + format_permutation(table.entries[t].tau);
      } else if (gl[t].children != fl[t].children || gl[t].parent != fl[t].parent) {
        same = false;
        detail = "edges differ at position " + std::to_string(t + 1);
      }
    }
    if (detail.empty() && !same) detail = "level widths " + std::to_string(gl.size()) + " vs " + std::to_string(fl.size());
    report.add("T_M level equals T_{S,M} level (nodes, order, edges)", m, same, detail);

    const std::int64_t width = m == 1 ? 1 : totient_sum(m);
    report.add("level width = sum phi(k)", m, static_cast<std::int64_t>(gl.size()) == width);

    if (m == 1) continue;
    // Interval splitting from level m-1 to level m.
    const auto& parents = gen.levels[static_cast<std::size_t>(m - 2)];
    const auto& prev_table = tables[static_cast<std::size_t>(m - 2)];
    std::size_t branching = 0;
    bool split_ok = true;
    std::string split_detail;
    for (const auto& parent : parents) {
      const std::size_t pi_index = prev_table.find(parent.perm);
      if (pi_index == prev_table.entries.size()) {
        split_ok = false;
        split_detail = "parent missing from Suranyi table";
        break;
      }
      const FareyInterval& outer = prev_table.entries[pi_index].interval;
      if (parent.children.size() == 1) {
        const auto& child = gl[parent.children[0]].perm;
        const std::size_t ci = table.find(child);
        if (ci == table.entries.size() || table.entries[ci].interval.lo != outer.lo ||
            table.entries[ci].interval.hi != outer.hi) {
          split_ok = false;
          split_detail = "non-branching parent " + format_permutation(parent.perm) + " changes interval";
          break;
        }
      } else if (parent.children.size() == 2) {
        ++branching;
        const auto& left = gl[parent.children[0]].perm;
        const auto& right = gl[parent.children[1]].perm;
        const int a = left(1);
        const bool affine = std::gcd(a, m) == 1 && left == theta_ab(m, a, 0) && right == theta_ab(m, a, 1);
        const Fraction cut(a, m);
        const std::size_t li = table.find(left);
        const std::size_t ri = table.find(right);
        const bool found = li < table.entries.size() && ri < table.entries.size();
        const bool split = found && table.entries[li].interval.lo == outer.lo &&
                           table.entries[li].interval.hi == cut && table.entries[ri].interval.lo == cut &&
                           table.entries[ri].interval.hi == outer.hi && outer.contains(cut);
        if (!affine || !split) {
          split_ok = false;
          split_detail = "branching parent " + format_permutation(parent.perm) + " does not split at " +
                         cut.to_string();
          break;
        }
      } else {
        split_ok = false;
        split_detail = "parent with " + std::to_string(parent.children.size()) + " children";
        break;
      }
    }
    report.add("intervals kept by single children, split at a/m by branching parents", m, split_ok, split_detail);
    report.add("branching parents at level m-1 = phi(m)", m,
               split_ok && static_cast<std::int64_t>(branching) == phi[static_cast<std::size_t>(m)],
               std::to_string(branching) + " vs " + std::to_string(phi[static_cast<std::size_t>(m)]));
  }

  report.add("forward and projection constructions of T_M agree", 0, build_gen_tree_by_projection(depth) == gen);
  return report;
}

enum class TreeFormat { dot, json };

inline TreeFormat parse_tree_format(std::string_view text) {
  if (text == "dot") return TreeFormat::dot;
  if (text == "json") return TreeFormat::json;
  throw std::invalid_argument("unknown tree format '" + std::string(text) + "'");
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline nlohmann::json gen_node_json(const GenTree& tree, std::size_t level, std::size_t index, bool with_y) {
  const GenNode& node = tree.levels[level][index];
  nlohmann::json children = nlohmann::json::array();
  for (std::size_t c : node.children) children.push_back(gen_node_json(tree, level + 1, c, with_y));
  if (with_y && !node.children.empty()) {
    nlohmann::json y = {{"label", format_permutation(psi_inverse(node.perm))},
                        {"tag", nullptr},
                        {"kind", "Y"},
                        {"children", std::move(children)}};
    children = nlohmann::json::array({std::move(y)});
  }
  nlohmann::json out = {{"label", format_permutation(node.perm)}};
  out["tag"] = node.tag == BranchTag::none ? nlohmann::json(nullptr) : nlohmann::json(tag_label(node.tag));
  if (with_y) out["kind"] = "V";
  out["children"] = std::move(children);
  return out;
}

inline nlohmann::json farey_node_json(const FareyTree& tree, std::size_t level, std::size_t index) {
  const FareyNode& node = tree.levels[level][index];
  nlohmann::json children = nlohmann::json::array();
  for (std::size_t c : node.children) children.push_back(farey_node_json(tree, level + 1, c));
  return {{"label", node.interval.to_string()}, {"tag", nullptr}, {"children", std::move(children)}};
}

}  // namespace detail

/// DOT or nested JSON. With with_y_levels, psi_inverse(pi) is inserted
/// between each parent pi and its children (interleaved levels).
inline std::string export_tree(const GenTree& tree, TreeFormat format, bool with_y_levels = false) {
  if (format == TreeFormat::json) return detail::gen_node_json(tree, 0, 0, with_y_levels).dump(2) + "\n";

  std::ostringstream os;
  os << "digraph generation_tree {\n  graph [ordering=out];\n  node [shape=plaintext];\n";
  std::vector<std::vector<std::string>> ids(tree.levels.size());
  std::size_t counter = 0;
  for (std::size_t l = 0; l < tree.levels.size(); ++l) {
    for (const auto& node : tree.levels[l]) {
      const std::string id = "n" + std::to_string(counter++);
      ids[l].push_back(id);
      os << "  " << id << " [label=<" << format_permutation(node.perm);
      if (node.tag != BranchTag::none) os << "<SUP>" << tag_label(node.tag) << "</SUP>";
      os << ">];\n";
    }
  }
  for (std::size_t l = 0; l + 1 < tree.levels.size(); ++l) {
    for (std::size_t i = 0; i < tree.levels[l].size(); ++i) {
      const auto& node = tree.levels[l][i];
      if (node.children.empty()) continue;
      std::string from = ids[l][i];
      if (with_y_levels) {
        const std::string y = "y" + std::to_string(counter++);
        os << "  " << y << " [label=\"" << format_permutation(psi_inverse(node.perm))
           << "\", fontcolor=gray40];\n";
        os << "  " << from << " -> " << y << ";\n";
        from = y;
      }
      for (std::size_t c : node.children) os << "  " << from << " -> " << ids[l + 1][c] << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

inline std::string export_tree(const FareyTree& tree, TreeFormat format) {
  if (format == TreeFormat::json) return detail::farey_node_json(tree, 0, 0).dump(2) + "\n";

  std::ostringstream os;
  os << "digraph farey_tree {\n  graph [ordering=out];\n  node [shape=plaintext];\n";
  std::vector<std::vector<std::string>> ids(tree.levels.size());
  std::size_t counter = 0;
  for (std::size_t l = 0; l < tree.levels.size(); ++l) {
    for (const auto& node : tree.levels[l]) {
      const std::string id = "f" + std::to_string(counter++);
      ids[l].push_back(id);
      os << "  " << id << " [label=\"" << detail::dot_escape(node.interval.to_string()) << "\"];\n";
    }
  }
  for (std::size_t l = 0; l + 1 < tree.levels.size(); ++l) {
    for (std::size_t i = 0; i < tree.levels[l].size(); ++i) {
      for (std::size_t c : tree.levels[l][i].children) os << "  " << ids[l][i] << " -> " << ids[l + 1][c] << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace soslift
