#pragma once

// Command-line front end. Exit codes: 0 success / all checks pass,
// 1 a verification failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "soslift/soslift.hpp"

namespace soslift::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

enum class SetFormat { oneline, json };

inline SetFormat parse_set_format(const std::string& text) {
  if (text == "oneline") return SetFormat::oneline;
  if (text == "json") return SetFormat::json;
  throw std::invalid_argument("unknown format '" + text + "'");
}

inline void print_set(std::ostream& out, const std::vector<Permutation>& perms, SetFormat format) {
  for (const auto& p : perms) {
    if (format == SetFormat::json) {
      out << to_json(p).dump() << '\n';
    } else {
      out << format_permutation(p) << '\n';
    }
  }
}

inline int print_report(std::ostream& out, const Report& report, bool json) {
  if (json) {
    nlohmann::json doc = {{"passed", report.passed()}, {"checks", nlohmann::json::array()}};
    for (const auto& c : report.checks) {
      doc["checks"].push_back({{"name", c.name}, {"m", c.m}, {"passed", c.passed}, {"detail", c.detail}});
    }
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS" : "FAIL") << "  m=" << c.m << "  " << c.name;
      if (!c.passed && !c.detail.empty()) out << "  (" << c.detail << ")";
      out << '\n';
    }
    out << (report.passed() ? "all checks passed" : std::to_string(report.failures()) + " check(s) failed")
        << '\n';
  }
  return report.passed() ? kExitOk : kExitCheckFailed;
}

inline std::vector<Permutation> read_permutation_lines(std::istream& in) {
  std::vector<Permutation> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (line[0] == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception&) {
        throw std::invalid_argument("malformed JSON line '" + line + "'");
      }
      out.push_back(permutation_from_json(j));
    } else {
      out.push_back(parse_permutation(line));
    }
  }
  return out;
}

}  // namespace detail

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inverses of Sos permutations: enumeration, lifting, Farey correspondence"};
  app.require_subcommand(1);

  // enumerate
  std::string set_label, method = "brute", format = "oneline";
  int m = 0;
  bool force = false;
  unsigned threads = 1;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List a permutation class");
  enumerate_cmd->add_option("--set", set_label, "V W Y Yprime X Sstar SstarTilde VL0 VL1 Vminus SosRec")->required();
  enumerate_cmd->add_option("--m", m, "Degree")->required();
  enumerate_cmd->add_option("--method", method, "brute | lift | farey");
  enumerate_cmd->add_option("--format", format, "oneline | json");
  enumerate_cmd->add_flag("--force", force, "Lift the brute-force / lifting size guards");
  enumerate_cmd->add_option("--threads", threads, "Worker threads for brute force");

  // lift
  std::optional<int> from_m, to_m;
  std::string input;
  bool census = false;
  auto* lift_cmd = app.add_subcommand("lift", "Lift V_M to V_{M+1}, or run the recursion up to V_M");
  auto* from_opt = lift_cmd->add_option("--from-m", from_m, "Lift V_M (regenerated, or read from --input)");
  auto* to_opt = lift_cmd->add_option("--to-m", to_m, "Run the recursion from V_1 up to V_M");
  from_opt->excludes(to_opt);
  lift_cmd->add_option("--input", input, "JSON-lines or one-line file holding V_M ('-' for stdin)")->needs(from_opt);
  lift_cmd->add_option("--format", format, "oneline | json");
  lift_cmd->add_flag("--force", force, "Allow degrees above the soft limit");
  lift_cmd->add_flag("--census", census, "Print the two-child parent count per level instead of the set");

  // project
  std::string perm_text;
  auto* project_cmd = app.add_subcommand("project", "Project theta in V_m to V_{m-1}");
  project_cmd->add_option("--perm", perm_text, "Permutation in one-line notation")->required();
  project_cmd->add_option("--format", format, "oneline | json");

  // tau
  std::string alpha_text, tau_method = "count";
  auto* tau_cmd = app.add_subcommand("tau", "Print tau_alpha (inverse of the Sos permutation)");
  tau_cmd->add_option("--m", m, "Degree")->required();
  tau_cmd->add_option("--alpha", alpha_text, "Rational P/Q in (0, 1)")->required();
  tau_cmd->add_option("--method", tau_method, "count | explicit | sigma (prints sigma_alpha instead)");
  tau_cmd->add_option("--format", format, "oneline | json");

  // farey
  auto* farey_cmd = app.add_subcommand("farey", "Print the order-m Farey sequence and its intervals");
  farey_cmd->add_option("--m", m, "Order")->required();
  farey_cmd->add_option("--format", format, "oneline | json");

  // tree
  int depth = 0;
  std::string kind = "gen", tree_format = "dot";
  bool with_y = false;
  auto* tree_cmd = app.add_subcommand("tree", "Export the generation tree and/or the Farey tree");
  tree_cmd->add_option("--depth", depth, "Number of levels")->required();
  tree_cmd->add_option("--kind", kind, "gen | farey | both");
  tree_cmd->add_option("--format", tree_format, "dot | json");
  tree_cmd->add_flag("--with-y-levels", with_y, "Interleave the fixed-point-1 representatives");

  // verify
  int m_max = 0;
  std::uint64_t seed = SosCheckOptions{}.seed;
  int sos_m_max = SosCheckOptions{}.m_max;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive class identities plus alpha-side identities");
  verify_cmd->add_option("--m-max", m_max, "Largest degree for exhaustive checks")->required();
  verify_cmd->add_option("--seed", seed, "Seed for random rational samples");
  verify_cmd->add_option("--sos-m-max", sos_m_max, "Largest degree for the alpha-side identities");
  verify_cmd->add_option("--format", format, "text | json");
  verify_cmd->add_flag("--force", force, "Allow m-max above the brute-force guard");
  verify_cmd->add_option("--threads", threads, "Worker threads for brute force");

  // verify-tree
  auto* verify_tree_cmd = app.add_subcommand("verify-tree", "Check T_M against the Farey tree");
  verify_tree_cmd->add_option("--depth", depth, "Number of levels")->required();
  verify_tree_cmd->add_option("--format", format, "text | json");

  // sosrec
  auto* sosrec_cmd = app.add_subcommand("sosrec", "Compare recurrence solutions with Sos permutations");
  sosrec_cmd->add_option("--m", m, "Degree")->required();
  sosrec_cmd->add_option("--format", format, "text | json");
  sosrec_cmd->add_flag("--force", force, "Allow m above the brute-force guard");

  std::vector<const char*> argv{"soslift"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (enumerate_cmd->parsed()) {
      const auto label = parse_class_label(set_label);
      const auto fmt = detail::parse_set_format(format);
      const auto cls = enumerate(label, m, parse_method(method), {force, threads});
      detail::print_set(out, cls.members, fmt);
      return kExitOk;
    }

    if (lift_cmd->parsed()) {
      const auto fmt = detail::parse_set_format(format);
      if (to_m) {
        const auto levels = generate_up_to(*to_m, force);
        if (census) {
          const auto phi = totient_sieve(*to_m);
          for (std::size_t l = 1; l < levels.size(); ++l) {
            const auto c = fiber_census(levels[l - 1].members);
            out << "m=" << c.m << " parents=" << c.parents << " two_children=" << c.two_children
                << " phi=" << phi[static_cast<std::size_t>(c.m)] << " size=" << levels[l].size() << '\n';
          }
        } else {
          detail::print_set(out, levels.back().members, fmt);
        }
        return kExitOk;
      }
      if (!from_m) throw std::invalid_argument("lift needs --from-m or --to-m");
      std::vector<Permutation> previous;
      if (input.empty()) {
        previous = generate_up_to(*from_m, force).back().members;
      } else if (input == "-") {
        previous = detail::read_permutation_lines(std::cin);
      } else {
        std::ifstream file(input);
        if (!file) throw std::invalid_argument("cannot open input file '" + input + "'");
        previous = detail::read_permutation_lines(file);
      }
      for (const auto& p : previous) {
        if (p.degree() != *from_m) {
          throw std::invalid_argument("input permutation " + format_permutation(p) + " is not of degree " +
                                      std::to_string(*from_m));
        }
        if (p.degree() >= 2 && !in_V(p)) {
          throw std::invalid_argument("input permutation " + format_permutation(p) + " is not in V_" +
                                      std::to_string(*from_m));
        }
      }
      if (census) {
        const auto c = fiber_census(previous);
        out << "m=" << c.m << " parents=" << c.parents << " two_children=" << c.two_children << '\n';
      } else {
        detail::print_set(out, lift_once(std::span<const Permutation>(previous)), fmt);
      }
      return kExitOk;
    }

    if (project_cmd->parsed()) {
      const auto fmt = detail::parse_set_format(format);
      detail::print_set(out, {project(parse_permutation(perm_text))}, fmt);
      return kExitOk;
    }

    if (tau_cmd->parsed()) {
      const auto fmt = detail::parse_set_format(format);
      const Fraction alpha = parse_fraction(alpha_text);
      Permutation result = Permutation::identity(1);
      if (tau_method == "count") {
        result = tau_from_alpha(m, alpha);
      } else if (tau_method == "explicit") {
        result = tau_explicit(m, alpha);
      } else if (tau_method == "sigma") {
        result = sos_from_alpha(m, alpha);
      } else {
        throw std::invalid_argument("unknown tau method '" + tau_method + "'");
      }
      detail::print_set(out, {result}, fmt);
      return kExitOk;
    }

    if (farey_cmd->parsed()) {
      const auto fmt = detail::parse_set_format(format);
      const auto terms = farey_sequence(m);
      const auto intervals = farey_intervals(m);
      if (fmt == detail::SetFormat::json) {
        nlohmann::json doc = {{"m", m}, {"sequence", nlohmann::json::array()}, {"intervals", nlohmann::json::array()}};
        for (const auto& f : terms) doc["sequence"].push_back(to_json(f));
        for (const auto& iv : intervals) doc["intervals"].push_back(to_json(iv));
        out << doc.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? " " : "") << terms[i];
        out << '\n';
        for (const auto& iv : intervals) out << iv.index << ' ' << iv.to_string() << '\n';
      }
      return kExitOk;
    }

    if (tree_cmd->parsed()) {
      const auto fmt = parse_tree_format(tree_format);
      if (kind != "gen" && kind != "farey" && kind != "both") {
        throw std::invalid_argument("unknown tree kind '" + kind + "'");
      }
      if (kind == "both" && fmt == TreeFormat::json) {
        nlohmann::json doc = {{"gen", nlohmann::json::parse(export_tree(build_gen_tree(depth), fmt, with_y))},
                              {"farey", nlohmann::json::parse(export_tree(build_farey_tree(depth), fmt))}};
        out << doc.dump(2) << '\n';
        return kExitOk;
      }
      if (kind != "farey") out << export_tree(build_gen_tree(depth), fmt, with_y);
      if (kind != "gen") out << export_tree(build_farey_tree(depth), fmt);
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      if (m_max < 2) throw std::invalid_argument("--m-max must be at least 2");
      const int limit = max_brute_m();
      if (m_max > limit && !force) {
        throw std::length_error("--m-max " + std::to_string(m_max) + " exceeds the brute-force limit " +
                                std::to_string(limit));
      }
      Report report = verify_theorems(m_max, {force, threads});
      SosCheckOptions opt;
      opt.m_max = sos_m_max;
      opt.mediant_m_max = std::max(sos_m_max, 2);
      opt.seed = seed;
      report.append(verify_sos(opt));
      return detail::print_report(out, report, format == "json");
    }

    if (verify_tree_cmd->parsed()) {
      return detail::print_report(out, check_isomorphism(depth), format == "json");
    }

    if (sosrec_cmd->parsed()) {
      const auto survey = enumerate_sos_recurrence(m, {force, 1});
      std::vector<Permutation> extra;
      std::set_difference(survey.satisfying.begin(), survey.satisfying.end(), survey.sos.begin(),
                          survey.sos.end(), std::back_inserter(extra));
      if (format == "json") {
        nlohmann::json doc = {{"m", m},
                              {"satisfying_count", survey.satisfying.size()},
                              {"sos_count", survey.sos.size()},
                              {"contains_sos", survey.contains_sos},
                              {"equal", survey.equal},
                              {"extra", nlohmann::json::array()}};
        for (const auto& p : extra) doc["extra"].push_back(format_permutation(p));
        out << doc.dump(2) << '\n';
      } else {
        out << "m=" << m << " satisfying=" << survey.satisfying.size() << " sos=" << survey.sos.size()
            << " contains_sos=" << (survey.contains_sos ? "yes" : "no") << " equal=" << (survey.equal ? "yes" : "no")
            << '\n';
        for (const auto& p : extra) out << "extra " << format_permutation(p) << '\n';
      }
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace soslift::cli
