#pragma once

// Exhaustive enumeration of the permutation classes and the computational
// checks of the identities relating them.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iterator>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "soslift/farey.hpp"
#include "soslift/lifting.hpp"
#include "soslift/perm_class.hpp"
#include "soslift/permutation.hpp"
#include "soslift/predicates.hpp"
#include "soslift/report.hpp"
#include "soslift/sos.hpp"

namespace soslift {

enum class EnumerateMethod { brute, lift, farey };

inline EnumerateMethod parse_method(std::string_view text) {
  if (text == "brute") return EnumerateMethod::brute;
  if (text == "lift") return EnumerateMethod::lift;
  if (text == "farey") return EnumerateMethod::farey;
  throw std::invalid_argument("unknown enumeration method '" + std::string(text) + "'");
}

inline constexpr int kDefaultMaxBruteM = 10;

/// Brute-force degree guard: SOSLIFT_MAX_BRUTE_M if set to a positive integer, else 10.
inline int max_brute_m() {
  if (const char* env = std::getenv("SOSLIFT_MAX_BRUTE_M")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= kMaxDegree) return static_cast<int>(v);
  }
  return kDefaultMaxBruteM;
}

struct EnumerateOptions {
  bool force = false;
  unsigned threads = 1;
};

namespace detail {

// Visits S_m in lexicographic order, one block per leading value. Blocks run
// on up to `threads` workers; each block gets its own sink, and sinks are
// indexed by leading value so concatenating them keeps lexicographic order.
template <typename Sink, typename Visit>
std::vector<Sink> for_each_permutation_blocked(int m, unsigned threads, Visit visit) {
  std::vector<Sink> sinks(static_cast<std::size_t>(m));
  auto run_block = [&](int lead) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(m));
    v.push_back(lead);
    for (int x = 1; x <= m; ++x) {
      if (x != lead) v.push_back(x);
    }
    auto& sink = sinks[static_cast<std::size_t>(lead - 1)];
    do {
      visit(Permutation::from_trusted(v), sink);
    } while (std::next_permutation(v.begin() + 1, v.end()));
  };
  threads = std::max(1u, std::min(threads, static_cast<unsigned>(m)));
  if (threads == 1) {
    for (int lead = 1; lead <= m; ++lead) run_block(lead);
    return sinks;
  }
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (int lead = static_cast<int>(w) + 1; lead <= m; lead += static_cast<int>(threads)) {
        run_block(lead);
      }
    });
  }
  for (auto& t : workers) t.join();
  return sinks;
}

inline void check_brute_guard(int m, const EnumerateOptions& opt) {
  if (m < 2) throw std::domain_error("brute-force enumeration needs m >= 2");
  const int limit = max_brute_m();
  if (m > limit && !opt.force) {
    throw std::length_error("refusing brute-force enumeration of S_" + std::to_string(m) +
                            " (limit m <= " + std::to_string(limit) +
                            "; pass force or set SOSLIFT_MAX_BRUTE_M)");
  }
}

}  // namespace detail

/// All theta in S_m with pred(theta), in lexicographic order.
inline std::vector<Permutation> brute_filter(int m, const std::function<bool(const Permutation&)>& pred,
                                             const EnumerateOptions& opt = {}) {
  detail::check_brute_guard(m, opt);
  auto blocks = detail::for_each_permutation_blocked<std::vector<Permutation>>(
      m, opt.threads, [&](Permutation p, std::vector<Permutation>& sink) {
        if (pred(p)) sink.push_back(std::move(p));
      });
  std::vector<Permutation> out;
  for (auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// Inverses of sigma_alpha over the mediants of all order-m Farey intervals.
inline std::vector<Permutation> sos_inverse_image(int m) {
  std::vector<Permutation> out;
  for (const auto& interval : farey_intervals(m)) out.push_back(inverse(sos_from_alpha(m, mediant(interval))));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

inline std::function<bool(const Permutation&)> membership(ClassLabel label, int m) {
  switch (label) {
    case ClassLabel::V:
      return [](const Permutation& p) { return in_V(p); };
    case ClassLabel::W:
      return [](const Permutation& p) { return in_W(p); };
    case ClassLabel::Y:
      return [](const Permutation& p) { return in_Y(p); };
    case ClassLabel::Yprime:
      if (m < 3) throw std::domain_error("Yprime is defined for m >= 3");
      return [](const Permutation& p) { return in_Yprime(p); };
    case ClassLabel::X:
      return [](const Permutation& p) { return in_X(p); };
    case ClassLabel::VL0:
      return [](const Permutation& p) { return in_VL0(p); };
    case ClassLabel::VL1:
      return [](const Permutation& p) { return in_VL1(p); };
    case ClassLabel::Vminus:
      return [](const Permutation& p) { return in_V(p) && !in_VL1(p); };
    case ClassLabel::SosRec:
      return [](const Permutation& p) { return satisfies_sos_recurrence(p); };
    case ClassLabel::Sstar: {
      auto image = std::make_shared<std::vector<Permutation>>(sos_inverse_image(m));
      return [image](const Permutation& p) { return std::binary_search(image->begin(), image->end(), p); };
    }
    case ClassLabel::SstarTilde: {
      const auto base = sos_inverse_image(m);
      auto image = std::make_shared<std::vector<Permutation>>(shift_closure(base));
      return [image](const Permutation& p) { return std::binary_search(image->begin(), image->end(), p); };
    }
  }
  throw std::logic_error("unhandled class label");
}

}  // namespace detail

/// Enumerates one class by brute force, by lifting from V_1, or from the Farey table.
inline PermClass enumerate(ClassLabel label, int m, EnumerateMethod method, const EnumerateOptions& opt = {}) {
  if (m < 1 || m > kMaxDegree) throw std::invalid_argument("enumerate: degree out of range");
  switch (method) {
    case EnumerateMethod::brute:
      return {m, label, brute_filter(m, detail::membership(label, m), opt)};
    case EnumerateMethod::lift:
      if (label != ClassLabel::V && label != ClassLabel::Sstar) {
        throw std::invalid_argument("method lift only produces V and Sstar");
      }
      return {m, label, generate_up_to(m, opt.force).back().members};
    case EnumerateMethod::farey: {
      if (label != ClassLabel::V && label != ClassLabel::Sstar) {
        throw std::invalid_argument("method farey only produces V and Sstar");
      }
      if (m < 2) throw std::domain_error("method farey needs m >= 2");
      return PermClass::from_unsorted(m, label, suranyi_table(m).permutations());
    }
  }
  throw std::logic_error("unhandled method");
}

/// The classes defined by predicates, from one pass over S_m.
struct BruteClasses {
  int m = 0;
  std::vector<Permutation> V, W, Y, Yprime, X, SosRec;
};

inline BruteClasses brute_classes(int m, const EnumerateOptions& opt = {}) {
  detail::check_brute_guard(m, opt);
  auto blocks = detail::for_each_permutation_blocked<BruteClasses>(
      m, opt.threads, [m](const Permutation& p, BruteClasses& sink) {
        if (in_V(p)) sink.V.push_back(p);
        if (in_W(p)) sink.W.push_back(p);
        if (in_Y(p)) sink.Y.push_back(p);
        if (m >= 3 && in_Yprime(p)) sink.Yprime.push_back(p);
        if (in_X(p)) sink.X.push_back(p);
        if (satisfies_sos_recurrence(p)) sink.SosRec.push_back(p);
      });
  BruteClasses out;
  out.m = m;
  for (auto& b : blocks) {
    auto move_into = [](std::vector<Permutation>& dst, std::vector<Permutation>& src) {
      dst.insert(dst.end(), src.begin(), src.end());
    };
    move_into(out.V, b.V);
    move_into(out.W, b.W);
    move_into(out.Y, b.Y);
    move_into(out.Yprime, b.Yprime);
    move_into(out.X, b.X);
    move_into(out.SosRec, b.SosRec);
  }
  return out;
}

namespace detail {

inline bool is_subset(std::span<const Permutation> a, std::span<const Permutation> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::string sizes(std::size_t a, std::size_t b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

}  // namespace detail

/// Exhaustive checks of the class identities for m = 2..m_max.
inline Report verify_theorems(int m_max, const EnumerateOptions& opt = {}) {
  if (m_max < 2) throw std::invalid_argument("verify_theorems: m_max must be at least 2");
  Report report;
  const auto phi = totient_sieve(m_max);
  std::vector<Permutation> previous_W{Permutation::identity(1)};  // W_1 := S_1
  std::vector<Permutation> previous_V{Permutation::identity(1)};

  std::int64_t phi_sum = 1;
  for (int m = 2; m <= m_max; ++m) {
    const std::int64_t phi_sum_below = phi_sum;
    phi_sum += phi[static_cast<std::size_t>(m)];
    const std::int64_t phi_m = phi[static_cast<std::size_t>(m)];

    const BruteClasses c = brute_classes(m, opt);

    report.add("V = W", m, c.V == c.W, detail::sizes(c.V.size(), c.W.size()));
    report.add("W subset of V", m, detail::is_subset(c.W, c.V));
    report.add("W subset of Y", m, detail::is_subset(c.W, c.Y));
    if (m >= 3) report.add("Y = Yprime", m, c.Y == c.Yprime, detail::sizes(c.Y.size(), c.Yprime.size()));
    report.add("Y is shift-closed", m, shift_closure(c.Y) == c.Y);
    report.add("V subset of X", m, detail::is_subset(c.V, c.X));
    report.add("X = shift_closure(V)", m, shift_closure(c.V) == c.X);

    const auto farey_perms = PermClass::from_unsorted(m, ClassLabel::Sstar, suranyi_table(m).permutations()).members;
    report.add("Sstar (Farey table) = V", m, farey_perms == c.V);
    report.add("Sstar (sigma_alpha at mediants) = V", m, sos_inverse_image(m) == c.V);

    report.add("|V| = sum phi(k), k <= m", m, static_cast<std::int64_t>(c.V.size()) == phi_sum,
               std::to_string(c.V.size()) + " vs " + std::to_string(phi_sum));
    report.add("|Y| = m * sum phi(k), k < m", m,
               static_cast<std::int64_t>(c.Y.size()) == m * phi_sum_below,
               std::to_string(c.Y.size()) + " vs " + std::to_string(m * phi_sum_below));

    const auto singles = std::count_if(c.V.begin(), c.V.end(), [](const Permutation& p) { return cds(p).size() == 1; });
    report.add("#{theta in V : |cds| = 1} = 2 phi(m)", m, singles == 2 * phi_m,
               std::to_string(singles) + " vs " + std::to_string(2 * phi_m));

    std::vector<Permutation> psi_image;
    for (const auto& p : c.Y) {
      if (p(1) == 1) psi_image.push_back(psi(p));
    }
    std::sort(psi_image.begin(), psi_image.end());
    report.add("Psi(S^1 cap Y_m) = W_{m-1}", m, psi_image == previous_W);

    // Affine layers theta_{a,0} and theta_{a,1}.
    std::vector<Permutation> l0, l1;
    for (int a = 1; a <= m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      l0.push_back(theta_ab(m, a, 0));
      l1.push_back(theta_ab(m, a, 1));
    }
    std::sort(l0.begin(), l0.end());
    std::sort(l1.begin(), l1.end());
    std::vector<Permutation> both;
    std::set_intersection(l0.begin(), l0.end(), l1.begin(), l1.end(), std::back_inserter(both));
    const bool layers_ok = both.empty() && detail::is_subset(l0, c.V) && detail::is_subset(l1, c.V) &&
                           static_cast<std::int64_t>(l0.size()) == phi_m &&
                           static_cast<std::int64_t>(l1.size()) == phi_m;
    report.add("VL0, VL1 disjoint, inside V, each of size phi(m)", m, layers_ok);
    const auto vminus = std::count_if(c.V.begin(), c.V.end(), [](const Permutation& p) { return !in_VL1(p); });
    report.add("|Vminus| = |V| - phi(m)", m,
               vminus == static_cast<std::int64_t>(c.V.size()) - phi_m);

    if (m >= 3) {
      // Group V by shift class (the representative fixing 1).
      std::map<Permutation, std::vector<Permutation>> classes;
      for (const auto& p : c.V) classes[gamma(p)].push_back(p);
      bool ok = true;
      for (const auto& [rep, members] : classes) {
        if (members.size() == 1) continue;
        if (members.size() != 2) {
          ok = false;
          break;
        }
        const bool split = (in_VL0(members[0]) && in_VL1(members[1])) || (in_VL1(members[0]) && in_VL0(members[1]));
        const bool exclusive = !(in_VL0(members[0]) && in_VL1(members[0])) && !(in_VL0(members[1]) && in_VL1(members[1]));
        if (!split || !exclusive) {
          ok = false;
          break;
        }
      }
      report.add("shift-equivalent pairs in V split across VL0 / VL1", m, ok);
    }

    const auto lifted = lift_once(std::span<const Permutation>(previous_V));
    report.add("lift_once(V_{m-1}) = V_m", m, lifted == c.V);

    const bool rec_ok = std::all_of(c.V.begin(), c.V.end(),
                                    [](const Permutation& p) { return satisfies_sos_recurrence(inverse(p)); });
    report.add("Sos recurrence holds on inverses of V", m, rec_ok);

    previous_W = c.W;
    previous_V = c.V;
  }
  return report;
}

/// Recurrence-satisfying permutations side by side with the inverses of V_m.
struct SosRecurrenceSurvey {
  int m = 0;
  std::vector<Permutation> satisfying;
  std::vector<Permutation> sos;  // inverses of V_m, i.e. S_m
  bool contains_sos = false;
  bool equal = false;
};

inline SosRecurrenceSurvey enumerate_sos_recurrence(int m, const EnumerateOptions& opt = {}) {
  SosRecurrenceSurvey s;
  s.m = m;
  s.satisfying = brute_filter(m, [](const Permutation& p) { return satisfies_sos_recurrence(p); }, opt);
  for (const auto& theta : brute_filter(m, [](const Permutation& p) { return in_V(p); }, opt)) {
    s.sos.push_back(inverse(theta));
  }
  std::sort(s.sos.begin(), s.sos.end());
  s.contains_sos = detail::is_subset(s.sos, s.satisfying);
  s.equal = s.sos == s.satisfying;
  return s;
}

}  // namespace soslift
