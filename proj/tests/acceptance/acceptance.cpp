// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "soslift/soslift.hpp"

using namespace soslift;

namespace {

constexpr int kBruteMax = 8;
constexpr int kLiftFareyMax = 12;
constexpr int kScaleM = 200;
constexpr double kBruteSeconds = 60.0;
constexpr double kScaleSeconds = 10.0;
constexpr int kTreeDepth = 12;
constexpr double kTreeSeconds = 30.0;
constexpr int kSosMMax = 30;
constexpr int kSosSamples = 200;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool subset(const std::vector<Permutation>& a, const std::vector<Permutation>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

int failures = 0;

void report(const char* id, const char* what, const Outcome& o) {
  std::printf("[%s] %s %s%s%s\n", o.ok ? "PASS" : "FAIL", id, what, o.detail.empty() ? "" : "  -- ",
              o.detail.c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

void criterion(const char* id, const char* what, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  report(id, what, o);
}

}  // namespace

int main() {
  // One brute-force sweep feeds criteria 1-4 and 10.
  std::vector<BruteClasses> brute;
  std::string brute_error;
  const auto t0 = Clock::now();
  try {
    for (int m = 2; m <= kBruteMax; ++m) brute.push_back(brute_classes(m));
  } catch (const std::exception& e) {
    brute_error = e.what();
  }
  const double brute_time = seconds_since(t0);
  auto need_brute = [&] {
    if (!brute_error.empty()) throw std::runtime_error("brute-force sweep failed: " + brute_error);
  };

  criterion("AC1", "|V_m| = sum phi(k), m=2..8, < 60 s", [&](Outcome& o) {
    need_brute();
    for (const auto& c : brute) {
      if (static_cast<std::int64_t>(c.V.size()) != totient_sum(c.m)) {
        o.fail("m=" + std::to_string(c.m) + " |V|=" + std::to_string(c.V.size()));
      }
    }
    if (brute_time >= kBruteSeconds) o.fail("brute sweep took " + std::to_string(brute_time) + " s");
    o.detail = o.ok ? "|V_6|=" + std::to_string(brute[4].V.size()) + ", " + std::to_string(brute_time) + " s"
                    : o.detail;
  });
  criterion("AC2", "|Y_m| = m * sum_{k<m} phi(k), m=3..8", [&](Outcome& o) {
    need_brute();
    for (const auto& c : brute) {
      if (c.m < 3) continue;
      if (static_cast<std::int64_t>(c.Y.size()) != c.m * totient_sum(c.m - 1)) {
        o.fail("m=" + std::to_string(c.m) + " |Y|=" + std::to_string(c.Y.size()));
      }
    }
  });
  criterion("AC3", "V_m = W_m and W_m subset of Y_m, m=2..8", [&](Outcome& o) {
    need_brute();
    for (const auto& c : brute) {
      if (c.V != c.W) o.fail("V != W at m=" + std::to_string(c.m));
      if (!subset(c.W, c.Y)) o.fail("W not in Y at m=" + std::to_string(c.m));
    }
  });
  criterion("AC4", "X_m = shift closure of V_m, m=2..8", [&](Outcome& o) {
    need_brute();
    for (const auto& c : brute) {
      if (c.X != shift_closure(c.V)) o.fail("m=" + std::to_string(c.m));
    }
  });
  criterion("AC5", "lift_once = brute V_m (m=2..8) and = Farey table (m=2..12)", [&](Outcome& o) {
    need_brute();
    const auto levels = generate_up_to(kLiftFareyMax);
    for (int m = 2; m <= kLiftFareyMax; ++m) {
      const auto lifted = lift_once(levels[static_cast<std::size_t>(m - 2)]).members;
      if (m <= kBruteMax && lifted != brute[static_cast<std::size_t>(m - 2)].V) {
        o.fail("lift != brute at m=" + std::to_string(m));
      }
      auto farey = suranyi_table(m).permutations();
      std::sort(farey.begin(), farey.end());
      if (lifted != farey) o.fail("lift != Farey table at m=" + std::to_string(m));
    }
  });
  criterion("AC6", "generate_up_to(200) < 10 s, size = totient sum, phi(m) two-child parents", [&](Outcome& o) {
    const auto t1 = Clock::now();
    const auto levels = generate_up_to(kScaleM);
    const double elapsed = seconds_since(t1);
    if (elapsed >= kScaleSeconds) o.fail("took " + std::to_string(elapsed) + " s");
    const auto phi = totient_sieve(kScaleM);
    std::int64_t sum = 0;
    for (int k = 1; k <= kScaleM; ++k) sum += phi[static_cast<std::size_t>(k)];
    if (static_cast<std::int64_t>(levels.back().size()) != sum) {
      o.fail("|V_200|=" + std::to_string(levels.back().size()) + " expected " + std::to_string(sum));
    }
    for (int m = 2; m <= kScaleM; ++m) {
      const auto census = fiber_census(levels[static_cast<std::size_t>(m - 2)].members);
      if (static_cast<std::int64_t>(census.two_children) != phi[static_cast<std::size_t>(m)]) {
        o.fail("two-child parents at m=" + std::to_string(m));
      }
    }
    if (o.ok) o.detail = "|V_200|=" + std::to_string(sum) + ", " + std::to_string(elapsed) + " s";
  });
  criterion("AC7", "generation tree levels 1..6 match the golden rows", [&](Outcome& o) {
    const std::vector<std::vector<std::string>> golden{
        {"1"},
        {"12", "21"},
        {"123", "231", "213", "321"},
        {"1234", "2341", "2413", "3142", "3214", "4321"},
        {"12345", "23451", "24513", "24135", "35241", "31425", "42531", "42153", "43215", "54321"},
        {"123456", "234561", "245613", "246135", "351462", "362514", "415263", "426315", "531642", "532164",
         "543216", "654321"},
    };
    const auto tree = build_gen_tree(6);
    for (std::size_t l = 0; l < golden.size(); ++l) {
      std::vector<std::string> row;
      for (const auto& n : tree.levels[l]) row.push_back(format_permutation(n.perm));
      if (row != golden[l]) o.fail("level " + std::to_string(l + 1));
    }
  });
  criterion("AC8", "generation tree = Farey tree incl. interval splitting, M=1..12, < 30 s", [&](Outcome& o) {
    const auto t2 = Clock::now();
    for (int depth = 1; depth <= kTreeDepth; ++depth) {
      const auto r = check_isomorphism(depth);
      for (const auto& c : r.checks) {
        if (!c.passed) o.fail("M=" + std::to_string(depth) + " " + c.name + " m=" + std::to_string(c.m));
      }
    }
    const double elapsed = seconds_since(t2);
    if (elapsed >= kTreeSeconds) o.fail("took " + std::to_string(elapsed) + " s");
  });
  criterion("AC9", "closed form, first/last terms, Psi-Gamma compatibility, boundary at a/m", [&](Outcome& o) {
    SosCheckOptions opt;
    opt.m_min = 2;
    opt.m_max = kSosMMax;
    opt.mediant_m_max = kSosMMax;
    opt.samples_per_m = kSosSamples;
    const auto r = verify_sos(opt);
    for (const auto& c : r.checks) {
      if (!c.passed) o.fail(c.name + " m=" + std::to_string(c.m) + " " + c.detail);
    }
  });
  criterion("AC10", "Sos recurrence holds on inverses of V_m, m=2..8", [&](Outcome& o) {
    need_brute();
    for (const auto& c : brute) {
      for (const auto& theta : c.V) {
        if (!satisfies_sos_recurrence(inverse(theta))) o.fail(format_permutation(theta));
      }
    }
  });

  std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed"
                                    : ("acceptance: " + std::to_string(failures) + " criteria failed").c_str());
  return failures == 0 ? 0 : 1;
}
