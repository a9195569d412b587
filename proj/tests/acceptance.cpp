// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubeprof/cli.hpp"
#include "cubeprof/constructor.hpp"
#include "cubeprof/explorer.hpp"
#include "cubeprof/oracle.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace cubeprof;
using Clock = std::chrono::steady_clock;

namespace {

// Time limits, in seconds.
constexpr double kExhaustiveLimit = 60.0;
constexpr double kSampleLimit = 1.0;
constexpr double kBaseCaseLimit = 10.0;
constexpr double kHamiltonLimit = 600.0;
constexpr double kMiddleLimit = 300.0;
constexpr double kPropertyLimit = 300.0;

constexpr std::uint64_t kSeed = 20240611;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& why) {
    if (!cond && pass) {
      pass = false;
      detail << " [" << why << "]";
    }
  }
};

// Every vertex of Q^n covered exactly once, by a direct bitmap.
bool covers_everything(const Matching& m) {
  std::vector<char> hit(m.dim().vertex_count(), 0);
  for (const Edge& e : m.edges()) {
    if (hit[e.base]++ || hit[e.other()]++) return false;
  }
  return std::ranges::all_of(hit, [](char c) { return c == 1; });
}

// Every length-n tuple with entries <= cap and sum <= bound, by odometer.
std::vector<Profile> all_tuples(int n, std::uint64_t cap, std::uint64_t bound) {
  std::vector<Profile> out;
  Profile x(static_cast<std::size_t>(n));
  while (true) {
    if (x.sum() <= bound) out.push_back(x);
    int i = 0;
    while (i < n && x[static_cast<std::size_t>(i)] == cap) x[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++x[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<Profile> all_orderings(Profile x) {
  std::vector<std::uint64_t> v = x.counts();
  std::sort(v.begin(), v.end());
  std::vector<Profile> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

void criterion_1(Outcome& v) {
  const std::uint64_t expected[] = {2, 6, 35, 495, 20349};
  const auto t0 = Clock::now();
  std::size_t total = 0;
  for (int n = 2; n <= 6; ++n) {
    const auto tuples = testing::perfect_even_tuples(n);
    const std::uint64_t stars_bars = testing::compositions((std::uint64_t{1} << (n - 1)) / 2, n);
    v.require(tuples.size() == stars_bars, "tuple count n=" + std::to_string(n));
    v.require(tuples.size() == expected[n - 2], "expected count n=" + std::to_string(n));
    for (const auto& x : tuples) {
      const Matching m = construct_even(x, Dimension(n));
      v.require(verify(m, x, true).accepted(), "rejected " + x.to_string());
    }
    total += tuples.size();
    v.detail << " n=" << n << ":" << tuples.size();
  }
  const double s = seconds_since(t0);
  v.require(s < kExhaustiveLimit, "too slow");
  v.detail << " total " << total << " in " << s << "s";
}

void criterion_2(Outcome& v) {
  std::mt19937_64 rng(kSeed);
  const Dimension d(16);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const auto c = testing::random_composition(d.half() / 2, 16, rng);
    Profile x(16);
    for (std::size_t i = 0; i < 16; ++i) x[i] = 2 * c[i];
    const auto t0 = Clock::now();
    const Matching m = construct_even(x, d);
    const bool ok = verify(m, x, true).accepted();
    const double s = seconds_since(t0);
    worst = std::max(worst, s);
    v.require(ok, "rejected " + x.to_string());
    v.require(s < kSampleLimit, "slow on " + x.to_string());
    v.require(m.size() == 32768, "edge count");
    v.require(covers_everything(m), "cover of 65536 vertices");
  }
  v.detail << " 100 tuples at n=16, slowest " << worst << "s";
}

void criterion_3(Outcome& v) {
  DecideOptions opts;
  opts.oracle_max_dimension = 4;
  std::size_t checked = 0, disagreements = 0, unknown = 0, oracle_routed = 0;
  for (int n = 1; n <= 4; ++n) {
    const Dimension d(n);
    for (const auto& x : all_tuples(n, d.half(), d.half())) {
      const Decision dec = decide(x, d, opts);
      const auto truth = exists_with_profile(d, x);
      ++checked;
      const bool agree =
          (dec.kind() == VerdictKind::admissible && truth.status == SearchStatus::found) ||
          (dec.kind() == VerdictKind::not_admissible && truth.status == SearchStatus::exhausted);
      if (!agree) {
        ++disagreements;
        v.require(false, "disagree at " + x.to_string());
      }
      if (dec.kind() == VerdictKind::unknown) ++unknown;
      if (const auto* a = std::get_if<Admissible>(&dec.verdict); a && a->route == "oracle") {
        ++oracle_routed;
      }
      if (dec.witness()) {
        v.require(verify(*dec.witness(), x, x.sum() == d.half()).accepted(),
                  "witness rejected at " + x.to_string());
      }
      if (x.sum() < d.half()) {
        v.require(truth.status == SearchStatus::found, "sum below half not admissible " +
                                                           x.to_string());
      }
    }
  }
  v.detail << " " << checked << " profiles, " << disagreements << " disagreements, "
           << oracle_routed << " settled by the oracle fallback, " << unknown << " unknown";
}

void criterion_4(Outcome& v) {
  std::size_t odd_perfect = 0;
  for (int n = 2; n <= 4; ++n) {
    const Dimension d(n);
    for (const auto& x : all_tuples(n, d.half(), d.half())) {
      if (x.sum() != d.half()) continue;
      if (std::ranges::all_of(x, [](std::uint64_t c) { return c % 2 == 0; })) continue;
      ++odd_perfect;
      v.require(exists_with_profile(d, x).status == SearchStatus::exhausted,
                "odd perfect realised " + x.to_string());
    }
  }
  std::mt19937_64 rng(kSeed + 4);
  std::uniform_int_distribution<int> dim(2, 30);
  int rejections = 0;
  while (rejections < 1000) {
    const int n = dim(rng);
    const Dimension d(n);
    const auto c = testing::random_composition(d.half(), n, rng);
    if (std::ranges::all_of(c, [](std::uint64_t k) { return k % 2 == 0; })) continue;
    const Profile x{std::vector<std::uint64_t>(c)};
    ++rejections;
    const Decision dec = decide(x, d);
    v.require(dec.witness() == nullptr, "witness for " + x.to_string());
    v.require(dec.kind() == VerdictKind::not_admissible &&
                  std::get<NotAdmissible>(dec.verdict).reason == Reason::perfect_but_odd,
              "not rejected " + x.to_string());
  }
  v.detail << " " << odd_perfect << " odd perfect profiles exhausted for n<=4, "
           << rejections << " random rejections up to n=30";
}

void criterion_5(Outcome& v) {
  const auto t0 = Clock::now();
  const auto r = exists_with_profile(Dimension(5), Profile{3, 3, 3, 3, 3});
  const double s = seconds_since(t0);
  v.require(r.status == SearchStatus::found && r.witness, "not found");
  if (r.witness) {
    v.require(verify(*r.witness, Profile{3, 3, 3, 3, 3}, false).accepted(), "witness rejected");
  }
  v.require(s < kBaseCaseLimit, "too slow");
  const auto failures = base_case_self_test();
  v.require(failures.empty(), failures.empty() ? "" : failures.front());
  std::ostringstream out, err;
  const std::vector<std::string> args{"cube_profiles", "selftest"};
  v.require(cli::run(args, out, err) == cli::kOk, "selftest exit code");
  v.detail << " oracle found (3,3,3,3,3) in " << r.nodes_explored << " nodes, " << s
           << "s; selftest: " << out.str().substr(0, out.str().find('\n'));
}

void criterion_6(Outcome& v) {
  const auto table = base_case_table();
  const auto it = std::ranges::find(table, Profile{1, 1, 1}, &BaseCase::profile);
  v.require(it != table.end(), "no (1,1,1) base case");
  if (it == table.end()) return;
  const Matching m = double_and_extend(it->matching);
  v.require(profile_of(m) == Profile{2, 2, 2, 2}, "profile " + profile_of(m).to_string());
  v.require(covers_everything(m), "not perfect");
  v.detail << " (1,1,1) -> " << profile_of(m).to_string();
}

void criterion_7(Outcome& v) {
  auto conjectured = [](int n) {
    const std::uint64_t total = std::uint64_t{1} << n;
    std::set<Profile> out;
    for (const auto& x : all_tuples(n, total / 2, total)) {
      if (x.sum() != total) continue;
      if (std::ranges::all_of(x, [](std::uint64_t c) { return c % 2 == 0 && c >= 2; })) {
        out.insert(x);
      }
    }
    return out;
  };
  const auto h3 = hamilton_profiles(Dimension(3));
  const auto perms = all_orderings(Profile{4, 2, 2});
  const std::set<Profile> got3(h3.profiles.begin(), h3.profiles.end());
  v.require(got3 == std::set<Profile>(perms.begin(), perms.end()), "n=3 not perms of (4,2,2)");
  v.require(got3 == conjectured(3), "n=3 differs from conjecture");

  const auto t0 = Clock::now();
  SearchBudget budget;
  budget.time_limit = std::chrono::milliseconds(static_cast<long>(kHamiltonLimit * 1000));
  const auto h4 = hamilton_profiles(Dimension(4), budget);
  const double s = seconds_since(t0);
  v.require(h4.complete && s < kHamiltonLimit, "n=4 incomplete");
  const std::set<Profile> got4(h4.profiles.begin(), h4.profiles.end());
  for (const auto& x : h4.profiles) {
    for (const auto& p : all_orderings(x)) {
      v.require(got4.contains(p), "not closed under permutation at " + x.to_string());
    }
  }
  const auto c4 = conjectured(4);
  std::size_t missing = 0, unexpected = 0;
  for (const auto& x : c4) missing += !got4.contains(x);
  for (const auto& x : got4) unexpected += !c4.contains(x);
  v.detail << " n=3: " << got3.size() << " profiles; n=4: " << h4.cycles << " cycles, "
           << got4.size() << " profiles vs " << c4.size() << " conjectured, " << missing
           << " missing, " << unexpected << " unexpected, " << s << "s";
}

void criterion_8(Outcome& v) {
  const auto r = face_decomposition_profiles(Dimension(4));
  v.require(r.complete, "incomplete");
  v.require(r.decompositions == testing::brute_force_face_decompositions(4), "count");
  PairWeighting k4(4);
  k4.at(0, 1) = 2;
  k4.at(2, 3) = 2;
  for (const auto& wc : r.weightings) {
    const auto& w = wc.weighting;
    v.require(w != k4, "K4 weighting present");
    for (int i = 0; i < 4; ++i) {
      std::uint64_t inc = 0;
      for (int j = 0; j < 4; ++j) {
        if (j != i) inc += w.at(i, j);
      }
      v.require(inc % 2 == 0, "parity fails on " + w.to_string());
      v.require(2 * inc == 8, "conservation fails on " + w.to_string());
    }
  }
  const auto fc = check_face_weighting(k4, Dimension(4));
  v.detail << " " << r.decompositions << " decompositions, " << r.weightings.size()
           << " weightings; K4 weighting absent, eliminated by: "
           << (fc.conservation ? "none" : "edge-count conservation");
}

void criterion_9(Outcome& v) {
  const auto m1 = middle_layer_profiles(1);
  v.require(m1.complete && m1.profiles == std::vector<Profile>{{1, 1, 1}}, "M_1");
  const auto t0 = Clock::now();
  SearchBudget budget;
  budget.time_limit = std::chrono::milliseconds(static_cast<long>(kMiddleLimit * 1000));
  const auto m2 = middle_layer_profiles(2, budget);
  const double s = seconds_since(t0);
  v.require(m2.complete && s < kMiddleLimit, "M_2 incomplete");
  const auto t = testing::pascal(5);
  const std::uint64_t total = t[5][3], cap = t[3][1];
  for (const auto& x : m2.profiles) {
    v.require(x.sum() == total, "sum " + x.to_string());
    for (auto c : x) {
      v.require(c % 2 == total % 2, "parity " + x.to_string());
      v.require(c <= cap, "cap " + x.to_string());
    }
  }
  v.detail << " M_1 " << m1.matchings << " matchings; M_2 " << m2.matchings << " matchings, "
           << m2.profiles.size() << " profiles in " << s << "s";
  for (const auto& x : m2.profiles) v.detail << " " << x.to_string();
}

void criterion_10(Outcome& v) {
  const auto p2 = permutahedron_profiles(2);
  v.require(p2.matchings == 2, "Perm(2) count");
  for (const auto& wc : p2.weightings) {
    v.require(std::ranges::all_of(wc.weighting.weights(), [](auto c) { return c == 1; }),
              "Perm(2) weighting " + wc.weighting.to_string());
  }
  const auto p3 = permutahedron_profiles(3);
  for (const auto& wc : p3.weightings) {
    const auto& w = wc.weighting;
    v.require(std::ranges::all_of(w.weights(), [](auto c) { return c % 2 == 0; }),
              "odd weight " + w.to_string());
    v.require(w.at(0, 1) + w.at(2, 3) == 4 && w.at(0, 2) + w.at(1, 3) == 4 &&
                  w.at(0, 3) + w.at(1, 2) == 4,
              "pair sums " + w.to_string());
  }
  v.detail << " Perm(2) " << p2.matchings << " matchings; Perm(3) " << p3.matchings
           << " matchings, " << p3.weightings.size() << " weightings, equal to the "
           << (p3.equals_interior_points ? "strictly interior"
               : p3.equals_closed_points ? "closed (not strictly interior)"
                                         : "neither")
           << " even points";
}

void criterion_11(Outcome& v) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(kSeed + 11);
  const std::vector<std::pair<const char*, std::function<testing::Failures()>>> suites{
      {"partial order", [&] { return testing::partial_order_laws(rng); }},
      {"construct equivariance", [&] { return testing::construct_equivariance(rng); }},
      {"decide equivariance", [&] { return testing::decide_equivariance(rng); }},
      {"oracle symmetry", [&] { return testing::oracle_symmetry(rng); }},
      {"lift_half", [&] { return testing::lift_half_postcondition(rng, 10000); }},
      {"group action", [&] { return testing::permutation_group_action(rng); }},
      {"matching invariants", [&] { return testing::matching_invariants(rng); }},
  };
  for (const auto& [name, run] : suites) {
    const auto f = run();
    v.require(f.empty(), std::string(name) + (f.empty() ? "" : ": " + f.front()));
  }
  const auto t = testing::pascal(40);
  for (std::uint64_t a = 0; a <= 40; ++a) {
    for (std::uint64_t b = 0; b <= a; ++b) {
      v.require(lucas_parity(a, b) == (t[a][b] % 2 ? Parity::odd : Parity::even),
                "lucas_parity at " + std::to_string(a) + "," + std::to_string(b));
    }
  }
  const double s = seconds_since(t0);
  v.require(s < kPropertyLimit, "too slow");
  v.detail << " " << suites.size() << " suites plus lucas_parity for top<=40 in " << s << "s";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Outcome&)>> criteria{
      {"exhaustive perfect even tuples, n=2..6", criterion_1},
      {"sampled perfect even tuples, n=16", criterion_2},
      {"decide agrees with the oracle, n<=4", criterion_3},
      {"no odd perfect profile is realised", criterion_4},
      {"(3,3,3,3,3) base case and selftest", criterion_5},
      {"doubling (1,1,1) gives (2,2,2,2)", criterion_6},
      {"Hamilton cycle profiles, n=3 and n=4", criterion_7},
      {"4-cycle decompositions of Q^4", criterion_8},
      {"middle layer graphs M_1 and M_2", criterion_9},
      {"permutahedra Perm(2) and Perm(3)", criterion_10},
      {"property suites", criterion_11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome v;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << (i + 1) << ". " << criteria[i].first
              << ":" << v.detail.str() << " (" << seconds_since(t0) << "s)" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
