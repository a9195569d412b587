#include "cubeprof/constructor.hpp"

#include <algorithm>
#include <bit>

#include "cubeprof/io.hpp"
#include "cubeprof/oracle.hpp"
#include "cubeprof/profiles.hpp"

namespace cubeprof {

const char* to_string(Reason r) {
  switch (r) {
    case Reason::perfect_but_odd: return "perfect-but-odd";
    case Reason::sum_exceeds_half: return "sum-exceeds-half";
    case Reason::coordinate_exceeds_direction_class: return "coordinate-exceeds-direction-class";
    case Reason::oracle_exhausted: return "oracle-exhausted";
  }
  return "unknown";
}

namespace {

// Derived once with exists_with_profile and frozen.
std::vector<BaseCase> make_base_cases() {
  std::vector<BaseCase> table;
  table.push_back({Profile{1}, Matching::from_edges(Dimension(1), {{0, 0}}),
                   R"({"n":1,"edges":[[0,1]]})"});
  table.push_back({Profile{1, 1, 1},
                   Matching::from_edges(Dimension(3), {{0, 0}, {5, 1}, {2, 2}}),
                   R"({"n":3,"edges":[[0,1],[2,6],[5,7]]})"});
  table.push_back(
      {Profile{3, 3, 3, 3, 3},
       Matching::from_edges(Dimension(5), {{0, 0},  {2, 0},  {4, 0},  {8, 1},  {24, 1},
                                           {29, 1}, {16, 2}, {17, 2}, {19, 2}, {6, 3},
                                           {7, 3},  {22, 3}, {9, 4},  {11, 4}, {12, 4}}),
       R"({"n":5,"edges":[[0,1],[2,3],[4,5],[6,14],[7,15],[8,10],[9,25],[11,27],[12,28],)"
       R"([16,20],[17,21],[19,23],[22,30],[24,26],[29,31]]})"});
  return table;
}

// Inverse of an order vector: inverse[order[k]] = k.
std::vector<int> inverse(const std::vector<int>& order) {
  std::vector<int> inv(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) inv[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  return inv;
}

// A matching with profile y taken from a base case of the same dimension
// whose profile dominates y up to reordering of coordinates.
std::optional<Matching> from_base_case(const Profile& y, Dimension dim) {
  const std::vector<int> y_order = sorting_order(y);
  const Profile y_sorted = permuted(y, y_order);
  for (const BaseCase& base : base_case_table()) {
    if (base.matching.dim() != dim) continue;
    const std::vector<int> b_order = sorting_order(base.profile);
    if (!precedes(y_sorted, permuted(base.profile, b_order))) continue;
    // Direction b_order[k] becomes k, giving the base matching a sorted profile.
    const Matching sorted_base = permute_coordinates(base.matching, inverse(b_order));
    return permute_coordinates(delete_down(sorted_base, y_sorted), y_order);
  }
  return std::nullopt;
}

// x sorted, perfect and even in dimension m = x.size().
Matching construct_sorted_perfect(const Profile& x) {
  const int m = static_cast<int>(x.size());
  ensure(m >= 2, "perfect even tuples need dimension at least 2");
  const Dimension inner(m - 1);

  Profile half(static_cast<std::size_t>(m - 1));
  for (std::size_t i = 0; i < half.size(); ++i) half[i] = x[i] / 2;

  if (auto base = from_base_case(half, inner)) return double_and_extend(*base);

  // Every sorted perfect even tuple not served by a base case satisfies
  // x_m >= 2 o(x): for m >= 8 because x_m >= 2^(m-1)/m >= 2(m-1), and for
  // m <= 7 by enumeration. Checked here rather than assumed.
  if (!lift_applicable(x)) {
    throw Error(Errc::internal, "no construction route for " + x.to_string());
  }
  const Profile lifted = lift_half(x);
  ensure(std::is_sorted(lifted.begin(), lifted.end()), "lift keeps the tuple sorted");
  const Matching inner_full = construct_sorted_perfect(lifted);
  return double_and_extend(delete_down(inner_full, half));
}

void check_length(const Profile& x, Dimension n) {
  if (x.size() != static_cast<std::size_t>(n.value())) {
    throw Error(Errc::validation, "profile " + x.to_string() + " does not have " +
                                      std::to_string(n.value()) + " coordinates");
  }
}

std::optional<Reason> counting_obstruction(const Profile& x, Dimension n) {
  for (std::uint64_t c : x) {
    if (c > n.half()) return Reason::coordinate_exceeds_direction_class;
  }
  if (x.sum() > n.half()) return Reason::sum_exceeds_half;
  // Q^1 is the one cube where a perfect matching has an odd profile.
  if (n.value() >= 2 && x.sum() == n.half() && !is_even(x)) return Reason::perfect_but_odd;
  return std::nullopt;
}

}  // namespace

std::span<const BaseCase> base_case_table() {
  static const std::vector<BaseCase> table = make_base_cases();
  return table;
}

std::vector<std::string> base_case_self_test() {
  std::vector<std::string> failures;
  for (const BaseCase& base : base_case_table()) {
    const VerifyResult r = verify(base.matching, base.profile, base.matching.is_perfect());
    if (!r) failures.push_back("base case " + base.profile.to_string() + ": " + r.message);
    if (to_json(base.matching) != base.frozen_json) {
      failures.push_back("base case " + base.profile.to_string() +
                         ": serialisation differs from the frozen bytes");
    }
    const Matching reparsed = Matching::from_edges(base.matching.dim(), [&] {
      std::vector<Edge> edges;
      for (const auto& [u, v] : parse_matching(base.frozen_json).pairs) {
        edges.push_back(make_edge(u, std::countr_zero(u ^ v), base.matching.dim()));
      }
      return edges;
    }());
    if (reparsed != base.matching) {
      failures.push_back("base case " + base.profile.to_string() +
                         ": frozen bytes describe a different matching");
    }
  }
  return failures;
}

Matching construct_even(const Profile& x, Dimension n) {
  check_length(x, n);
  if (auto reason = counting_obstruction(x, n)) throw NotAdmissibleError(*reason);
  if (!is_even(x)) {
    throw Error(Errc::validation, "construct_even needs an even profile, got " + x.to_string());
  }
  if (n.value() == 1) return Matching(n);  // x = (0)

  const std::vector<int> order = sorting_order(x);
  const Profile sorted = permuted(x, order);
  Profile padded = sorted;
  padded.back() += n.half() - sorted.sum();

  Matching m = construct_sorted_perfect(padded);
  if (padded != sorted) m = delete_down(m, sorted);
  // Sorted coordinate k is original coordinate order[k].
  return permute_coordinates(m, order);
}

const Matching* Decision::witness() const noexcept {
  if (const auto* a = std::get_if<Admissible>(&verdict)) return &a->witness;
  return nullptr;
}

std::string Decision::summary() const {
  switch (kind()) {
    case VerdictKind::admissible: return "Admissible";
    case VerdictKind::not_admissible:
      return std::string("NotAdmissible: ") + to_string(std::get<NotAdmissible>(verdict).reason);
    case VerdictKind::unknown: return "Unknown";
  }
  return "Unknown";
}

Decision decide(const Profile& x, Dimension n, const DecideOptions& options) {
  check_length(x, n);
  if (auto reason = counting_obstruction(x, n)) return {NotAdmissible{*reason}};

  auto admissible = [&](Matching witness, const char* route) {
    ensure(verify(witness, x, x.sum() == n.half()).accepted(), "decide witnesses verify");
    return Decision{Admissible{std::move(witness), route}};
  };

  Profile rounded = x;
  for (std::size_t i = 0; i < rounded.size(); ++i) rounded[i] += rounded[i] % 2;
  if (rounded.sum() <= n.half()) {
    Matching m = construct_even(rounded, n);
    if (rounded != x) m = delete_down(m, x);
    return admissible(std::move(m), "construction");
  }

  if (auto base = from_base_case(x, n)) return admissible(std::move(*base), "base-case");

  if (options.oracle_max_dimension && n.value() <= *options.oracle_max_dimension) {
    SearchBudget budget = options.oracle_budget;
    budget.max_dimension = *options.oracle_max_dimension;
    SearchResult r = exists_with_profile(n, x, budget);
    switch (r.status) {
      case SearchStatus::found: return admissible(std::move(*r.witness), "oracle");
      case SearchStatus::exhausted: return {NotAdmissible{Reason::oracle_exhausted}};
      case SearchStatus::budget_exceeded:
        return {Unknown{"oracle budget exhausted"}};
    }
  }
  return {Unknown{"odd coordinates beyond the construction's reach"}};
}

}  // namespace cubeprof
