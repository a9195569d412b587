#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubeprof/hypercube.hpp"
#include "cubeprof/search.hpp"

namespace cubeprof {

inline constexpr int kOracleDefaultMaxDimension = 5;

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<Matching> witness;  // set iff status == found and not counting
  std::uint64_t nodes_explored = 0;
  std::optional<std::uint64_t> count;  // set by count_with_profile when complete
};

// Q^n as a LabeledGraph: vertex i is the integer i, label = direction.
LabeledGraph hypercube_graph(Dimension n);

// Complete backtracking search for a matching of Q^n with profile x.
// Exhausted-None is a proof that no such matching exists.
SearchResult exists_with_profile(Dimension n, const Profile& x, const SearchBudget& budget = {});

// Number of distinct matchings (as edge sets) with profile x.
SearchResult count_with_profile(Dimension n, const Profile& x, const SearchBudget& budget = {});

struct AdmissibleSet {
  bool complete = true;  // false if some query ran out of budget
  std::vector<Profile> profiles;  // sorted ascending
  std::vector<Profile> undecided;  // sorted representatives that hit the budget
  std::uint64_t nodes_explored = 0;
};

// All profiles with sum <= sum_bound realised by some matching of Q^n. One
// search per sorted representative; the answer is shared by its permutations.
// Node and time limits apply per query. `jobs` > 1 spreads the queries over
// worker threads; the output does not depend on it.
AdmissibleSet enumerate_admissible(Dimension n, std::uint64_t sum_bound,
                                   const SearchBudget& budget = {}, int jobs = 1);

// Every non-decreasing profile of length n with entries <= max_entry and sum <= max_sum.
std::vector<Profile> sorted_profiles(int n, std::uint64_t max_entry, std::uint64_t max_sum);

// All distinct rearrangements of x, ascending.
std::vector<Profile> distinct_permutations(const Profile& x);

}  // namespace cubeprof
