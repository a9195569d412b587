#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cubeprof {

// Limits for exhaustive searches. Each search family has its own default
// dimension cap; `max_dimension` overrides it.
struct SearchBudget {
  std::optional<int> max_dimension;
  std::optional<std::uint64_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;

  int dimension_cap(int family_default) const {
    return max_dimension.value_or(family_default);
  }
};

enum class SearchStatus { found, exhausted, budget_exceeded };

const char* to_string(SearchStatus s);

// Simple graph whose edges each carry one direction label in [0, label_count).
struct LabeledGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    int label = 0;
  };

  int vertex_count = 0;
  int label_count = 0;
  std::vector<std::string> names;  // optional vertex labels, index-aligned
  std::vector<Edge> edges;
};

// Counts search nodes and enforces node and time limits.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget);

  // Registers one node; returns false once a limit is hit.
  bool tick();
  bool exceeded() const noexcept { return exceeded_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::optional<std::uint64_t> node_limit_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

// Backtracking matching search on a LabeledGraph.
//
// The search repeatedly takes the smallest vertex that is neither matched nor
// skipped and branches over its incident edges to larger free vertices in
// increasing (label, neighbour) order, then over skipping it. Every matching is
// reached along exactly one branch path, so callbacks see each edge set once.
//
// With a label quota the search looks for matchings with exactly quota[l]
// edges of label l; vertices may be skipped up to V - 2 * sum(quota) times.
// Without a quota it enumerates perfect matchings.
class MatchingSearch {
 public:
  // Receives indices into graph.edges; return false to stop the search.
  using Visitor = std::function<bool(std::span<const int> edge_ids)>;

  MatchingSearch(const LabeledGraph& graph, const SearchBudget& budget);

  SearchStatus run(const std::optional<std::vector<std::uint64_t>>& quota,
                   const Visitor& visit);

  std::uint64_t nodes() const noexcept { return meter_.nodes(); }

 private:
  struct Arc {
    int to;
    int label;
    int edge_id;
  };

  enum class Step { go_on, stop };

  Step descend(int from);
  bool capacity_prune(int from) const;

  const LabeledGraph& graph_;
  std::vector<std::vector<Arc>> forward_;  // arcs to larger vertices only
  BudgetMeter meter_;

  bool constrained_ = false;
  std::vector<std::uint64_t> remaining_;
  std::uint64_t remaining_total_ = 0;
  std::uint64_t skips_left_ = 0;
  std::vector<char> state_;  // 0 free, 1 matched, 2 skipped
  std::vector<int> chosen_;
  const Visitor* visit_ = nullptr;
  bool stopped_ = false;
  bool found_any_ = false;
};

}  // namespace cubeprof
