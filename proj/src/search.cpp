#include "cubeprof/search.hpp"

#include <algorithm>
#include <numeric>

#include "cubeprof/error.hpp"

namespace cubeprof {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "Found";
    case SearchStatus::exhausted: return "Exhausted-None";
    case SearchStatus::budget_exceeded: return "BudgetExceeded";
  }
  return "unknown";
}

BudgetMeter::BudgetMeter(const SearchBudget& budget) : node_limit_(budget.node_limit) {
  if (budget.time_limit) deadline_ = std::chrono::steady_clock::now() + *budget.time_limit;
}

bool BudgetMeter::tick() {
  if (exceeded_) return false;
  ++nodes_;
  if (node_limit_ && nodes_ > *node_limit_) {
    exceeded_ = true;
  } else if (deadline_ && (nodes_ & 0xfff) == 0 &&
             std::chrono::steady_clock::now() > *deadline_) {
    exceeded_ = true;
  }
  return !exceeded_;
}

MatchingSearch::MatchingSearch(const LabeledGraph& graph, const SearchBudget& budget)
    : graph_(graph), meter_(budget) {
  forward_.resize(static_cast<std::size_t>(graph.vertex_count));
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const auto& e = graph.edges[i];
    if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= graph.vertex_count ||
        e.v >= graph.vertex_count || e.label < 0 || e.label >= graph.label_count) {
      throw Error(Errc::validation, "malformed edge " + std::to_string(i) + " in search graph");
    }
    const int lo = std::min(e.u, e.v);
    const int hi = std::max(e.u, e.v);
    forward_[static_cast<std::size_t>(lo)].push_back(Arc{hi, e.label, static_cast<int>(i)});
  }
  for (auto& arcs : forward_) {
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
      return a.label != b.label ? a.label < b.label : a.to < b.to;
    });
  }
}

SearchStatus MatchingSearch::run(const std::optional<std::vector<std::uint64_t>>& quota,
                                 const Visitor& visit) {
  const auto vertices = static_cast<std::uint64_t>(graph_.vertex_count);
  constrained_ = quota.has_value();
  if (constrained_) {
    if (quota->size() != static_cast<std::size_t>(graph_.label_count)) {
      throw Error(Errc::validation, "label quota has the wrong length");
    }
    remaining_ = *quota;
    remaining_total_ = std::accumulate(remaining_.begin(), remaining_.end(), std::uint64_t{0});
    if (2 * remaining_total_ > vertices) return SearchStatus::exhausted;
    skips_left_ = vertices - 2 * remaining_total_;
  } else {
    if (vertices % 2 != 0) return SearchStatus::exhausted;
    remaining_.clear();
    remaining_total_ = vertices / 2;
    skips_left_ = 0;
  }
  state_.assign(static_cast<std::size_t>(graph_.vertex_count), 0);
  chosen_.clear();
  visit_ = &visit;
  stopped_ = false;
  found_any_ = false;

  descend(0);

  visit_ = nullptr;
  if (found_any_ && stopped_) return SearchStatus::found;
  if (meter_.exceeded()) return SearchStatus::budget_exceeded;
  return found_any_ ? SearchStatus::found : SearchStatus::exhausted;
}

bool MatchingSearch::capacity_prune(int from) const {
  // Edges still to be placed lie among free vertices. `touched` counts free
  // endpoints of free label-l edges with multiplicity, which bounds twice the
  // largest label-l matching from above (exactly, for the direction classes
  // of Q^n).
  std::vector<std::uint64_t> touched(remaining_.size(), 0);
  for (int u = from; u < graph_.vertex_count; ++u) {
    if (state_[static_cast<std::size_t>(u)] != 0) continue;
    for (const Arc& a : forward_[static_cast<std::size_t>(u)]) {
      if (state_[static_cast<std::size_t>(a.to)] == 0 &&
          remaining_[static_cast<std::size_t>(a.label)] > 0) {
        touched[static_cast<std::size_t>(a.label)] += 2;
      }
    }
  }
  for (std::size_t l = 0; l < remaining_.size(); ++l) {
    if (remaining_[l] > 0 && 2 * remaining_[l] > touched[l]) return true;
  }
  return false;
}

MatchingSearch::Step MatchingSearch::descend(int from) {
  if (stopped_ || !meter_.tick()) return Step::stop;

  int v = from;
  while (v < graph_.vertex_count && state_[static_cast<std::size_t>(v)] != 0) ++v;

  if (remaining_total_ == 0 || v == graph_.vertex_count) {
    // With a quota, an exhausted quota forces every remaining free vertex to be
    // skipped, and the skip allowance always equals the free count then.
    if (remaining_total_ != 0) return Step::go_on;
    found_any_ = true;
    if (!(*visit_)(chosen_)) {
      stopped_ = true;
      return Step::stop;
    }
    return Step::go_on;
  }
  if (constrained_ && capacity_prune(v)) return Step::go_on;

  const auto vi = static_cast<std::size_t>(v);
  state_[vi] = 1;
  for (const Arc& a : forward_[vi]) {
    const auto to = static_cast<std::size_t>(a.to);
    const auto label = static_cast<std::size_t>(a.label);
    if (state_[to] != 0) continue;
    if (constrained_ && remaining_[label] == 0) continue;
    state_[to] = 1;
    if (constrained_) --remaining_[label];
    --remaining_total_;
    chosen_.push_back(a.edge_id);

    const Step step = descend(v + 1);

    chosen_.pop_back();
    ++remaining_total_;
    if (constrained_) ++remaining_[label];
    state_[to] = 0;
    if (step == Step::stop) {
      state_[vi] = 0;
      return Step::stop;
    }
  }
  Step step = Step::go_on;
  if (constrained_ && skips_left_ > 0) {
    state_[vi] = 2;
    --skips_left_;
    step = descend(v + 1);
    ++skips_left_;
  }
  state_[vi] = 0;
  return step;
}

}  // namespace cubeprof
