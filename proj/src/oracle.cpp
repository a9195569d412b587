#include "cubeprof/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cubeprof {

namespace {

void check_oracle_input(Dimension n, const Profile& x, const SearchBudget& budget) {
  const int cap = budget.dimension_cap(kOracleDefaultMaxDimension);
  if (n.value() > cap) {
    throw Error(Errc::validation, "oracle refuses Q^" + std::to_string(n.value()) +
                                      " above its dimension cap " + std::to_string(cap));
  }
  if (n.value() > 20) {
    throw Error(Errc::validation, "oracle cannot materialise Q^" + std::to_string(n.value()));
  }
  if (x.size() != static_cast<std::size_t>(n.value())) {
    throw Error(Errc::validation, "profile " + x.to_string() + " does not have " +
                                      std::to_string(n.value()) + " coordinates");
  }
}

Matching to_matching(Dimension n, const LabeledGraph& g, std::span<const int> ids) {
  std::vector<Edge> edges;
  edges.reserve(ids.size());
  for (int id : ids) {
    const auto& e = g.edges[static_cast<std::size_t>(id)];
    edges.push_back(make_edge(static_cast<Vertex>(e.u), e.label, n));
  }
  return Matching::from_edges(n, std::move(edges));
}

}  // namespace

LabeledGraph hypercube_graph(Dimension n) {
  LabeledGraph g;
  g.vertex_count = static_cast<int>(n.vertex_count());
  g.label_count = n.value();
  for (int d = 0; d < n.value(); ++d) {
    for (Vertex v = 0; v < n.vertex_count(); ++v) {
      if ((v >> d) & 1) continue;
      g.edges.push_back({static_cast<int>(v), static_cast<int>(v | (Vertex{1} << d)), d});
    }
  }
  return g;
}

SearchResult exists_with_profile(Dimension n, const Profile& x, const SearchBudget& budget) {
  check_oracle_input(n, x, budget);
  const LabeledGraph g = hypercube_graph(n);
  MatchingSearch search(g, budget);
  SearchResult result;
  result.status = search.run(x.counts(), [&](std::span<const int> ids) {
    result.witness = to_matching(n, g, ids);
    return false;
  });
  result.nodes_explored = search.nodes();
  return result;
}

SearchResult count_with_profile(Dimension n, const Profile& x, const SearchBudget& budget) {
  check_oracle_input(n, x, budget);
  const LabeledGraph g = hypercube_graph(n);
  MatchingSearch search(g, budget);
  std::uint64_t count = 0;
  SearchResult result;
  result.status = search.run(x.counts(), [&](std::span<const int>) {
    ++count;
    return true;
  });
  result.nodes_explored = search.nodes();
  if (result.status != SearchStatus::budget_exceeded) result.count = count;
  return result;
}

std::vector<Profile> sorted_profiles(int n, std::uint64_t max_entry, std::uint64_t max_sum) {
  std::vector<Profile> out;
  Profile cur(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i, std::uint64_t lo, std::uint64_t left) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::uint64_t c = lo; c <= max_entry && c <= left; ++c) {
      cur[static_cast<std::size_t>(i)] = c;
      self(self, i + 1, c, left - c);
    }
  };
  rec(rec, 0, 0, max_sum);
  return out;
}

std::vector<Profile> distinct_permutations(const Profile& x) {
  std::vector<std::uint64_t> c = x.counts();
  std::sort(c.begin(), c.end());
  std::vector<Profile> out;
  do {
    out.emplace_back(c);
  } while (std::next_permutation(c.begin(), c.end()));
  return out;
}

AdmissibleSet enumerate_admissible(Dimension n, std::uint64_t sum_bound,
                                   const SearchBudget& budget, int jobs) {
  check_oracle_input(n, Profile(static_cast<std::size_t>(n.value())), budget);
  // Larger sums or entries cannot be realised: a matching has at most 2^(n-1)
  // edges and so does every direction class.
  const std::uint64_t bound = std::min(sum_bound, n.half());
  const std::vector<Profile> reps = sorted_profiles(n.value(), n.half(), bound);

  std::vector<SearchResult> results(reps.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < reps.size(); i = next++) {
      results[i] = exists_with_profile(n, reps[i], budget);
    }
  };
  const int threads = std::clamp(jobs, 1, 64);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  AdmissibleSet out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    out.nodes_explored += results[i].nodes_explored;
    switch (results[i].status) {
      case SearchStatus::found: {
        auto perms = distinct_permutations(reps[i]);
        out.profiles.insert(out.profiles.end(), perms.begin(), perms.end());
        break;
      }
      case SearchStatus::budget_exceeded:
        out.complete = false;
        out.undecided.push_back(reps[i]);
        break;
      case SearchStatus::exhausted:
        break;
    }
  }
  std::sort(out.profiles.begin(), out.profiles.end());
  return out;
}

}  // namespace cubeprof
