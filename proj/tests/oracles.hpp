#pragma once

// Test-only reference computations. Nothing here calls into the search core or
// the constructor; the tests compare those against these.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "cubeprof/hypercube.hpp"
#include "cubeprof/search.hpp"

namespace cubeprof::testing {

// Number of perfect matchings of a bipartite graph, as the permanent of its
// biadjacency matrix (subset DP over the right side). `left` marks one side.
inline std::uint64_t bipartite_perfect_matchings(const LabeledGraph& g,
                                                 const std::vector<bool>& left) {
  std::vector<int> lidx(static_cast<std::size_t>(g.vertex_count), -1);
  std::vector<int> ridx(static_cast<std::size_t>(g.vertex_count), -1);
  int nl = 0, nr = 0;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (left[static_cast<std::size_t>(v)]) {
      lidx[static_cast<std::size_t>(v)] = nl++;
    } else {
      ridx[static_cast<std::size_t>(v)] = nr++;
    }
  }
  if (nl != nr || nl > 24) return 0;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(nl), 0);
  for (const auto& e : g.edges) {
    int a = e.u, b = e.v;
    if (!left[static_cast<std::size_t>(a)]) std::swap(a, b);
    adj[static_cast<std::size_t>(lidx[static_cast<std::size_t>(a)])] |=
        1u << ridx[static_cast<std::size_t>(b)];
  }
  std::vector<std::uint64_t> dp(std::size_t{1} << nr, 0);
  dp[0] = 1;
  for (std::uint32_t mask = 0; mask < (1u << nr); ++mask) {
    const int row = std::popcount(mask);
    if (row >= nl || dp[mask] == 0) continue;
    std::uint32_t free = adj[static_cast<std::size_t>(row)] & ~mask;
    while (free) {
      const std::uint32_t bit = free & (~free + 1);
      dp[mask | bit] += dp[mask];
      free ^= bit;
    }
  }
  return dp[(std::size_t{1} << nr) - 1];
}

// Pascal's triangle, rows 0..rows.
inline std::vector<std::vector<std::uint64_t>> pascal(int rows) {
  std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(rows + 1));
  for (int r = 0; r <= rows; ++r) {
    t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(r + 1), 1);
    for (int k = 1; k < r; ++k) {
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
          t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(k - 1)] +
          t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(k)];
    }
  }
  return t;
}

// Stars and bars: compositions of `total` into `parts` non-negative parts.
inline std::uint64_t compositions(std::uint64_t total, int parts) {
  const auto t = pascal(static_cast<int>(total) + parts);
  return t[total + static_cast<std::size_t>(parts) - 1][static_cast<std::size_t>(parts) - 1];
}

// Every perfect even tuple of length n (all orderings).
inline std::vector<Profile> perfect_even_tuples(int n) {
  const std::uint64_t half_total = (std::uint64_t{1} << (n - 1)) / 2;
  std::vector<Profile> out;
  Profile cur(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i, std::uint64_t left) -> void {
    if (i == n - 1) {
      cur[static_cast<std::size_t>(i)] = 2 * left;
      out.push_back(cur);
      return;
    }
    for (std::uint64_t c = 0; c <= left; ++c) {
      cur[static_cast<std::size_t>(i)] = 2 * c;
      self(self, i + 1, left - c);
    }
  };
  rec(rec, 0, half_total);
  return out;
}

// Uniformly random composition of `total` into `parts` parts (stars and bars).
inline std::vector<std::uint64_t> random_composition(std::uint64_t total, int parts,
                                                     std::mt19937_64& rng) {
  // Choose parts-1 bar positions among total+parts-1 slots.
  const std::uint64_t slots = total + static_cast<std::uint64_t>(parts) - 1;
  std::vector<std::uint64_t> bars;
  std::uniform_int_distribution<std::uint64_t> pick(0, slots - 1);
  while (bars.size() < static_cast<std::size_t>(parts - 1)) {
    const std::uint64_t b = pick(rng);
    if (std::find(bars.begin(), bars.end(), b) == bars.end()) bars.push_back(b);
  }
  std::sort(bars.begin(), bars.end());
  std::vector<std::uint64_t> out;
  std::uint64_t prev = 0;
  for (std::uint64_t b : bars) {
    out.push_back(b - prev);
    prev = b + 1;
  }
  out.push_back(slots - prev);
  return out;
}

// Brute-force 4-cycle decompositions of Q^n by scanning every subset of faces
// of the right size. Returns the number of decompositions.
inline std::uint64_t brute_force_face_decompositions(int n) {
  std::vector<std::uint64_t> faces;  // bitmask over edge ids dir * 2^n + base
  const int vertices = 1 << n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int b = 0; b < vertices; ++b) {
        if ((b >> i) & 1 || (b >> j) & 1) continue;
        auto id = [&](int base, int d) { return d * vertices + base; };
        std::uint64_t mask = 0;
        for (int e : {id(b, i), id(b | (1 << j), i), id(b, j), id(b | (1 << i), j)}) {
          mask |= std::uint64_t{1} << e;
        }
        faces.push_back(mask);
      }
    }
  }
  const int edge_count = n * vertices / 2;
  if (edge_count % 4 != 0) return 0;
  const int pick = edge_count / 4;
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int start, int depth, std::uint64_t used) -> void {
    if (depth == pick) {
      ++count;
      return;
    }
    for (int f = start; f < static_cast<int>(faces.size()); ++f) {
      if (faces[static_cast<std::size_t>(f)] & used) continue;
      self(self, f + 1, depth + 1, used | faces[static_cast<std::size_t>(f)]);
    }
  };
  rec(rec, 0, 0, 0);
  return count;
}

}  // namespace cubeprof::testing
