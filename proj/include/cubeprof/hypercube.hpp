#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubeprof/error.hpp"

namespace cubeprof {

using Vertex = std::uint64_t;

// Ambient dimension n of Q^n. Vertices are n-bit words, so n is capped at 62.
class Dimension {
 public:
  static constexpr int kMax = 62;

  explicit Dimension(int n);

  int value() const noexcept { return n_; }
  std::uint64_t vertex_count() const noexcept { return std::uint64_t{1} << n_; }
  // 2^(n-1): size of a perfect matching and of every direction class.
  std::uint64_t half() const noexcept { return std::uint64_t{1} << (n_ - 1); }
  bool contains(Vertex v) const noexcept { return v < vertex_count(); }

  friend bool operator==(Dimension, Dimension) = default;

 private:
  int n_;
};

// Canonical edge {base, base ^ (1 << dir)} with bit `dir` of base cleared.
struct Edge {
  Vertex base = 0;
  int dir = 0;

  Vertex other() const noexcept { return base | (Vertex{1} << dir); }

  friend bool operator==(const Edge&, const Edge&) = default;
  // Matchings are ordered by direction first, then base.
  friend auto operator<=>(const Edge& a, const Edge& b) {
    if (auto c = a.dir <=> b.dir; c != 0) return c;
    return a.base <=> b.base;
  }
};

Edge make_edge(Vertex u, int dir, Dimension dim);

// Edge counts per direction. Index 0 is coordinate 1.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::size_t n) : counts_(n, 0) {}
  explicit Profile(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}
  Profile(std::initializer_list<std::uint64_t> counts) : counts_(counts) {}

  std::size_t size() const noexcept { return counts_.size(); }
  std::uint64_t& operator[](std::size_t i) { return counts_[i]; }
  std::uint64_t operator[](std::size_t i) const { return counts_[i]; }
  auto begin() const noexcept { return counts_.begin(); }
  auto end() const noexcept { return counts_.end(); }
  std::uint64_t& back() { return counts_.back(); }
  std::uint64_t back() const { return counts_.back(); }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

  std::uint64_t sum() const noexcept;
  std::string to_string() const;  // "(2,2,2,2)"

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

// A vertex-disjoint set of canonical edges, kept sorted by (dir, base).
class Matching {
 public:
  explicit Matching(Dimension dim) : dim_(dim) {}

  // Validates canonical form, range and vertex-disjointness; sorts the edges.
  static Matching from_edges(Dimension dim, std::vector<Edge> edges);

  Dimension dim() const noexcept { return dim_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  bool is_perfect() const noexcept { return edges_.size() == dim_.half(); }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  Matching(Dimension dim, std::vector<Edge> sorted_edges)
      : dim_(dim), edges_(std::move(sorted_edges)) {}

  friend Matching double_and_extend(const Matching& m);
  friend Matching delete_down(const Matching& m, const Profile& target);
  friend Matching permute_coordinates(const Matching& m, std::span<const int> perm);

  Dimension dim_;
  std::vector<Edge> edges_;
};

// Unvalidated edge list as read from a file: pairs of vertices plus a dimension.
struct CandidateMatching {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

CandidateMatching to_candidate(const Matching& m);

enum class Violation {
  none,
  bad_dimension,
  vertex_out_of_range,
  not_an_edge,
  repeated_vertex,
  profile_length,
  profile_mismatch,
  not_perfect,
};

const char* to_string(Violation v);

struct VerifyResult {
  Violation violation = Violation::none;
  std::string message;

  bool accepted() const noexcept { return violation == Violation::none; }
  explicit operator bool() const noexcept { return accepted(); }
};

// Checks the witness contract. Rejections name the first violated invariant.
VerifyResult verify(const CandidateMatching& m, const Profile& x, bool require_perfect);
VerifyResult verify(const Matching& m, const Profile& x, bool require_perfect);

Profile profile_of(const Matching& m);

// Vertices of Q^n not incident to any edge of m, ascending.
std::vector<Vertex> uncovered(const Matching& m);

// Two copies of m (new top bit 0 and 1) plus a new-direction edge at every
// uncovered vertex. The result is a perfect matching of Q^(n+1) with profile
// (2x, 2^n - 2|x|).
Matching double_and_extend(const Matching& m);

// Sub-matching with profile `target`; in each direction the edges with the
// largest base are removed first.
Matching delete_down(const Matching& m, const Profile& target);

// Moves bit i of every vertex to bit perm[i]; direction d becomes perm[d].
Matching permute_coordinates(const Matching& m, std::span<const int> perm);

// Throws Errc::validation unless perm is a bijection on [0, n).
void check_permutation(std::span<const int> perm, int n);

}  // namespace cubeprof
