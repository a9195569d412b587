#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubeprof/hypercube.hpp"
#include "cubeprof/search.hpp"

namespace cubeprof {

// Default dimension caps; SearchBudget::max_dimension overrides them.
inline constexpr int kHamiltonDefaultMax = 4;
inline constexpr int kFacesDefaultMax = 4;
inline constexpr int kMiddleDefaultMax = 2;
inline constexpr int kPermDefaultMax = 3;

// Symmetric weights on the unordered pairs {i, j} of [0, m), stored in
// lexicographic pair order (0,1), (0,2), ..., (m-2, m-1).
class PairWeighting {
 public:
  PairWeighting() = default;
  explicit PairWeighting(int m);

  static int pair_index(int i, int j, int m);
  static int pair_count(int m) { return m * (m - 1) / 2; }

  int m() const noexcept { return m_; }
  std::uint64_t at(int i, int j) const;
  std::uint64_t& at(int i, int j);
  const std::vector<std::uint64_t>& weights() const noexcept { return w_; }
  std::vector<std::uint64_t>& weights() noexcept { return w_; }

  // Sum of w({i, j}) over j != i.
  std::uint64_t incident(int i) const;

  std::string to_string() const;  // "{1,2:2 1,3:0 ...}" with 1-indexed pairs

  friend bool operator==(const PairWeighting&, const PairWeighting&) = default;
  friend auto operator<=>(const PairWeighting&, const PairWeighting&) = default;

 private:
  int m_ = 0;
  std::vector<std::uint64_t> w_;
};

struct WeightingCount {
  PairWeighting weighting;
  std::uint64_t multiplicity = 0;  // number of matchings/decompositions realising it
};

// --- Hamilton cycles of Q^n -------------------------------------------------

struct HamiltonReport {
  bool complete = true;
  std::uint64_t cycles = 0;  // undirected Hamilton cycles
  std::uint64_t nodes_explored = 0;
  std::vector<Profile> profiles;     // exhaustive, sorted
  std::vector<Profile> conjectured;  // even, sum 2^n, max <= 2^(n-1), min >= 2
  std::vector<Profile> missing;      // conjectured but not realised
  std::vector<Profile> unexpected;   // realised but not conjectured
};

std::vector<Profile> hamilton_conjectured(Dimension n);

// Enumerates every Hamilton cycle once: it starts at vertex 0 and its second
// vertex is smaller than its last.
HamiltonReport hamilton_profiles(Dimension n, const SearchBudget& budget = {});

// --- 4-cycle decompositions of Q^n ------------------------------------------

struct FaceConstraints {
  bool parity = true;        // sum_j w({i,j}) even for every i (n >= 3)
  bool conservation = true;  // 2 * sum_j w({i,j}) = 2^(n-1) for every i
  std::string report;        // first failing constraint, empty if none
};

FaceConstraints check_face_weighting(const PairWeighting& w, Dimension n);

struct FaceReport {
  bool complete = true;
  std::uint64_t decompositions = 0;
  std::uint64_t nodes_explored = 0;
  std::vector<WeightingCount> weightings;  // sorted by weighting
};

// Every partition of E(Q^n) into 4-cycles; a 4-cycle spanning directions i and
// j adds one to w({i, j}).
FaceReport face_decomposition_profiles(Dimension n, const SearchBudget& budget = {});

// --- middle layer graph -----------------------------------------------------

enum class Parity { even, odd };

// Parity of C(top, bottom): odd iff (bottom & (top - bottom)) == 0.
Parity lucas_parity(std::uint64_t top, std::uint64_t bottom);

std::uint64_t binomial(std::uint64_t top, std::uint64_t bottom);

// Induced subgraph of Q^(2n+1) on the weights n and n+1; label = direction.
LabeledGraph middle_layer_graph(int n);

// Parity, per-direction cap C(2n-1, n-1) and total C(2n+1, n+1).
bool middle_layer_necessary(const Profile& x, int n);

// All tuples passing middle_layer_necessary, sorted.
std::vector<Profile> middle_layer_feasible(int n);

struct MiddleLayerReport {
  bool complete = true;
  std::uint64_t matchings = 0;
  std::uint64_t nodes_explored = 0;
  std::vector<Profile> profiles;  // realised, sorted
  std::vector<Profile> feasible;  // necessary conditions, sorted
  std::vector<Profile> unrealised;  // feasible but not realised
};

MiddleLayerReport middle_layer_profiles(int n, const SearchBudget& budget = {});

// --- permutahedron ----------------------------------------------------------

// Perm(n) on the permutations of (1, ..., n+1), lexicographic vertex order.
// Swapping the entries holding values k and k+1 at positions i, j gives an
// edge parallel to e_i - e_j, labelled by the position pair {i, j}.
LabeledGraph permutahedron_graph(int n);

// w(12)+w(34) = w(13)+w(24) = w(14)+w(23) = 4 (for m = 4).
bool perm3_pair_sums_hold(const PairWeighting& w);

struct PermReport {
  bool complete = true;
  std::uint64_t matchings = 0;
  std::uint64_t nodes_explored = 0;
  std::vector<WeightingCount> weightings;  // sorted by weighting
  // n = 3 only: even points of the polytope {w >= 0, pair sums = 4}, both
  // closed and strictly positive, and whether the realised set equals them.
  std::vector<PairWeighting> polytope_even_points;
  std::vector<PairWeighting> polytope_even_interior;
  bool equals_closed_points = false;
  bool equals_interior_points = false;
};

PermReport permutahedron_profiles(int n, const SearchBudget& budget = {});

}  // namespace cubeprof
