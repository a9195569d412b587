#include "cubeprof/explorer.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cubeprof/oracle.hpp"
#include "cubeprof/profiles.hpp"

namespace cubeprof {

namespace {

void check_cap(int n, int cap, const char* family) {
  if (n > cap) {
    throw Error(Errc::validation, std::string(family) + " search refuses n = " +
                                      std::to_string(n) + " above its cap " + std::to_string(cap));
  }
}

std::vector<WeightingCount> to_sorted_counts(const std::map<PairWeighting, std::uint64_t>& seen) {
  std::vector<WeightingCount> out;
  out.reserve(seen.size());
  for (const auto& [w, count] : seen) out.push_back({w, count});
  return out;
}

template <typename T>
std::vector<T> set_difference(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

// --- PairWeighting ----------------------------------------------------------

PairWeighting::PairWeighting(int m)
    : m_(m), w_(static_cast<std::size_t>(pair_count(m)), 0) {
  if (m < 2) throw Error(Errc::validation, "pair weighting needs m >= 2");
}

int PairWeighting::pair_index(int i, int j, int m) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= m || i == j) {
    throw Error(Errc::validation, "pair {" + std::to_string(i) + "," + std::to_string(j) +
                                      "} invalid for m = " + std::to_string(m));
  }
  // Pairs (i, *) start after the i rows above: sum_{r<i} (m - 1 - r).
  return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

std::uint64_t PairWeighting::at(int i, int j) const {
  return w_[static_cast<std::size_t>(pair_index(i, j, m_))];
}

std::uint64_t& PairWeighting::at(int i, int j) {
  return w_[static_cast<std::size_t>(pair_index(i, j, m_))];
}

std::uint64_t PairWeighting::incident(int i) const {
  std::uint64_t s = 0;
  for (int j = 0; j < m_; ++j) {
    if (j != i) s += at(i, j);
  }
  return s;
}

std::string PairWeighting::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < m_; ++i) {
    for (int j = i + 1; j < m_; ++j) {
      if (!first) os << ' ';
      first = false;
      os << (i + 1) << ',' << (j + 1) << ':' << at(i, j);
    }
  }
  os << '}';
  return os.str();
}

// --- Hamilton cycles ----------------------------------------------------------

std::vector<Profile> hamilton_conjectured(Dimension n) {
  std::vector<Profile> out;
  const std::uint64_t total = n.vertex_count();
  for (const Profile& rep : sorted_profiles(n.value(), n.half(), total)) {
    if (rep.sum() != total || !is_even(rep) || rep[0] < 2) continue;
    for (const Profile& p : distinct_permutations(rep)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

HamiltonReport hamilton_profiles(Dimension n, const SearchBudget& budget) {
  const int dim = n.value();
  check_cap(dim, budget.dimension_cap(kHamiltonDefaultMax), "Hamilton");
  ensure(dim <= 6, "Hamilton search uses a single-word visited mask");

  HamiltonReport report;
  BudgetMeter meter(budget);
  std::set<Profile> found;
  const std::uint64_t total = n.vertex_count();
  std::vector<Vertex> path{0};
  std::uint64_t visited = 1;
  Profile counts(static_cast<std::size_t>(dim));

  auto dfs = [&](auto&& self, Vertex at) -> bool {
    if (!meter.tick()) return false;
    if (path.size() == total) {
      const Vertex closing = at;  // edge back to vertex 0
      if (std::popcount(closing) == 1 && path[1] < path.back()) {
        Profile p = counts;
        ++p[static_cast<std::size_t>(std::countr_zero(closing))];
        found.insert(std::move(p));
        ++report.cycles;
      }
      return true;
    }
    for (int d = 0; d < dim; ++d) {
      const Vertex next = at ^ (Vertex{1} << d);
      if ((visited >> next) & 1) continue;
      visited |= std::uint64_t{1} << next;
      path.push_back(next);
      ++counts[static_cast<std::size_t>(d)];
      const bool go_on = self(self, next);
      --counts[static_cast<std::size_t>(d)];
      path.pop_back();
      visited &= ~(std::uint64_t{1} << next);
      if (!go_on) return false;
    }
    return true;
  };
  dfs(dfs, 0);

  report.complete = !meter.exceeded();
  report.nodes_explored = meter.nodes();
  report.profiles.assign(found.begin(), found.end());
  report.conjectured = hamilton_conjectured(n);
  report.missing = set_difference(report.conjectured, report.profiles);
  report.unexpected = set_difference(report.profiles, report.conjectured);
  return report;
}

// --- face decompositions ------------------------------------------------------

FaceConstraints check_face_weighting(const PairWeighting& w, Dimension n) {
  FaceConstraints c;
  if (w.m() != n.value()) throw Error(Errc::validation, "weighting size differs from n");
  for (int i = 0; i < w.m(); ++i) {
    const std::uint64_t s = w.incident(i);
    // A face spanning {i, j} holds two direction-i edges and the direction-i
    // class has 2^(n-1) edges.
    if (2 * s != n.half() && c.conservation) {
      c.conservation = false;
      if (c.report.empty()) {
        c.report = "edge-count conservation fails at direction " + std::to_string(i + 1) +
                   ": faces hold " + std::to_string(2 * s) + " of its " +
                   std::to_string(n.half()) + " edges";
      }
    }
    // In Q^2 the single face meets each direction once, so parity starts at n = 3.
    if (n.value() >= 3 && s % 2 != 0 && c.parity) {
      c.parity = false;
      if (c.report.empty()) {
        c.report = "parity fails at direction " + std::to_string(i + 1) + ": " +
                   std::to_string(s) + " faces";
      }
    }
  }
  return c;
}

FaceReport face_decomposition_profiles(Dimension n, const SearchBudget& budget) {
  const int dim = n.value();
  check_cap(dim, budget.dimension_cap(kFacesDefaultMax), "face decomposition");
  ensure(dim <= 16, "face decomposition graph fits in memory");
  FaceReport report;
  if (dim < 2) return report;

  const auto vertices = static_cast<int>(n.vertex_count());
  auto edge_id = [&](Vertex base, int d) { return d * vertices + static_cast<int>(base); };

  struct Face {
    int i, j;
    std::array<int, 4> edges;
  };
  std::vector<Face> faces;
  std::vector<std::vector<int>> faces_of(static_cast<std::size_t>(dim * vertices));
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      const Vertex bi = Vertex{1} << i;
      const Vertex bj = Vertex{1} << j;
      for (Vertex b = 0; b < n.vertex_count(); ++b) {
        if (b & (bi | bj)) continue;
        Face f{i, j, {edge_id(b, i), edge_id(b | bj, i), edge_id(b, j), edge_id(b | bi, j)}};
        for (int e : f.edges) faces_of[static_cast<std::size_t>(e)].push_back(static_cast<int>(faces.size()));
        faces.push_back(f);
      }
    }
  }
  std::vector<int> edge_order;  // real edge ids ascending
  for (int d = 0; d < dim; ++d) {
    for (Vertex b = 0; b < n.vertex_count(); ++b) {
      if (!((b >> d) & 1)) edge_order.push_back(edge_id(b, d));
    }
  }

  BudgetMeter meter(budget);
  std::vector<char> covered(static_cast<std::size_t>(dim * vertices), 0);
  PairWeighting w(dim);
  std::map<PairWeighting, std::uint64_t> seen;

  // Exact cover: the smallest uncovered edge must lie in one of its n-1 faces.
  auto dfs = [&](auto&& self, std::size_t cursor) -> bool {
    if (!meter.tick()) return false;
    while (cursor < edge_order.size() && covered[static_cast<std::size_t>(edge_order[cursor])]) ++cursor;
    if (cursor == edge_order.size()) {
      ++seen[w];
      ++report.decompositions;
      return true;
    }
    for (int fi : faces_of[static_cast<std::size_t>(edge_order[cursor])]) {
      const Face& f = faces[static_cast<std::size_t>(fi)];
      if (std::any_of(f.edges.begin(), f.edges.end(),
                      [&](int e) { return covered[static_cast<std::size_t>(e)] != 0; })) {
        continue;
      }
      for (int e : f.edges) covered[static_cast<std::size_t>(e)] = 1;
      ++w.at(f.i, f.j);
      const bool go_on = self(self, cursor + 1);
      --w.at(f.i, f.j);
      for (int e : f.edges) covered[static_cast<std::size_t>(e)] = 0;
      if (!go_on) return false;
    }
    return true;
  };
  dfs(dfs, 0);

  report.complete = !meter.exceeded();
  report.nodes_explored = meter.nodes();
  report.weightings = to_sorted_counts(seen);
  return report;
}

// --- middle layer -------------------------------------------------------------

Parity lucas_parity(std::uint64_t top, std::uint64_t bottom) {
  if (bottom > top || top > (std::uint64_t{1} << 62)) {
    throw Error(Errc::validation, "lucas_parity needs 0 <= bottom <= top <= 2^62");
  }
  return (bottom & (top - bottom)) == 0 ? Parity::odd : Parity::even;
}

std::uint64_t binomial(std::uint64_t top, std::uint64_t bottom) {
  if (bottom > top) return 0;
  bottom = std::min(bottom, top - bottom);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= bottom; ++i) {
    // r * (top - bottom + i) is divisible by i; divide via gcd to stay in range.
    const std::uint64_t num = top - bottom + i;
    const std::uint64_t g = std::gcd(r, i);
    r = (r / g) * (num / (i / g));
  }
  return r;
}

LabeledGraph middle_layer_graph(int n) {
  if (n < 1 || 2 * n + 1 > 20) throw Error(Errc::validation, "middle layer needs 1 <= n <= 9");
  const int dim = 2 * n + 1;
  LabeledGraph g;
  g.label_count = dim;
  std::vector<int> index(std::size_t{1} << dim, -1);
  for (Vertex v = 0; v < (Vertex{1} << dim); ++v) {
    const int weight = std::popcount(v);
    if (weight == n || weight == n + 1) {
      index[v] = static_cast<int>(g.names.size());
      g.names.push_back([&] {
        std::string s(static_cast<std::size_t>(dim), '0');
        for (int i = 0; i < dim; ++i) {
          if ((v >> i) & 1) s[static_cast<std::size_t>(dim - 1 - i)] = '1';
        }
        return s;
      }());
    }
  }
  g.vertex_count = static_cast<int>(g.names.size());
  for (int d = 0; d < dim; ++d) {
    for (Vertex v = 0; v < (Vertex{1} << dim); ++v) {
      if (std::popcount(v) != n || ((v >> d) & 1)) continue;
      const Vertex up = v | (Vertex{1} << d);
      g.edges.push_back({index[v], index[up], d});
    }
  }
  return g;
}

bool middle_layer_necessary(const Profile& x, int n) {
  const auto dim = static_cast<std::uint64_t>(2 * n + 1);
  if (x.size() != dim) return false;
  const std::uint64_t total = binomial(dim, static_cast<std::uint64_t>(n + 1));
  const std::uint64_t parity = lucas_parity(dim, static_cast<std::uint64_t>(n + 1)) == Parity::odd ? 1 : 0;
  const std::uint64_t cap = binomial(static_cast<std::uint64_t>(2 * n - 1), static_cast<std::uint64_t>(n - 1));
  if (x.sum() != total) return false;
  return std::all_of(x.begin(), x.end(),
                     [&](std::uint64_t c) { return c % 2 == parity && c <= cap; });
}

std::vector<Profile> middle_layer_feasible(int n) {
  const int dim = 2 * n + 1;
  const std::uint64_t total = binomial(static_cast<std::uint64_t>(dim), static_cast<std::uint64_t>(n + 1));
  const std::uint64_t cap = binomial(static_cast<std::uint64_t>(2 * n - 1), static_cast<std::uint64_t>(n - 1));
  std::vector<Profile> out;
  for (const Profile& rep : sorted_profiles(dim, cap, total)) {
    if (!middle_layer_necessary(rep, n)) continue;
    for (const Profile& p : distinct_permutations(rep)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MiddleLayerReport middle_layer_profiles(int n, const SearchBudget& budget) {
  check_cap(n, budget.dimension_cap(kMiddleDefaultMax), "middle layer");
  const LabeledGraph g = middle_layer_graph(n);
  MatchingSearch search(g, budget);
  std::set<Profile> found;
  MiddleLayerReport report;
  const SearchStatus status = search.run(std::nullopt, [&](std::span<const int> ids) {
    Profile p(static_cast<std::size_t>(g.label_count));
    for (int id : ids) ++p[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(id)].label)];
    found.insert(std::move(p));
    ++report.matchings;
    return true;
  });
  report.complete = status != SearchStatus::budget_exceeded;
  report.nodes_explored = search.nodes();
  report.profiles.assign(found.begin(), found.end());
  report.feasible = middle_layer_feasible(n);
  report.unrealised = set_difference(report.feasible, report.profiles);
  return report;
}

// --- permutahedron ------------------------------------------------------------

LabeledGraph permutahedron_graph(int n) {
  if (n < 1 || n > 7) throw Error(Errc::validation, "permutahedron needs 1 <= n <= 7");
  const int len = n + 1;
  std::vector<int> perm(static_cast<std::size_t>(len));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::map<std::vector<int>, int> index;
  LabeledGraph g;
  g.vertex_count = static_cast<int>(all.size());
  g.label_count = PairWeighting::pair_count(len);
  for (std::size_t i = 0; i < all.size(); ++i) {
    index[all[i]] = static_cast<int>(i);
    std::string name;
    for (int v : all[i]) name += std::to_string(v);
    g.names.push_back(name);
  }
  for (std::size_t u = 0; u < all.size(); ++u) {
    const auto& p = all[u];
    std::vector<int> pos(static_cast<std::size_t>(len + 1));
    for (int i = 0; i < len; ++i) pos[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i;
    for (int k = 1; k < len; ++k) {
      const int i = pos[static_cast<std::size_t>(k)];
      const int j = pos[static_cast<std::size_t>(k + 1)];
      std::vector<int> q = p;
      std::swap(q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(j)]);
      const int v = index.at(q);
      if (static_cast<int>(u) < v) {
        g.edges.push_back({static_cast<int>(u), v, PairWeighting::pair_index(i, j, len)});
      }
    }
  }
  return g;
}

bool perm3_pair_sums_hold(const PairWeighting& w) {
  if (w.m() != 4) return false;
  return w.at(0, 1) + w.at(2, 3) == 4 && w.at(0, 2) + w.at(1, 3) == 4 &&
         w.at(0, 3) + w.at(1, 2) == 4;
}

PermReport permutahedron_profiles(int n, const SearchBudget& budget) {
  check_cap(n, budget.dimension_cap(kPermDefaultMax), "permutahedron");
  const LabeledGraph g = permutahedron_graph(n);
  MatchingSearch search(g, budget);
  std::map<PairWeighting, std::uint64_t> seen;
  PermReport report;
  const SearchStatus status = search.run(std::nullopt, [&](std::span<const int> ids) {
    PairWeighting w(n + 1);
    for (int id : ids) ++w.weights()[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(id)].label)];
    ++seen[w];
    ++report.matchings;
    return true;
  });
  report.complete = status != SearchStatus::budget_exceeded;
  report.nodes_explored = search.nodes();
  report.weightings = to_sorted_counts(seen);

  if (n == 3) {
    for (const Profile& rep : sorted_profiles(6, 4, 12)) {
      for (const Profile& p : distinct_permutations(rep)) {
        PairWeighting w(4);
        w.weights() = p.counts();
        if (!is_even(p) || !perm3_pair_sums_hold(w)) continue;
        report.polytope_even_points.push_back(w);
        if (std::all_of(p.begin(), p.end(), [](std::uint64_t c) { return c > 0; })) {
          report.polytope_even_interior.push_back(w);
        }
      }
    }
    std::sort(report.polytope_even_points.begin(), report.polytope_even_points.end());
    std::sort(report.polytope_even_interior.begin(), report.polytope_even_interior.end());

    std::vector<PairWeighting> realised;
    for (const auto& wc : report.weightings) realised.push_back(wc.weighting);
    report.equals_closed_points = realised == report.polytope_even_points;
    report.equals_interior_points = realised == report.polytope_even_interior;
  }
  return report;
}

}  // namespace cubeprof
