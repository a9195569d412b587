#include "cubeprof/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace cubeprof {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::validation: return "validation";
    case Errc::domination: return "domination";
    case Errc::dimension_overflow: return "dimension-overflow";
    case Errc::lift_inapplicable: return "lift-inapplicable";
    case Errc::not_admissible: return "not-admissible";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

void ensure(bool cond, const char* what) {
  if (!cond) throw Error(Errc::internal, std::string("invariant violated: ") + what);
}

Dimension::Dimension(int n) : n_(n) {
  if (n < 1 || n > kMax) {
    throw Error(Errc::validation,
                "dimension " + std::to_string(n) + " outside [1, " + std::to_string(kMax) + "]");
  }
}

Edge make_edge(Vertex u, int dir, Dimension dim) {
  if (dir < 0 || dir >= dim.value()) {
    throw Error(Errc::validation, "direction " + std::to_string(dir) + " outside [0, " +
                                      std::to_string(dim.value()) + ")");
  }
  if (!dim.contains(u)) {
    throw Error(Errc::validation, "vertex " + std::to_string(u) + " outside Q^" +
                                      std::to_string(dim.value()));
  }
  return Edge{u & ~(Vertex{1} << dir), dir};
}

std::uint64_t Profile::sum() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::string Profile::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) os << ',';
    os << counts_[i];
  }
  os << ')';
  return os.str();
}

Matching Matching::from_edges(Dimension dim, std::vector<Edge> edges) {
  std::vector<Vertex> ends;
  ends.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    if (make_edge(e.base, e.dir, dim) != e) {
      throw Error(Errc::validation, "edge base " + std::to_string(e.base) +
                                        " has direction bit " + std::to_string(e.dir) + " set");
    }
    ends.push_back(e.base);
    ends.push_back(e.other());
  }
  std::sort(ends.begin(), ends.end());
  if (auto it = std::adjacent_find(ends.begin(), ends.end()); it != ends.end()) {
    throw Error(Errc::validation, "vertex " + std::to_string(*it) + " covered twice");
  }
  std::sort(edges.begin(), edges.end());
  return Matching(dim, std::move(edges));
}

CandidateMatching to_candidate(const Matching& m) {
  CandidateMatching c;
  c.n = m.dim().value();
  c.pairs.reserve(m.size());
  for (const Edge& e : m.edges()) c.pairs.emplace_back(e.base, e.other());
  return c;
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::none: return "none";
    case Violation::bad_dimension: return "bad-dimension";
    case Violation::vertex_out_of_range: return "vertex-out-of-range";
    case Violation::not_an_edge: return "not-an-edge";
    case Violation::repeated_vertex: return "repeated-vertex";
    case Violation::profile_length: return "profile-length";
    case Violation::profile_mismatch: return "profile-mismatch";
    case Violation::not_perfect: return "not-perfect";
  }
  return "unknown";
}

namespace {

VerifyResult reject(Violation v, std::string message) { return {v, std::move(message)}; }

}  // namespace

VerifyResult verify(const CandidateMatching& m, const Profile& x, bool require_perfect) {
  if (m.n < 1 || m.n > Dimension::kMax) {
    return reject(Violation::bad_dimension, "dimension " + std::to_string(m.n) + " unsupported");
  }
  const Dimension dim(m.n);
  if (x.size() != static_cast<std::size_t>(m.n)) {
    return reject(Violation::profile_length, "profile has " + std::to_string(x.size()) +
                                                 " coordinates, expected " + std::to_string(m.n));
  }

  Profile actual(x.size());
  std::vector<Vertex> ends;
  ends.reserve(2 * m.pairs.size());
  for (std::size_t i = 0; i < m.pairs.size(); ++i) {
    const auto [u, v] = m.pairs[i];
    if (!dim.contains(u) || !dim.contains(v)) {
      return reject(Violation::vertex_out_of_range,
                    "edge " + std::to_string(i) + " has an endpoint outside Q^" +
                        std::to_string(m.n));
    }
    const Vertex diff = u ^ v;
    if (!std::has_single_bit(diff)) {
      return reject(Violation::not_an_edge, "edge " + std::to_string(i) + " (" +
                                                std::to_string(u) + "," + std::to_string(v) +
                                                ") is not a hypercube edge");
    }
    ++actual[std::countr_zero(diff)];
    ends.push_back(u);
    ends.push_back(v);
  }
  std::sort(ends.begin(), ends.end());
  if (auto it = std::adjacent_find(ends.begin(), ends.end()); it != ends.end()) {
    return reject(Violation::repeated_vertex,
                  "vertex " + std::to_string(*it) + " is covered more than once");
  }
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (actual[d] != x[d]) {
      return reject(Violation::profile_mismatch,
                    "coordinate " + std::to_string(d + 1) + " has " + std::to_string(actual[d]) +
                        " edges, expected " + std::to_string(x[d]));
    }
  }
  if (require_perfect && ends.size() != dim.vertex_count()) {
    return reject(Violation::not_perfect,
                  std::to_string(dim.vertex_count() - ends.size()) + " vertices uncovered");
  }
  return {};
}

VerifyResult verify(const Matching& m, const Profile& x, bool require_perfect) {
  return verify(to_candidate(m), x, require_perfect);
}

Profile profile_of(const Matching& m) {
  Profile p(static_cast<std::size_t>(m.dim().value()));
  for (const Edge& e : m.edges()) ++p[static_cast<std::size_t>(e.dir)];
  return p;
}

std::vector<Vertex> uncovered(const Matching& m) {
  std::vector<Vertex> ends;
  ends.reserve(2 * m.size());
  for (const Edge& e : m.edges()) {
    ends.push_back(e.base);
    ends.push_back(e.other());
  }
  std::sort(ends.begin(), ends.end());

  std::vector<Vertex> out;
  out.reserve(m.dim().vertex_count() - ends.size());
  auto it = ends.begin();
  for (Vertex v = 0; v < m.dim().vertex_count(); ++v) {
    if (it != ends.end() && *it == v) {
      ++it;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

Matching double_and_extend(const Matching& m) {
  const int n = m.dim().value();
  if (n + 1 > Dimension::kMax) {
    throw Error(Errc::dimension_overflow,
                "cannot extend Q^" + std::to_string(n) + " beyond the dimension cap");
  }
  const Dimension up(n + 1);
  const Vertex top = Vertex{1} << n;

  std::vector<Edge> edges;
  edges.reserve(up.half());
  // Edges of m are sorted by (dir, base); within one direction every lower copy
  // precedes every upper copy, so emitting per direction keeps the order.
  auto first = m.edges().begin();
  while (first != m.edges().end()) {
    auto last = std::find_if(first, m.edges().end(),
                             [dir = first->dir](const Edge& e) { return e.dir != dir; });
    for (auto it = first; it != last; ++it) edges.push_back(*it);
    for (auto it = first; it != last; ++it) edges.push_back(Edge{it->base | top, it->dir});
    first = last;
  }
  for (Vertex v : uncovered(m)) edges.push_back(Edge{v, n});

  ensure(edges.size() == up.half(), "double_and_extend yields a perfect matching");
  return Matching(up, std::move(edges));
}

Matching delete_down(const Matching& m, const Profile& target) {
  const auto n = static_cast<std::size_t>(m.dim().value());
  if (target.size() != n) {
    throw Error(Errc::validation, "target profile has " + std::to_string(target.size()) +
                                      " coordinates, expected " + std::to_string(n));
  }
  const Profile have = profile_of(m);
  for (std::size_t d = 0; d < n; ++d) {
    if (target[d] > have[d]) {
      throw Error(Errc::domination, "coordinate " + std::to_string(d + 1) + " asks for " +
                                        std::to_string(target[d]) + " edges but only " +
                                        std::to_string(have[d]) + " exist");
    }
  }
  std::vector<Edge> kept;
  kept.reserve(target.sum());
  Profile taken(n);
  for (const Edge& e : m.edges()) {
    const auto d = static_cast<std::size_t>(e.dir);
    if (taken[d] < target[d]) {
      kept.push_back(e);
      ++taken[d];
    }
  }
  return Matching(m.dim(), std::move(kept));
}

void check_permutation(std::span<const int> perm, int n) {
  if (perm.size() != static_cast<std::size_t>(n)) {
    throw Error(Errc::validation, "permutation has " + std::to_string(perm.size()) +
                                      " entries, expected " + std::to_string(n));
  }
  std::vector<char> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw Error(Errc::validation, "not a permutation of [0, " + std::to_string(n) + ")");
    }
    seen[static_cast<std::size_t>(p)] = 1;
  }
}

Matching permute_coordinates(const Matching& m, std::span<const int> perm) {
  const int n = m.dim().value();
  check_permutation(perm, n);
  auto move_bits = [&](Vertex v) {
    Vertex out = 0;
    for (int i = 0; i < n; ++i) {
      if ((v >> i) & 1) out |= Vertex{1} << perm[static_cast<std::size_t>(i)];
    }
    return out;
  };
  std::vector<Edge> edges;
  edges.reserve(m.size());
  for (const Edge& e : m.edges()) {
    edges.push_back(Edge{move_bits(e.base), perm[static_cast<std::size_t>(e.dir)]});
  }
  std::sort(edges.begin(), edges.end());
  return Matching(m.dim(), std::move(edges));
}

}  // namespace cubeprof
