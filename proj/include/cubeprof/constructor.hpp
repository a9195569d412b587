#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cubeprof/hypercube.hpp"
#include "cubeprof/search.hpp"

namespace cubeprof {

enum class Reason {
  perfect_but_odd,                    // sum 2^(n-1) with an odd coordinate, n >= 2
  sum_exceeds_half,                   // sum > 2^(n-1)
  coordinate_exceeds_direction_class, // some x_i > 2^(n-1)
  oracle_exhausted,                   // exhaustive search found no matching
};

const char* to_string(Reason r);

class NotAdmissibleError : public Error {
 public:
  explicit NotAdmissibleError(Reason r)
      : Error(Errc::not_admissible, std::string("not admissible: ") + to_string(r)), reason_(r) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

// Hard-coded matchings the recursion bottoms out on: (1) in Q^1, (1,1,1) in
// Q^3 and (3,3,3,3,3) in Q^5. `frozen_json` is the committed serialisation.
struct BaseCase {
  Profile profile;
  Matching matching;
  std::string_view frozen_json;
};

std::span<const BaseCase> base_case_table();

// Re-verifies every base case and compares its serialisation with the frozen
// bytes. Returns one message per failure; empty means all good.
std::vector<std::string> base_case_self_test();

// Witness for an even x with every x_i <= 2^(n-1) and sum <= 2^(n-1).
//
// The profile is sorted, padded on its last coordinate to a perfect even
// tuple, built by the doubling recursion and then deleted down and unsorted.
// A perfect even sorted tuple (2y, x_m) is built from a matching with profile
// y: taken from a dominating base case when one exists, otherwise from the
// lifted tuple y' >= y built recursively one dimension lower.
Matching construct_even(const Profile& x, Dimension n);

struct Admissible {
  Matching witness;
  std::string route;  // "construction", "base-case" or "oracle"
};

struct NotAdmissible {
  Reason reason;
};

struct Unknown {
  std::string note;
};

using Verdict = std::variant<Admissible, NotAdmissible, Unknown>;

enum class VerdictKind { admissible, not_admissible, unknown };

struct Decision {
  Verdict verdict;

  VerdictKind kind() const noexcept { return static_cast<VerdictKind>(verdict.index()); }
  const Matching* witness() const noexcept;
  std::string summary() const;  // "Admissible", "NotAdmissible: <reason>", "Unknown"
};

struct DecideOptions {
  // Oracle fallback for tuples the construction cannot settle; disabled when unset.
  std::optional<int> oracle_max_dimension;
  SearchBudget oracle_budget;
};

// Three-valued admissibility. Never throws for a profile of the right length.
Decision decide(const Profile& x, Dimension n, const DecideOptions& options = {});

}  // namespace cubeprof
