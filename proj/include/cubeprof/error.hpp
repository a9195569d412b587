#pragma once

#include <stdexcept>
#include <string>

namespace cubeprof {

enum class Errc {
  validation,          // malformed input: out-of-range vertex, bad direction, length mismatch
  domination,          // delete_down target not dominated by the matching's profile
  dimension_overflow,  // result would exceed the supported dimension cap
  lift_inapplicable,   // last coordinate smaller than 2 * o(x)
  not_admissible,      // construct_even called outside its domain
  internal,            // an asserted invariant failed
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Throws Errc::internal when `cond` is false. Used for invariants that hold by
// construction; a failure is a bug in this library, not in the caller's data.
void ensure(bool cond, const char* what);

}  // namespace cubeprof
