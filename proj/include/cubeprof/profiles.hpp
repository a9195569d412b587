#pragma once

#include <cstdint>
#include <vector>

#include "cubeprof/hypercube.hpp"

namespace cubeprof {

struct ProfileClass {
  bool is_even = false;
  bool is_perfect = false;  // sum == 2^(n-1)
  // Coordinates other than the last that are congruent to 2 mod 4.
  int o_count = 0;
};

ProfileClass classify(const Profile& x, Dimension n);

// o(x): number of coordinates except the last with x_i = 2 (mod 4).
int o_count(const Profile& x);

bool is_even(const Profile& x);

// Coordinatewise y <= x.
bool precedes(const Profile& y, const Profile& x);

// True when lift_half accepts x, i.e. x_last >= 2 * o(x).
bool lift_applicable(const Profile& x);

// For an even, non-decreasing x in N^(n+1) with |x| <= 2^n and x_last >= 2 o(x),
// returns a perfect even y' in N^n dominating (x_1/2, ..., x_n/2).
//
// Each half-coordinate that is odd is bumped by one; the remaining (even)
// deficit to 2^(n-1) is added to the last coordinate, which keeps the result
// sorted. Throws Errc::lift_inapplicable when x_last < 2 o(x).
Profile lift_half(const Profile& x);

// Stable sort order: sorted[k] = x[order[k]].
std::vector<int> sorting_order(const Profile& x);

Profile permuted(const Profile& x, const std::vector<int>& order);

}  // namespace cubeprof
