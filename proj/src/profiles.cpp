#include "cubeprof/profiles.hpp"

#include <algorithm>
#include <numeric>

namespace cubeprof {

int o_count(const Profile& x) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i] % 4 == 2) ++count;
  }
  return count;
}

bool is_even(const Profile& x) {
  return std::all_of(x.begin(), x.end(), [](std::uint64_t c) { return c % 2 == 0; });
}

ProfileClass classify(const Profile& x, Dimension n) {
  if (x.size() != static_cast<std::size_t>(n.value())) {
    throw Error(Errc::validation, "profile " + x.to_string() + " does not have " +
                                      std::to_string(n.value()) + " coordinates");
  }
  return ProfileClass{is_even(x), x.sum() == n.half(), o_count(x)};
}

bool precedes(const Profile& y, const Profile& x) {
  if (y.size() != x.size()) {
    throw Error(Errc::validation,
                "cannot compare " + y.to_string() + " with " + x.to_string());
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] > x[i]) return false;
  }
  return true;
}

bool lift_applicable(const Profile& x) {
  return x.size() >= 1 && x.back() >= 2 * static_cast<std::uint64_t>(o_count(x));
}

Profile lift_half(const Profile& x) {
  if (x.size() < 3 || x.size() - 1 > static_cast<std::size_t>(Dimension::kMax)) {
    throw Error(Errc::validation, "lift_half needs a profile with 3 to 63 coordinates, got " +
                                      x.to_string());
  }
  const Dimension inner(static_cast<int>(x.size() - 1));
  if (!is_even(x)) throw Error(Errc::validation, "lift_half needs an even profile");
  if (!std::is_sorted(x.begin(), x.end())) {
    throw Error(Errc::validation, "lift_half needs a non-decreasing profile");
  }
  if (x.sum() > inner.vertex_count()) {
    throw Error(Errc::validation, "profile " + x.to_string() + " exceeds 2^" +
                                      std::to_string(inner.value()));
  }
  if (!lift_applicable(x)) {
    throw Error(Errc::lift_inapplicable,
                "last coordinate of " + x.to_string() + " is below 2*o(x) = " +
                    std::to_string(2 * o_count(x)));
  }

  Profile lifted(x.size() - 1);
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    const std::uint64_t half = x[i] / 2;
    lifted[i] = half + (x[i] % 4 == 2 ? 1 : 0);
  }
  const std::uint64_t total = lifted.sum();
  ensure(total <= inner.half(), "lifted sum stays within 2^(n-1)");
  const std::uint64_t deficit = inner.half() - total;
  ensure(deficit % 2 == 0, "padding deficit is even");
  lifted.back() += deficit;
  ensure(is_even(lifted) && lifted.sum() == inner.half(), "lift is perfect and even");
  return lifted;
}

std::vector<int> sorting_order(const Profile& x) {
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return x[static_cast<std::size_t>(a)] < x[static_cast<std::size_t>(b)];
  });
  return order;
}

Profile permuted(const Profile& x, const std::vector<int>& order) {
  Profile out(x.size());
  for (std::size_t k = 0; k < order.size(); ++k) out[k] = x[static_cast<std::size_t>(order[k])];
  return out;
}

}  // namespace cubeprof
