#include "lpcat/perm123.hpp"

#include <cassert>
#include <limits>
#include <string>

#include "lpcat/errors.hpp"

namespace lpcat {

namespace {

bool is_permutation(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : values) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) return false;
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return true;
}

// O(n): track the running minimum and the smallest value that already has a
// smaller value to its left; any later value above the latter completes a 123.
bool has_increasing_triple(const std::vector<int>& values) {
  int min_so_far = std::numeric_limits<int>::max();
  int best_second = std::numeric_limits<int>::max();
  for (int v : values) {
    if (v > best_second) return true;
    if (v > min_so_far && v < best_second) best_second = v;
    if (v < min_so_far) min_so_far = v;
  }
  return false;
}

}  // namespace

bool avoids_123(const std::vector<int>& values) {
  return is_permutation(values) && !has_increasing_triple(values);
}

Perm123::Perm123(std::vector<int> values, Trusted) : values_(std::move(values)) {
  assert(avoids_123(values_));
}

Perm123 trusted_perm(std::vector<int> values) {
  return Perm123(std::move(values), Perm123::Trusted{});
}

Perm123 Perm123::from_values(std::vector<int> values) {
  if (values.empty())
    throw Error(Errc::domain, "permutation must be nonempty");
  if (!is_permutation(values))
    throw Error(Errc::domain,
                "values are not a permutation of 1.." + std::to_string(values.size()));
  if (has_increasing_triple(values))
    throw Error(Errc::domain, "permutation contains an increasing subsequence of length 3");
  return Perm123(std::move(values), Trusted{});
}

int Perm123::first_ascent() const {
  const int n = size();
  for (int i = 1; i < n; ++i)
    if (value(i) < value(i + 1)) return i;
  return n;
}

}  // namespace lpcat
