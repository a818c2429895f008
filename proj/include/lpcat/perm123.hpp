#pragma once

#include <compare>
#include <vector>

namespace lpcat {

/// A 123-avoiding permutation of 1..n in one-line notation: no three positions
/// i1 < i2 < i3 carry increasing values. Immutable after construction.
class Perm123 {
 public:
  /// Validates both the permutation property and 123-avoidance.
  static Perm123 from_values(std::vector<int> values);

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }
  int value(int position) const { return values_[static_cast<std::size_t>(position - 1)]; }

  /// Smallest 1-based i with value(i) < value(i+1), or n when the permutation
  /// is strictly decreasing. The node label in the generating tree is this +1.
  int first_ascent() const;

  auto operator<=>(const Perm123&) const = default;

 private:
  struct Trusted {};
  Perm123(std::vector<int> values, Trusted);

  std::vector<int> values_;

  friend Perm123 trusted_perm(std::vector<int>);
};

/// Fast path for values known valid by construction; asserts in debug builds.
Perm123 trusted_perm(std::vector<int> values);

/// True when `values` is a permutation of 1..n with no increasing triple.
/// Exposed for the brute-force scan and the parser.
bool avoids_123(const std::vector<int>& values);

}  // namespace lpcat
