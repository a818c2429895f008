#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace lpcat {

enum class Step : std::uint8_t { up, down };

/// A Dyck path: a (+1,-1)-step sequence that starts and ends on the axis and
/// never dips below it. Immutable after construction.
class DyckPath {
 public:
  /// Validates the nonnegative-prefix and zero-sum invariants.
  static DyckPath from_steps(std::vector<Step> steps);

  int length() const { return static_cast<int>(steps_.size()); }
  int semilength() const { return length() / 2; }
  const std::vector<Step>& steps() const { return steps_; }

  auto operator<=>(const DyckPath&) const = default;

 private:
  struct Trusted {};
  DyckPath(std::vector<Step> steps, Trusted);

  std::vector<Step> steps_;

  friend DyckPath trusted_path(std::vector<Step>);
};

/// Fast path for steps known valid by construction; asserts in debug builds.
DyckPath trusted_path(std::vector<Step> steps);

}  // namespace lpcat
