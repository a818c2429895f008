#include "lpcat/dyck_path.hpp"

#include <cassert>
#include <string>

#include "lpcat/errors.hpp"

namespace lpcat {

namespace {

bool is_dyck(const std::vector<Step>& steps) {
  if (steps.size() % 2 != 0) return false;
  int height = 0;
  for (Step s : steps) {
    height += s == Step::up ? 1 : -1;
    if (height < 0) return false;
  }
  return height == 0;
}

}  // namespace

DyckPath::DyckPath(std::vector<Step> steps, Trusted) : steps_(std::move(steps)) {
  assert(is_dyck(steps_));
}

DyckPath trusted_path(std::vector<Step> steps) {
  return DyckPath(std::move(steps), DyckPath::Trusted{});
}

DyckPath DyckPath::from_steps(std::vector<Step> steps) {
  if (steps.size() % 2 != 0)
    throw Error(Errc::domain, "step sequence has odd length " + std::to_string(steps.size()));
  int height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += steps[i] == Step::up ? 1 : -1;
    if (height < 0)
      throw Error(Errc::domain, "path dips below the axis after step " + std::to_string(i + 1));
  }
  if (height != 0)
    throw Error(Errc::domain, "path ends at height " + std::to_string(height));
  return DyckPath(std::move(steps), Trusted{});
}

}  // namespace lpcat
