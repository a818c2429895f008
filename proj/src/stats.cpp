#include "lpcat/stats.hpp"

#include "lpcat/errors.hpp"
#include "lpcat/tl.hpp"

namespace lpcat {

int last_descent_length(const DyckPath& d) {
  if (d.length() == 0) throw Error(Errc::domain, "statistic undefined on the empty path");
  const auto& steps = d.steps();
  int count = 0;
  for (auto it = steps.rbegin(); it != steps.rend() && *it == Step::down; ++it) ++count;
  return count;
}

int peaks(const DyckPath& d) {
  if (d.length() == 0) throw Error(Errc::domain, "statistic undefined on the empty path");
  const auto& steps = d.steps();
  int count = 0;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i)
    if (steps[i] == Step::up && steps[i + 1] == Step::down) ++count;
  return count;
}

int interaction(const LinkPattern& pi) {
  int count = 0;
  LinkPattern current = pi;
  while (current.strands() >= 2) {
    const int m = current.points();
    if (!current.has_link(m - 1, 0)) ++count;
    current = delete_strand(apply_generator(current, m - 1).pattern, m - 1);
  }
  return count;
}

TreeNode convert(const TreeNode& node, Family target) {
  if (node.family() == target) return node;
  return node_at(target, path_code(node));
}

StatRecord stat_record(const TreeNode& node) {
  StatRecord record;
  record.family = node.family();
  record.level = node.level();
  record.label = label(node);
  switch (node.family()) {
    case Family::lp:
      record.exposure = exposure(node.pattern(), 0);
      record.interaction = interaction(node.pattern());
      break;
    case Family::dyck:
      record.last_descent = last_descent_length(node.path());
      record.peaks = peaks(node.path());
      break;
    case Family::perm:
      break;  // the label is the first-ascent statistic
  }
  return record;
}

std::string encode_stats(const StatRecord& record) {
  std::string out = "level=" + std::to_string(record.level) +
                    " label=" + std::to_string(record.label);
  const auto field = [&out](const char* key, const std::optional<int>& value) {
    if (value) out += std::string(" ") + key + "=" + std::to_string(*value);
  };
  field("exposure", record.exposure);
  field("interaction", record.interaction);
  field("ldl", record.last_descent);
  field("peaks", record.peaks);
  return out;
}

}  // namespace lpcat
