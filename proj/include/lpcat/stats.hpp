#pragma once

#include <optional>
#include <string>

#include "lpcat/dyck_path.hpp"
#include "lpcat/link_pattern.hpp"
#include "lpcat/tree.hpp"

namespace lpcat {

/// Length of the trailing descent run. Throws Errc::domain on the empty path.
int last_descent_length(const DyckPath& d);

/// Number of ascent-descent adjacencies.
int peaks(const DyckPath& d);

/// Number of generating-tree ancestors of `pi` (the node included, the root
/// not) that lack the link (2m-1, 0) at their own level m. Those are exactly
/// the levels entered by dragging an outermost link rather than by plain
/// insertion. Computed by walking the parent chain.
int interaction(const LinkPattern& pi);

/// The object of `target` family sitting at the same tree address:
/// node_at(target, path_code(node)). Bijective level by level; carries the
/// exposure / last-descent-length statistic and maps interaction to peaks - 1.
TreeNode convert(const TreeNode& node, Family target);

/// Statistics bundle for one node; only the fields of the node's family are
/// set. For permutations the label itself is the first-ascent statistic.
struct StatRecord {
  Family family = Family::lp;
  int level = 0;
  int label = 0;
  std::optional<int> exposure;      // link patterns, at cut gap 0
  std::optional<int> interaction;   // link patterns
  std::optional<int> last_descent;  // dyck paths
  std::optional<int> peaks;         // dyck paths
};

StatRecord stat_record(const TreeNode& node);

/// Space-separated key=value pairs, e.g. "level=3 label=2 exposure=1 interaction=2";
/// appended to node records by the streaming output.
std::string encode_stats(const StatRecord& record);

}  // namespace lpcat
