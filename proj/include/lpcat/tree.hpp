#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "lpcat/dyck_path.hpp"
#include "lpcat/link_pattern.hpp"
#include "lpcat/perm123.hpp"

namespace lpcat {

/// The three Catalan families generated by the shared succession rule
/// (k) -> (2)(3)...(k+1). Enumerator order matches the NodeValue alternatives.
enum class Family { lp, dyck, perm };

const char* family_name(Family family) noexcept;
std::optional<Family> family_from_name(std::string_view name) noexcept;

using NodeValue = std::variant<LinkPattern, DyckPath, Perm123>;

/// A generating-tree node: one object of one family. The level is the object
/// size (strands / semilength / length) and the root of every family sits at
/// level 1.
struct TreeNode {
  NodeValue value;

  Family family() const { return static_cast<Family>(value.index()); }
  int level() const;

  const LinkPattern& pattern() const { return std::get<LinkPattern>(value); }
  const DyckPath& path() const { return std::get<DyckPath>(value); }
  const Perm123& perm() const { return std::get<Perm123>(value); }

  auto operator<=>(const TreeNode&) const = default;
};

/// Sequence of sibling ranks (1-based) from the root down to a node. Valid
/// codes satisfy ranks[0] <= 2 and ranks[t+1] <= ranks[t] + 1.
using PathCode = std::vector<int>;

TreeNode tree_root(Family family);

/// Number of children; equals exposure+1 (lp), last descent length + 1
/// (dyck), first ascent index + 1 (perm).
int label(const TreeNode& node);

/// The rank-th child, 1-based; the rank-r child always has label r+1.
/// Throws Errc::rank_out_of_range outside 1..label(node).
TreeNode child(const TreeNode& node, int rank);

std::vector<TreeNode> children(const TreeNode& node);

/// Throws Errc::at_root at level 1. Satisfies child(parent(x), child_rank(x)) == x.
TreeNode parent(const TreeNode& node);

/// Rank of the node among its siblings; always label(node) - 1.
/// Throws Errc::at_root at level 1.
int child_rank(const TreeNode& node);

PathCode path_code(TreeNode node);

/// Walks `code` down from the family root. Throws Errc::invalid_code when the
/// rank constraints are violated.
TreeNode node_at(Family family, const PathCode& code);

/// Depth-first stream of every node at one tree level, generated on demand.
/// Memory is bounded by the root-to-leaf path: at most `level` live frames
/// (high-water mark reported by max_frames, used by the streaming test).
class LevelStream {
 public:
  LevelStream(Family family, int level);

  /// Streams only the subtree below `root` (used for parallel sharding).
  LevelStream(TreeNode root, int level);

  std::optional<TreeNode> next();

  int max_frames() const { return max_frames_; }
  int target_level() const { return target_; }

 private:
  struct Frame {
    TreeNode node;
    int label;      // -1 until the node needs expanding
    int next_rank;  // next child rank to produce
  };

  void push(TreeNode node);

  int target_;
  int max_frames_ = 0;
  std::vector<Frame> stack_;
};

/// Streams the level and counts it (no materialization).
std::uint64_t count_level(Family family, int level);

/// Materializes a full level in document order; intended for small levels.
std::vector<TreeNode> level_nodes(Family family, int level);

/// Roots for splitting the level-`target` traversal across workers: the
/// shallowest full level holding at least min_shards nodes (capped at
/// `target`). Concatenating the shard subtree streams in the returned order
/// reproduces single-threaded document order exactly.
std::vector<TreeNode> shard_roots(Family family, int target, int min_shards);

}  // namespace lpcat
