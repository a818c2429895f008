#include "lpcat/tree.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>

#include "lpcat/errors.hpp"
#include "lpcat/stats.hpp"
#include "lpcat/tl.hpp"

namespace lpcat {

const char* family_name(Family family) noexcept {
  switch (family) {
    case Family::lp: return "lp";
    case Family::dyck: return "dyck";
    case Family::perm: return "perm";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) noexcept {
  if (name == "lp") return Family::lp;
  if (name == "dyck") return Family::dyck;
  if (name == "perm") return Family::perm;
  return std::nullopt;
}

int TreeNode::level() const {
  struct Visitor {
    int operator()(const LinkPattern& p) const { return p.strands(); }
    int operator()(const DyckPath& d) const { return d.semilength(); }
    int operator()(const Perm123& s) const { return s.size(); }
  };
  return std::visit(Visitor{}, value);
}

TreeNode tree_root(Family family) {
  switch (family) {
    case Family::lp: return {trusted_pattern({1, 0})};
    case Family::dyck: return {trusted_path({Step::up, Step::down})};
    case Family::perm: return {trusted_perm({1})};
  }
  throw Error(Errc::domain, "unknown family");
}

namespace {

void check_rank(int rank, int count) {
  if (rank < 1 || rank > count)
    throw Error(Errc::rank_out_of_range,
                "child rank " + std::to_string(rank) + " outside 1.." + std::to_string(count));
}

LinkPattern lp_child(const LinkPattern& pi, int rank) {
  // Wrap-insert the fresh link (2n-1, 0), then drag the rank-th outermost arc
  // across it; the last rank keeps the inserted pattern itself.
  const LinkPattern inserted = insert_strand(pi, pi.points() + 1);
  const int count = exposure(inserted, 0);
  check_rank(rank, count);
  return rank == count ? inserted : drag_outermost(inserted, rank);
}

DyckPath dyck_child(const DyckPath& d, int rank) {
  const int ell = last_descent_length(d);
  check_rank(rank, ell + 1);
  // New peak at height rank-1 on the final descent.
  std::vector<Step> s = d.steps();
  s.resize(s.size() - static_cast<std::size_t>(ell));
  s.insert(s.end(), static_cast<std::size_t>(ell - rank + 1), Step::down);
  s.push_back(Step::up);
  s.insert(s.end(), static_cast<std::size_t>(rank), Step::down);
  return trusted_path(std::move(s));
}

Perm123 perm_child(const Perm123& p, int rank) {
  const int ascent = p.first_ascent();
  check_rank(rank, ascent + 1);
  // n+1 goes right after the rank-th entry; the final rank wraps to the front.
  std::vector<int> v = p.values();
  const auto pos = v.begin() + (rank <= ascent ? rank : 0);
  v.insert(pos, p.size() + 1);
  return trusted_perm(std::move(v));
}

LinkPattern lp_parent(const LinkPattern& pi) {
  const int m = pi.points();
  return delete_strand(apply_generator(pi, m - 1).pattern, m - 1);
}

DyckPath dyck_parent(const DyckPath& d) {
  // Remove the last peak: the final ascent plus one of the descents after it.
  std::vector<Step> s = d.steps();
  const auto last_up = std::find(s.rbegin(), s.rend(), Step::up);
  s.erase(std::next(last_up).base());
  s.pop_back();
  return trusted_path(std::move(s));
}

Perm123 perm_parent(const Perm123& p) {
  std::vector<int> v = p.values();
  v.erase(std::find(v.begin(), v.end(), p.size()));
  return trusted_perm(std::move(v));
}

}  // namespace

int label(const TreeNode& node) {
  switch (node.family()) {
    case Family::lp: return exposure(node.pattern(), 0) + 1;
    case Family::dyck: return last_descent_length(node.path()) + 1;
    case Family::perm: return node.perm().first_ascent() + 1;
  }
  throw Error(Errc::domain, "unknown family");
}

TreeNode child(const TreeNode& node, int rank) {
  switch (node.family()) {
    case Family::lp: return {lp_child(node.pattern(), rank)};
    case Family::dyck: return {dyck_child(node.path(), rank)};
    case Family::perm: return {perm_child(node.perm(), rank)};
  }
  throw Error(Errc::domain, "unknown family");
}

std::vector<TreeNode> children(const TreeNode& node) {
  const int count = label(node);
  std::vector<TreeNode> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int rank = 1; rank <= count; ++rank) out.push_back(child(node, rank));
  return out;
}

TreeNode parent(const TreeNode& node) {
  if (node.level() <= 1) throw Error(Errc::at_root, "the root has no parent");
  switch (node.family()) {
    case Family::lp: return {lp_parent(node.pattern())};
    case Family::dyck: return {dyck_parent(node.path())};
    case Family::perm: return {perm_parent(node.perm())};
  }
  throw Error(Errc::domain, "unknown family");
}

int child_rank(const TreeNode& node) {
  if (node.level() <= 1) throw Error(Errc::at_root, "the root has no sibling rank");
  // A rank-r child always carries label r+1, uniformly across families.
  return label(node) - 1;
}

PathCode path_code(TreeNode node) {
  PathCode code;
  while (node.level() > 1) {
    code.push_back(child_rank(node));
    node = parent(node);
  }
  std::reverse(code.begin(), code.end());
  return code;
}

TreeNode node_at(Family family, const PathCode& code) {
  int prev = 1;  // the root's virtual rank; enforces ranks[0] <= 2
  for (std::size_t t = 0; t < code.size(); ++t) {
    const int rank = code[t];
    if (rank < 1 || rank > prev + 1)
      throw Error(Errc::invalid_code,
                  "rank " + std::to_string(rank) + " at step " + std::to_string(t + 1) +
                      " violates the sibling-rank growth constraint");
    prev = rank;
  }
  TreeNode node = tree_root(family);
  for (int rank : code) node = child(node, rank);
  return node;
}

LevelStream::LevelStream(Family family, int level) : LevelStream(tree_root(family), level) {}

LevelStream::LevelStream(TreeNode root, int level) : target_(level) {
  if (level < 1) throw Error(Errc::domain, "level must be at least 1");
  if (root.level() > level)
    throw Error(Errc::domain, "subtree root sits below the requested level");
  push(std::move(root));
}

void LevelStream::push(TreeNode node) {
  stack_.push_back(Frame{std::move(node), -1, 1});
  max_frames_ = std::max(max_frames_, static_cast<int>(stack_.size()));
}

std::optional<TreeNode> LevelStream::next() {
  while (!stack_.empty()) {
    Frame& frame = stack_.back();
    if (frame.node.level() == target_) {
      TreeNode out = std::move(frame.node);
      stack_.pop_back();
      return out;
    }
    if (frame.label < 0) frame.label = label(frame.node);
    if (frame.next_rank > frame.label) {
      stack_.pop_back();
      continue;
    }
    TreeNode next_child = child(frame.node, frame.next_rank++);
    push(std::move(next_child));  // may reallocate; frame is dead past here
  }
  return std::nullopt;
}

std::uint64_t count_level(Family family, int level) {
  LevelStream stream(family, level);
  std::uint64_t count = 0;
  while (stream.next()) ++count;
  return count;
}

std::vector<TreeNode> level_nodes(Family family, int level) {
  LevelStream stream(family, level);
  std::vector<TreeNode> out;
  while (auto node = stream.next()) out.push_back(std::move(*node));
  return out;
}

std::vector<TreeNode> shard_roots(Family family, int target, int min_shards) {
  if (target < 1) throw Error(Errc::domain, "level must be at least 1");
  std::vector<TreeNode> nodes{tree_root(family)};
  int depth = 1;
  while (depth < target && static_cast<int>(nodes.size()) < min_shards) {
    std::vector<TreeNode> next;
    for (const TreeNode& node : nodes)
      for (TreeNode& c : children(node)) next.push_back(std::move(c));
    nodes = std::move(next);
    ++depth;
  }
  return nodes;
}

}  // namespace lpcat
