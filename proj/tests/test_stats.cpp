#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "lpcat/codec.hpp"
#include "lpcat/errors.hpp"
#include "lpcat/stats.hpp"
#include "util.hpp"

using namespace lpcat;
using testutil::dy;
using testutil::lp;
using testutil::pm;
using testutil::thrown_code;

TEST_SUITE_BEGIN("statistics and bijections");

TEST_CASE("last descent length") {
  CHECK(last_descent_length(dy("UD")) == 1);
  CHECK(last_descent_length(dy("UUDD")) == 2);
  CHECK(last_descent_length(dy("UDUD")) == 1);
  CHECK(last_descent_length(dy("UUUDDD")) == 3);
  CHECK(thrown_code([] { last_descent_length(dy("")); }) == Errc::domain);

  SUBCASE("equals the trailing run in the word form") {
    for (int n = 1; n <= 6; ++n)
      for (const std::string& word : testutil::all_dyck_words(n)) {
        int trailing = 0;
        for (auto it = word.rbegin(); it != word.rend() && *it == 'D'; ++it) ++trailing;
        CHECK(last_descent_length(dy(word)) == trailing);
      }
  }
}

TEST_CASE("peaks") {
  CHECK(peaks(dy("UD")) == 1);
  CHECK(peaks(dy("UDUD")) == 2);
  CHECK(peaks(dy("UUDUDD")) == 2);
  CHECK(thrown_code([] { peaks(dy("")); }) == Errc::domain);

  SUBCASE("equals the UD adjacency count in the word form") {
    for (int n = 1; n <= 6; ++n)
      for (const std::string& word : testutil::all_dyck_words(n)) {
        int adjacencies = 0;
        for (std::size_t i = 0; i + 1 < word.size(); ++i)
          adjacencies += word[i] == 'U' && word[i + 1] == 'D';
        CHECK(peaks(dy(word)) == adjacencies);
        CHECK(peaks(dy(word)) >= 1);
      }
  }
}

TEST_CASE("interaction numbers") {
  CHECK(interaction(lp({{0, 1}})) == 0);
  CHECK(interaction(lp({{1, 2}, {3, 4}, {5, 0}})) == 0);
  CHECK(interaction(lp({{0, 1}, {2, 3}})) == 1);
  CHECK(interaction(lp({{0, 1}, {2, 3}, {4, 5}})) == 2);

  SUBCASE("counts the non-trailing sibling ranks of the path code") {
    // An edge of rank r from a parent of label L is a dragging edge exactly
    // when r < L, i.e. when the code does not grow by one at that step.
    for (int level = 1; level <= 7; ++level)
      for (const TreeNode& node : level_nodes(Family::lp, level)) {
        const PathCode code = path_code(node);
        int drags = 0;
        int prev = 1;
        for (int rank : code) {
          drags += rank <= prev;
          prev = rank;
        }
        CHECK(interaction(node.pattern()) == drags);
      }
  }
}

TEST_CASE("tree addresses convert between families") {
  CHECK(convert(TreeNode{lp({{1, 2}, {3, 0}})}, Family::dyck).path() == dy("UUDD"));
  CHECK(convert(TreeNode{lp({{0, 1}, {2, 3}})}, Family::dyck).path() == dy("UDUD"));
  CHECK(convert(TreeNode{lp({{0, 1}, {2, 3}})}, Family::perm).perm() == pm({1, 2}));
  CHECK(convert(TreeNode{dy("UUUDDD")}, Family::lp).pattern() == lp({{1, 2}, {3, 4}, {5, 0}}));

  SUBCASE("identity on the same family") {
    for (const TreeNode& node : level_nodes(Family::perm, 5))
      CHECK(convert(node, Family::perm) == node);
  }
  SUBCASE("level-by-level bijection") {
    for (int level = 1; level <= 7; ++level) {
      std::set<TreeNode> images;
      for (const TreeNode& node : level_nodes(Family::lp, level))
        images.insert(convert(node, Family::dyck));
      const std::vector<TreeNode> target = level_nodes(Family::dyck, level);
      CHECK(images == std::set<TreeNode>(target.begin(), target.end()));
    }
  }
  SUBCASE("conversions compose") {
    for (int level = 1; level <= 6; ++level)
      for (const TreeNode& node : level_nodes(Family::dyck, level)) {
        const TreeNode via_perm =
            convert(convert(node, Family::perm), Family::lp);
        CHECK(via_perm == convert(node, Family::lp));
        CHECK(convert(convert(node, Family::lp), Family::dyck) == node);
      }
  }
}

TEST_CASE("statistic transport") {
  for (int level = 1; level <= 7; ++level)
    for (const TreeNode& node : level_nodes(Family::lp, level)) {
      const DyckPath image = convert(node, Family::dyck).path();
      CHECK(last_descent_length(image) == exposure(node.pattern(), 0));
      CHECK(peaks(image) == interaction(node.pattern()) + 1);
    }

  SUBCASE("edge increments mirror each other") {
    for (int level = 1; level <= 6; ++level)
      for (const TreeNode& node : level_nodes(Family::dyck, level)) {
        const int node_label = label(node);
        const std::vector<TreeNode> kids = children(node);
        for (std::size_t r = 0; r < kids.size(); ++r) {
          const int jump = static_cast<int>(r) + 1 == node_label ? 0 : 1;
          CHECK(peaks(kids[r].path()) - peaks(node.path()) == jump);
        }
      }
    for (int level = 1; level <= 6; ++level)
      for (const TreeNode& node : level_nodes(Family::lp, level)) {
        const int node_label = label(node);
        const std::vector<TreeNode> kids = children(node);
        for (std::size_t r = 0; r < kids.size(); ++r) {
          const int jump = static_cast<int>(r) + 1 == node_label ? 0 : 1;
          CHECK(interaction(kids[r].pattern()) - interaction(node.pattern()) == jump);
        }
      }
  }
}

TEST_CASE("the tree bijection is not the parenthesis bijection") {
  // The classical reading turns the openers of the canonical cut into
  // ascents. Both maps are level-by-level bijections, but they agree on the
  // root alone; recorded as data.
  const auto classical = [](const LinkPattern& pi) {
    const ArcDiagram d = linearize(pi, 0);
    std::vector<Step> steps(d.order.size(), Step::down);
    for (const Arc& arc : d.arcs) steps[static_cast<std::size_t>(arc.open)] = Step::up;
    return DyckPath::from_steps(std::move(steps));
  };

  std::vector<int> agreement;
  for (int level = 1; level <= 3; ++level) {
    int agree = 0;
    for (const TreeNode& node : level_nodes(Family::lp, level))
      agree += classical(node.pattern()) == convert(node, Family::dyck).path();
    agreement.push_back(agree);
  }
  CHECK(agreement == std::vector<int>{1, 0, 0});

  SUBCASE("the classical map is itself injective") {
    for (int level = 1; level <= 6; ++level) {
      std::set<DyckPath> images;
      for (const TreeNode& node : level_nodes(Family::lp, level))
        images.insert(classical(node.pattern()));
      CHECK(images.size() == level_nodes(Family::dyck, level).size());
    }
  }
}

TEST_CASE("stat records bundle the statistics") {
  const StatRecord lp_rec = stat_record(TreeNode{lp({{0, 1}, {2, 3}})});
  CHECK(lp_rec.family == Family::lp);
  CHECK(lp_rec.level == 2);
  CHECK(lp_rec.label == 2);
  CHECK(lp_rec.exposure == 1);
  CHECK(lp_rec.interaction == 1);
  CHECK_FALSE(lp_rec.peaks.has_value());
  CHECK(encode_stats(lp_rec) == "level=2 label=2 exposure=1 interaction=1");

  const StatRecord dyck_rec = stat_record(TreeNode{dy("UUDUDD")});
  CHECK(dyck_rec.last_descent == 2);
  CHECK(dyck_rec.peaks == 2);
  CHECK_FALSE(dyck_rec.exposure.has_value());
  CHECK(encode_stats(dyck_rec) == "level=3 label=3 ldl=2 peaks=2");

  const StatRecord perm_rec = stat_record(TreeNode{pm({3, 2, 1})});
  CHECK(perm_rec.label == 4);
  CHECK(encode_stats(perm_rec) == "level=3 label=4");
}

TEST_SUITE_END();
