#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace lpcat {

/// A noncrossing perfect matching of the points 0..2n-1 on a circle.
///
/// Points are labelled counterclockwise; the internal form is the partner
/// sequence (partner(i) = point matched with i). Values are immutable after
/// construction and every operation returns a fresh pattern, so they are safe
/// to share between threads.
class LinkPattern {
 public:
  /// Builds a pattern from explicit pairs, validating the matching and
  /// noncrossing invariants. Throws Errc::not_a_matching / Errc::crossing.
  static LinkPattern from_pairs(const std::vector<std::pair<int, int>>& pairs,
                                int strands);

  /// Builds from a partner sequence (partner[partner[i]] == i), validated.
  static LinkPattern from_partner(std::vector<int> partner);

  int strands() const { return static_cast<int>(partner_.size() / 2); }
  int points() const { return static_cast<int>(partner_.size()); }
  int partner(int point) const { return partner_[static_cast<std::size_t>(point)]; }
  bool has_link(int a, int b) const;

  /// Canonical pair list: (min,max) pairs sorted by first coordinate.
  std::vector<std::pair<int, int>> pairs() const;

  auto operator<=>(const LinkPattern&) const = default;

 private:
  struct Trusted {};
  LinkPattern(std::vector<int> partner, Trusted);

  std::vector<int> partner_;

  friend LinkPattern trusted_pattern(std::vector<int>);
};

/// Internal fast path for operations that preserve the invariants by
/// construction; asserts them in debug builds.
LinkPattern trusted_pattern(std::vector<int> partner);

/// One arc of a cut-and-unfolded pattern, in position coordinates.
struct Arc {
  int open;   // left endpoint position
  int close;  // right endpoint position
  int depth;  // number of arcs strictly enclosing this one
  auto operator<=>(const Arc&) const = default;
};

/// A pattern cut between points `cut_gap` and `cut_gap`+1 and unfolded onto a
/// line. `order[p]` is the point label at position p; arcs are listed in
/// opening-position order.
struct ArcDiagram {
  std::vector<int> order;
  std::vector<Arc> arcs;
  int cut_gap = 0;
};

ArcDiagram linearize(const LinkPattern& pattern, int gap);

/// Number of arcs incident to the unbounded face after cutting at `gap`.
/// The tree statistics use the canonical cut gap 0 (between points 0 and 1).
int exposure(const LinkPattern& pattern, int gap = 0);

/// Inserts a linked pair of points in the circular gap before old point
/// `index`, relabelling sequentially so the new points carry labels `index`
/// and `index`+1 (mod 2n+2). `index` may be 0..2n+1; 2n appends the new pair
/// after the last point and 2n+1 wraps it across the label origin.
LinkPattern insert_strand(const LinkPattern& pattern, int index);

/// Exact inverse of insert_strand at the same index. Requires the link
/// (index, index+1 mod 2n); throws Errc::no_such_strand otherwise.
LinkPattern delete_strand(const LinkPattern& pattern, int index);

/// Relabels every point i to (i + amount) mod 2n.
LinkPattern rotate(const LinkPattern& pattern, int amount);

}  // namespace lpcat

template <>
struct std::hash<lpcat::LinkPattern> {
  std::size_t operator()(const lpcat::LinkPattern& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(p.points());
    for (int i = 0; i < p.points(); ++i)
      h = h * 1099511628211ull + static_cast<std::size_t>(p.partner(i));
    return h;
  }
};
