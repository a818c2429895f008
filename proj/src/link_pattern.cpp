#include "lpcat/link_pattern.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "lpcat/errors.hpp"

namespace lpcat {

namespace {

// Perfect matching + noncrossing in one stack scan. Chord crossings are
// invariant under rotating the cut, so checking the 0..2n-1 linearization
// settles the circular property as well.
bool is_noncrossing_matching(const std::vector<int>& partner) {
  const int m = static_cast<int>(partner.size());
  std::vector<int> stack;
  for (int i = 0; i < m; ++i) {
    const int j = partner[static_cast<std::size_t>(i)];
    if (j < 0 || j >= m || j == i) return false;
    if (partner[static_cast<std::size_t>(j)] != i) return false;
    if (j > i) {
      stack.push_back(i);
    } else {
      if (stack.empty() || stack.back() != j) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

}  // namespace

LinkPattern::LinkPattern(std::vector<int> partner, Trusted)
    : partner_(std::move(partner)) {
  assert(is_noncrossing_matching(partner_));
}

LinkPattern trusted_pattern(std::vector<int> partner) {
  return LinkPattern(std::move(partner), LinkPattern::Trusted{});
}

LinkPattern LinkPattern::from_pairs(const std::vector<std::pair<int, int>>& pairs,
                                    int strands) {
  if (strands < 1) throw Error(Errc::not_a_matching, "strand count must be positive");
  const int m = 2 * strands;
  std::vector<int> partner(static_cast<std::size_t>(m), -1);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= m || b < 0 || b >= m || a == b)
      throw Error(Errc::not_a_matching,
                  "pair (" + std::to_string(a) + "," + std::to_string(b) +
                      ") out of range for " + std::to_string(m) + " points");
    if (partner[static_cast<std::size_t>(a)] != -1 ||
        partner[static_cast<std::size_t>(b)] != -1)
      throw Error(Errc::not_a_matching,
                  "point matched twice in pair (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  }
  for (int i = 0; i < m; ++i)
    if (partner[static_cast<std::size_t>(i)] == -1)
      throw Error(Errc::not_a_matching, "point " + std::to_string(i) + " unmatched");
  if (!is_noncrossing_matching(partner))
    throw Error(Errc::crossing, "pairs contain crossing chords");
  return LinkPattern(std::move(partner), Trusted{});
}

LinkPattern LinkPattern::from_partner(std::vector<int> partner) {
  if (partner.empty() || partner.size() % 2 != 0)
    throw Error(Errc::not_a_matching, "partner sequence must have even positive length");
  for (std::size_t i = 0; i < partner.size(); ++i) {
    const int j = partner[i];
    if (j < 0 || j >= static_cast<int>(partner.size()) || j == static_cast<int>(i) ||
        partner[static_cast<std::size_t>(j)] != static_cast<int>(i))
      throw Error(Errc::not_a_matching, "partner sequence is not an involution");
  }
  if (!is_noncrossing_matching(partner))
    throw Error(Errc::crossing, "partner sequence has crossing chords");
  return LinkPattern(std::move(partner), Trusted{});
}

bool LinkPattern::has_link(int a, int b) const {
  if (a < 0 || a >= points() || b < 0 || b >= points()) return false;
  return partner_[static_cast<std::size_t>(a)] == b;
}

std::vector<std::pair<int, int>> LinkPattern::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(strands()));
  for (int i = 0; i < points(); ++i) {
    const int j = partner(i);
    if (i < j) out.emplace_back(i, j);
  }
  return out;  // already sorted by first coordinate
}

ArcDiagram linearize(const LinkPattern& pattern, int gap) {
  const int m = pattern.points();
  if (gap < 0 || gap >= m)
    throw Error(Errc::index_out_of_range,
                "cut gap " + std::to_string(gap) + " outside 0.." + std::to_string(m - 1));

  // Position p holds point (gap+1+p) mod 2n, so the line reads
  // gap+1, ..., 2n-1, 0, ..., gap.
  ArcDiagram diagram;
  diagram.cut_gap = gap;
  diagram.order.resize(static_cast<std::size_t>(m));
  std::vector<int> pos_of(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) {
    const int point = (gap + 1 + p) % m;
    diagram.order[static_cast<std::size_t>(p)] = point;
    pos_of[static_cast<std::size_t>(point)] = p;
  }

  int open_depth = 0;
  for (int p = 0; p < m; ++p) {
    const int q = pos_of[static_cast<std::size_t>(
        pattern.partner(diagram.order[static_cast<std::size_t>(p)]))];
    if (q > p) {
      diagram.arcs.push_back(Arc{p, q, open_depth});
      ++open_depth;
    } else {
      --open_depth;
    }
  }
  assert(open_depth == 0);
  return diagram;
}

int exposure(const LinkPattern& pattern, int gap) {
  const int m = pattern.points();
  if (gap < 0 || gap >= m)
    throw Error(Errc::index_out_of_range,
                "cut gap " + std::to_string(gap) + " outside 0.." + std::to_string(m - 1));
  // Jump from one outermost arc to the next; every landing position opens one.
  int count = 0;
  int p = 0;
  while (p < m) {
    const int point = (gap + 1 + p) % m;
    const int q = (pattern.partner(point) - gap - 1 + 2 * m) % m;
    assert(q > p);
    ++count;
    p = q + 1;
  }
  return count;
}

LinkPattern insert_strand(const LinkPattern& pattern, int index) {
  const int m = pattern.points();
  if (index < 0 || index > m + 1)
    throw Error(Errc::index_out_of_range,
                "insertion index " + std::to_string(index) + " outside 0.." +
                    std::to_string(m + 1));

  // Relabel old points around the widened circle, then link the two fresh
  // labels. Only the wrap case (index == m+1) moves point 0.
  auto relabel = [&](int j) {
    if (index <= m - 1) return j < index ? j : j + 2;
    if (index == m) return j;
    return j == 0 ? m : j;  // index == m+1
  };

  std::vector<int> next(static_cast<std::size_t>(m + 2), -1);
  for (int j = 0; j < m; ++j)
    next[static_cast<std::size_t>(relabel(j))] = relabel(pattern.partner(j));
  const int a = index;
  const int b = (index + 1) % (m + 2);
  next[static_cast<std::size_t>(a)] = b;
  next[static_cast<std::size_t>(b)] = a;
  return trusted_pattern(std::move(next));
}

LinkPattern delete_strand(const LinkPattern& pattern, int index) {
  const int m = pattern.points();
  if (index < 0 || index >= m)
    throw Error(Errc::index_out_of_range,
                "deletion index " + std::to_string(index) + " outside 0.." +
                    std::to_string(m - 1));
  if (!pattern.has_link(index, (index + 1) % m))
    throw Error(Errc::no_such_strand,
                "pattern has no link (" + std::to_string(index) + "," +
                    std::to_string((index + 1) % m) + ")");
  if (m == 2) throw Error(Errc::domain, "cannot delete the only strand");

  // Inverse of the three insert_strand relabellings.
  auto relabel = [&](int j) {
    if (index <= m - 3) return j < index ? j : j - 2;
    if (index == m - 2) return j;
    return j == m - 2 ? 0 : j;  // index == m-1 removed points m-1 and 0
  };

  const int dropped_a = index;
  const int dropped_b = (index + 1) % m;
  std::vector<int> next(static_cast<std::size_t>(m - 2), -1);
  for (int j = 0; j < m; ++j) {
    if (j == dropped_a || j == dropped_b) continue;
    next[static_cast<std::size_t>(relabel(j))] = relabel(pattern.partner(j));
  }
  return trusted_pattern(std::move(next));
}

LinkPattern rotate(const LinkPattern& pattern, int amount) {
  const int m = pattern.points();
  const int r = ((amount % m) + m) % m;
  std::vector<int> next(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    next[static_cast<std::size_t>((j + r) % m)] = (pattern.partner(j) + r) % m;
  return trusted_pattern(std::move(next));
}

}  // namespace lpcat
