#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpcat/dyck_path.hpp"
#include "lpcat/errors.hpp"
#include "lpcat/link_pattern.hpp"
#include "lpcat/perm123.hpp"

namespace testutil {

// --- shorthand constructors -------------------------------------------------

inline lpcat::LinkPattern lp(const std::vector<std::pair<int, int>>& pairs) {
  return lpcat::LinkPattern::from_pairs(pairs, static_cast<int>(pairs.size()));
}

inline lpcat::DyckPath dy(std::string_view word) {
  std::vector<lpcat::Step> steps;
  for (char c : word) steps.push_back(c == 'U' ? lpcat::Step::up : lpcat::Step::down);
  return lpcat::DyckPath::from_steps(std::move(steps));
}

inline lpcat::Perm123 pm(std::vector<int> values) {
  return lpcat::Perm123::from_values(std::move(values));
}

// Runs fn and reports the Errc it threw, or nullopt if it returned normally.
template <typename Fn>
std::optional<lpcat::Errc> thrown_code(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const lpcat::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// --- independent reference algorithms ---------------------------------------
// Test-side re-derivations from first principles, structurally unrelated to
// both the library and its oracle module, so agreement is evidence.

using PairList = std::vector<std::pair<int, int>>;

inline void all_pairings_rec(const std::vector<int>& free_pts, PairList& acc,
                             std::vector<PairList>& out) {
  if (free_pts.empty()) {
    out.push_back(acc);
    return;
  }
  const int a = free_pts.front();
  for (std::size_t i = 1; i < free_pts.size(); ++i) {
    std::vector<int> rest;
    for (std::size_t j = 1; j < free_pts.size(); ++j)
      if (j != i) rest.push_back(free_pts[j]);
    acc.emplace_back(a, free_pts[i]);
    all_pairings_rec(rest, acc, out);
    acc.pop_back();
  }
}

// Every perfect matching of 0..2n-1, crossing or not.
inline std::vector<PairList> all_pairings(int n) {
  std::vector<int> pts(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) pts[static_cast<std::size_t>(i)] = i;
  std::vector<PairList> out;
  PairList acc;
  all_pairings_rec(pts, acc, out);
  return out;
}

// Literal transcription of the crossing condition: positions a < b < c < d
// with {a,c} and {b,d} both matched.
inline bool crosses(const PairList& pairs) {
  for (const auto& p : pairs)
    for (const auto& q : pairs) {
      const int a = std::min(p.first, p.second), c = std::max(p.first, p.second);
      const int b = std::min(q.first, q.second), d = std::max(q.first, q.second);
      if (a < b && b < c && c < d) return true;
    }
  return false;
}

// Noncrossing matchings by filtering the full pairing list; usable to n ~ 6.
inline std::vector<lpcat::LinkPattern> noncrossing_by_filter(int n) {
  std::vector<lpcat::LinkPattern> out;
  for (const PairList& pairs : all_pairings(n))
    if (!crosses(pairs)) out.push_back(lpcat::LinkPattern::from_pairs(pairs, n));
  std::sort(out.begin(), out.end());
  return out;
}

// Exposure straight from the definition: an arc is outermost iff no other arc
// encloses it in the cut order gap+1, ..., 2n-1, 0, ..., gap.
inline int naive_exposure(const lpcat::LinkPattern& pi, int gap) {
  const int m = pi.points();
  const auto pos = [&](int p) { return (p - gap - 1 + m) % m; };
  int outermost = 0;
  for (const auto& [a, b] : pi.pairs()) {
    const int lo = std::min(pos(a), pos(b)), hi = std::max(pos(a), pos(b));
    bool enclosed = false;
    for (const auto& [c, d] : pi.pairs()) {
      const int lo2 = std::min(pos(c), pos(d)), hi2 = std::max(pos(c), pos(d));
      if (lo2 < lo && hi < hi2) enclosed = true;
    }
    if (!enclosed) ++outermost;
  }
  return outermost;
}

inline void all_dyck_rec(std::string& word, int open, int height, int n,
                         std::vector<std::string>& out) {
  if (static_cast<int>(word.size()) == 2 * n) {
    out.push_back(word);
    return;
  }
  if (open < n) {
    word.push_back('U');
    all_dyck_rec(word, open + 1, height + 1, n, out);
    word.pop_back();
  }
  if (height > 0) {
    word.push_back('D');
    all_dyck_rec(word, open, height - 1, n, out);
    word.pop_back();
  }
}

// Every Dyck word of semilength n as a U/D string, by backtracking.
inline std::vector<std::string> all_dyck_words(int n) {
  std::vector<std::string> out;
  std::string word;
  all_dyck_rec(word, 0, 0, n, out);
  return out;
}

// Longest strictly increasing subsequence via patience sorting; 123-avoidance
// means LIS <= 2, checked by a mechanism unrelated to any triple scan.
inline int lis_length(const std::vector<int>& values) {
  std::vector<int> tails;
  for (int v : values) {
    const auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end())
      tails.push_back(v);
    else
      *it = v;
  }
  return static_cast<int>(tails.size());
}

}  // namespace testutil
