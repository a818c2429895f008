#include "lpcat/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "lpcat/errors.hpp"
#include "lpcat/tl.hpp"

namespace lpcat {

namespace {

using PairList = std::vector<std::pair<int, int>>;

// All noncrossing matchings of the even-length interval [lo, hi): match lo
// to each odd offset and recurse on the enclosed and remaining chunks.
std::vector<PairList> interval_matchings(int lo, int hi) {
  std::vector<PairList> out;
  if (lo >= hi) {
    out.emplace_back();
    return out;
  }
  for (int j = lo + 1; j < hi; j += 2) {
    const std::vector<PairList> inner = interval_matchings(lo + 1, j);
    const std::vector<PairList> rest = interval_matchings(j + 1, hi);
    for (const PairList& in : inner) {
      for (const PairList& re : rest) {
        PairList combo;
        combo.reserve(1 + in.size() + re.size());
        combo.emplace_back(lo, j);
        combo.insert(combo.end(), in.begin(), in.end());
        combo.insert(combo.end(), re.begin(), re.end());
        out.push_back(std::move(combo));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<LinkPattern> brute_patterns(int n) {
  if (n < 1) throw Error(Errc::domain, "strand count must be positive");
  if (n > 10) throw Error(Errc::size_limit, "brute pattern enumeration capped at 10 strands");
  std::vector<LinkPattern> out;
  for (const PairList& pairs : interval_matchings(0, 2 * n))
    out.push_back(LinkPattern::from_pairs(pairs, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LinkPattern> brute_preimages(const LinkPattern& target, int gen) {
  if (target.strands() > 8)
    throw Error(Errc::size_limit, "brute preimage scan capped at 8 strands");
  std::vector<LinkPattern> out;
  for (const LinkPattern& tau : brute_patterns(target.strands()))
    if (apply_generator(tau, gen).pattern == target) out.push_back(tau);
  return out;  // already sorted
}

std::vector<Perm123> brute_avoiders(int n) {
  if (n < 1) throw Error(Errc::domain, "length must be positive");
  if (n > 8) throw Error(Errc::size_limit, "brute permutation filter capped at 8");
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  std::vector<Perm123> out;
  do {
    bool triple = false;
    for (int a = 0; a < n && !triple; ++a)
      for (int b = a + 1; b < n && !triple; ++b)
        for (int c = b + 1; c < n && !triple; ++c)
          triple = values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)] &&
                   values[static_cast<std::size_t>(b)] < values[static_cast<std::size_t>(c)];
    if (!triple) out.push_back(Perm123::from_values(values));
  } while (std::next_permutation(values.begin(), values.end()));
  return out;  // lexicographic scan keeps this sorted
}

}  // namespace lpcat
