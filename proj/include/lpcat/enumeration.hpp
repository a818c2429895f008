#pragma once

#include <map>
#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "lpcat/tree.hpp"

namespace lpcat {

using BigCount = boost::multiprecision::cpp_int;

/// Multiplicative accumulation; every intermediate division is exact by
/// construction and verified (Errc::inexact_division on any remainder).
BigCount binomial(int n, int k);

/// C(2n,n)/(n+1), exact.
BigCount catalan(int n);

/// Patterns of n strands with `k` outermost links at the cut between points 0
/// and 1 (equally: Dyck paths of semilength n with last descent length k):
/// C(2n-k, n) * k / (2n-k). Domain: 1 <= k <= n.
BigCount count_by_exposure(int n, int k);

/// Patterns of n strands with interaction number `ell` (equally: Dyck paths
/// with ell+1 peaks): C(n, ell+1) * C(n, ell) / n. Domain: 0 <= ell <= n-1.
BigCount count_by_interaction(int n, int ell);

enum class Statistic { exposure, interaction, last_descent, peaks };

const char* statistic_name(Statistic stat) noexcept;
std::optional<Statistic> statistic_from_name(std::string_view name) noexcept;

/// True when the statistic is defined for the family (exposure/interaction on
/// link patterns, last_descent/peaks on Dyck paths).
bool statistic_applies(Family family, Statistic stat) noexcept;

/// Exact per-value counts of one statistic over a full tree level, streamed.
/// `jobs` > 1 splits the traversal across threads; the result is identical
/// for every job count.
std::map<int, BigCount> histogram(Family family, int level, Statistic stat, int jobs = 1);

}  // namespace lpcat
