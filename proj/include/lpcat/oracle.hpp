#pragma once

#include <vector>

#include "lpcat/link_pattern.hpp"
#include "lpcat/perm123.hpp"

namespace lpcat {

/// Brute-force references, deliberately built on different algorithms than
/// the generating engine so that agreement carries evidence. All outputs are
/// sorted (set semantics). Errc::size_limit above the stated bounds.

/// Every pattern of n strands by interval recursion: point 0 pairs with an
/// odd-offset point, splitting the circle into two independent chunks. n <= 10.
std::vector<LinkPattern> brute_patterns(int n);

/// Every tau with apply_generator(tau, gen).pattern == target, by scanning
/// brute_patterns. n <= 8.
std::vector<LinkPattern> brute_preimages(const LinkPattern& target, int gen);

/// Every 123-avoiding permutation of 1..n by filtering all n! with a cubic
/// triple scan. n <= 8.
std::vector<Perm123> brute_avoiders(int n);

}  // namespace lpcat
