#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lpcat/link_pattern.hpp"

namespace lpcat {

/// Outcome of acting on a pattern: the new pattern plus the number of closed
/// loops that were erased (loop weight is 1, so only the count is kept).
struct ActionResult {
  LinkPattern pattern;
  int loops = 0;
};

/// Concatenates the diagram that joins points `gen` and `gen`+1 (mod 2n) onto
/// the pattern. Idempotent when the link is already present, closing one loop.
ActionResult apply_generator(const LinkPattern& pattern, int gen);

/// Left-to-right composition; loops accumulate additively.
ActionResult apply_word(const LinkPattern& pattern, const std::vector<int>& word);

/// Constructs the rank-th preimage of a pattern containing the link
/// (2n-1, 0) under the generator joining those points: rank 0 returns the
/// pattern itself, rank i >= 1 drags the i-th outermost arc (counted left to
/// right in the cut between points 0 and 1, the boundary link excluded)
/// across the boundary link. The result has exposure number `rank` at that
/// cut (the pattern's own exposure for rank 0).
LinkPattern drag_outermost(const LinkPattern& pattern, int rank);

/// All patterns mapped to `pattern` by generator `gen`, ordered by ascending
/// exposure at the cut just past `gen`+1. Requires the link (gen, gen+1);
/// throws Errc::missing_link otherwise.
std::vector<LinkPattern> preimages(const LinkPattern& pattern, int gen);

/// One extensionally checked relation instance.
struct RelationCheck {
  std::string relation;  // "idempotent" | "triple" | "commute" | "commute-literal"
  int i = 0;
  int j = -1;  // second index, -1 for idempotent
  bool pass = false;
  std::optional<LinkPattern> witness;  // first counterexample when failing
};

struct RelationReport {
  int strands = 0;
  int basis_size = 0;
  std::vector<RelationCheck> checks;

  /// True when every instance of the defining relations holds; the extra
  /// literal-adjacency record is excluded (it is expected to fail).
  bool core_pass() const;

  /// The commutation record for the index pair (0, 2n-1) checked under the
  /// literal |i-j| > 1 reading, or nullptr when that pair is circularly
  /// adjacent anyway (n == 1). Those indices sit side by side on the circle,
  /// so the pair is reported rather than folded into the passing checks.
  const RelationCheck* literal_commutation() const;

  std::string table() const;
  void write_records(std::ostream& out) const;
};

/// Verifies the defining relations generator by generator on the full basis
/// of patterns with `strands` strands: idempotency, the triple identity
/// e_i e_{i+-1} e_i = e_i, and commutation for index pairs at circular
/// distance greater than 1. Intended for small sizes (exhaustive scan).
RelationReport check_relations(int strands);

}  // namespace lpcat
