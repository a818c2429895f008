// Acceptance sweep: exercises the full stack at contract scale and prints one
// verdict line per criterion. Exit status 0 only when every criterion holds.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "lpcat/codec.hpp"
#include "lpcat/enumeration.hpp"
#include "lpcat/errors.hpp"
#include "lpcat/oracle.hpp"
#include "lpcat/stats.hpp"
#include "lpcat/tl.hpp"
#include "lpcat/tree.hpp"

using namespace lpcat;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++failures;
}

template <typename Fn>
void criterion(int index, const std::string& name, Fn&& body) {
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("unexpected exception: ") + e.what();
  }
  report(index, name, pass, detail);
}

struct SweepResult {
  std::vector<std::uint64_t> counts;      // counts[n] for n = 1..14
  std::vector<int> frames;                // max frame high-water per level
  double seconds = 0;
};

// One single-threaded streaming pass over LP levels 1..14; criteria 1 and 8
// both read from it.
SweepResult sweep_patterns() {
  SweepResult result;
  result.counts.assign(15, 0);
  result.frames.assign(15, 0);
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 14; ++n) {
    LevelStream stream(Family::lp, n);
    std::uint64_t count = 0;
    while (stream.next()) ++count;
    result.counts[static_cast<std::size_t>(n)] = count;
    result.frames[static_cast<std::size_t>(n)] = stream.max_frames();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<LinkPattern> sorted_patterns(int level) {
  std::vector<LinkPattern> out;
  for (const TreeNode& node : level_nodes(Family::lp, level)) out.push_back(node.pattern());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main() {
  const SweepResult sweep = sweep_patterns();

  criterion(1, "stream cardinalities are Catalan through level 14", [&](std::string& detail) {
    bool pass = true;
    for (int n = 1; n <= 14; ++n)
      if (BigCount(sweep.counts[static_cast<std::size_t>(n)]) != catalan(n)) {
        pass = false;
        detail = "level " + std::to_string(n) + " counted " +
                 std::to_string(sweep.counts[static_cast<std::size_t>(n)]);
      }
    if (pass && (sweep.counts[4] != 14 || sweep.counts[14] != 2674440)) {
      pass = false;
      detail = "anchor counts off";
    }
    if (pass && sweep.seconds > 60.0) {
      pass = false;
      detail = "sweep took " + std::to_string(sweep.seconds) + "s";
    }
    if (pass) {
      std::ostringstream s;
      s << "2674440 patterns at level 14, sweep " << sweep.seconds << "s";
      detail = s.str();
    }
    return pass;
  });

  criterion(2, "streamed levels equal the brute-force enumerations", [&](std::string& detail) {
    for (int n = 1; n <= 8; ++n) {
      if (sorted_patterns(n) != brute_patterns(n)) {
        detail = "link patterns differ at level " + std::to_string(n);
        return false;
      }
      std::vector<Perm123> perms;
      for (const TreeNode& node : level_nodes(Family::perm, n)) perms.push_back(node.perm());
      std::sort(perms.begin(), perms.end());
      if (perms != brute_avoiders(n)) {
        detail = "permutations differ at level " + std::to_string(n);
        return false;
      }
    }
    detail = "link patterns and permutations, levels 1..8";
    return true;
  });

  criterion(3, "children labels follow the succession rule", [&](std::string& detail) {
    std::uint64_t edges = 0;
    for (Family family : {Family::lp, Family::dyck, Family::perm})
      for (int level = 1; level <= 10; ++level) {
        LevelStream stream(family, level);
        while (auto node = stream.next()) {
          const std::vector<TreeNode> kids = children(*node);
          if (static_cast<int>(kids.size()) != label(*node)) {
            detail = "wrong child count at level " + std::to_string(level);
            return false;
          }
          for (std::size_t r = 0; r < kids.size(); ++r, ++edges)
            if (label(kids[r]) != static_cast<int>(r) + 2) {
              detail = "wrong child label at level " + std::to_string(level);
              return false;
            }
        }
      }
    detail = std::to_string(edges) + " edges checked";
    return true;
  });

  criterion(4, "preimages match the oracle and partition each level", [&](std::string& detail) {
    std::uint64_t targets = 0;
    for (int n = 2; n <= 8; ++n) {
      const std::vector<LinkPattern> basis = brute_patterns(n);
      const int gen = 2 * n - 1;

      // One grouped scan in place of per-target brute_preimages calls; the
      // smaller sizes also cross-check the member-by-member oracle.
      std::map<LinkPattern, std::vector<LinkPattern>> scanned;
      for (const LinkPattern& tau : basis)
        scanned[apply_generator(tau, gen).pattern].push_back(tau);

      for (const LinkPattern& prime : basis) {
        if (!prime.has_link(gen, 0)) continue;
        ++targets;
        std::vector<LinkPattern> fast = preimages(prime, gen);
        const std::size_t expected_size = fast.size();
        std::sort(fast.begin(), fast.end());
        if (fast != scanned[prime]) {
          detail = "preimage mismatch at " + encode(prime);
          return false;
        }
        if (n <= 6 && fast != brute_preimages(prime, gen)) {
          detail = "oracle disagreement at " + encode(prime);
          return false;
        }
        if (expected_size != static_cast<std::size_t>(exposure(prime, 0))) {
          detail = "preimage count off at " + encode(prime);
          return false;
        }
      }

      // Children of level n-1 partition level n.
      std::unordered_set<LinkPattern> seen;
      std::uint64_t produced = 0;
      LevelStream parents(Family::lp, n - 1);
      while (auto parent_node = parents.next())
        for (const TreeNode& kid : children(*parent_node)) {
          ++produced;
          seen.insert(kid.pattern());
        }
      if (produced != seen.size() || seen.size() != basis.size() ||
          !std::all_of(basis.begin(), basis.end(),
                       [&](const LinkPattern& pi) { return seen.count(pi) > 0; })) {
        detail = "level " + std::to_string(n) + " is not partitioned";
        return false;
      }
    }
    detail = std::to_string(targets) + " boundary targets through level 8";
    return true;
  });

  criterion(5, "defining relations verified, literal adjacency refuted", [&](std::string& detail) {
    for (int n = 1; n <= 6; ++n) {
      const RelationReport report = check_relations(n);
      if (!report.core_pass()) {
        detail = "core relations failed on " + std::to_string(n) + " strands";
        return false;
      }
      const RelationCheck* literal = report.literal_commutation();
      if (n == 1) {
        if (literal != nullptr) {
          detail = "unexpected literal record on one strand";
          return false;
        }
        continue;
      }
      if (literal == nullptr || literal->pass || !literal->witness.has_value()) {
        detail = "missing literal refutation on " + std::to_string(n) + " strands";
        return false;
      }
      const LinkPattern& w = *literal->witness;
      if (apply_word(w, {literal->i, literal->j}).pattern ==
          apply_word(w, {literal->j, literal->i}).pattern) {
        detail = "stored witness does not refute commutation";
        return false;
      }
    }
    detail = "relations for 1..6 strands, witnesses re-verified";
    return true;
  });

  criterion(6, "histograms match the closed-form counts", [&](std::string& detail) {
    for (int n = 1; n <= 12; ++n) {
      const auto by_exposure = histogram(Family::lp, n, Statistic::exposure);
      const auto by_ldl = histogram(Family::dyck, n, Statistic::last_descent);
      if (by_exposure != by_ldl || static_cast<int>(by_exposure.size()) != n) {
        detail = "exposure buckets broken at level " + std::to_string(n);
        return false;
      }
      for (const auto& [k, count] : by_exposure)
        if (count != count_by_exposure(n, k)) {
          detail = "exposure " + std::to_string(k) + " off at level " + std::to_string(n);
          return false;
        }

      const auto by_interaction = histogram(Family::lp, n, Statistic::interaction);
      const auto by_peaks = histogram(Family::dyck, n, Statistic::peaks);
      if (static_cast<int>(by_interaction.size()) != n ||
          by_peaks.size() != by_interaction.size()) {
        detail = "interaction buckets broken at level " + std::to_string(n);
        return false;
      }
      for (const auto& [ell, count] : by_interaction)
        if (count != count_by_interaction(n, ell)) {
          detail = "interaction " + std::to_string(ell) + " off at level " + std::to_string(n);
          return false;
        }
      for (const auto& [p, count] : by_peaks)
        if (count != count_by_interaction(n, p - 1)) {
          detail = "peaks " + std::to_string(p) + " off at level " + std::to_string(n);
          return false;
        }
    }
    detail = "four statistics, levels 1..12, every bucket exact";
    return true;
  });

  criterion(7, "conversions are bijections transporting both statistics",
            [&](std::string& detail) {
    for (int level = 1; level <= 10; ++level) {
      std::set<TreeNode> dyck_images, perm_images;
      std::uint64_t nodes = 0;
      LevelStream stream(Family::lp, level);
      while (auto node = stream.next()) {
        ++nodes;
        const TreeNode as_dyck = convert(*node, Family::dyck);
        if (last_descent_length(as_dyck.path()) != exposure(node->pattern(), 0)) {
          detail = "last descent transport broken at level " + std::to_string(level);
          return false;
        }
        if (peaks(as_dyck.path()) != interaction(node->pattern()) + 1) {
          detail = "peak transport broken at level " + std::to_string(level);
          return false;
        }
        if (convert(as_dyck, Family::lp) != *node) {
          detail = "conversion does not invert at level " + std::to_string(level);
          return false;
        }
        dyck_images.insert(as_dyck);
        perm_images.insert(convert(*node, Family::perm));
      }
      if (dyck_images.size() != nodes || perm_images.size() != nodes) {
        detail = "images collide at level " + std::to_string(level);
        return false;
      }
    }
    detail = "levels 1..10 in all directions";
    return true;
  });

  criterion(8, "streaming keeps at most n+1 live frames", [&](std::string& detail) {
    for (int n = 1; n <= 14; ++n)
      if (sweep.frames[static_cast<std::size_t>(n)] > n + 1) {
        detail = "level " + std::to_string(n) + " held " +
                 std::to_string(sweep.frames[static_cast<std::size_t>(n)]) + " frames";
        return false;
      }
    detail = "high-water " + std::to_string(sweep.frames[14]) + " frames at level 14";
    return true;
  });

  criterion(9, "records round-trip and the parser rejects crossings", [&](std::string& detail) {
    std::uint64_t records = 0;
    for (Family family : {Family::lp, Family::dyck, Family::perm})
      for (int level = 1; level <= 10; ++level) {
        LevelStream stream(family, level);
        while (auto node = stream.next()) {
          ++records;
          if (parse_record(encode(*node), family) != *node) {
            detail = "round-trip failed for " + encode(*node);
            return false;
          }
        }
      }
    for (const char* bad : {"n=2;0-2,1-3", "n=3;0-2,1-4,3-5"}) {
      try {
        parse_pattern(bad);
        detail = std::string("crossing accepted: ") + bad;
        return false;
      } catch (const Error& e) {
        if (e.code() != Errc::crossing) {
          detail = std::string("wrong rejection for ") + bad + ": " + e.what();
          return false;
        }
      }
    }
    detail = std::to_string(records) + " records round-tripped";
    return true;
  });

  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criterion(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
