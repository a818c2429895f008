#include "lpcat/tl.hpp"

#include <cassert>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "lpcat/codec.hpp"
#include "lpcat/errors.hpp"

namespace lpcat {

namespace {

void check_gen(const LinkPattern& pattern, int gen) {
  if (gen < 0 || gen >= pattern.points())
    throw Error(Errc::index_out_of_range,
                "generator index " + std::to_string(gen) + " outside 0.." +
                    std::to_string(pattern.points() - 1));
}

// Backtracks over balanced parenthesizations; every branch assigns each
// position before emitting, so the shared buffers never leak stale state.
void basis_rec(std::vector<int>& partner, std::vector<int>& open_stack, int pos,
               int opens, std::vector<LinkPattern>& out) {
  const int m = static_cast<int>(partner.size());
  if (pos == m) {
    out.push_back(trusted_pattern(partner));
    return;
  }
  if (2 * opens < m) {
    open_stack.push_back(pos);
    basis_rec(partner, open_stack, pos + 1, opens + 1, out);
    open_stack.pop_back();
  }
  if (!open_stack.empty()) {
    const int a = open_stack.back();
    open_stack.pop_back();
    partner[static_cast<std::size_t>(a)] = pos;
    partner[static_cast<std::size_t>(pos)] = a;
    basis_rec(partner, open_stack, pos + 1, opens, out);
    open_stack.push_back(a);
  }
}

std::vector<LinkPattern> basis(int strands) {
  std::vector<LinkPattern> out;
  std::vector<int> partner(static_cast<std::size_t>(2 * strands), -1);
  std::vector<int> open_stack;
  basis_rec(partner, open_stack, 0, 0, out);
  return out;
}

}  // namespace

ActionResult apply_generator(const LinkPattern& pattern, int gen) {
  check_gen(pattern, gen);
  const int m = pattern.points();
  const int i = gen;
  const int j = (gen + 1) % m;
  if (pattern.has_link(i, j)) return {pattern, 1};

  const int x = pattern.partner(i);
  const int y = pattern.partner(j);
  std::vector<int> next(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) next[static_cast<std::size_t>(p)] = pattern.partner(p);
  next[static_cast<std::size_t>(i)] = j;
  next[static_cast<std::size_t>(j)] = i;
  next[static_cast<std::size_t>(x)] = y;
  next[static_cast<std::size_t>(y)] = x;
  return {trusted_pattern(std::move(next)), 0};
}

ActionResult apply_word(const LinkPattern& pattern, const std::vector<int>& word) {
  ActionResult result{pattern, 0};
  for (int gen : word) {
    ActionResult step = apply_generator(result.pattern, gen);
    result.pattern = std::move(step.pattern);
    result.loops += step.loops;
  }
  return result;
}

LinkPattern drag_outermost(const LinkPattern& pattern, int rank) {
  const int m = pattern.points();
  if (!pattern.has_link(m - 1, 0))
    throw Error(Errc::missing_link,
                "pattern lacks the boundary link (" + std::to_string(m - 1) + ",0)");
  if (rank == 0) return pattern;

  // Outermost arcs of the cut between points 0 and 1, boundary link excluded;
  // linearize already lists arcs left to right.
  const ArcDiagram diagram = linearize(pattern, 0);
  std::vector<int> openers;  // point labels of the draggable arcs
  std::vector<int> closers;
  for (const Arc& arc : diagram.arcs) {
    if (arc.depth != 0) continue;
    const int a = diagram.order[static_cast<std::size_t>(arc.open)];
    if (a == m - 1) continue;
    openers.push_back(a);
    closers.push_back(diagram.order[static_cast<std::size_t>(arc.close)]);
  }
  const int k = static_cast<int>(openers.size());
  if (rank < 0 || rank > k)
    throw Error(Errc::rank_out_of_range,
                "drag rank " + std::to_string(rank) + " outside 0.." + std::to_string(k));

  const int a = openers[static_cast<std::size_t>(rank - 1)];
  const int b = closers[static_cast<std::size_t>(rank - 1)];
  std::vector<int> next(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) next[static_cast<std::size_t>(p)] = pattern.partner(p);
  next[static_cast<std::size_t>(a)] = 0;
  next[static_cast<std::size_t>(0)] = a;
  next[static_cast<std::size_t>(b)] = m - 1;
  next[static_cast<std::size_t>(m - 1)] = b;
  LinkPattern result = trusted_pattern(std::move(next));
  assert(exposure(result, 0) == rank);
  assert(apply_generator(result, m - 1).pattern == pattern);
  return result;
}

std::vector<LinkPattern> preimages(const LinkPattern& pattern, int gen) {
  check_gen(pattern, gen);
  const int m = pattern.points();
  if (!pattern.has_link(gen, (gen + 1) % m))
    throw Error(Errc::missing_link,
                "pattern lacks the link (" + std::to_string(gen) + "," +
                    std::to_string((gen + 1) % m) + ")");

  // Rotate the acted-on link onto (2n-1, 0), drag, rotate back.
  const int r = m - 1 - gen;
  const LinkPattern aligned = rotate(pattern, r);
  const int k = exposure(aligned, 0) - 1;
  std::vector<LinkPattern> out;
  out.reserve(static_cast<std::size_t>(k + 1));
  for (int rank = 1; rank <= k; ++rank)
    out.push_back(rotate(drag_outermost(aligned, rank), -r));
  out.push_back(pattern);
  return out;
}

bool RelationReport::core_pass() const {
  for (const RelationCheck& c : checks)
    if (c.relation != "commute-literal" && !c.pass) return false;
  return true;
}

const RelationCheck* RelationReport::literal_commutation() const {
  for (const RelationCheck& c : checks)
    if (c.relation == "commute-literal") return &c;
  return nullptr;
}

std::string RelationReport::table() const {
  std::ostringstream out;
  out << "relations on " << strands << " strand(s), " << basis_size
      << " basis pattern(s)\n";
  for (const RelationCheck& c : checks) {
    out << c.relation;
    for (std::size_t pad = c.relation.size(); pad < 16; ++pad) out << ' ';
    out << "i=" << c.i;
    if (c.j >= 0) out << " j=" << c.j;
    out << (c.pass ? "  pass" : "  fail");
    if (c.witness) out << "  witness=" << encode(*c.witness);
    out << '\n';
  }
  return out.str();
}

void RelationReport::write_records(std::ostream& out) const {
  for (const RelationCheck& c : checks) {
    out << "relation=" << c.relation << " i=" << c.i;
    if (c.j >= 0) out << " j=" << c.j;
    out << " pass=" << (c.pass ? 1 : 0);
    if (c.witness) out << " witness=" << encode(*c.witness);
    out << '\n';
  }
}

RelationReport check_relations(int strands) {
  if (strands < 1) throw Error(Errc::domain, "strand count must be positive");
  if (strands > 7)
    throw Error(Errc::size_limit, "exhaustive relation check capped at 7 strands");
  const int m = 2 * strands;
  const std::vector<LinkPattern> all = basis(strands);

  RelationReport report;
  report.strands = strands;
  report.basis_size = static_cast<int>(all.size());

  for (int i = 0; i < m; ++i) {
    RelationCheck c{"idempotent", i, -1, true, std::nullopt};
    for (const LinkPattern& pi : all) {
      const ActionResult once = apply_generator(pi, i);
      const ActionResult twice = apply_generator(once.pattern, i);
      if (twice.pattern != once.pattern || twice.loops != 1) {
        c.pass = false;
        c.witness = pi;
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  for (int i = 0; i < m; ++i) {
    for (int d = 0; d < 2; ++d) {
      if (m == 2 && d == 1) break;  // offsets +1 and -1 coincide
      const int j = d == 0 ? (i + 1) % m : (i + m - 1) % m;
      RelationCheck c{"triple", i, j, true, std::nullopt};
      for (const LinkPattern& pi : all) {
        const ActionResult s = apply_generator(pi, i);
        const ActionResult t = apply_generator(s.pattern, j);
        const ActionResult u = apply_generator(t.pattern, i);
        if (u.pattern != s.pattern) {
          c.pass = false;
          c.witness = pi;
          break;
        }
      }
      report.checks.push_back(std::move(c));
    }
  }

  auto commutes = [&all](int i, int j, RelationCheck& c) {
    for (const LinkPattern& pi : all) {
      const ActionResult ji = apply_generator(pi, j);
      const ActionResult a = apply_generator(ji.pattern, i);
      const ActionResult ij = apply_generator(pi, i);
      const ActionResult b = apply_generator(ij.pattern, j);
      if (a.pattern != b.pattern || ji.loops + a.loops != ij.loops + b.loops) {
        c.pass = false;
        c.witness = pi;
        return;
      }
    }
  };

  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const int dist = std::min(j - i, m - (j - i));
      if (dist <= 1) continue;
      RelationCheck c{"commute", i, j, true, std::nullopt};
      commutes(i, j, c);
      report.checks.push_back(std::move(c));
    }
  }

  // The pair (0, 2n-1) is adjacent on the circle but satisfies the literal
  // reading |i-j| > 1; record its (expected) commutation failure.
  if (m >= 4) {
    RelationCheck c{"commute-literal", 0, m - 1, true, std::nullopt};
    commutes(0, m - 1, c);
    report.checks.push_back(std::move(c));
  }

  return report;
}

}  // namespace lpcat
