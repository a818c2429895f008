// lpcat: command-line surface over the link-pattern / Catalan-tree library.
// Record I/O is line-oriented on stdin/stdout. Exit codes: 0 success or all
// checks passed, 1 verification failure, 2 usage or input errors.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "lpcat/codec.hpp"
#include "lpcat/enumeration.hpp"
#include "lpcat/errors.hpp"
#include "lpcat/oracle.hpp"
#include "lpcat/render.hpp"
#include "lpcat/stats.hpp"
#include "lpcat/tl.hpp"
#include "lpcat/tree.hpp"

namespace {

using namespace lpcat;

Family family_of(const std::string& name) {
  return *family_from_name(name);  // option values are pre-validated
}

/// Applies `body` to every node of the level, splitting the traversal across
/// `jobs` worker threads (body must be thread-safe then). Returns the count.
std::uint64_t scan_level(Family family, int level, int jobs,
                         const std::function<void(const TreeNode&)>& body) {
  if (jobs <= 1) {
    std::uint64_t count = 0;
    LevelStream stream(family, level);
    while (auto node = stream.next()) {
      ++count;
      body(*node);
    }
    return count;
  }
  const std::vector<TreeNode> roots = shard_roots(family, level, 4 * jobs);
  std::atomic<std::size_t> cursor{0};
  std::atomic<std::uint64_t> total{0};
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      std::uint64_t local = 0;
      for (std::size_t i = cursor.fetch_add(1); i < roots.size(); i = cursor.fetch_add(1)) {
        LevelStream stream(roots[i], level);
        while (auto node = stream.next()) {
          ++local;
          body(*node);
        }
      }
      total += local;
    });
  for (std::thread& t : workers) t.join();
  return total.load();
}

template <typename Fn>
void for_each_input_line(bool keep_empty, Fn fn) {
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!keep_empty && line.empty()) continue;
    fn(line);
  }
}

int run_generate(Family family, int size, bool stats, std::int64_t limit, int jobs) {
  const auto emit = [stats](const TreeNode& node, std::string& out) {
    out += encode(node);
    if (stats) {
      out += ' ';
      out += encode_stats(stat_record(node));
    }
    out += '\n';
  };

  // A limit makes the traversal stop early, so it stays on one thread; the
  // output is the same document-order prefix for every job count.
  if (jobs <= 1 || limit >= 0) {
    LevelStream stream(family, size);
    std::string line;
    std::int64_t produced = 0;
    while (auto node = stream.next()) {
      if (limit >= 0 && produced >= limit) break;
      line.clear();
      emit(*node, line);
      std::cout << line;
      ++produced;
    }
    return 0;
  }

  // Shard subtrees keep document order when their buffers are concatenated
  // in shard order, so parallel output is byte-identical to one thread.
  const std::vector<TreeNode> roots = shard_roots(family, size, 4 * jobs);
  std::vector<std::string> buffers(roots.size());
  std::atomic<std::size_t> cursor{0};
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (std::size_t i = cursor.fetch_add(1); i < roots.size(); i = cursor.fetch_add(1)) {
        LevelStream stream(roots[i], size);
        while (auto node = stream.next()) emit(*node, buffers[i]);
      }
    });
  for (std::thread& t : workers) t.join();
  for (const std::string& buffer : buffers) std::cout << buffer;
  return 0;
}

std::map<int, BigCount> formula_histogram(int n, Statistic stat) {
  std::map<int, BigCount> out;
  switch (stat) {
    case Statistic::exposure:
    case Statistic::last_descent:
      for (int k = 1; k <= n; ++k) out[k] = count_by_exposure(n, k);
      break;
    case Statistic::interaction:
      for (int ell = 0; ell < n; ++ell) out[ell] = count_by_interaction(n, ell);
      break;
    case Statistic::peaks:
      for (int p = 1; p <= n; ++p) out[p] = count_by_interaction(n, p - 1);
      break;
  }
  return out;
}

int run_count(Family family, int size, std::optional<Statistic> stat, bool verify, int jobs) {
  std::map<int, BigCount> observed;
  BigCount observed_total = 0;
  if (stat) {
    observed = histogram(family, size, *stat, jobs);
    for (const auto& [value, count] : observed) observed_total += count;
  } else {
    observed_total = scan_level(family, size, jobs, [](const TreeNode&) {});
  }

  if (!verify) {
    for (const auto& [value, count] : observed) std::cout << value << '\t' << count << '\n';
    std::cout << "TOTAL\t" << observed_total << '\n';
    return 0;
  }

  std::map<int, BigCount> formula;
  if (stat) formula = formula_histogram(size, *stat);

  std::set<int> values;
  for (const auto& [value, count] : formula) values.insert(value);
  for (const auto& [value, count] : observed) values.insert(value);

  bool mismatch = false;
  BigCount formula_total = 0;
  std::cout << "value\tformula\tobserved\tdiff\n";
  for (int value : values) {
    const BigCount f = formula.count(value) ? formula.at(value) : BigCount(0);
    const BigCount o = observed.count(value) ? observed.at(value) : BigCount(0);
    const BigCount diff = o - f;
    formula_total += f;
    if (diff != 0) mismatch = true;
    std::cout << value << '\t' << f << '\t' << o << '\t' << diff << '\n';
  }
  if (!stat) formula_total = catalan(size);
  const BigCount total_diff = observed_total - formula_total;
  if (total_diff != 0) mismatch = true;
  std::cout << "TOTAL\t" << formula_total << '\t' << observed_total << '\t' << total_diff
            << '\n';
  return mismatch ? 1 : 0;
}

int run_verify(const std::string& suite, int size, int jobs) {
  bool ok = true;

  if (suite == "oracle") {
    for (int n = 1; n <= size; ++n) {
      std::vector<LinkPattern> streamed;
      for (const TreeNode& node : level_nodes(Family::lp, n))
        streamed.push_back(node.pattern());
      std::sort(streamed.begin(), streamed.end());
      const bool lp_ok = streamed == brute_patterns(n);

      std::vector<Perm123> perms;
      for (const TreeNode& node : level_nodes(Family::perm, n)) perms.push_back(node.perm());
      std::sort(perms.begin(), perms.end());
      const bool perm_ok = perms == brute_avoiders(n);

      std::cout << "oracle n=" << n << ": lp " << streamed.size() << " perm " << perms.size()
                << (lp_ok && perm_ok ? " match" : " MISMATCH") << '\n';
      ok = ok && lp_ok && perm_ok;
    }
  } else if (suite == "relations") {
    for (int n = 1; n <= size; ++n) {
      const RelationReport report = check_relations(n);
      const RelationCheck* literal = report.literal_commutation();
      bool line_ok = report.core_pass();
      if (n >= 2)
        line_ok = line_ok && literal != nullptr && !literal->pass &&
                  literal->witness.has_value();
      std::cout << "relations n=" << n << ": basis " << report.basis_size << ", "
                << report.checks.size() << " checks, "
                << (report.core_pass() ? "core pass" : "core FAIL");
      if (literal != nullptr)
        std::cout << ", literal pair (" << literal->i << "," << literal->j << ") "
                  << (literal->pass ? "unexpectedly commutes" : "refuted");
      std::cout << '\n';
      ok = ok && line_ok;
    }
  } else if (suite == "succession") {
    for (Family family : {Family::lp, Family::dyck, Family::perm})
      for (int n = 1; n <= size; ++n) {
        std::atomic<std::uint64_t> bad{0};
        std::atomic<std::uint64_t> edges{0};
        scan_level(family, n, jobs, [&](const TreeNode& node) {
          const std::vector<TreeNode> kids = children(node);
          if (static_cast<int>(kids.size()) != label(node)) {
            ++bad;
            return;
          }
          for (std::size_t r = 0; r < kids.size(); ++r)
            if (label(kids[r]) != static_cast<int>(r) + 2) ++bad;
          edges += kids.size();
        });
        std::cout << "succession " << family_name(family) << " n=" << n << ": "
                  << edges.load() << " edges"
                  << (bad.load() == 0 ? " conform" : " VIOLATED") << '\n';
        ok = ok && bad.load() == 0;
      }
  } else {  // transport
    for (int n = 1; n <= size; ++n) {
      std::atomic<std::uint64_t> bad{0};
      const std::uint64_t lp_count =
          scan_level(Family::lp, n, jobs, [&](const TreeNode& node) {
            const TreeNode as_dyck = convert(node, Family::dyck);
            if (last_descent_length(as_dyck.path()) != exposure(node.pattern(), 0)) ++bad;
            if (peaks(as_dyck.path()) != interaction(node.pattern()) + 1) ++bad;
            if (convert(as_dyck, Family::lp) != node) ++bad;
            if (convert(convert(node, Family::perm), Family::lp) != node) ++bad;
          });
      const std::uint64_t dyck_count =
          scan_level(Family::dyck, n, 1, [](const TreeNode&) {});
      const bool line_ok = bad.load() == 0 && lp_count == dyck_count;
      std::cout << "transport n=" << n << ": " << lp_count << " nodes"
                << (line_ok ? " carried" : " BROKEN") << '\n';
      ok = ok && line_ok;
    }
  }

  std::cout << (ok ? "all checks passed" : "verification FAILED") << '\n';
  return ok ? 0 : 1;
}

int run_bench(Family family, int size, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t count = scan_level(family, size, jobs, [](const TreeNode&) {});
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(3);
  line << "bench " << family_name(family) << " n=" << size << ": " << count << " nodes in "
       << seconds << " s";
  if (seconds > 0) {
    line.precision(0);
    line << " (" << count / seconds << " nodes/s, " << jobs << " job(s))";
  }
  std::cout << line.str() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"link patterns, Dyck paths, and 123-avoiding permutations on one tree"};
  app.require_subcommand(1);

  int status = 0;
  const std::vector<std::string> families{"lp", "dyck", "perm"};
  const std::vector<std::string> statistics{"exposure", "interaction", "ldl", "peaks"};

  // generate
  {
    auto* sub = app.add_subcommand("generate", "stream one tree level in document order");
    auto family = std::make_shared<std::string>("lp");
    auto size = std::make_shared<int>(0);
    auto stats = std::make_shared<bool>(false);
    auto limit = std::make_shared<std::int64_t>(-1);
    auto jobs = std::make_shared<int>(1);
    sub->add_option("--family", *family, "object family")->check(CLI::IsMember(families));
    sub->add_option("--size", *size, "tree level (object size)")->required();
    sub->add_flag("--stats", *stats, "append the statistics fields to each record");
    sub->add_option("--limit", *limit, "stop after this many records");
    sub->add_option("--jobs", *jobs, "worker threads (output independent of the value)");
    sub->callback([&status, family, size, stats, limit, jobs] {
      status = run_generate(family_of(*family), *size, *stats, *limit, *jobs);
    });
  }

  // count
  {
    auto* sub = app.add_subcommand("count", "count one tree level, optionally by statistic");
    auto family = std::make_shared<std::string>("lp");
    auto size = std::make_shared<int>(0);
    auto by = std::make_shared<std::string>();
    auto verify = std::make_shared<bool>(false);
    auto jobs = std::make_shared<int>(1);
    sub->add_option("--family", *family, "object family")->check(CLI::IsMember(families));
    sub->add_option("--size", *size, "tree level (object size)")->required();
    sub->add_option("--by", *by, "statistic to histogram")->check(CLI::IsMember(statistics));
    sub->add_flag("--verify", *verify, "print formula vs observed columns with diffs");
    sub->add_option("--jobs", *jobs, "worker threads (output independent of the value)");
    sub->callback([&status, family, size, by, verify, jobs] {
      std::optional<Statistic> stat;
      if (!by->empty()) stat = statistic_from_name(*by);
      status = run_count(family_of(*family), *size, stat, *verify, *jobs);
    });
  }

  // map
  {
    auto* sub = app.add_subcommand("map", "convert records between families (stdin to stdout)");
    auto from = std::make_shared<std::string>();
    auto to = std::make_shared<std::string>();
    sub->add_option("--from", *from, "input family")->required()->check(CLI::IsMember(families));
    sub->add_option("--to", *to, "output family")->required()->check(CLI::IsMember(families));
    sub->callback([from, to] {
      for_each_input_line(false, [&](const std::string& line) {
        std::cout << encode(convert(parse_record(line, family_of(*from)), family_of(*to)))
                  << '\n';
      });
    });
  }

  // children / parent
  {
    auto* sub = app.add_subcommand("children", "list the children of each input record");
    auto family = std::make_shared<std::string>("lp");
    sub->add_option("--family", *family, "record family")->check(CLI::IsMember(families));
    sub->callback([family] {
      for_each_input_line(false, [&](const std::string& line) {
        for (const TreeNode& kid : children(parse_record(line, family_of(*family))))
          std::cout << encode(kid) << '\n';
      });
    });
  }
  {
    auto* sub = app.add_subcommand("parent", "print the parent of each input record");
    auto family = std::make_shared<std::string>("lp");
    sub->add_option("--family", *family, "record family")->check(CLI::IsMember(families));
    sub->callback([family] {
      for_each_input_line(false, [&](const std::string& line) {
        std::cout << encode(parent(parse_record(line, family_of(*family)))) << '\n';
      });
    });
  }

  // code
  {
    auto* sub = app.add_subcommand("code", "records to tree path codes (or back with --decode)");
    auto family = std::make_shared<std::string>("lp");
    auto decode = std::make_shared<bool>(false);
    sub->add_option("--family", *family, "record family")->check(CLI::IsMember(families));
    sub->add_flag("--decode", *decode, "treat input lines as path codes");
    sub->callback([family, decode] {
      if (*decode) {
        // An empty line is the root's (empty) path code, so keep blank lines.
        for_each_input_line(true, [&](const std::string& line) {
          std::cout << encode(node_at(family_of(*family), parse_code(line))) << '\n';
        });
      } else {
        for_each_input_line(false, [&](const std::string& line) {
          std::cout << encode_code(path_code(parse_record(line, family_of(*family)))) << '\n';
        });
      }
    });
  }

  // apply
  {
    auto* sub = app.add_subcommand("apply", "act on link pattern records by generators");
    auto gen = std::make_shared<int>(0);
    auto word = std::make_shared<std::string>();
    sub->add_option("--gen", *gen, "generator index")->required();
    sub->add_option("--word", *word, "comma-separated indices applied left to right "
                                     "(overrides --gen)");
    sub->callback([gen, word] {
      for_each_input_line(false, [&](const std::string& line) {
        const LinkPattern pattern = parse_pattern(line);
        const ActionResult result = word->empty()
                                        ? apply_generator(pattern, *gen)
                                        : apply_word(pattern, parse_code(*word));
        std::cout << encode(result.pattern) << " loops=" << result.loops << '\n';
      });
    });
  }

  // preimages
  {
    auto* sub = app.add_subcommand("preimages",
                                   "list the patterns a generator maps onto each record");
    auto gen = std::make_shared<int>(0);
    sub->add_option("--gen", *gen, "generator index")->required();
    sub->callback([gen] {
      for_each_input_line(false, [&](const std::string& line) {
        for (const LinkPattern& source : preimages(parse_pattern(line), *gen))
          std::cout << encode(source) << '\n';
      });
    });
  }

  // verify
  {
    auto* sub = app.add_subcommand("verify", "run a verification suite");
    auto suite = std::make_shared<std::string>();
    auto size = std::make_shared<int>(0);
    auto jobs = std::make_shared<int>(1);
    sub->add_option("--suite", *suite, "what to verify")
        ->required()
        ->check(CLI::IsMember({"oracle", "relations", "succession", "transport"}));
    sub->add_option("--size", *size, "largest level / strand count")->required();
    sub->add_option("--jobs", *jobs, "worker threads (outcome independent of the value)");
    sub->callback([&status, suite, size, jobs] { status = run_verify(*suite, *size, *jobs); });
  }

  // render
  {
    auto* sub = app.add_subcommand("render", "draw each input record");
    auto family = std::make_shared<std::string>("lp");
    auto spec = std::make_shared<RenderSpec>();
    sub->add_option("--family", *family, "record family")->check(CLI::IsMember(families));
    sub->add_option("--format", spec->format, "ascii-arc, svg-chord, or svg-arc");
    sub->add_option("--radius", spec->radius, "svg-chord circle radius");
    sub->add_option("--spacing", spec->spacing, "svg-arc distance between points");
    sub->callback([family, spec] {
      for_each_input_line(false, [&](const std::string& line) {
        std::cout << render(parse_record(line, family_of(*family)), *spec);
      });
    });
  }

  // bench
  {
    auto* sub = app.add_subcommand("bench", "time a full level traversal");
    auto family = std::make_shared<std::string>("lp");
    auto size = std::make_shared<int>(0);
    auto jobs = std::make_shared<int>(1);
    sub->add_option("--family", *family, "object family")->check(CLI::IsMember(families));
    sub->add_option("--size", *size, "tree level (object size)")->required();
    sub->add_option("--jobs", *jobs, "worker threads");
    sub->callback([&status, family, size, jobs] {
      status = run_bench(family_of(*family), *size, *jobs);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const lpcat::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
