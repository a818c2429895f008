#include "lpcat/enumeration.hpp"

#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lpcat/errors.hpp"
#include "lpcat/stats.hpp"

namespace lpcat {

namespace {

BigCount exact_div(BigCount num, const BigCount& den, const char* what) {
  BigCount quotient, remainder;
  boost::multiprecision::divide_qr(num, den, quotient, remainder);
  if (remainder != 0)
    throw Error(Errc::inexact_division,
                std::string(what) + " left remainder " + remainder.str());
  return quotient;
}

int stat_value(const TreeNode& node, Statistic stat) {
  switch (stat) {
    case Statistic::exposure: return exposure(node.pattern(), 0);
    case Statistic::interaction: return interaction(node.pattern());
    case Statistic::last_descent: return last_descent_length(node.path());
    case Statistic::peaks: return peaks(node.path());
  }
  throw Error(Errc::domain, "unknown statistic");
}

}  // namespace

BigCount binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigCount acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc = exact_div(std::move(acc), i, "binomial accumulation");
  }
  return acc;
}

BigCount catalan(int n) {
  if (n < 0) throw Error(Errc::domain, "negative index");
  return exact_div(binomial(2 * n, n), n + 1, "catalan quotient");
}

BigCount count_by_exposure(int n, int k) {
  if (n < 1) throw Error(Errc::domain, "strand count must be positive");
  if (k < 1 || k > n)
    throw Error(Errc::domain,
                "exposure " + std::to_string(k) + " outside 1.." + std::to_string(n));
  return exact_div(binomial(2 * n - k, n) * k, 2 * n - k, "ballot quotient");
}

BigCount count_by_interaction(int n, int ell) {
  if (n < 1) throw Error(Errc::domain, "strand count must be positive");
  if (ell < 0 || ell > n - 1)
    throw Error(Errc::domain,
                "interaction " + std::to_string(ell) + " outside 0.." + std::to_string(n - 1));
  return exact_div(binomial(n, ell + 1) * binomial(n, ell), n, "narayana quotient");
}

const char* statistic_name(Statistic stat) noexcept {
  switch (stat) {
    case Statistic::exposure: return "exposure";
    case Statistic::interaction: return "interaction";
    case Statistic::last_descent: return "ldl";
    case Statistic::peaks: return "peaks";
  }
  return "?";
}

std::optional<Statistic> statistic_from_name(std::string_view name) noexcept {
  if (name == "exposure") return Statistic::exposure;
  if (name == "interaction") return Statistic::interaction;
  if (name == "ldl") return Statistic::last_descent;
  if (name == "peaks") return Statistic::peaks;
  return std::nullopt;
}

bool statistic_applies(Family family, Statistic stat) noexcept {
  switch (stat) {
    case Statistic::exposure:
    case Statistic::interaction:
      return family == Family::lp;
    case Statistic::last_descent:
    case Statistic::peaks:
      return family == Family::dyck;
  }
  return false;
}

std::map<int, BigCount> histogram(Family family, int level, Statistic stat, int jobs) {
  if (!statistic_applies(family, stat))
    throw Error(Errc::domain, std::string(statistic_name(stat)) +
                                  " is not defined for family " + family_name(family));
  if (jobs < 1) throw Error(Errc::domain, "job count must be positive");

  if (jobs == 1) {
    std::map<int, BigCount> out;
    LevelStream stream(family, level);
    while (auto node = stream.next()) ++out[stat_value(*node, stat)];
    return out;
  }

  const std::vector<TreeNode> roots = shard_roots(family, level, 4 * jobs);
  std::vector<std::map<int, std::uint64_t>> partial(roots.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t idx; (idx = cursor.fetch_add(1)) < roots.size();) {
      LevelStream stream(roots[idx], level);
      auto& local = partial[idx];
      while (auto node = stream.next()) ++local[stat_value(*node, stat)];
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  std::map<int, BigCount> out;
  for (const auto& local : partial)
    for (const auto& [value, count] : local) out[value] += count;
  return out;
}

}  // namespace lpcat
