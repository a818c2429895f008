#include "lpcat/codec.hpp"

#include <charconv>
#include <ostream>
#include <utility>
#include <vector>

#include "lpcat/errors.hpp"

namespace lpcat {

namespace {

/// Column-tracking scanner over one record line.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  std::size_t column() const { return pos + 1; }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", column());
    ++pos;
  }

  int integer() {
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first)
      throw ParseError("expected an integer", column());
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }
};

}  // namespace

std::string encode(const LinkPattern& pattern) {
  std::string out = "n=" + std::to_string(pattern.strands()) + ";";
  bool first = true;
  for (const auto& [a, b] : pattern.pairs()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(a);
    out += '-';
    out += std::to_string(b);
  }
  return out;
}

std::string encode(const DyckPath& path) {
  std::string out;
  out.reserve(path.steps().size());
  for (Step s : path.steps()) out += s == Step::up ? 'U' : 'D';
  return out;
}

std::string encode(const Perm123& perm) {
  std::string out;
  for (int i = 1; i <= perm.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(perm.value(i));
  }
  return out;
}

std::string encode(const TreeNode& node) {
  return std::visit([](const auto& v) { return encode(v); }, node.value);
}

std::string encode_code(const PathCode& code) {
  std::string out;
  for (std::size_t t = 0; t < code.size(); ++t) {
    if (t > 0) out += ',';
    out += std::to_string(code[t]);
  }
  return out;
}

LinkPattern parse_pattern(std::string_view line) {
  Cursor c{line};
  c.expect('n');
  c.expect('=');
  const int n = c.integer();
  if (n < 1) throw ParseError("strand count must be positive", c.column());
  c.expect(';');
  std::vector<std::pair<int, int>> pairs;
  while (true) {
    const int a = c.integer();
    c.expect('-');
    const int b = c.integer();
    pairs.emplace_back(a, b);
    if (c.done()) break;
    c.expect(',');
  }
  return LinkPattern::from_pairs(pairs, n);
}

DyckPath parse_dyck(std::string_view line) {
  if (line.empty()) throw ParseError("empty path", 1);
  std::vector<Step> steps;
  steps.reserve(line.size());
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == 'U') {
      steps.push_back(Step::up);
    } else if (line[i] == 'D') {
      steps.push_back(Step::down);
    } else {
      throw ParseError("expected 'U' or 'D'", i + 1);
    }
  }
  return DyckPath::from_steps(std::move(steps));
}

Perm123 parse_perm(std::string_view line) {
  if (line.empty()) throw ParseError("empty permutation", 1);
  Cursor c{line};
  std::vector<int> values;
  while (true) {
    values.push_back(c.integer());
    if (c.done()) break;
    c.expect(' ');
  }
  return Perm123::from_values(std::move(values));
}

TreeNode parse_record(std::string_view line, Family family) {
  switch (family) {
    case Family::lp: return {parse_pattern(line)};
    case Family::dyck: return {parse_dyck(line)};
    case Family::perm: return {parse_perm(line)};
  }
  throw Error(Errc::domain, "unknown family");
}

PathCode parse_code(std::string_view line) {
  PathCode code;
  Cursor c{line};
  if (c.done()) return code;  // the root's code is the empty sequence
  while (true) {
    code.push_back(c.integer());
    if (c.done()) break;
    c.expect(',');
  }
  return code;
}

std::ostream& operator<<(std::ostream& os, const LinkPattern& pattern) {
  return os << encode(pattern);
}

std::ostream& operator<<(std::ostream& os, const DyckPath& path) {
  return os << encode(path);
}

std::ostream& operator<<(std::ostream& os, const Perm123& perm) {
  return os << encode(perm);
}

std::ostream& operator<<(std::ostream& os, const TreeNode& node) {
  return os << family_name(node.family()) << ':' << encode(node);
}

}  // namespace lpcat
