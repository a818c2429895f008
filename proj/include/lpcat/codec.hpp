#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "lpcat/tree.hpp"

namespace lpcat {

/// Line formats, one record per line:
///   link pattern  n=<n>;<a>-<b>,<a>-<b>,...   pairs (min,max) sorted by opener
///   dyck path     UUDD                        one char per step
///   permutation   2 1 3                       one-line notation, space-separated
///   path code     2,3,1                       sibling ranks, empty line = root
/// Encoders emit the canonical form; parsers accept it back byte-exactly and
/// tolerate non-canonical pair order. Parsers throw ParseError with a 1-based
/// column; semantic validation errors propagate from the constructors.

std::string encode(const LinkPattern& pattern);
std::string encode(const DyckPath& path);
std::string encode(const Perm123& perm);
std::string encode(const TreeNode& node);
std::string encode_code(const PathCode& code);

LinkPattern parse_pattern(std::string_view line);
DyckPath parse_dyck(std::string_view line);
Perm123 parse_perm(std::string_view line);
TreeNode parse_record(std::string_view line, Family family);
PathCode parse_code(std::string_view line);

std::ostream& operator<<(std::ostream& os, const LinkPattern& pattern);
std::ostream& operator<<(std::ostream& os, const DyckPath& path);
std::ostream& operator<<(std::ostream& os, const Perm123& perm);
std::ostream& operator<<(std::ostream& os, const TreeNode& node);

}  // namespace lpcat
