#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpcat {

enum class Errc {
  not_a_matching,
  crossing,
  index_out_of_range,
  no_such_strand,
  missing_link,
  rank_out_of_range,
  at_root,
  invalid_code,
  domain,
  size_limit,
  unknown_format,
  inexact_division,
  parse,
};

const char* errc_name(Errc) noexcept;

/// Library error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure with the 1-based column of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t column)
      : Error(Errc::parse, msg + " (column " + std::to_string(column) + ")"),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace lpcat
