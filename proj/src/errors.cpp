#include "lpcat/errors.hpp"

namespace lpcat {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_a_matching: return "not-a-matching";
    case Errc::crossing: return "crossing";
    case Errc::index_out_of_range: return "index-out-of-range";
    case Errc::no_such_strand: return "no-such-strand";
    case Errc::missing_link: return "missing-link";
    case Errc::rank_out_of_range: return "rank-out-of-range";
    case Errc::at_root: return "at-root";
    case Errc::invalid_code: return "invalid-code";
    case Errc::domain: return "domain";
    case Errc::size_limit: return "size-limit";
    case Errc::unknown_format: return "unknown-format";
    case Errc::inexact_division: return "inexact-division";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

}  // namespace lpcat
