#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dopt/design_matrix.hpp"
#include "dopt/sds.hpp"

// Plain-text formats.
//
// SDS record, one per line:
//   (v;r,s;lambda) [x1,x2,...] [y1,y2,...]  # optional tag
// Blocks sorted ascending, [] for the empty block, whitespace-insensitive
// between tokens; full lines starting with '#' are comments.
//
// Matrix file: header "DO <order>" then <order> lines of '+'/'-' characters,
// one row per line, no separators.  Several matrices may be concatenated.

namespace dopt {

struct SdsRecord {
  Sds sds;
  std::string tag;  // trailing comment text, empty when absent
};

struct ParseError : std::runtime_error {
  int line_no;  // 1-based; 0 when unknown
  ParseError(int line, const std::string& what)
      : std::runtime_error(what), line_no(line) {}
};

std::string print_record(const SdsRecord& r);
SdsRecord parse_record(const std::string& line);  // throws ParseError

// Skips blank lines and comments; rethrows ParseError with line numbers.
std::vector<SdsRecord> parse_records(std::istream& in);
std::vector<SdsRecord> load_records(const std::string& path);

std::string print_matrix(const SignMatrix& m);
std::vector<SignMatrix> parse_matrices(std::istream& in);  // throws ParseError
std::vector<SignMatrix> load_matrices(const std::string& path);

}  // namespace dopt
