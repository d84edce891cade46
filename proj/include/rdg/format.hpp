#pragma once

// The "rdg v1" text format:
//
//   rdg v1
//   n <N>
//   row <z_rank> <tail_col> <head_col> <+|->     (N lines, ascending z_rank)
//
// LF line endings, single spaces, no trailing whitespace.

#include <string>
#include <string_view>

#include "rdg/diagram.hpp"

namespace rdg {

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses and validates. Grammar problems throw ParseError (1-based line and
/// column); a well-formed file describing an invalid diagram throws rdg::Error
/// naming the violated axioms.
RectDiagram parse(std::string_view text);

/// Parses the grammar only; the result may be invalid.
RectDiagram parse_unchecked(std::string_view text);

std::string serialize(const RectDiagram& d);

}  // namespace rdg
