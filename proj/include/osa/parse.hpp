// Text syntax for elements and chain states.
#pragma once

#include <stdexcept>
#include <string>

#include "osa/chains.hpp"
#include "osa/core.hpp"

namespace osa {

/// Syntax error with a 1-based column.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, int column);
  int column() const { return column_; }

 private:
  int column_;
};

/// Either a generator combination or a chain combination; mixing is an error.
struct Expression {
  bool is_chain = false;
  Element element;
  ChainState chains;
};

/// Parses with range checks against p (RangeError cites Lambda or Lambda_F).
Expression parse(const std::string& text, const Params& p);
Element parse_element(const std::string& text, const Params& p);
ChainState parse_chains(const std::string& text, const Params& p);

}  // namespace osa
