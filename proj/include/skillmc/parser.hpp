#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "skillmc/formula.hpp"

namespace skillmc {

// Parse failure. `position()` is the 0-based byte offset into the input.
class SyntaxError : public FormulaError {
 public:
  SyntaxError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// `{}` used as a group or skill set.
class EmptySetError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

// Parses the concrete grammar described in docs/grammar.md and returns
// the primitive tree (all sugar expanded).
Formula parse_formula(std::string_view text);

// Canonical text; parse_formula(render_formula(f)) == f.
std::string render_formula(const Formula& f);

}  // namespace skillmc
