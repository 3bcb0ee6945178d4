#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "z2cover/lattice.hpp"

namespace z2cover {

struct expr_error : std::runtime_error {
  size_t pos;  // 0-based offset into the expression
  expr_error(const std::string& msg, size_t pos_)
      : std::runtime_error(msg + " at position " + std::to_string(pos_ + 1)), pos(pos_) {}
};

/*
  Divisor-class expressions:

      expr := term (('+' | '-') term)*
      term := [integer '*'] ident
      ident in { l, e1..e4, f1..f4, h12, h13, h14, h23, h24, h34, K }

  K denotes the canonical class -3l + e1 + e2 + e3 + e4.  Whitespace is
  insignificant.  Evaluation is left to right; errors carry the offending
  position.
*/
DivisorClass parse_class_expr(std::string_view s);

}  // namespace z2cover
