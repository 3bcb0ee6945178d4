#include "z2cover/expr.hpp"

#include <cctype>
#include <map>

namespace z2cover {

namespace {

const std::map<std::string, DivisorClass, std::less<>>& named_classes() {
  static const auto table = [] {
    std::map<std::string, DivisorClass, std::less<>> t;
    t.emplace("l", line_class());
    t.emplace("K", canonical_class());
    for (int i = 1; i <= 4; ++i) {
      t.emplace("e" + std::to_string(i), exceptional_class(i));
      t.emplace("f" + std::to_string(i), pencil_class(i));
      for (int j = i + 1; j <= 4; ++j)
        t.emplace("h" + std::to_string(i) + std::to_string(j), line_through_class(i, j));
    }
    return t;
  }();
  return table;
}

struct Cursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() { return s[pos]; }
};

int parse_integer(Cursor& c) {
  size_t start = c.pos;
  long v = 0;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
    v = v * 10 + (c.s[c.pos] - '0');
    if (v > 1000000) throw expr_error("coefficient too large", start);
    ++c.pos;
  }
  return static_cast<int>(v);
}

DivisorClass parse_term(Cursor& c) {
  c.skip_ws();
  if (c.pos >= c.s.size()) throw expr_error("expected a term", c.pos);
  int coeff = 1;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    size_t coeff_pos = c.pos;
    coeff = parse_integer(c);
    c.skip_ws();
    if (c.pos >= c.s.size() || c.peek() != '*')
      throw expr_error("expected '*' after coefficient", c.pos < c.s.size() ? c.pos : coeff_pos);
    ++c.pos;
    c.skip_ws();
  }
  size_t ident_pos = c.pos;
  std::string ident;
  while (c.pos < c.s.size() && std::isalnum(static_cast<unsigned char>(c.s[c.pos])))
    ident += c.s[c.pos++];
  if (ident.empty()) throw expr_error("expected a class name", ident_pos);
  auto it = named_classes().find(ident);
  if (it == named_classes().end())
    throw expr_error("unknown class name '" + ident + "'", ident_pos);
  return coeff * it->second;
}

}  // namespace

DivisorClass parse_class_expr(std::string_view s) {
  Cursor c{s};
  if (c.done()) throw expr_error("empty class expression", 0);
  DivisorClass acc = parse_term(c);
  while (!c.done()) {
    char op = c.peek();
    if (op != '+' && op != '-')
      throw expr_error(std::string("unexpected character '") + op + "'", c.pos);
    ++c.pos;
    DivisorClass term = parse_term(c);
    if (op == '+')
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace z2cover
