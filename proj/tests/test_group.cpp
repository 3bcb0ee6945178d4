#include <set>
#include <stdexcept>

#include <doctest.h>

#include "z2cover/group.hpp"

using namespace z2cover;

TEST_CASE("character evaluation") {
  CHECK(char_eval(Character::parse("1100"), GroupElement::parse("1000")) == -1);
  CHECK(char_eval(Character::parse("1010"), GroupElement::parse("1010")) == +1);
  for (unsigned s = 0; s < 16; ++s)
    CHECK(char_eval(Character(4, 0), GroupElement(4, s)) == +1);

  CHECK_THROWS_AS(char_eval(Character::parse("110"), GroupElement::parse("1100")),
                  std::invalid_argument);
}

TEST_CASE("character pairing is multiplicative") {
  for (unsigned c = 0; c < 16; ++c)
    for (unsigned s = 0; s < 16; ++s)
      for (unsigned t = 0; t < 16; ++t) {
        Character chi(4, c);
        GroupElement a(4, s), b(4, t);
        CHECK(char_eval(chi, a + b) == char_eval(chi, a) * char_eval(chi, b));
      }
}

TEST_CASE("rendering matches the subscript convention") {
  CHECK(GroupElement(4, 0b0110).str() == "0110");
  CHECK(Character(4, 0b0001).str() == "0001");
  CHECK(GroupElement::parse("0110").bits == 0b0110);
  CHECK(GroupElement::parse("0110").component(2) == 1);
  CHECK(GroupElement::parse("0110").component(4) == 0);
}

TEST_CASE("perp of the quotient subgroup") {
  Subgroup gamma = Subgroup::generated_by(
      4, {GroupElement::parse("0001"), GroupElement::parse("0010")});
  REQUIRE(gamma.order() == 4);
  std::vector<Character> p = perp(gamma);
  std::set<std::string> names;
  for (const Character& c : p) names.insert(c.str());
  CHECK(names == std::set<std::string>{"0000", "0100", "1000", "1100"});
}

TEST_CASE("perp of the extreme subgroups") {
  Subgroup whole = Subgroup::generated_by(4, {GroupElement::parse("0001"),
                                              GroupElement::parse("0010"),
                                              GroupElement::parse("0100"),
                                              GroupElement::parse("1000")});
  CHECK(perp(whole).size() == 1);
  Subgroup trivial = Subgroup::generated_by(4, {});
  CHECK(perp(trivial).size() == 16);
}

TEST_CASE("order times perp order is the group order, all subgroups") {
  // enumerate every subgroup of Z_2^4 by closing all generator quadruples
  std::set<std::vector<GroupElement>> subgroups;
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = a; b < 16; ++b)
      for (unsigned c = b; c < 16; ++c)
        for (unsigned d = c; d < 16; ++d) {
          Subgroup sg = Subgroup::generated_by(4, {GroupElement(4, a), GroupElement(4, b),
                                                   GroupElement(4, c), GroupElement(4, d)});
          subgroups.insert(sg.elements);
        }
  CHECK(subgroups.size() == 67);  // Gaussian binomial count for F_2^4
  for (const auto& elements : subgroups) {
    Subgroup sg;
    sg.n = 4;
    sg.elements = elements;
    CHECK(elements.size() * perp(sg).size() == 16);
  }
}
