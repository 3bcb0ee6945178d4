#pragma once

#include <compare>
#include <string>
#include <vector>

namespace z2cover {

/*
  Elements and characters of Z_2^n, n <= 16.  Both are bit vectors
  (a_1,..,a_n); they share the packed representation but are distinct types
  because their roles differ everywhere downstream.  Bit a_1 is the most
  significant of the n stored bits, so ascending `bits` order matches the
  ascending order of the rendered strings "0001", "0010", ...
*/
struct GroupElement {
  int n = 4;
  unsigned bits = 0;

  GroupElement() = default;
  GroupElement(int n_, unsigned bits_) : n(n_), bits(bits_) {}

  int component(int k) const;  // a_k, 1 <= k <= n
  bool is_identity() const { return bits == 0; }
  std::string str() const;

  static GroupElement parse(const std::string& s);

  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  auto operator<=>(const GroupElement&) const = default;
};

struct Character {
  int n = 4;
  unsigned bits = 0;

  Character() = default;
  Character(int n_, unsigned bits_) : n(n_), bits(bits_) {}

  int component(int k) const;
  bool is_trivial() const { return bits == 0; }
  std::string str() const;

  static Character parse(const std::string& s);

  auto operator<=>(const Character&) const = default;
};

// chi(sigma) = (-1)^(sum_k j_k a_k); throws on rank mismatch.
int char_eval(const Character& chi, const GroupElement& sigma);

struct Subgroup {
  int n = 4;
  std::vector<GroupElement> generators;
  std::vector<GroupElement> elements;  // closed, sorted, contains the identity

  static Subgroup generated_by(int n, const std::vector<GroupElement>& gens);
  bool contains(const GroupElement& g) const;
  size_t order() const { return elements.size(); }
};

// All characters restricting to +1 on every element of gamma; a subgroup of
// the character group of order 2^n / |gamma|.
std::vector<Character> perp(const Subgroup& gamma);

}  // namespace z2cover
