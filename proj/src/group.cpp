#include "z2cover/group.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace z2cover {

namespace {

int bit_component(int n, unsigned bits, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("component index out of range");
  return (bits >> (n - k)) & 1u;
}

std::string bit_str(int n, unsigned bits) {
  std::string s(n, '0');
  for (int k = 1; k <= n; ++k)
    if (bit_component(n, bits, k)) s[k - 1] = '1';
  return s;
}

unsigned parse_bits(const std::string& s) {
  if (s.empty() || s.size() > 16) throw std::invalid_argument("bad bit string '" + s + "'");
  unsigned bits = 0;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("bad bit string '" + s + "'");
    bits = (bits << 1) | unsigned(ch - '0');
  }
  return bits;
}

}  // namespace

int GroupElement::component(int k) const { return bit_component(n, bits, k); }
std::string GroupElement::str() const { return bit_str(n, bits); }

GroupElement GroupElement::parse(const std::string& s) {
  return GroupElement(static_cast<int>(s.size()), parse_bits(s));
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  if (a.n != b.n) throw std::invalid_argument("group rank mismatch");
  return GroupElement(a.n, a.bits ^ b.bits);
}

int Character::component(int k) const { return bit_component(n, bits, k); }
std::string Character::str() const { return bit_str(n, bits); }

Character Character::parse(const std::string& s) {
  return Character(static_cast<int>(s.size()), parse_bits(s));
}

int char_eval(const Character& chi, const GroupElement& sigma) {
  if (chi.n != sigma.n) throw std::invalid_argument("character/element rank mismatch");
  return (std::popcount(chi.bits & sigma.bits) & 1) ? -1 : +1;
}

Subgroup Subgroup::generated_by(int n, const std::vector<GroupElement>& gens) {
  std::vector<bool> in(size_t(1) << n, false);
  in[0] = true;
  std::vector<unsigned> frontier = {0};
  while (!frontier.empty()) {
    unsigned cur = frontier.back();
    frontier.pop_back();
    for (const GroupElement& g : gens) {
      if (g.n != n) throw std::invalid_argument("generator rank mismatch");
      unsigned next = cur ^ g.bits;
      if (!in[next]) {
        in[next] = true;
        frontier.push_back(next);
      }
    }
  }
  Subgroup sg;
  sg.n = n;
  sg.generators = gens;
  for (unsigned b = 0; b < (1u << n); ++b)
    if (in[b]) sg.elements.emplace_back(n, b);
  return sg;
}

bool Subgroup::contains(const GroupElement& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

std::vector<Character> perp(const Subgroup& gamma) {
  std::vector<Character> out;
  for (unsigned b = 0; b < (1u << gamma.n); ++b) {
    Character chi(gamma.n, b);
    bool trivial_on_gamma = true;
    for (const GroupElement& g : gamma.elements) {
      if (char_eval(chi, g) != +1) {
        trivial_on_gamma = false;
        break;
      }
    }
    if (trivial_on_gamma) out.push_back(chi);
  }
  return out;
}

}  // namespace z2cover
