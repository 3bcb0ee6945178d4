#include "z2cover/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace z2cover {

namespace {

void require_same_rank(const DivisorClass& a, const DivisorClass& b) {
  if (a.c.size() != b.c.size())
    throw std::invalid_argument("lattice rank mismatch");
}

void require_rank4(const DivisorClass& d, const char* what) {
  if (d.rank() != 4)
    throw std::invalid_argument(std::string(what) + " requires the rank-4 lattice of Y4");
}

}  // namespace

bool DivisorClass::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  require_same_rank(*this, o);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  require_same_rank(*this, o);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

DivisorClass operator-(DivisorClass a) {
  for (int& x : a.c) x = -x;
  return a;
}

DivisorClass operator*(int m, DivisorClass a) {
  for (int& x : a.c) x *= m;
  return a;
}

DivisorClass line_class() { return DivisorClass{1, 0, 0, 0, 0}; }

DivisorClass exceptional_class(int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("exceptional index out of range");
  DivisorClass d = DivisorClass::zero();
  d.c[i] = 1;
  return d;
}

DivisorClass pencil_class(int i) { return line_class() - exceptional_class(i); }

DivisorClass line_through_class(int i, int j) {
  if (i == j) throw std::invalid_argument("line through a single point");
  return line_class() - exceptional_class(i) - exceptional_class(j);
}

DivisorClass canonical_class() { return DivisorClass{-3, 1, 1, 1, 1}; }

DivisorClass anticanonical_class() { return DivisorClass{3, -1, -1, -1, -1}; }

int dot(const DivisorClass& a, const DivisorClass& b) {
  require_same_rank(a, b);
  int s = a.c[0] * b.c[0];
  for (size_t i = 1; i < a.c.size(); ++i) s -= a.c[i] * b.c[i];
  return s;
}

const std::array<DivisorClass, 10>& negative_curve_classes() {
  static const std::array<DivisorClass, 10> neg = {
      exceptional_class(1),      exceptional_class(2),      exceptional_class(3),
      exceptional_class(4),      line_through_class(1, 2),  line_through_class(1, 3),
      line_through_class(1, 4),  line_through_class(2, 3),  line_through_class(2, 4),
      line_through_class(3, 4)};
  return neg;
}

bool is_nef(const DivisorClass& d) {
  require_rank4(d, "nef test");
  for (const DivisorClass& c : negative_curve_classes())
    if (dot(d, c) < 0) return false;
  return true;
}

bool is_nef_and_big(const DivisorClass& d) { return is_nef(d) && dot(d, d) > 0; }

int h0(const DivisorClass& d, const std::vector<int>& scan_order) {
  require_rank4(d, "h0");
  const auto& neg = negative_curve_classes();
  const DivisorClass anti_k = anticanonical_class();
  DivisorClass cur = d;
  for (;;) {
    if (cur.is_zero()) return 1;
    if (dot(cur, anti_k) < 0) return 0;
    int strip = -1;
    for (int idx : scan_order) {
      if (dot(cur, neg[idx]) < 0) {
        strip = idx;
        break;
      }
    }
    if (strip < 0) {
      // nef and nonzero: Riemann-Roch with vanishing h1, h2
      int s = dot(cur, cur) - dot(cur, canonical_class());
      if (s % 2 != 0) throw std::logic_error("D.(D-K) is odd; lattice arithmetic is broken");
      return 1 + s / 2;
    }
    cur -= neg[strip];
  }
}

int h0(const DivisorClass& d) {
  static const std::vector<int> canonical_order = [] {
    std::vector<int> v(10);
    std::iota(v.begin(), v.end(), 0);
    return v;
  }();
  return h0(d, canonical_order);
}

namespace {

std::string basis_name(size_t i) {
  return i == 0 ? "l" : "e" + std::to_string(i);
}

void append_term(std::string& out, int v, const std::string& name, bool star) {
  if (out.empty())
    out += v < 0 ? "-" : "";
  else
    out += v < 0 ? " - " : " + ";
  int a = v < 0 ? -v : v;
  if (a != 1) out += std::to_string(a) + (star ? "*" : "");
  out += name;
}

}  // namespace

std::string to_string(const DivisorClass& d) {
  std::string out;
  for (size_t i = 0; i < d.c.size(); ++i)
    if (d.c[i] != 0) append_term(out, d.c[i], basis_name(i), false);
  return out.empty() ? "0" : out;
}

std::string to_expr(const DivisorClass& d) {
  // the expression grammar has no leading sign, so a positive term must come
  // first; a class with no positive coordinate is written through K
  bool has_positive = std::any_of(d.c.begin(), d.c.end(), [](int v) { return v > 0; });
  if (!has_positive && !d.is_zero()) {
    if (d.rank() != 4) throw std::invalid_argument("cannot render this class as an expression");
    int n = (-d.c[0]) / 3 + 1;  // n*K leaves a positive l coefficient behind
    DivisorClass rest = d - n * canonical_class();
    std::string out = n == 1 ? "K" : std::to_string(n) + "*K";
    return out + " + " + to_expr(rest);
  }
  std::string out;
  for (size_t i = 0; i < d.c.size(); ++i)
    if (d.c[i] > 0) append_term(out, d.c[i], basis_name(i), true);
  for (size_t i = 0; i < d.c.size(); ++i)
    if (d.c[i] < 0) append_term(out, d.c[i], basis_name(i), true);
  return out.empty() ? "0" : out;
}

}  // namespace z2cover
