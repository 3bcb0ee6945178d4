#pragma once

#include <array>
#include <string>
#include <vector>

namespace z2cover {

/*
  Exact intersection theory on Pic of the blow-up of the plane at r points.

  A divisor class a*l + b_1*e_1 + ... + b_r*e_r is stored coordinate-wise as
  (a; b_1..b_r), with the e_i coefficients carrying their sign as written:
  the pencil f_1 = l - e_1 is (1; -1,0,0,0).  The intersection form is
  l^2 = 1, e_i^2 = -1, mixed products 0, so

      dot(D, D') = a*a' - sum_i b_i*b_i'.

  The primary case is r = 4 (the degree-5 del Pezzo surface Y4); the cone
  and section-count routines below are specific to it and refuse other ranks.
*/
struct DivisorClass {
  std::vector<int> c;  // (a; b_1..b_r)

  DivisorClass() = default;
  explicit DivisorClass(std::vector<int> coeffs) : c(std::move(coeffs)) {}
  DivisorClass(std::initializer_list<int> coeffs) : c(coeffs) {}

  static DivisorClass zero(int r = 4) { return DivisorClass(std::vector<int>(r + 1, 0)); }

  int rank() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(DivisorClass a);
  friend DivisorClass operator*(int m, DivisorClass a);

  bool operator==(const DivisorClass&) const = default;
};

// Basis and named classes on Y4 (r = 4 throughout).
DivisorClass line_class();                      // l
DivisorClass exceptional_class(int i);          // e_i, 1 <= i <= 4
DivisorClass pencil_class(int i);               // f_i = l - e_i
DivisorClass line_through_class(int i, int j);  // h_ij = l - e_i - e_j, i != j
DivisorClass canonical_class();                 // K = -3l + e1 + e2 + e3 + e4
DivisorClass anticanonical_class();             // -K

// Symmetric bilinear intersection product; throws std::invalid_argument on
// rank mismatch.
int dot(const DivisorClass& a, const DivisorClass& b);

// The ten (-1)-classes on Y4 in the fixed canonical scan order
// e1..e4, h12, h13, h14, h23, h24, h34.
const std::array<DivisorClass, 10>& negative_curve_classes();

// D is nef iff D.C >= 0 for all ten (-1)-curves; valid on Y4 because the
// effective cone is generated by them.  Refuses rank != 4 instead of
// silently extending the test.
bool is_nef(const DivisorClass& d);
bool is_nef_and_big(const DivisorClass& d);

/*
  h^0 of a divisor class on Y4 by fixed-component stripping:

    (i)   D = 0                      -> 1
    (ii)  D.(-K) < 0                 -> 0
    (iii) D.C < 0 for a (-1)-curve C -> h0(D - C)    (one copy per step)
    (iv)  otherwise (D nef, D != 0)  -> 1 + D.(D - K)/2

  Step (iv) is Riemann-Roch with vanishing higher cohomology, which holds
  for nef nonzero classes here (-K ample); this is assumed, not re-checked.
  The loop terminates because D.(-K) drops by exactly 1 per strip.  The
  result does not depend on the scan order in step (iii); the overload
  taking an explicit order exists so tests can verify that.
*/
int h0(const DivisorClass& d);
int h0(const DivisorClass& d, const std::vector<int>& scan_order);

// "3l - e1 - e2", "0"; report form.
std::string to_string(const DivisorClass& d);
// "3*l - e1 - e2"; accepted by the class-expression parser.
std::string to_expr(const DivisorClass& d);

}  // namespace z2cover
