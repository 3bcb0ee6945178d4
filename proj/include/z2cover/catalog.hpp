#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "z2cover/lattice.hpp"

namespace z2cover {

enum class CurveKind { exceptional, line, pencil_member };

/*
  An irreducible curve on Y4 usable as a branch component: an exceptional
  curve e_i, the strict transform h_ij of the line through P_i and P_j, or
  the k-th chosen member f_i#k of the pencil of lines through P_i.  Members
  of the same pencil share the class l - e_i but are different curves; two
  NamedCurves are the same curve iff kind and all indices agree.
*/
struct NamedCurve {
  CurveKind kind = CurveKind::exceptional;
  int i = 1;  // point index (e_i, f_i) or first line index (h_ij, i < j)
  int j = 0;  // second line index for h_ij; member index k >= 1 for f_i#k

  static NamedCurve e(int i);
  static NamedCurve h(int i, int j);
  static NamedCurve f(int i, int k);

  DivisorClass cls() const;
  std::string name() const;  // "e1", "h12", "f3#1"

  // throws std::invalid_argument on anything that is not a catalog name
  static NamedCurve parse(const std::string& s);

  auto operator<=>(const NamedCurve&) const = default;
};

// Transversal intersection number of two distinct curves (dot of classes;
// distinct members of one pencil give 0).  Throws on c1 == c2.
int intersection_count(const NamedCurve& c1, const NamedCurve& c2);

/*
  Combinatorial incidence model.  Intersections among the fixed curves
  (e's and h's) happen at forced points carried as data: for i < j one point
  on {e_i, h_ij} and one on {e_j, h_ij}, plus one point on each of the three
  disjoint pairs {h12,h34}, {h13,h24}, {h14,h23}.  No forced point lies on
  three catalog curves; that is the general-position hypothesis on the four
  blown-up points, encoded as data.  Pencil members are generic: they meet
  other curves only at fresh points, dot-many per pair.
*/
struct IncidencePoint {
  std::vector<NamedCurve> curves;
  bool forced = false;
};

struct GenericPositionResult {
  bool ok = false;
  std::string violation;  // empty iff ok
  std::vector<IncidencePoint> points;
};

// Builds the model restricted to the given curves and certifies that every
// point lies on at most two of them.  Duplicate input curves come back as a
// "branch divisor not reduced" violation.
GenericPositionResult certify_generic_position(const std::vector<NamedCurve>& components);

// The ten (-1)-curves as named curves, in the canonical order
// e1..e4, h12, h13, h14, h23, h24, h34 (same order as the class list).
const std::array<NamedCurve, 10>& negative_curves();

// e1..e4, h12..h34, then f1#1..f1#m, ..., f4#1..f4#m.
std::vector<NamedCurve> full_catalog(int pencil_members);

}  // namespace z2cover
