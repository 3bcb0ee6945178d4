#pragma once

#include <string>
#include <vector>

#include "z2cover/catalog.hpp"
#include "z2cover/group.hpp"
#include "z2cover/lattice.hpp"

namespace z2cover {

// Effective divisor on Y4 given by its components; kept sorted so that
// equality is multiset equality.
struct EffectiveDivisor {
  std::vector<NamedCurve> components;

  static EffectiveDivisor of(std::vector<NamedCurve> comps);
  bool empty() const { return components.empty(); }
  DivisorClass cls() const;

  bool operator==(const EffectiveDivisor&) const = default;
};

/*
  Building data of a Z_2^n-cover of Y4: an effective divisor D_sigma for
  every non-identity sigma (explicitly empty where the cover is unramified)
  and a class L_chi for every non-trivial character chi.  Both tables are
  indexed by the packed bits of sigma / chi; slot 0 stays empty / zero.
*/
struct BuildingData {
  int n = 4;
  std::vector<EffectiveDivisor> d;  // size 2^n
  std::vector<DivisorClass> l;      // size 2^n

  static BuildingData make(int n);

  EffectiveDivisor& D(const GroupElement& s);
  const EffectiveDivisor& D(const GroupElement& s) const;
  DivisorClass& L(const Character& c);
  const DivisorClass& L(const Character& c) const;

  DivisorClass branch_class() const;                 // sum of all D_sigma classes
  std::vector<NamedCurve> branch_components() const;  // concatenated, sigma ascending

  bool operator==(const BuildingData&) const = default;
};

struct RelationCheck {
  Character chi;
  DivisorClass lhs;                  // 2 L_chi
  DivisorClass rhs;                  // sum over chi(sigma) = -1 of [D_sigma]
  std::vector<GroupElement> sigmas;  // the nonzero D_sigma entering the sum
  bool ok = false;
};

struct PardiniReport {
  std::vector<RelationCheck> relations;  // all 2^n - 1, chi ascending
  bool reduced = false;
  std::string reduced_detail;
  bool l_nonzero = false;
  std::string l_detail;

  bool ok() const;
};

// Checks 2 L_chi = sum_{chi(sigma) = -1} [D_sigma] for every non-trivial chi,
// that the total branch divisor is reduced and that no L_chi is trivial.
PardiniReport verify_pardini(const BuildingData& bd);

struct BranchGeometryReport {
  bool smooth = false;  // components of each D_sigma pairwise disjoint
  std::string smooth_detail;
  bool reduced = false;
  std::string reduced_detail;
  GenericPositionResult position;

  bool ok() const { return smooth && reduced && position.ok; }
};

// Simple-normal-crossings certificate for the total branch divisor; assumes
// verify_pardini already passed.
BranchGeometryReport verify_branch_geometry(const BuildingData& bd);

struct CoverInvariants {
  DivisorClass two_k_x;  // class on Y4 whose pullback is 2 K_X
  int k2 = 0;
  int pg = 0;
  int chi = 0;
  int q = 0;
};

// Numerical invariants of the covering surface:
//   2K_X = f*(2K_Y + sum D_sigma),   K_X^2 = 2^(n-2) (2K_Y + sum D_sigma)^2,
//   p_g  = sum_chi h0(L_chi + K_Y),  chi(O_X) = 2^n + sum_chi L_chi.(L_chi+K_Y)/2,
//   q    = p_g - chi + 1.
CoverInvariants invariants(const BuildingData& bd);

struct CanonicalGenerator {
  Character chi;
  DivisorClass base;                 // K_Y + L_chi
  std::vector<GroupElement> sigmas;  // chi(sigma) = +1 and D_sigma nonzero
};

// Generators f*(|K_Y + L_chi|) + sum R_sigma of |K_X|, one per chi with
// h0(K_Y + L_chi) > 0.  Empty when no such chi exists.
std::vector<CanonicalGenerator> canonical_generators(const BuildingData& bd);

}  // namespace z2cover
