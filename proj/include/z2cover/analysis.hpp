#pragma once

#include <optional>
#include <string>
#include <vector>

#include "z2cover/cover.hpp"

namespace z2cover {

struct HypothesisVerdict {
  bool ok = false;
  std::string detail;
};

struct FixedPartEntry {
  GroupElement sigma;
  NamedCurve curve;
  int upstairs_components = 0;  // connected components of the reduced preimage
};

struct Degree20Conclusions {
  int k2 = 0;
  int pg = 0;
  int degree = 0;         // degree of the canonical map
  int mobile_square = 0;  // M^2 for the base-point-free mobile part
  DivisorClass two_k_x;
  std::vector<FixedPartEntry> fixed_part;
};

struct Degree20Report {
  HypothesisVerdict h1_snc;            // branch geometry certificate
  HypothesisVerdict h2_factorization;  // the three coset sums are -K_Y
  HypothesisVerdict h3_vanishing;      // h0(K_Y + L_chi) = 0 off the three special chi
  HypothesisVerdict h4_nefbig;         // D_0001 + D_0010 + D_0011 - K_Y nef and big
  std::optional<Degree20Conclusions> conclusions;  // present iff all four pass

  bool all_pass() const {
    return h1_snc.ok && h2_factorization.ok && h3_vanishing.ok && h4_nefbig.ok;
  }
};

/*
  Checks the four hypotheses under which a Z_2^4-cover of Y4 has a canonical
  map of degree 20, and on a full pass reports the conclusions: K^2, p_g = 3,
  the fixed part of |K_X| (the reduced preimages of the D_sigma with sigma in
  0001, 0010, 0011) and M^2 = 20 for the mobile part.  The degree is emitted
  only on a full pass; the argument is specific to this three-generator
  shape and is not extrapolated to non-conforming data.

  Requires verify_pardini(bd) to have passed.
*/
Degree20Report check_degree20(const BuildingData& bd);

// Connected components of the reduced preimage of one branch component:
// 2^n / |subgroup generated by sigma and the inertia of every branch curve
// meeting it|.
int preimage_component_count(const BuildingData& bd, const GroupElement& sigma,
                             const NamedCurve& curve);

struct BidoubleData {
  EffectiveDivisor d1, d2, d3;
  DivisorClass l1, l2, l3;
  int degree_phi_z = 0;
};

// Intermediate bidouble cover Z = X / <(0,0,0,1),(0,0,1,0)>: groups the
// D_sigma by coset and picks L_1000, L_0100, L_1100.  Only that quotient is
// supported; anything else is rejected.
BidoubleData quotient_factorization(const BuildingData& bd, const Subgroup& gamma);

// Genus of a fiber of the pencil on X pulled back from |pencil|:
// g = 1 + (F^2 + F.K_X)/2 with F = f*(pencil), F^2 = 0 and
// F.K_X = 8 pencil.(2K_Y + sum D_sigma)/2.  Throws unless pencil^2 = 0.
int pencil_genus(const BuildingData& bd, const DivisorClass& pencil);

struct SectionDim {
  GroupElement sigma;
  int dim = 0;  // h0(D_sigma)
};

struct TwistedSectionDim {
  GroupElement sigma;
  Character chi;
  int dim = 0;  // h0(D_sigma - L_chi)
};

struct DeformationReport {
  std::vector<SectionDim> sections;          // sigma with D_sigma nonzero
  std::vector<TwistedSectionDim> twisted;    // sigma != 0, chi(sigma) = +1
  int twisted_total = 0;
  std::string base_space;  // "P1 x P1 x P1", "point", ...
  bool galois_only = false;
};

// Dimensions of the natural-deformation space: section spaces of the D_sigma
// and the twisted spaces h0(D_sigma - L_chi); every deformation stays Galois
// iff the twisted part vanishes.
DeformationReport deformations(const BuildingData& bd);

}  // namespace z2cover
