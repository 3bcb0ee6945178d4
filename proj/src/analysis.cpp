#include "z2cover/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace z2cover {

namespace {

void require_rank4_cover(const BuildingData& bd, const char* what) {
  if (bd.n != 4) throw std::invalid_argument(std::string(what) + " is specific to Z_2^4-covers");
}

// sum of [D_sigma] over one coset of <0001,0010>, keyed by the top two bits
DivisorClass coset_class(const BuildingData& bd, unsigned top_bits) {
  DivisorClass sum = DivisorClass::zero();
  for (unsigned low = 0; low < 4; ++low) sum += bd.d[(top_bits << 2) | low].cls();
  return sum;
}

}  // namespace

Degree20Report check_degree20(const BuildingData& bd) {
  require_rank4_cover(bd, "the degree-20 criterion");
  Degree20Report rep;

  BranchGeometryReport geo = verify_branch_geometry(bd);
  rep.h1_snc.ok = geo.ok();
  if (!geo.smooth)
    rep.h1_snc.detail = geo.smooth_detail;
  else if (!geo.reduced)
    rep.h1_snc.detail = geo.reduced_detail;
  else if (!geo.position.ok)
    rep.h1_snc.detail = geo.position.violation;

  const DivisorClass anti_k = anticanonical_class();
  rep.h2_factorization.ok = true;
  for (unsigned top = 1; top <= 3; ++top) {
    DivisorClass sum = coset_class(bd, top);
    if (sum != anti_k) {
      std::string coset = {char('0' + (top >> 1)), char('0' + (top & 1)), '*', '*'};
      rep.h2_factorization.ok = false;
      rep.h2_factorization.detail += (rep.h2_factorization.detail.empty() ? "" : "; ");
      rep.h2_factorization.detail += "sum over sigma = " + coset + " is " + to_string(sum) +
                                     ", not " + to_string(anti_k);
    }
  }

  const DivisorClass k_y = canonical_class();
  rep.h3_vanishing.ok = true;
  for (unsigned c = 1; c < 16; ++c) {
    if (c == 0b1000 || c == 0b0100 || c == 0b1100) continue;
    int dim = h0(bd.l[c] + k_y);
    if (dim != 0) {
      rep.h3_vanishing.ok = false;
      rep.h3_vanishing.detail += (rep.h3_vanishing.detail.empty() ? "" : "; ");
      rep.h3_vanishing.detail +=
          "h0(K + L_" + Character(4, c).str() + ") = " + std::to_string(dim);
    }
  }

  DivisorClass a = bd.d[1].cls() + bd.d[2].cls() + bd.d[3].cls() - k_y;
  rep.h4_nefbig.ok = is_nef_and_big(a);
  if (!rep.h4_nefbig.ok)
    rep.h4_nefbig.detail = to_string(a) + (is_nef(a) ? " is nef but not big" : " is not nef");

  if (!rep.all_pass()) return rep;

  Degree20Conclusions con;
  con.two_k_x = a;
  con.k2 = 4 * dot(a, a);
  con.pg = 0;
  for (unsigned c = 1; c < 16; ++c) con.pg += h0(bd.l[c] + k_y);
  con.mobile_square = 4 * dot(anti_k, anti_k);
  con.degree = 20;
  for (unsigned s = 1; s <= 3; ++s) {
    GroupElement sigma(4, s);
    for (const NamedCurve& c : bd.d[s].components)
      con.fixed_part.push_back({sigma, c, preimage_component_count(bd, sigma, c)});
  }
  rep.conclusions = std::move(con);
  return rep;
}

int preimage_component_count(const BuildingData& bd, const GroupElement& sigma,
                             const NamedCurve& curve) {
  if (sigma.n != bd.n || sigma.is_identity())
    throw std::invalid_argument("bad inertia label");
  std::vector<GroupElement> gens = {sigma};
  for (unsigned s = 1; s < bd.d.size(); ++s) {
    if (s == sigma.bits) continue;
    for (const NamedCurve& other : bd.d[s].components)
      if (other != curve && intersection_count(curve, other) > 0) {
        gens.emplace_back(bd.n, s);
        break;
      }
  }
  Subgroup span = Subgroup::generated_by(bd.n, gens);
  return static_cast<int>((size_t(1) << bd.n) / span.order());
}

BidoubleData quotient_factorization(const BuildingData& bd, const Subgroup& gamma) {
  require_rank4_cover(bd, "the bidouble factorization");
  // only the quotient by <(0,0,0,1),(0,0,1,0)> is meaningful here
  std::vector<unsigned> bits;
  for (const GroupElement& g : gamma.elements) bits.push_back(g.bits);
  if (gamma.n != 4 || bits != std::vector<unsigned>{0, 1, 2, 3})
    throw std::invalid_argument("unsupported quotient subgroup; expected <0001, 0010>");

  // sanity: the three special characters are exactly the non-trivial ones
  // vanishing on gamma
  std::vector<Character> dual = perp(gamma);
  std::vector<unsigned> dual_bits;
  for (const Character& c : dual)
    if (!c.is_trivial()) dual_bits.push_back(c.bits);
  if (dual_bits != std::vector<unsigned>{0b0100, 0b1000, 0b1100})
    throw std::logic_error("perp of <0001,0010> is not <1000,0100,1100>");

  auto coset_divisor = [&bd](unsigned top) {
    std::vector<NamedCurve> comps;
    for (unsigned low = 0; low < 4; ++low) {
      const auto& c = bd.d[(top << 2) | low].components;
      comps.insert(comps.end(), c.begin(), c.end());
    }
    return EffectiveDivisor::of(std::move(comps));
  };

  BidoubleData out;
  out.d1 = coset_divisor(1);
  out.d2 = coset_divisor(2);
  out.d3 = coset_divisor(3);
  out.l1 = bd.l[0b1000];
  out.l2 = bd.l[0b0100];
  out.l3 = bd.l[0b1100];
  out.degree_phi_z = dot(anticanonical_class(), anticanonical_class());
  return out;
}

int pencil_genus(const BuildingData& bd, const DivisorClass& pencil) {
  require_rank4_cover(bd, "the pencil genus");
  if (dot(pencil, pencil) != 0)
    throw std::invalid_argument(to_string(pencil) + " is not a pencil class");
  DivisorClass two_k = 2 * canonical_class() + bd.branch_class();
  int f_dot_k = 8 * dot(pencil, two_k);  // F.K_X with F = f*(pencil), F^2 = 0
  return 1 + f_dot_k / 2;
}

DeformationReport deformations(const BuildingData& bd) {
  DeformationReport rep;
  for (unsigned s = 1; s < bd.d.size(); ++s)
    if (!bd.d[s].empty()) rep.sections.push_back({GroupElement(bd.n, s), h0(bd.d[s].cls())});

  for (unsigned s = 1; s < bd.d.size(); ++s) {
    GroupElement sigma(bd.n, s);
    for (unsigned c = 1; c < bd.l.size(); ++c) {
      Character chi(bd.n, c);
      if (char_eval(chi, sigma) != +1) continue;
      int dim = h0(bd.d[s].cls() - bd.l[c]);
      rep.twisted.push_back({sigma, chi, dim});
      rep.twisted_total += dim;
    }
  }
  rep.galois_only = rep.twisted_total == 0;

  for (const SectionDim& sd : rep.sections) {
    if (sd.dim < 2) continue;
    if (!rep.base_space.empty()) rep.base_space += " x ";
    rep.base_space += "P" + std::to_string(sd.dim - 1);
  }
  if (rep.base_space.empty()) rep.base_space = "point";
  return rep;
}

}  // namespace z2cover
