#include "z2cover/cover.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace z2cover {

EffectiveDivisor EffectiveDivisor::of(std::vector<NamedCurve> comps) {
  std::sort(comps.begin(), comps.end());
  return EffectiveDivisor{std::move(comps)};
}

DivisorClass EffectiveDivisor::cls() const {
  DivisorClass sum = DivisorClass::zero();
  for (const NamedCurve& c : components) sum += c.cls();
  return sum;
}

BuildingData BuildingData::make(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("group rank out of range");
  BuildingData bd;
  bd.n = n;
  bd.d.assign(size_t(1) << n, EffectiveDivisor{});
  bd.l.assign(size_t(1) << n, DivisorClass::zero());
  return bd;
}

namespace {

void require_shape(const BuildingData& bd) {
  size_t want = size_t(1) << bd.n;
  if (bd.d.size() != want || bd.l.size() != want)
    throw std::invalid_argument("building data tables do not match the group rank");
}

unsigned index_of(const BuildingData& bd, int n, unsigned bits, const char* what) {
  if (n != bd.n) throw std::invalid_argument(std::string(what) + " rank mismatch");
  if (bits == 0) throw std::invalid_argument(std::string(what) + " must be non-trivial");
  return bits;
}

}  // namespace

EffectiveDivisor& BuildingData::D(const GroupElement& s) {
  return d[index_of(*this, s.n, s.bits, "branch label")];
}
const EffectiveDivisor& BuildingData::D(const GroupElement& s) const {
  return d[index_of(*this, s.n, s.bits, "branch label")];
}
DivisorClass& BuildingData::L(const Character& c) {
  return l[index_of(*this, c.n, c.bits, "character")];
}
const DivisorClass& BuildingData::L(const Character& c) const {
  return l[index_of(*this, c.n, c.bits, "character")];
}

DivisorClass BuildingData::branch_class() const {
  DivisorClass sum = DivisorClass::zero();
  for (unsigned s = 1; s < d.size(); ++s) sum += d[s].cls();
  return sum;
}

std::vector<NamedCurve> BuildingData::branch_components() const {
  std::vector<NamedCurve> out;
  for (unsigned s = 1; s < d.size(); ++s)
    out.insert(out.end(), d[s].components.begin(), d[s].components.end());
  return out;
}

bool PardiniReport::ok() const {
  if (!reduced || !l_nonzero) return false;
  for (const RelationCheck& r : relations)
    if (!r.ok) return false;
  return true;
}

PardiniReport verify_pardini(const BuildingData& bd) {
  require_shape(bd);
  PardiniReport rep;

  rep.reduced = true;
  std::map<NamedCurve, int> seen;
  for (unsigned s = 1; s < bd.d.size(); ++s)
    for (const NamedCurve& c : bd.d[s].components)
      if (++seen[c] == 2 && rep.reduced) {
        rep.reduced = false;
        rep.reduced_detail = "curve " + c.name() + " appears more than once in the branch divisor";
      }

  rep.l_nonzero = true;
  for (unsigned c = 1; c < bd.l.size(); ++c)
    if (bd.l[c].is_zero() && rep.l_nonzero) {
      rep.l_nonzero = false;
      rep.l_detail = "L_" + Character(bd.n, c).str() + " is trivial";
    }

  for (unsigned c = 1; c < bd.l.size(); ++c) {
    Character chi(bd.n, c);
    RelationCheck check;
    check.chi = chi;
    check.lhs = 2 * bd.l[c];
    check.rhs = DivisorClass::zero();
    for (unsigned s = 1; s < bd.d.size(); ++s) {
      GroupElement sigma(bd.n, s);
      if (char_eval(chi, sigma) != -1) continue;
      check.rhs += bd.d[s].cls();
      if (!bd.d[s].empty()) check.sigmas.push_back(sigma);
    }
    check.ok = check.lhs == check.rhs;
    rep.relations.push_back(std::move(check));
  }
  return rep;
}

BranchGeometryReport verify_branch_geometry(const BuildingData& bd) {
  require_shape(bd);
  BranchGeometryReport rep;

  rep.smooth = true;
  for (unsigned s = 1; s < bd.d.size() && rep.smooth; ++s) {
    const auto& comps = bd.d[s].components;
    for (size_t i = 0; i < comps.size() && rep.smooth; ++i)
      for (size_t j = i + 1; j < comps.size() && rep.smooth; ++j) {
        if (comps[i] == comps[j]) continue;  // reported by the reducedness check
        int k = intersection_count(comps[i], comps[j]);
        if (k != 0) {
          rep.smooth = false;
          rep.smooth_detail = "components " + comps[i].name() + " and " + comps[j].name() +
                              " of D_" + GroupElement(bd.n, s).str() +
                              " meet (intersection number " + std::to_string(k) + ")";
        }
      }
  }

  PardiniReport pardini = verify_pardini(bd);
  rep.reduced = pardini.reduced;
  rep.reduced_detail = pardini.reduced_detail;

  rep.position = certify_generic_position(bd.branch_components());
  return rep;
}

CoverInvariants invariants(const BuildingData& bd) {
  require_shape(bd);
  if (bd.n < 2) throw std::invalid_argument("invariants need group rank >= 2");
  CoverInvariants inv;
  inv.two_k_x = 2 * canonical_class() + bd.branch_class();

  int sq = dot(inv.two_k_x, inv.two_k_x);
  inv.k2 = (1 << (bd.n - 2)) * sq;

  const DivisorClass k_y = canonical_class();
  int chi_sum_twice = 0;  // sum of L.(L+K), halved below
  for (unsigned c = 1; c < bd.l.size(); ++c) {
    inv.pg += h0(bd.l[c] + k_y);
    chi_sum_twice += dot(bd.l[c], bd.l[c] + k_y);
  }
  if (chi_sum_twice % 2 != 0)
    throw std::logic_error("odd total in the chi(O) sum; lattice arithmetic is broken");
  inv.chi = (1 << bd.n) + chi_sum_twice / 2;
  inv.q = inv.pg - inv.chi + 1;
  return inv;
}

std::vector<CanonicalGenerator> canonical_generators(const BuildingData& bd) {
  require_shape(bd);
  const DivisorClass k_y = canonical_class();
  std::vector<CanonicalGenerator> out;
  for (unsigned c = 1; c < bd.l.size(); ++c) {
    DivisorClass base = bd.l[c] + k_y;
    if (h0(base) == 0) continue;
    CanonicalGenerator gen;
    gen.chi = Character(bd.n, c);
    gen.base = base;
    for (unsigned s = 1; s < bd.d.size(); ++s) {
      GroupElement sigma(bd.n, s);
      if (char_eval(gen.chi, sigma) == +1 && !bd.d[s].empty()) gen.sigmas.push_back(sigma);
    }
    out.push_back(std::move(gen));
  }
  return out;
}

}  // namespace z2cover
