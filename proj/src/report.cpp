#include "z2cover/report.hpp"

#include <sstream>

namespace z2cover {

using nlohmann::json;

json class_json(const DivisorClass& d) {
  return json{{"coords", d.c}, {"pretty", to_string(d)}};
}

json divisor_json(const EffectiveDivisor& d) {
  json comps = json::array();
  for (const NamedCurve& c : d.components) comps.push_back(c.name());
  return json{{"components", comps}, {"class", class_json(d.cls())}};
}

namespace {

std::string divisor_names(const EffectiveDivisor& d) {
  if (d.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < d.components.size(); ++i)
    out += (i ? " + " : "") + d.components[i].name();
  return out;
}

const char* mark(bool ok) { return ok ? "ok" : "FAIL"; }

}  // namespace

json pardini_json(const PardiniReport& rep) {
  json rels = json::array();
  for (const RelationCheck& r : rep.relations) {
    json sigmas = json::array();
    for (const GroupElement& s : r.sigmas) sigmas.push_back(s.str());
    rels.push_back(json{{"chi", r.chi.str()},
                        {"lhs", class_json(r.lhs)},
                        {"rhs", class_json(r.rhs)},
                        {"sigmas", sigmas},
                        {"ok", r.ok}});
  }
  return json{{"relations", rels},
              {"reduced", json{{"ok", rep.reduced}, {"detail", rep.reduced_detail}}},
              {"l_nonzero", json{{"ok", rep.l_nonzero}, {"detail", rep.l_detail}}},
              {"ok", rep.ok()}};
}

std::string pardini_text(const PardiniReport& rep) {
  std::ostringstream out;
  out << "cover relations:\n";
  for (const RelationCheck& r : rep.relations)
    out << "  2L_" << r.chi.str() << " = " << to_string(r.rhs) << "  [" << mark(r.ok) << "]\n";
  out << "  branch divisor reduced: " << mark(rep.reduced);
  if (!rep.reduced) out << "  (" << rep.reduced_detail << ")";
  out << "\n  all L nontrivial: " << mark(rep.l_nonzero);
  if (!rep.l_nonzero) out << "  (" << rep.l_detail << ")";
  out << "\n  relations: " << mark(rep.ok()) << "\n";
  return out.str();
}

json branch_geometry_json(const BranchGeometryReport& rep) {
  return json{{"smooth", json{{"ok", rep.smooth}, {"detail", rep.smooth_detail}}},
              {"reduced", json{{"ok", rep.reduced}, {"detail", rep.reduced_detail}}},
              {"generic_position",
               json{{"ok", rep.position.ok},
                    {"detail", rep.position.violation},
                    {"points", rep.position.points.size()}}},
              {"ok", rep.ok()}};
}

std::string branch_geometry_text(const BranchGeometryReport& rep) {
  std::ostringstream out;
  out << "branch geometry:\n";
  out << "  each D_sigma smooth: " << mark(rep.smooth);
  if (!rep.smooth) out << "  (" << rep.smooth_detail << ")";
  out << "\n  branch divisor reduced: " << mark(rep.reduced);
  if (!rep.reduced) out << "  (" << rep.reduced_detail << ")";
  out << "\n  no point on three components: " << mark(rep.position.ok);
  if (!rep.position.ok) out << "  (" << rep.position.violation << ")";
  out << "  [" << rep.position.points.size() << " crossings]\n";
  out << "  geometry: " << mark(rep.ok()) << "\n";
  return out.str();
}

json invariants_json(const CoverInvariants& inv) {
  return json{{"two_k_x", class_json(inv.two_k_x)},
              {"k2", inv.k2},
              {"pg", inv.pg},
              {"chi", inv.chi},
              {"q", inv.q}};
}

std::string invariants_text(const CoverInvariants& inv) {
  std::ostringstream out;
  out << "invariants:\n";
  out << "  2K_X = pull-back of " << to_string(inv.two_k_x) << "\n";
  out << "  K^2 = " << inv.k2 << "\n";
  out << "  p_g = " << inv.pg << "\n";
  out << "  chi(O) = " << inv.chi << "\n";
  out << "  q = " << inv.q << "\n";
  return out.str();
}

json criterion_json(const Degree20Report& rep) {
  auto verdict = [](const HypothesisVerdict& v) {
    return json{{"ok", v.ok}, {"detail", v.detail}};
  };
  json j{{"h1_snc", verdict(rep.h1_snc)},
         {"h2_factorization", verdict(rep.h2_factorization)},
         {"h3_vanishing", verdict(rep.h3_vanishing)},
         {"h4_nefbig", verdict(rep.h4_nefbig)},
         {"ok", rep.all_pass()}};
  if (rep.conclusions) {
    const Degree20Conclusions& c = *rep.conclusions;
    json fixed = json::array();
    for (const FixedPartEntry& f : c.fixed_part)
      fixed.push_back(json{{"sigma", f.sigma.str()},
                           {"curve", f.curve.name()},
                           {"upstairs_components", f.upstairs_components}});
    j["conclusions"] = json{{"k2", c.k2},
                            {"pg", c.pg},
                            {"degree", c.degree},
                            {"mobile_square", c.mobile_square},
                            {"two_k_x", class_json(c.two_k_x)},
                            {"fixed_part", fixed}};
  }
  return j;
}

std::string criterion_text(const Degree20Report& rep) {
  std::ostringstream out;
  auto line = [&out](const char* name, const HypothesisVerdict& v) {
    out << "  " << name << ": " << mark(v.ok);
    if (!v.ok) out << "  (" << v.detail << ")";
    out << "\n";
  };
  out << "degree-20 criterion:\n";
  line("(1) branch locus is SNC with no triple point", rep.h1_snc);
  line("(2) the three coset sums are -K", rep.h2_factorization);
  line("(3) h0(K + L_chi) = 0 off 1000/0100/1100", rep.h3_vanishing);
  line("(4) D_0001 + D_0010 + D_0011 - K nef and big", rep.h4_nefbig);
  if (rep.conclusions) {
    const Degree20Conclusions& c = *rep.conclusions;
    out << "conclusions:\n";
    out << "  canonical map degree = " << c.degree << "\n";
    out << "  K^2 = " << c.k2 << ", p_g = " << c.pg << "\n";
    out << "  mobile part M^2 = " << c.mobile_square << "\n";
    if (c.fixed_part.empty()) {
      out << "  fixed part of |K_X|: empty\n";
    } else {
      out << "  fixed part of |K_X|:\n";
      for (const FixedPartEntry& f : c.fixed_part)
        out << "    reduced preimage of " << f.curve.name() << " (D_" << f.sigma.str()
            << ", splits into " << f.upstairs_components << " components)\n";
    }
  } else {
    out << "hypotheses not satisfied; no conclusions\n";
  }
  return out.str();
}

json bidouble_json(const BidoubleData& bid) {
  return json{{"d1", divisor_json(bid.d1)},   {"d2", divisor_json(bid.d2)},
              {"d3", divisor_json(bid.d3)},   {"l1", class_json(bid.l1)},
              {"l2", class_json(bid.l2)},     {"l3", class_json(bid.l3)},
              {"degree_phi_z", bid.degree_phi_z}};
}

std::string bidouble_text(const BidoubleData& bid) {
  std::ostringstream out;
  out << "bidouble factorization through Z:\n";
  out << "  D1 = " << divisor_names(bid.d1) << " = " << to_string(bid.d1.cls()) << "\n";
  out << "  D2 = " << divisor_names(bid.d2) << " = " << to_string(bid.d2.cls()) << "\n";
  out << "  D3 = " << divisor_names(bid.d3) << " = " << to_string(bid.d3.cls()) << "\n";
  out << "  L1 = " << to_string(bid.l1) << ", L2 = " << to_string(bid.l2)
      << ", L3 = " << to_string(bid.l3) << "\n";
  out << "  deg phi_Z = " << bid.degree_phi_z << "\n";
  return out.str();
}

json deformation_json(const DeformationReport& rep) {
  json sections = json::array();
  for (const SectionDim& s : rep.sections)
    sections.push_back(json{{"sigma", s.sigma.str()}, {"h0", s.dim}});
  json twisted = json::array();
  for (const TwistedSectionDim& t : rep.twisted)
    twisted.push_back(json{{"sigma", t.sigma.str()}, {"chi", t.chi.str()}, {"h0", t.dim}});
  return json{{"sections", sections},
              {"twisted", twisted},
              {"twisted_total", rep.twisted_total},
              {"base_space", rep.base_space},
              {"galois_only", rep.galois_only}};
}

std::string deformation_text(const DeformationReport& rep) {
  std::ostringstream out;
  out << "natural deformations:\n";
  for (const SectionDim& s : rep.sections)
    out << "  h0(D_" << s.sigma.str() << ") = " << s.dim << "\n";
  out << "  base space: " << rep.base_space << "\n";
  out << "  twisted sections h0(D_sigma - L_chi): total " << rep.twisted_total << "\n";
  out << "  all natural deformations Galois: " << (rep.galois_only ? "yes" : "no") << "\n";
  return out.str();
}

std::string explain_text(const BuildingData& bd, const PardiniReport& rep) {
  std::ostringstream out;
  for (const RelationCheck& r : rep.relations) {
    out << "2L_" << r.chi.str() << " = ";
    if (r.sigmas.empty()) {
      out << "0";
    } else {
      for (size_t i = 0; i < r.sigmas.size(); ++i)
        out << (i ? " + " : "") << "D_" << r.sigmas[i].str();
    }
    out << "\n";
    out << "  left  2*(" << to_string(bd.L(r.chi)) << ") = " << to_string(r.lhs) << "\n";
    out << "  right ";
    bool first = true;
    for (const GroupElement& s : r.sigmas) {
      out << (first ? "" : " + ") << "(" << divisor_names(bd.D(s)) << ")";
      first = false;
    }
    if (r.sigmas.empty()) out << "0";
    out << " = " << to_string(r.rhs) << "\n";
    out << "  " << (r.ok ? "holds" : "FAILS") << "\n";
  }
  return out.str();
}

}  // namespace z2cover
