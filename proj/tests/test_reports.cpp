#include <doctest.h>

#include "fixtures.hpp"
#include "z2cover/report.hpp"

using namespace z2cover;
using nlohmann::json;
using z2cover::testing::load_construction;

// the JSON and text renderings must carry the same verdicts and numbers

TEST_CASE("criterion report renders consistently") {
  BuildingData bd = load_construction(2);
  Degree20Report rep = check_degree20(bd);
  json j = criterion_json(rep);
  std::string text = criterion_text(rep);

  CHECK(j["ok"] == rep.all_pass());
  CHECK(j["h1_snc"]["ok"] == rep.h1_snc.ok);
  CHECK(j["h4_nefbig"]["ok"] == rep.h4_nefbig.ok);
  REQUIRE(rep.conclusions);
  CHECK(j["conclusions"]["degree"] == 20);
  CHECK(j["conclusions"]["k2"] == 24);
  CHECK(j["conclusions"]["fixed_part"].size() == 1);
  CHECK(j["conclusions"]["fixed_part"][0]["curve"] == "e4");
  CHECK(j["conclusions"]["fixed_part"][0]["upstairs_components"] == 2);

  CHECK(text.find("degree = 20") != std::string::npos);
  CHECK(text.find("K^2 = 24") != std::string::npos);
  CHECK(text.find("reduced preimage of e4") != std::string::npos);
  CHECK(text.find("splits into 2 components") != std::string::npos);
}

TEST_CASE("invariants render consistently") {
  CoverInvariants inv = invariants(load_construction(1));
  json j = invariants_json(inv);
  std::string text = invariants_text(inv);
  CHECK(j["k2"] == inv.k2);
  CHECK(j["pg"] == inv.pg);
  CHECK(j["chi"] == inv.chi);
  CHECK(j["q"] == inv.q);
  CHECK(j["two_k_x"]["pretty"] == to_string(inv.two_k_x));
  CHECK(text.find("K^2 = " + std::to_string(inv.k2)) != std::string::npos);
  CHECK(text.find("p_g = " + std::to_string(inv.pg)) != std::string::npos);
}

TEST_CASE("relation report renders every character") {
  BuildingData bd = load_construction(1);
  PardiniReport rep = verify_pardini(bd);
  json j = pardini_json(rep);
  CHECK(j["relations"].size() == 15);
  CHECK(j["ok"] == rep.ok());
  for (size_t i = 0; i < rep.relations.size(); ++i) {
    CHECK(j["relations"][i]["chi"] == rep.relations[i].chi.str());
    CHECK(j["relations"][i]["ok"] == rep.relations[i].ok);
  }

  std::string explained = explain_text(bd, rep);
  for (const RelationCheck& r : rep.relations)
    CHECK(explained.find("2L_" + r.chi.str()) != std::string::npos);
  CHECK(explained.find("FAILS") == std::string::npos);
}

TEST_CASE("deformation report renders consistently") {
  DeformationReport rep = deformations(load_construction(1));
  json j = deformation_json(rep);
  CHECK(j["galois_only"] == rep.galois_only);
  CHECK(j["base_space"] == rep.base_space);
  CHECK(j["sections"].size() == rep.sections.size());
  std::string text = deformation_text(rep);
  CHECK(text.find(rep.base_space) != std::string::npos);
}

TEST_CASE("bidouble report renders consistently") {
  Subgroup gamma = Subgroup::generated_by(
      4, {GroupElement::parse("0001"), GroupElement::parse("0010")});
  BidoubleData bid = quotient_factorization(load_construction(1), gamma);
  json j = bidouble_json(bid);
  CHECK(j["degree_phi_z"] == 5);
  CHECK(j["d1"]["class"]["pretty"] == "3l - e1 - e2 - e3 - e4");
  CHECK(bidouble_text(bid).find("deg phi_Z = 5") != std::string::npos);
}
