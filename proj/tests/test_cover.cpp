#include <stdexcept>

#include <doctest.h>

#include "fixtures.hpp"
#include "z2cover/cover.hpp"
#include "z2cover/expr.hpp"

using namespace z2cover;
using z2cover::testing::load_construction;

TEST_CASE("both bundled covers satisfy all fifteen relations") {
  for (int which : {1, 2}) {
    BuildingData bd = load_construction(which);
    PardiniReport rep = verify_pardini(bd);
    CHECK(rep.ok());
    CHECK(rep.relations.size() == 15);
    for (const RelationCheck& r : rep.relations) CHECK(r.ok);
  }
}

TEST_CASE("the 0001 relation of the first cover has the expected class") {
  BuildingData bd = load_construction(1);
  PardiniReport rep = verify_pardini(bd);
  const RelationCheck& r = rep.relations.front();
  REQUIRE(r.chi.str() == "0001");
  CHECK(r.rhs == DivisorClass{6, -4, -2, 0, -2});  // 4f1 + 2f2 - 2e4
  CHECK(r.lhs == r.rhs);
}

TEST_CASE("a single perturbed L breaks exactly one relation") {
  BuildingData bd = load_construction(1);
  bd.L(Character::parse("0001")) = parse_class_expr("2*f1 + f2");
  PardiniReport rep = verify_pardini(bd);
  CHECK_FALSE(rep.ok());
  for (const RelationCheck& r : rep.relations)
    CHECK(r.ok == (r.chi.str() != "0001"));
}

TEST_CASE("repeating a curve across branch divisors is caught") {
  BuildingData bd = load_construction(2);
  bd.D(GroupElement::parse("0101")) = EffectiveDivisor::of({NamedCurve::e(4)});  // e4 already in 0011
  PardiniReport rep = verify_pardini(bd);
  CHECK_FALSE(rep.reduced);
  CHECK(rep.reduced_detail == "curve e4 appears more than once in the branch divisor");
  CHECK_FALSE(rep.ok());
}

TEST_CASE("trivial L is rejected") {
  BuildingData bd = load_construction(1);
  bd.L(Character::parse("0101")) = DivisorClass::zero();
  PardiniReport rep = verify_pardini(bd);
  CHECK_FALSE(rep.l_nonzero);
  CHECK(rep.l_detail == "L_0101 is trivial");
}

TEST_CASE("malformed tables are a structural error") {
  BuildingData bd = load_construction(1);
  bd.l.pop_back();
  CHECK_THROWS_AS(verify_pardini(bd), std::invalid_argument);
}

TEST_CASE("branch geometry certificates") {
  for (int which : {1, 2}) CHECK(verify_branch_geometry(load_construction(which)).ok());
}

TEST_CASE("meeting components inside one branch divisor violate smoothness") {
  BuildingData bd = load_construction(1);
  bd.D(GroupElement::parse("0101")) =
      EffectiveDivisor::of({NamedCurve::h(1, 2), NamedCurve::e(1)});
  // restore reducedness: h12 was at 0111
  bd.D(GroupElement::parse("0111")) = EffectiveDivisor{};
  bd.D(GroupElement::parse("0110")) = EffectiveDivisor::of({NamedCurve::f(3, 1)});
  BranchGeometryReport rep = verify_branch_geometry(bd);
  CHECK_FALSE(rep.smooth);
  CHECK(rep.smooth_detail ==
        "components e1 and h12 of D_0101 meet (intersection number 1)");
}

TEST_CASE("invariants of the bundled covers") {
  BuildingData bd1 = load_construction(1);
  CoverInvariants inv1 = invariants(bd1);
  CHECK(inv1.k2 == 20);
  CHECK(inv1.pg == 3);
  CHECK(inv1.chi == 4);
  CHECK(inv1.q == 0);
  CHECK(inv1.two_k_x == anticanonical_class());

  CoverInvariants inv2 = invariants(load_construction(2));
  CHECK(inv2.k2 == 24);
  CHECK(inv2.pg == 3);
  CHECK(inv2.chi == 4);
  CHECK(inv2.q == 0);
  CHECK(inv2.two_k_x == DivisorClass{3, -1, -1, -1, 0});
}

TEST_CASE("invariant identities") {
  for (int which : {1, 2}) {
    BuildingData bd = load_construction(which);
    CoverInvariants inv = invariants(bd);
    CHECK(inv.k2 == 4 * dot(inv.two_k_x, inv.two_k_x));
    CHECK(inv.k2 % 4 == 0);
    CHECK(inv.q == inv.pg - inv.chi + 1);
    CHECK(inv.q == 0);

    // summing the relations over all characters: 2 sum L = 8 sum D
    DivisorClass l_sum = DivisorClass::zero();
    for (unsigned c = 1; c < 16; ++c) l_sum += bd.l[c];
    CHECK(2 * l_sum == 8 * bd.branch_class());
  }
}

TEST_CASE("general rank invariants on a synthetic double-pencil cover") {
  // Z_2^2-cover branched on two members of each of the first two pencils
  BuildingData bd = BuildingData::make(2);
  bd.d[0b01] = EffectiveDivisor::of({NamedCurve::f(1, 1), NamedCurve::f(1, 2)});
  bd.d[0b10] = EffectiveDivisor::of({NamedCurve::f(2, 1), NamedCurve::f(2, 2)});
  bd.l[0b01] = pencil_class(1);
  bd.l[0b10] = pencil_class(2);
  bd.l[0b11] = pencil_class(1) + pencil_class(2);
  CHECK(verify_pardini(bd).ok());

  CoverInvariants inv = invariants(bd);
  CHECK(inv.k2 == -4);
  CHECK(inv.pg == 0);
  CHECK(inv.chi == 1);
  CHECK(inv.q == 0);
}

TEST_CASE("canonical generators of the first cover") {
  BuildingData bd = load_construction(1);
  std::vector<CanonicalGenerator> gens = canonical_generators(bd);
  REQUIRE(gens.size() == 3);
  CHECK(gens[0].chi.str() == "0100");
  CHECK(gens[1].chi.str() == "1000");
  CHECK(gens[2].chi.str() == "1100");
  for (const CanonicalGenerator& g : gens) CHECK(g.base.is_zero());

  auto sigma_names = [](const CanonicalGenerator& g) {
    std::vector<std::string> out;
    for (const GroupElement& s : g.sigmas) out.push_back(s.str());
    return out;
  };
  CHECK(sigma_names(gens[1]) == std::vector<std::string>{"0101", "0110", "0111"});
  CHECK(sigma_names(gens[0]) == std::vector<std::string>{"1001", "1010", "1011"});
  CHECK(sigma_names(gens[2]) == std::vector<std::string>{"1101", "1110", "1111"});
}

TEST_CASE("canonical generators of the second cover include sigma 0011") {
  BuildingData bd = load_construction(2);
  std::vector<CanonicalGenerator> gens = canonical_generators(bd);
  REQUIRE(gens.size() == 3);
  for (const CanonicalGenerator& g : gens) {
    bool has_0011 = false;
    for (const GroupElement& s : g.sigmas) has_0011 = has_0011 || s.str() == "0011";
    CHECK(has_0011);  // e4 sits in every generator: that is the fixed part
  }
}

TEST_CASE("no generators when no K + L is effective") {
  BuildingData bd = BuildingData::make(4);
  for (unsigned c = 1; c < 16; ++c) bd.l[c] = pencil_class(1);
  CHECK(canonical_generators(bd).empty());
}
