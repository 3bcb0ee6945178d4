#include <map>
#include <stdexcept>

#include <doctest.h>

#include "z2cover/catalog.hpp"

using namespace z2cover;

TEST_CASE("curve names round trip") {
  for (const NamedCurve& c : full_catalog(3)) CHECK(NamedCurve::parse(c.name()) == c);
  CHECK(NamedCurve::parse("f2#12") == NamedCurve::f(2, 12));
  CHECK_THROWS_AS(NamedCurve::parse("x7"), std::invalid_argument);
  CHECK_THROWS_AS(NamedCurve::parse("h21"), std::invalid_argument);
  CHECK_THROWS_AS(NamedCurve::parse("f1#0"), std::invalid_argument);
  CHECK_THROWS_AS(NamedCurve::parse("e5"), std::invalid_argument);
}

TEST_CASE("intersection counts") {
  CHECK(intersection_count(NamedCurve::e(1), NamedCurve::h(1, 2)) == 1);
  CHECK(intersection_count(NamedCurve::f(3, 1), NamedCurve::e(1)) == 0);
  CHECK(intersection_count(NamedCurve::f(1, 1), NamedCurve::f(1, 2)) == 0);
  CHECK(intersection_count(NamedCurve::f(1, 1), NamedCurve::e(1)) == 1);
  CHECK(intersection_count(NamedCurve::h(1, 2), NamedCurve::h(3, 4)) == 1);
  CHECK(intersection_count(NamedCurve::h(1, 2), NamedCurve::h(1, 3)) == 0);
  CHECK_THROWS_AS(intersection_count(NamedCurve::e(1), NamedCurve::e(1)), std::invalid_argument);
}

TEST_CASE("generic position certificate for a full branch set") {
  // the twelve branch components of the K^2 = 20 cover
  std::vector<NamedCurve> comps = {
      NamedCurve::h(1, 4), NamedCurve::f(3, 1), NamedCurve::e(1), NamedCurve::h(1, 2),
      NamedCurve::f(1, 1), NamedCurve::e(2),    NamedCurve::h(2, 3), NamedCurve::h(2, 4),
      NamedCurve::h(1, 3), NamedCurve::h(3, 4), NamedCurve::f(2, 1), NamedCurve::e(3)};
  GenericPositionResult res = certify_generic_position(comps);
  CHECK(res.ok);
  for (const IncidencePoint& p : res.points) CHECK(p.curves.size() == 2);
}

TEST_CASE("duplicate components are rejected as non-reduced") {
  GenericPositionResult res = certify_generic_position(
      {NamedCurve::e(1), NamedCurve::h(1, 2), NamedCurve::h(1, 2)});
  CHECK_FALSE(res.ok);
  CHECK(res.violation == "branch divisor not reduced: h12");
}

TEST_CASE("the three forced points on e1 are distinct") {
  GenericPositionResult res = certify_generic_position(
      {NamedCurve::e(1), NamedCurve::h(1, 2), NamedCurve::h(1, 3), NamedCurve::h(1, 4)});
  REQUIRE(res.ok);
  // three crossings, each on e1 and one line, all separate points
  CHECK(res.points.size() == 3);
  for (const IncidencePoint& p : res.points) {
    REQUIRE(p.curves.size() == 2);
    CHECK(p.forced);
    CHECK(p.curves[0] == NamedCurve::e(1));
  }
}

TEST_CASE("model point counts match intersection numbers") {
  std::vector<NamedCurve> arrangement = full_catalog(3);
  GenericPositionResult res = certify_generic_position(arrangement);
  REQUIRE(res.ok);

  std::map<std::pair<std::string, std::string>, int> seen;
  for (const IncidencePoint& p : res.points) {
    REQUIRE(p.curves.size() == 2);
    seen[{p.curves[0].name(), p.curves[1].name()}]++;
  }
  for (size_t i = 0; i < arrangement.size(); ++i)
    for (size_t j = i + 1; j < arrangement.size(); ++j) {
      int expected = intersection_count(arrangement[i], arrangement[j]);
      auto key = std::make_pair(arrangement[i].name(), arrangement[j].name());
      auto swapped = std::make_pair(key.second, key.first);
      int got = (seen.count(key) ? seen[key] : 0) + (seen.count(swapped) ? seen[swapped] : 0);
      CHECK(got == expected);
    }
}

TEST_CASE("no point of the fixed arrangement lies on three curves") {
  std::vector<NamedCurve> fixed(negative_curves().begin(), negative_curves().end());
  GenericPositionResult res = certify_generic_position(fixed);
  REQUIRE(res.ok);
  CHECK(res.points.size() == 15);  // 12 blow-up incidences + 3 diagonal points
  for (const IncidencePoint& p : res.points) {
    CHECK(p.curves.size() == 2);
    CHECK(p.forced);
  }
}
