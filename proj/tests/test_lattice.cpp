#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "z2cover/lattice.hpp"

using namespace z2cover;

namespace {

// every class with coefficients in [-3,3]
template <typename F>
void for_each_box_class(F&& f) {
  DivisorClass d = DivisorClass::zero();
  for (int a = -3; a <= 3; ++a)
    for (int b1 = -3; b1 <= 3; ++b1)
      for (int b2 = -3; b2 <= 3; ++b2)
        for (int b3 = -3; b3 <= 3; ++b3)
          for (int b4 = -3; b4 <= 3; ++b4) {
            d.c = {a, b1, b2, b3, b4};
            f(d);
          }
}

DivisorClass random_class(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  DivisorClass d = DivisorClass::zero();
  for (int& x : d.c) x = coeff(rng);
  return d;
}

}  // namespace

TEST_CASE("intersection form on Y4") {
  CHECK(dot(pencil_class(1), pencil_class(2)) == 1);
  CHECK(dot(anticanonical_class(), anticanonical_class()) == 5);
  DivisorClass d{3, -1, -1, -1, 0};
  CHECK(dot(d, d) == 6);
  CHECK(dot(line_class(), line_class()) == 1);
  CHECK(dot(exceptional_class(1), exceptional_class(1)) == -1);
  CHECK(dot(exceptional_class(1), exceptional_class(2)) == 0);
}

TEST_CASE("dot rejects mixed ranks") {
  DivisorClass d5{1, 0, 0, 0, 0};
  DivisorClass d4{1, 0, 0, 0};
  CHECK_THROWS_AS(dot(d5, d4), std::invalid_argument);
}

TEST_CASE("dot is symmetric and bilinear") {
  std::mt19937 rng(20240511);
  std::uniform_int_distribution<int> scalar(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    DivisorClass d1 = random_class(rng), d2 = random_class(rng), d3 = random_class(rng);
    int m = scalar(rng), n = scalar(rng);
    CHECK(dot(d1, d2) == dot(d2, d1));
    CHECK(dot(m * d1 + n * d2, d3) == m * dot(d1, d3) + n * dot(d2, d3));
  }
}

TEST_CASE("negative curve list") {
  const auto& neg = negative_curve_classes();
  REQUIRE(neg.size() == 10);
  const DivisorClass k = canonical_class();
  for (const DivisorClass& c : neg) {
    CHECK(dot(c, c) == -1);
    CHECK(dot(c, k) == -1);
  }
}

TEST_CASE("nef and big tests") {
  CHECK(is_nef(anticanonical_class()));
  CHECK_FALSE(is_nef(exceptional_class(1)));
  // checked by hand against all ten products
  CHECK(is_nef(DivisorClass{3, -1, -1, -1, 0}));

  CHECK(is_nef_and_big(anticanonical_class()));
  CHECK_FALSE(is_nef_and_big(pencil_class(1)));  // nef but square zero
  CHECK(is_nef_and_big(DivisorClass{3, -1, -1, -1, 0}));

  DivisorClass rank5{1, 0, 0, 0, 0, 0};
  CHECK_THROWS_AS(is_nef(rank5), std::invalid_argument);
}

TEST_CASE("h0 on named classes") {
  CHECK(h0(anticanonical_class()) == 6);
  CHECK(h0(DivisorClass::zero()) == 1);
  CHECK(h0(canonical_class()) == 0);
  CHECK(h0(pencil_class(3) + exceptional_class(1)) == 2);
  CHECK(h0(line_through_class(1, 4)) == 1);
  // 2f1 + f2 - e4 + K strips to a negative class
  DivisorClass d = 2 * pencil_class(1) + pencil_class(2) - exceptional_class(4);
  CHECK(h0(d + canonical_class()) == 0);
}

TEST_CASE("h0 satisfies its defining recurrences on the coefficient box") {
  const auto& neg = negative_curve_classes();
  const DivisorClass anti_k = anticanonical_class();
  const DivisorClass k = canonical_class();
  for_each_box_class([&](const DivisorClass& d) {
    int value = h0(d);
    if (value > 0) CHECK(dot(d, anti_k) >= 0);
    if (is_nef(d) && !d.is_zero()) {
      CHECK(value == 1 + (dot(d, d) - dot(d, k)) / 2);
      CHECK(value >= 1);  // nef classes on Y4 are effective
    }
    for (int idx = 0; idx < 10; ++idx)
      if (dot(d, neg[idx]) < 0) {
        CHECK(value == h0(d - neg[idx]));
        break;
      }
  });
}

TEST_CASE("h0 does not depend on the stripping order") {
  std::mt19937 rng(777);
  std::vector<int> order(10);
  std::iota(order.begin(), order.end(), 0);
  for (int trial = 0; trial < 500; ++trial) {
    DivisorClass d = random_class(rng);
    int reference = h0(d);
    for (int shuffle = 0; shuffle < 4; ++shuffle) {
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(h0(d, order) == reference);
    }
  }
}

TEST_CASE("class rendering") {
  CHECK(to_string(anticanonical_class()) == "3l - e1 - e2 - e3 - e4");
  CHECK(to_string(DivisorClass::zero()) == "0");
  CHECK(to_string(DivisorClass{0, -1, 0, 1, 0}) == "-e1 + e3");
  CHECK(to_expr(DivisorClass{3, -2, -1, 0, -1}) == "3*l - 2*e1 - e2 - e4");
}
