#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rdg/generators.hpp"
#include "rdg/invariants.hpp"

using namespace rdg;

TEST_CASE("unknots") {
  CHECK(invariants(gen_unknot_rect()).tb == -1);
  CHECK(invariants(gen_unknot_braided()).sl_plus == -1);
}

TEST_CASE("sigma_1 cubed") {
  const auto d = gen_braid_closure({1, 1, 1}, 2);
  CHECK(d.size() == 8);
  CHECK(is_braided(d));
  CHECK(components(d) == 1);
  CHECK(writhe(d) == 3);
  CHECK(winding(d) == 2);
  CHECK(self_linking_plus(d) == 1);
  CHECK(gen_torus_knot(2, 3) == d);
}

TEST_CASE("each letter is one crossing of its sign") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = std::uniform_int_distribution<int>(2, 4)(rng);
    const int len = std::uniform_int_distribution<int>(1, 4)(rng);
    BraidWord w;
    int alg = 0;
    for (int i = 0; i < len; ++i) {
      int g = std::uniform_int_distribution<int>(1, k - 1)(rng);
      if (std::bernoulli_distribution(0.5)(rng)) g = -g;
      w.push_back(g);
      alg += g > 0 ? 1 : -1;
    }
    const auto d = gen_braid_closure(w, k);
    CHECK(is_braided(d));
    CHECK(crossings(d).size() == w.size());
    CHECK(writhe(d) == alg);
    CHECK(winding(d) == k);
    CHECK(self_linking_plus(d) == alg - k);
    if (d.size() <= 10) {
      std::vector<oracle::RasterCrossing> got;
      for (const auto& c : crossings(d)) got.push_back({c.row, c.col, c.sign});
      std::sort(got.begin(), got.end());
      CHECK(got == oracle::raster_crossings(d));
    }
  }
}

TEST_CASE("component count follows the braid permutation") {
  CHECK(components(gen_braid_closure({1}, 2)) == 1);
  CHECK(components(gen_braid_closure({1, -1}, 2)) == 2);
  CHECK(components(gen_braid_closure({1}, 3)) == 2);
  CHECK(components(gen_torus_knot(3, 3)) == 3);
  CHECK(components(gen_torus_knot(3, 2)) == 1);
}

TEST_CASE("generator errors") {
  CHECK_THROWS_AS(gen_braid_closure({}, 2), Error);
  CHECK_THROWS_AS(gen_braid_closure({2}, 2), Error);
  CHECK_THROWS_AS(gen_braid_closure({1}, 1), Error);
  CHECK_THROWS_AS(gen_torus_knot(1, 3), Error);
}

TEST_CASE("braid words") {
  CHECK(parse_braid_word("1 1 -2") == BraidWord{1, 1, -2});
  CHECK(parse_braid_word("1,2, 3") == BraidWord{1, 2, 3});
  CHECK_THROWS_AS(parse_braid_word("1 0"), Error);
  CHECK_THROWS_AS(parse_braid_word("a"), Error);
}

TEST_CASE("cable slopes") {
  CHECK(cable_slope({1, 0}) == Rational{-2, 11});
  CHECK(to_string(cable_slope({1, 0})) == "-2/11");
  CHECK(cable_slope({1, 1}) == Rational{-3, 16});
  CHECK(cable_type({1, 1}) == std::pair{3, 2});
  CHECK(cable_slope({0, 1}) == Rational{-1, 5});
  CHECK(cable_slope({2, 0}) == Rational{-2, 11});
  CHECK_THROWS_AS(cable_slope({0, 0}), Error);
  CHECK_THROWS_AS(cable_slope({-1, 2}), Error);
}
