#include <doctest.h>

#include "oracles.hpp"
#include "rdg/diagram.hpp"
#include "rdg/generators.hpp"
#include "rdg/moves.hpp"

using namespace rdg;

TEST_CASE("reference unknots are valid") {
  CHECK(validate(gen_unknot_rect()).ok());
  CHECK(validate(gen_unknot_braided()).ok());
  CHECK_FALSE(is_braided(gen_unknot_rect()));
  CHECK(is_braided(gen_unknot_braided()));
}

TEST_CASE("validate names the violated axiom") {
  using S = Sweep;
  // column 2 has two tails
  auto bad_cols = RectDiagram::from_rows_unchecked(3, {{1, 2, 1, S::Forward}, {2, 2, 3, S::Forward}, {3, 3, 1, S::Forward}});
  CHECK(validate(bad_cols).violates(3));
  CHECK(validate(bad_cols).violates(5));

  auto dup_z = RectDiagram::from_rows_unchecked(2, {{1, 1, 2, S::Forward}, {1, 2, 1, S::Forward}});
  CHECK(validate(dup_z).violates(4));

  auto loop_arc = RectDiagram::from_rows_unchecked(2, {{1, 1, 1, S::Forward}, {2, 2, 2, S::Forward}});
  CHECK(validate(loop_arc).violates(1));

  auto tiny = RectDiagram::from_rows_unchecked(1, {{1, 1, 1, S::Forward}});
  CHECK(validate(tiny).violates(1));

  auto out_of_range = RectDiagram::from_rows_unchecked(2, {{1, 1, 3, S::Forward}, {2, 3, 1, S::Forward}});
  CHECK(validate(out_of_range).violates(3));

  CHECK_THROWS_AS(require_valid(dup_z), Error);
  CHECK_THROWS_AS(RectDiagram::from_rows({{1, 1, 2, S::Forward}, {1, 2, 1, S::Forward}}), Error);
}

TEST_CASE("verticals run from the head row to the tail row") {
  const auto e1 = gen_unknot_rect();
  const auto vs = derive_verticals(e1);
  REQUIRE(vs.size() == 2);
  // column 1: head of row 2, tail of row 1
  CHECK(vs[0].col == 1);
  CHECK(vs[0].from_row == 2);
  CHECK(vs[0].to_row == 1);
  CHECK(vs[0].dir == VertDir::Down);
  CHECK(vs[1].dir == VertDir::Up);
}

TEST_CASE("corners: every diagram has 2n") {
  for (const auto& d : oracle::corpus(11, 200)) CHECK(corners(d).size() == static_cast<std::size_t>(2 * d.size()));
}

TEST_CASE("components agree with union-find") {
  for (const auto& d : oracle::corpus(12, 1000)) CHECK(components(d) == oracle::union_find_components(d));
  CHECK(components(gen_braid_closure({1, 1}, 2)) == 2);
  CHECK(components(gen_braid_closure({1, 1, 1}, 2)) == 1);
}

TEST_CASE("interior columns follow the sweep") {
  auto d = RectDiagram::from_spec({{1, 3, Sweep::Forward}, {3, 2, Sweep::Backward}, {2, 1, Sweep::Forward}});
  CHECK(interior_columns(d, 1) == std::vector<int>{2});
  CHECK(interior_columns(d, 2).empty());
  CHECK(interior_columns(d, 3) == std::vector<int>{3});  // 2 -> 3 -> 1
  CHECK(column_inside(d, 3, 3));
  CHECK_FALSE(column_inside(d, 3, 1));
}

TEST_CASE("canonicalize is constant on rotation orbits") {
  for (const auto& d : oracle::corpus(13, 300)) {
    const auto key = canonicalize(d);
    for (int k = 0; k < d.size(); ++k) CHECK(canonicalize(rotate_columns(d, k)) == key);
    CHECK(canonicalize(d) == key);
  }
  CHECK(rotate_columns(gen_unknot_braided(), 0) == gen_unknot_braided());
  CHECK(next_col(3, 3) == 1);
  CHECK(prev_col(1, 3) == 3);
}
