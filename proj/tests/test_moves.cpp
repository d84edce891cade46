#include <doctest.h>

#include "oracles.hpp"
#include "rdg/generators.hpp"
#include "rdg/moves.hpp"

using namespace rdg;

namespace {

std::pair<int, int> delta(const RectDiagram& a, const RectDiagram& b) {
  const auto x = invariants(a), y = invariants(b);
  return {y.tb - x.tb, y.rot - x.rot};
}

}  // namespace

TEST_CASE("flip preserves tb and rot and is an involution") {
  for (const auto& d : oracle::corpus(41, 1000)) {
    const auto before = invariants(d);
    for (int z = 1; z <= d.size(); ++z) {
      const auto f = flip(d, z);
      const auto after = invariants(f);
      CHECK(after.tb == before.tb);
      CHECK(after.rot == before.rot);
      CHECK(flip(f, z) == d);
      CHECK(f.row(z).tail_col == d.row(z).tail_col);
      CHECK(f.row(z).head_col == d.row(z).head_col);
      CHECK(f.row(z).sweep == opposite(d.row(z).sweep));
    }
  }
}

TEST_CASE("commutations preserve invariants where admissible") {
  int h_applied = 0, v_applied = 0;
  for (const auto& d : oracle::corpus(42, 1000)) {
    const auto before = invariants(d);
    for (int k = 1; k <= d.size(); ++k) {
      if (auto e = try_apply(d, Move::h_commute(k))) {
        ++h_applied;
        CHECK(validate(*e).ok());
        CHECK(invariants(*e).tb == before.tb);
        CHECK(invariants(*e).rot == before.rot);
        CHECK(h_commute(*e, k) == d);
      }
      if (auto e = try_apply(d, Move::v_commute(k))) {
        ++v_applied;
        CHECK(validate(*e).ok());
        CHECK(invariants(*e).tb == before.tb);
        CHECK(invariants(*e).rot == before.rot);
        CHECK(v_commute(*e, k) == d);
      }
    }
  }
  CHECK(h_applied > 100);
  CHECK(v_applied > 100);
}

TEST_CASE("commutation preconditions") {
  CHECK_THROWS_AS(h_commute(gen_unknot_braided(), 1), MoveRejected);  // shared endpoint columns
  CHECK_THROWS_AS(v_commute(gen_unknot_braided(), 1), MoveRejected);
  CHECK_THROWS_AS(h_commute(gen_unknot_braided(), 2), MoveRejected);  // no row 3
  // interleaved supports: 1 -> 3 and 2 -> 4
  const auto d = RectDiagram::from_spec(
      {{1, 3, Sweep::Forward}, {2, 4, Sweep::Forward}, {3, 2, Sweep::Backward}, {4, 1, Sweep::Backward}});
  CHECK_THROWS_AS(h_commute(d, 1), MoveRejected);
}

TEST_CASE("stabilization types at every corner of E1 and E2") {
  for (const auto& d : {gen_unknot_rect(), gen_unknot_braided()}) {
    for (const auto& c : corners(d)) {
      int zero = 0, mm = 0, mp = 0, kinks = 0;
      for (auto q : {Quadrant::NE, Quadrant::NW, Quadrant::SE, Quadrant::SW}) {
        const auto s = stabilize(d, c.row, c.col, q);
        CHECK(s.size() == d.size() + 1);
        const auto dl = delta(d, s);
        const auto cls = classify(d, Move::stabilize(c.row, c.col, q));
        if (dl == std::pair{0, 0}) {
          ++zero;
          CHECK(cls.label == MoveLabel::Legendrian);
        } else if (dl == std::pair{-1, -1}) {
          ++mm;
          CHECK(cls.delta_sl_plus == 0);
          CHECK(cls.label == MoveLabel::TransversePlus);
        } else if (dl == std::pair{-1, 1}) {
          ++mp;
          CHECK(cls.delta_sl_plus == -2);
          CHECK(cls.label == MoveLabel::Topological);
        }
        const int dw = writhe(s) - writhe(d);
        if (dw != 0) {
          ++kinks;
          CHECK(std::abs(dw) == 1);
        }
      }
      CHECK(zero == 2);
      CHECK(mm == 1);
      CHECK(mp == 1);
      CHECK(kinks <= 1);
    }
  }
}

TEST_CASE("stabilization types on random diagrams; destabilization undoes them") {
  for (const auto& d : oracle::corpus(43, 300, 6)) {
    const auto key = canonicalize(d);
    for (const auto& c : corners(d)) {
      int zero = 0, mm = 0, mp = 0;
      for (auto q : {Quadrant::NE, Quadrant::NW, Quadrant::SE, Quadrant::SW}) {
        const auto m = Move::stabilize(c.row, c.col, q);
        const auto s = apply(d, m);
        REQUIRE(validate(s).ok());
        const auto dl = delta(d, s);
        zero += dl == std::pair{0, 0};
        mm += dl == std::pair{-1, -1};
        mp += dl == std::pair{-1, 1};
        const auto back = apply(s, inverse(d, m));
        CHECK(canonicalize(back) == key);
        const auto undo = inverse(s, inverse(d, m));
        CHECK(undo.kind == MoveKind::Stabilize);
        CHECK(canonicalize(apply(back, undo)) == canonicalize(s));
      }
      CHECK(zero == 2);
      CHECK(mm == 1);
      CHECK(mp == 1);
    }
  }
}

TEST_CASE("destabilization preconditions") {
  CHECK_THROWS_AS(destabilize(gen_unknot_rect(), 1, 1), MoveRejected);  // n = 2
  const auto s = stabilize(gen_unknot_braided(), 1, 1, Quadrant::NE);
  CHECK_THROWS_AS(destabilize(s, 1, 1), MoveRejected);
  int ok = 0;
  for (const auto& c : corners(s)) ok += try_apply(s, Move::destabilize(c.row, c.col)).has_value();
  CHECK(ok >= 1);
}

TEST_CASE("rotate_theta") {
  for (const auto& d : oracle::corpus(44, 200)) {
    const auto r = invariants(d);
    for (int k = 0; k < d.size(); ++k) {
      const auto e = rotate_theta(d, k);
      CHECK(invariants(e) == r);
      CHECK(apply(e, inverse(d, Move::rotate(k))) == d);
    }
  }
  CHECK_THROWS_AS(rotate_theta(gen_unknot_rect(), 2), MoveRejected);
}

TEST_CASE("move literals") {
  for (const auto* t : {"flip:2", "hc:1", "vc:3", "stab:1,2,NE", "stab:4,1,SW", "destab:2,3", "rot:1"}) {
    CHECK(to_string(parse_move(t)) == t);
  }
  CHECK(parse_move("stab:1,2,NW") == Move::stabilize(1, 2, Quadrant::NW));
  for (const auto* bad : {"flip", "flip:", "flip:x", "stab:1,2", "stab:1,2,XX", "spin:1", "rot:1,2", "flip:1 "}) {
    CHECK_THROWS_AS(parse_move(bad), Error);
  }
}

TEST_CASE("moves reject bad indices") {
  const auto d = gen_unknot_rect();
  CHECK_THROWS_AS(flip(d, 0), MoveRejected);
  CHECK_THROWS_AS(flip(d, 3), MoveRejected);
  CHECK_THROWS_AS(stabilize(d, 1, 3, Quadrant::NE), MoveRejected);
  CHECK_FALSE(try_apply(d, Move::flip(5)).has_value());
}

TEST_CASE("candidate moves are deterministic and cover the kinds") {
  const auto s = stabilize(gen_unknot_braided(), 1, 1, Quadrant::NE);
  const auto a = candidate_moves(s), b = candidate_moves(s);
  CHECK(a == b);
  bool kinds[6] = {};
  for (const auto& m : a) kinds[static_cast<int>(m.kind)] = true;
  for (bool k : kinds) CHECK(k);
}

TEST_CASE("classify_delta labels") {
  InvariantReport a{}, b{};
  CHECK(classify_delta(a, b).label == MoveLabel::Legendrian);
  b.tb = -1;
  b.rot = -1;
  b.sl_plus = 0;
  CHECK(classify_delta(a, b).label == MoveLabel::TransversePlus);
  b.rot = 1;
  b.sl_plus = -2;
  CHECK(classify_delta(a, b).label == MoveLabel::Topological);
}
