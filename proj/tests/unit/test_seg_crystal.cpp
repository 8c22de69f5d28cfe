#include <doctest.h>

#include "bridge.hpp"
#include "mseg/seg_crystal.hpp"
#include "oracles.hpp"

using namespace mseg;

namespace {

const std::vector<oracle::Segs>& small_set() {
  static const auto all = oracle::all_multisegments(-2, 2, 5);
  return all;
}

SegCrystalResult e_then_e(const Multisegment& d, Content a, Content b) {
  auto x = apply_e(d, a);
  return x ? apply_e(*x, b) : x;
}

}  // namespace

TEST_CASE("E_7 on the running example") {
  auto d = bridge::golden();
  CHECK(eps(d, 7) == 3);
  const std::vector<std::pair<Segment, Segment>> steps{
      {Segment(3, 7), Segment(3, 6)}, {Segment(2, 7), Segment(2, 6)},
      {Segment(-1, 7), Segment(-1, 6)}};
  for (const auto& [from, to] : steps) {
    auto next = apply_e(d, 7);
    REQUIRE(next.has_value());
    CHECK(*next == d.with_replaced(from, to.start(), to.end()));
    d = *next;
  }
  CHECK(eps(d, 7) == 0);
  CHECK_FALSE(apply_e(d, 7).has_value());
}

TEST_CASE("eps and phi") {
  CHECK(eps(Multisegment{}, 4) == 0);
  CHECK(phi(Multisegment{}, 4) == 0);
  CHECK(eps(Multisegment{{0, 1}, {1, 1}}, 1) == 2);
  CHECK(phi(Multisegment{{0, 1}, {1, 1}}, 1) == 0);
}

TEST_CASE("apply_e and apply_f examples") {
  CHECK(apply_e(Multisegment{{5, 5}}, 5) == Multisegment{});
  CHECK(apply_f(Multisegment{}, 0) == Multisegment{{0, 0}});
  CHECK(apply_f(Multisegment{{0, 1}}, 2) == Multisegment{{0, 2}});
  CHECK(apply_f(Multisegment{{0, 1}}, 1) == Multisegment{{1, 1}, {0, 1}});
}

TEST_CASE("hatted table on the running example") {
  const auto d = bridge::golden();
  const std::map<Content, int> expected{{-2, 0}, {-1, 2}, {0, 0}, {1, 0},
                                        {2, 2},  {3, 4},  {4, 1}, {5, 2}};
  for (const auto& [i, e] : expected) CHECK_MESSAGE(eps_hat(d, i) == e, "i = " << i);
  CHECK(apply_e_hat(d, 4) == d.with_replaced(Segment(4, 7), 5, 7));
}

TEST_CASE("hatted operator examples") {
  CHECK(eps_hat(Multisegment{}, 3) == 0);
  CHECK(apply_e_hat(Multisegment{{0, 0}}, 0) == Multisegment{});
  CHECK_FALSE(apply_e_hat(Multisegment{{0, 3}, {1, 5}}, 0).has_value());
  CHECK(apply_f_hat(Multisegment{}, 0) == Multisegment{{0, 0}});
  CHECK(apply_f_hat(Multisegment{{1, 1}}, 0) == Multisegment{{0, 1}});
  CHECK(apply_f_hat(Multisegment{{0, 0}}, 0) == Multisegment{{0, 0}, {0, 0}});
}

TEST_CASE("cyclotomic check and minimal weight") {
  CHECK(cyclotomic_check(Multisegment{}, Weight{}));
  CHECK(cyclotomic_check(Multisegment{{0, 2}, {-1, 0}}, Weight{0}));
  CHECK_FALSE(cyclotomic_check(bridge::golden(), Weight{0}));
  CHECK(minimal_weight(Multisegment{}) == Weight{});
  CHECK(minimal_weight(bridge::golden()) == Weight{-1, -1, 2, 2, 3, 3, 3, 3, 4, 5, 5});
  CHECK(minimal_weight(Multisegment{{0, 0}, {0, 0}}) == Weight{0, 0});
  CHECK(cyclotomic_check(bridge::golden(), minimal_weight(bridge::golden())));
}

TEST_CASE("highest-weight path") {
  CHECK(hw_path(Multisegment{}).empty());
  CHECK(hw_path(Multisegment{{0, 1}}) == std::vector<Content>{1, 0});
  CHECK(hw_path(Multisegment{{0, 0}, {1, 1}}) == std::vector<Content>{0, 1});
  CHECK(hw_path(bridge::golden()).size() == 64);
}

TEST_CASE("operators agree with the naive rule implementation") {
  for (const auto& plain : small_set()) {
    const auto d = bridge::lib(plain);
    for (int j = -3; j <= 3; ++j) {
      REQUIRE(eps(d, j) == oracle::eps(plain, j));
      REQUIRE(eps_hat(d, j) == oracle::eps_hat(plain, j));
      const auto e = apply_e(d, j);
      const auto want_e = oracle::e(plain, j);
      REQUIRE(e.has_value() == want_e.has_value());
      if (e) REQUIRE(bridge::plain(*e) == *want_e);
      const auto eh = apply_e_hat(d, j);
      const auto want_eh = oracle::e_hat(plain, j);
      REQUIRE(eh.has_value() == want_eh.has_value());
      if (eh) REQUIRE(bridge::plain(*eh) == *want_eh);
      REQUIRE(bridge::plain(apply_f(d, j)) == oracle::f(plain, j));
      REQUIRE(bridge::plain(apply_f_hat(d, j)) == oracle::f_hat(plain, j));
    }
  }
}

TEST_CASE("eps is the number of E steps before Null") {
  for (const auto& plain : small_set()) {
    const auto d = bridge::lib(plain);
    for (int j = -3; j <= 3; ++j) {
      int reps = 0;
      for (auto x = apply_e(d, j); x; x = apply_e(*x, j)) ++reps;
      REQUIRE(reps == eps(d, j));
      REQUIRE(eps(apply_f(d, j), j) == eps(d, j) + 1);
    }
  }
}

TEST_CASE("inverse laws") {
  for (const auto& plain : small_set()) {
    const auto d = bridge::lib(plain);
    for (int j = -3; j <= 3; ++j) {
      REQUIRE(apply_e(apply_f(d, j), j) == d);
      if (auto e = apply_e(d, j)) REQUIRE(apply_f(*e, j) == d);
      REQUIRE(apply_e_hat(apply_f_hat(d, j), j) == d);
      if (auto e = apply_e_hat(d, j)) REQUIRE(apply_f_hat(*e, j) == d);
    }
  }
}

TEST_CASE("operators at distance at least two commute") {
  for (const auto& plain : oracle::all_multisegments(-2, 2, 4)) {
    const auto d = bridge::lib(plain);
    for (int i = -3; i <= 3; ++i) {
      for (int j = i + 2; j <= 3; ++j) {
        REQUIRE(apply_f(apply_f(d, i), j) == apply_f(apply_f(d, j), i));
        REQUIRE(e_then_e(d, i, j) == e_then_e(d, j, i));
      }
    }
  }
}
