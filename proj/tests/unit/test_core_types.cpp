#include <doctest.h>

#include "bridge.hpp"
#include "mseg/core_types.hpp"
#include "mseg/errors.hpp"

using namespace mseg;

namespace {

std::vector<std::pair<int, int>> pairs(const std::vector<Segment>& segs) {
  std::vector<std::pair<int, int>> out;
  for (const auto& s : segs) out.push_back({s.start(), s.end()});
  return out;
}

}  // namespace

TEST_CASE("segment basics") {
  CHECK(Segment(2, 5).length() == 4);
  CHECK(Segment(2, 5).contains(5));
  CHECK_FALSE(Segment(2, 5).contains(6));
  CHECK(Segment(-1, 3).to_string() == "[-1,3]");
  CHECK_THROWS_AS(Segment(3, 2), Error);
}

TEST_CASE("right order") {
  CHECK(pairs(right_order(Multisegment{{5, 7}, {5, 6}})) ==
        std::vector<std::pair<int, int>>{{5, 6}, {5, 7}});
  CHECK(right_order(Multisegment{}).empty());
  // The comparator puts [-1,1] before [-1,7] (equal starts, smaller end
  // first); the printed example in the source swaps these two.
  CHECK(pairs(right_order(bridge::golden())) ==
        std::vector<std::pair<int, int>>{{5, 6}, {5, 7}, {4, 7}, {3, 3}, {3, 6}, {3, 6}, {3, 7},
                                         {3, 7}, {2, 6}, {2, 7}, {2, 9}, {-1, 1}, {-1, 7}, {-2, 2}});
}

TEST_CASE("left order") {
  CHECK(pairs(left_order(bridge::golden())) ==
        std::vector<std::pair<int, int>>{{2, 9}, {-1, 7}, {2, 7}, {3, 7}, {3, 7}, {4, 7}, {5, 7},
                                         {2, 6}, {3, 6}, {3, 6}, {5, 6}, {3, 3}, {-2, 2}, {-1, 1}});
  CHECK(pairs(left_order(Multisegment{{0, 0}})) == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(pairs(left_order(Multisegment{{1, 2}, {0, 2}})) ==
        std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
}

TEST_CASE("sizes") {
  CHECK(n_of(Multisegment{}) == 0);
  CHECK(m_of(Multisegment{}) == 0);
  CHECK(n_of(Multisegment{{0, 2}, {-1, -1}}) == 4);
  CHECK(m_of(Multisegment{{0, 2}, {-1, -1}}) == 2);
  // Sum of the fourteen lengths: 2+3+4+1+4+4+5+5+5+6+8+9+3+5.
  CHECK(n_of(bridge::golden()) == 64);
  CHECK(m_of(bridge::golden()) == 14);
}

TEST_CASE("group by end") {
  CHECK(group_by_end(bridge::golden(), 6) == Multisegment{{5, 6}, {3, 6}, {3, 6}, {2, 6}});
  CHECK(group_by_end(bridge::golden(), 8).empty());
  CHECK(group_by_end(Multisegment{{0, 0}}, 0) == Multisegment{{0, 0}});
}

TEST_CASE("content multiset") {
  const auto c = content_multiset(Multisegment{{0, 1}, {1, 1}});
  CHECK(c.count(0) == 1);
  CHECK(c.count(1) == 2);
  CHECK(c.total() == 3);
  CHECK(content_multiset(Multisegment{}).total() == 0);
  const auto d = content_multiset(Multisegment{{0, 2}});
  CHECK((d.count(0) == 1 && d.count(1) == 1 && d.count(2) == 1 && d.total() == 3));
}

TEST_CASE("multisegment identity ignores input order") {
  CHECK(Multisegment{{0, 1}, {1, 1}} == Multisegment{{1, 1}, {0, 1}});
  CHECK(Multisegment{{0, 1}, {1, 1}}.label() == "[1,1]+[0,1]");
  CHECK(Multisegment{}.label() == "\xE2\x88\x85");
}

TEST_CASE("with_replaced drops emptied segments") {
  const Multisegment d{{5, 5}, {0, 1}};
  CHECK(d.with_replaced(Segment(5, 5), 5, 4) == Multisegment{{0, 1}});
  CHECK(d.with_replaced(Segment(0, 1), 0, 2) == Multisegment{{5, 5}, {0, 2}});
}

TEST_CASE("weight") {
  const Weight w{0, 2, 0};
  CHECK(w.components() == std::vector<Content>{2, 0, 0});
  CHECK(w.multiplicity(0) == 2);
  CHECK(w.multiplicity(1) == 0);
  CHECK(w.level() == 3);
  CHECK(w.to_string() == "L_2+2L_0");
  CHECK(Weight{}.to_string() == "0");
  CHECK(Weight::from_multiplicities({{-1, 2}, {3, 1}}) == Weight{3, -1, -1});
}

TEST_CASE("bounds from the environment only raise") {
  Limits base;
  CHECK(base.characters == 12);
  CHECK(base.graphs == 8);
  CHECK_THROWS_AS(check_bound(9, 8, "x"), Error);
  CHECK_NOTHROW(check_bound(8, 8, "x"));
  try {
    check_bound(13, 12, "x");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundExceeded);
  }
}
