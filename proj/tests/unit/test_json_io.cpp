#include <doctest.h>

#include "mseg/errors.hpp"
#include "mseg/json_io.hpp"

using namespace mseg;

TEST_CASE("multisegment JSON") {
  const auto d = multisegment_from_json(parse_json(R"({"segments":[[0,1],[1,1],[-2,0]]})"));
  CHECK(d == Multisegment{{1, 1}, {0, 1}, {-2, 0}});
  CHECK(to_json(d).dump() == R"({"segments":[[1,1],[0,1],[-2,0]]})");
  CHECK(to_json(Multisegment{}).dump() == R"({"segments":[]})");
  const auto raw = segments_from_json(parse_json(R"({"segments":[[0,0],[2,3]]})"));
  REQUIRE(raw.size() == 2);
  CHECK(raw[1] == Segment(2, 3));
  CHECK_THROWS_AS(multisegment_from_json(parse_json(R"({"segments":[[2,1]]})")), Error);
  CHECK_THROWS_AS(multisegment_from_json(parse_json(R"({"segments":[[2]]})")), Error);
  CHECK_THROWS_AS(multisegment_from_json(parse_json(R"({"segs":[]})")), Error);
  CHECK_THROWS_AS(parse_json("{"), Error);
}

TEST_CASE("weight JSON") {
  CHECK(to_json(weight_from_json(parse_json("[0,2,0]"))).dump() == R"({"lambda":[2,0,0]})");
  CHECK(weight_from_json(parse_json(R"({"lambda":[1,0]})")) == Weight{1, 0});
  CHECK_THROWS_AS(weight_from_json(parse_json(R"(["a"])")), Error);
}

TEST_CASE("multipartition JSON") {
  const auto text = R"({"components":[{"color":0,"parts":[1]},{"color":0,"parts":[1]}]})";
  const auto x = multipartition_from_json(parse_json(text));
  CHECK(to_json(x).dump() == text);
  CHECK(multipartition_from_json(parse_json(
            R"({"components":[{"color":1,"parts":[]},{"color":0,"parts":[2]}],"lambda":[0,1]})"))
            .label() == "(|1)(2|0)");
  CHECK_THROWS_AS(multipartition_from_json(parse_json(
                      R"({"components":[{"color":1,"parts":[]}],"lambda":[0]})")),
                  Error);
  CHECK_THROWS_AS(multipartition_from_json(parse_json(
                      R"({"components":[{"color":0,"parts":[]},{"color":1,"parts":[]}]})")),
                  Error);
  CHECK(to_json(ColoredPartition{Partition{2, 1}, -1}).dump() == R"({"parts":[2,1],"color":-1})");
}

TEST_CASE("character JSON and null") {
  const auto c = shuffle(Character::of_word({1}), Character::of_word({0}));
  CHECK(to_json(c).dump() ==
        R"({"length":2,"terms":[{"word":[0,1],"mult":1},{"word":[1,0],"mult":1}]})");
  CHECK(to_json(std::optional<Multisegment>{}).dump() == R"({"null":true})");
  CHECK(is_null_json(parse_json(R"({"null":true})")));
  CHECK_FALSE(is_null_json(parse_json(R"({"segments":[]})")));
}
