#include <doctest.h>

#include "mseg/errors.hpp"
#include "mseg/graph.hpp"
#include "mseg/seg_crystal.hpp"
#include "mseg/tensor.hpp"
#include "oracles.hpp"

using namespace mseg;

namespace {

std::vector<std::string> labels(const CrystalGraph& g) {
  std::vector<std::string> out;
  for (const auto& n : g.nodes()) out.push_back(n.label);
  return out;
}

const std::vector<Weight>& weights() {
  static const std::vector<Weight> w{Weight{0}, Weight{0, 0}, Weight{1, 0}, Weight{2, 0},
                                     Weight{1, 0, 0}};
  return w;
}

}  // namespace

TEST_CASE("enumeration matches the layered oracle") {
  for (int max_n = 0; max_n <= 6; ++max_n) {
    const auto got = enumerate_multisegments({-2, -1, 0, 1, 2}, max_n);
    CHECK(got.size() == oracle::all_multisegments(-2, 2, max_n).size());
  }
  // Segments must lie inside the set; a gap splits them.
  for (const auto& d : enumerate_multisegments({0, 2}, 3)) {
    for (const auto& s : d.segments()) CHECK(s.length() == 1);
  }
}

TEST_CASE("truncated B(infinity)") {
  const auto one = build_binf({0}, 2);
  CHECK(labels(one) == std::vector<std::string>{"\xE2\x88\x85", "[0,0]", "[0,0]+[0,0]"});
  CHECK(one.edges().size() == 2);
  CHECK(build_binf({0, 1}, 0).nodes().size() == 1);
  const auto two = build_binf({0, 1}, 2);
  CHECK(two.nodes().size() == 7);
  CHECK(two.size_profile() == std::vector<int>{1, 2, 4});
  CHECK_THROWS_AS(build_binf({0}, 9), Error);
}

TEST_CASE("every B(infinity) node reaches the empty node") {
  const auto g = build_binf({-1, 0, 1, 2}, 5);
  std::vector<bool> down(g.nodes().size(), false);
  down[0] = true;
  // Nodes are sorted by size, so one forward pass over edges suffices.
  std::vector<std::vector<std::size_t>> out(g.nodes().size());
  for (const auto& e : g.edges()) out[e.src].push_back(e.dst);
  for (std::size_t k = 0; k < g.nodes().size(); ++k) {
    for (auto dst : out[k]) down[k] = down[k] || down[dst];
    CHECK_MESSAGE(down[k], g.nodes()[k].label);
  }
}

TEST_CASE("in-degree under i is one exactly where F_i stays in the truncation") {
  const std::vector<Content> contents{-1, 0, 1, 2};
  const int max_n = 4;
  const auto g = build_binf(contents, max_n);
  std::map<std::pair<std::size_t, Content>, int> indeg;
  for (const auto& e : g.edges()) ++indeg[{e.dst, e.i}];
  for (std::size_t k = 0; k < g.nodes().size(); ++k) {
    const auto d = multisegment_from_label(g.nodes()[k].label);
    for (Content i : contents) {
      const auto up = apply_f(d, i);
      const bool inside = g.find(up.label()).has_value();
      CHECK(indeg[{k, i}] == (inside ? 1 : 0));
    }
  }
}

TEST_CASE("B(lambda) sizes") {
  CHECK(build_blambda_mp(Weight{0}, 3).size_profile() == std::vector<int>{1, 1, 2, 3});
  CHECK(build_blambda_seg(Weight{0}, 3).size_profile() == std::vector<int>{1, 1, 2, 3});
  CHECK(build_blambda_mp(Weight{0, 0}, 1).size_profile() == std::vector<int>{1, 1});
  CHECK(build_blambda_mp(Weight{3, 1}, 0).nodes().size() == 1);
  CHECK(build_blambda_seg(Weight{3, 1}, 0).nodes().size() == 1);
}

TEST_CASE("three realizations agree") {
  for (const auto& lambda : weights()) {
    const auto r = verify_three_way(lambda, 5);
    CHECK_MESSAGE(r.ok(), lambda.to_string() << ": " << r.detail);
    const auto seg = build_blambda_seg(lambda, 5);
    std::set<std::string> image;
    for (const auto& node : build_blambda_mp(lambda, 5).nodes()) {
      image.insert(mp_label_to_seg_label(node.label));
    }
    const auto seg_labels = labels(seg);
    CHECK(image == std::set<std::string>(seg_labels.begin(), seg_labels.end()));
  }
}

TEST_CASE("isomorphism failures carry a certificate") {
  const auto g = build_blambda_mp(Weight{1, 0}, 3);
  CHECK(isomorphic(g, g, [](const std::string& s) { return s; }).ok);
  const auto top = g.nodes().front().label;
  const auto bad = isomorphic(g, g, [&](const std::string&) { return top; });
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.certificate.empty());
  const auto other = build_blambda_mp(Weight{0, 0}, 3);
  CHECK_FALSE(isomorphic(g, other, [](const std::string& s) { return s; }).ok);
}

TEST_CASE("serialization") {
  CHECK(to_dot(CrystalGraph{}) == "digraph crystal {\n}\n");
  const auto g = build_binf({0}, 1);
  const auto dot = to_dot(g);
  CHECK(dot.find("\"[0,0]\" -> \"\xE2\x88\x85\" [label=0];") != std::string::npos);
  CHECK(to_json(g) ==
        "{\"nodes\":[{\"label\":\"\xE2\x88\x85\",\"n\":0},{\"label\":\"[0,0]\",\"n\":1}],"
        "\"edges\":[{\"src\":1,\"dst\":0,\"i\":0}]}\n");
  for (const auto& lambda : weights()) {
    for (const auto& h : {build_blambda_mp(lambda, 4), build_blambda_seg(lambda, 4)}) {
      CHECK(graph_from_json(to_json(h)) == h);
    }
  }
  CHECK_THROWS_AS(graph_from_json("{\"nodes\":[]"), Error);
}

TEST_CASE("graph invariants are enforced") {
  CHECK_THROWS_AS(CrystalGraph::build({{"a", 0, {}}, {"a", 1, {}}}, {}), Error);
  CHECK_THROWS_AS(CrystalGraph::build({{"a", 0, {}}, {"b", 2, {}}}, {{"b", "a", 0}}), Error);
  CHECK_THROWS_AS(CrystalGraph::build({{"a", 0, {}}, {"b", 1, {}}, {"c", 0, {}}},
                                      {{"b", "a", 0}, {"b", "c", 0}}),
                  Error);
}

TEST_CASE("label parsers") {
  CHECK(multisegment_from_label("[1,1]+[0,1]") == Multisegment{{1, 1}, {0, 1}});
  CHECK(multisegment_from_label("\xE2\x88\x85") == Multisegment{});
  CHECK_THROWS_AS(multisegment_from_label("[1,0]"), Error);
  CHECK(multipartition_from_label("(2,1|1)(|0)").label() == "(2,1|1)(|0)");
  CHECK_THROWS_AS(multipartition_from_label("(2,1|1"), Error);
}
