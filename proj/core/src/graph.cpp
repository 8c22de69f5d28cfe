#include "mseg/graph.hpp"

#include <algorithm>
#include <set>

#include "mseg/mp_crystal.hpp"
#include "mseg/seg_crystal.hpp"
#include "mseg/tensor.hpp"

namespace mseg {
namespace {

void multisegments_rec(const std::vector<Segment>& pool, std::size_t next,
                       int budget, std::vector<Segment>& chosen,
                       std::vector<Multisegment>& out) {
  out.emplace_back(chosen);
  for (std::size_t k = next; k < pool.size(); ++k) {
    const int len = pool[k].length();
    if (len > budget) continue;
    chosen.push_back(pool[k]);
    multisegments_rec(pool, k, budget - len, chosen, out);
    chosen.pop_back();
  }
}

GraphNode seg_node(const Multisegment& d) {
  return {d.label(), d.n(), content_multiset(d)};
}

CrystalGraph seg_graph(const std::vector<Multisegment>& nodes,
                       const std::vector<Content>& labels) {
  std::vector<GraphNode> graph_nodes;
  std::vector<LabeledEdge> edges;
  graph_nodes.reserve(nodes.size());
  for (const auto& d : nodes) {
    graph_nodes.push_back(seg_node(d));
    for (Content j : labels) {
      if (auto lower = apply_e(d, j)) edges.push_back({d.label(), lower->label(), j});
    }
  }
  return CrystalGraph::build(std::move(graph_nodes), std::move(edges));
}

}  // namespace

std::vector<Multisegment> enumerate_multisegments(const std::vector<Content>& contents,
                                                  int max_n) {
  const std::set<Content> allowed(contents.begin(), contents.end());
  std::vector<Segment> pool;
  for (Content a : allowed) {
    for (Content b = a; allowed.contains(b) && b - a + 1 <= max_n; ++b) {
      pool.emplace_back(a, b);
    }
  }
  std::vector<Multisegment> out;
  std::vector<Segment> chosen;
  if (max_n >= 0) multisegments_rec(pool, 0, max_n, chosen, out);
  return out;
}

CrystalGraph build_binf(const std::vector<Content>& contents, int max_n,
                        const Limits& limits) {
  check_bound(max_n, limits.graphs, "graph max_n");
  return seg_graph(enumerate_multisegments(contents, max_n), contents);
}

CrystalGraph build_blambda_seg(const Weight& lambda, int max_n,
                               const Limits& limits) {
  check_bound(max_n, limits.graphs, "graph max_n");
  const auto contents = default_contents(lambda, max_n);
  std::vector<Multisegment> nodes;
  for (auto& d : enumerate_multisegments(contents, max_n)) {
    if (cyclotomic_check(d, lambda)) nodes.push_back(std::move(d));
  }
  return seg_graph(nodes, contents);
}

CrystalGraph build_blambda_mp(const Weight& lambda, int max_n,
                              const Limits& limits) {
  check_bound(max_n, limits.graphs, "graph max_n");
  const auto contents = default_contents(lambda, max_n);
  std::vector<GraphNode> nodes;
  std::vector<LabeledEdge> edges;
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& mp : enumerate_kleshchev(lambda, n, limits)) {
      ContentMultiset weight;
      for (const auto& cp : mp.components()) weight += box_contents(cp);
      nodes.push_back({mp.label(), n, std::move(weight)});
      for (Content j : contents) {
        if (auto lower = apply_e_mp(mp, j)) edges.push_back({mp.label(), lower->label(), j});
      }
    }
  }
  return CrystalGraph::build(std::move(nodes), std::move(edges));
}

CrystalGraph build_tensor_component(const Weight& lambda, int max_n,
                                    const Limits& limits) {
  return component_of(tensor_highest(lambda), default_contents(lambda, max_n),
                      max_n, limits);
}

std::string mp_label_to_seg_label(const std::string& label) {
  return delta_of_mp(multipartition_from_label(label)).label();
}

VerifyReport verify_three_way(const Weight& lambda, int max_n,
                              const Limits& limits) {
  const auto seg = build_blambda_seg(lambda, max_n, limits);
  const auto mp = build_blambda_mp(lambda, max_n, limits);
  const auto tensor = build_tensor_component(lambda, max_n, limits);

  VerifyReport report;
  const auto a = isomorphic(mp, seg, mp_label_to_seg_label);
  report.seg_vs_mp = a.ok;
  const auto b = isomorphic(mp, tensor, [](const std::string& s) { return s; });
  report.tensor_vs_mp = b.ok;
  if (!a.ok) report.detail += "seg/mp: " + a.certificate;
  if (!b.ok) {
    if (!report.detail.empty()) report.detail += "; ";
    report.detail += "tensor/mp: " + b.certificate;
  }
  return report;
}

}  // namespace mseg
