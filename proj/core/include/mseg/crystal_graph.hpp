#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mseg/core_types.hpp"

namespace mseg {

struct GraphNode {
  std::string label;
  int n = 0;
  ContentMultiset weight;

  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

/// dst = E_i(src).
struct GraphEdge {
  std::size_t src;
  std::size_t dst;
  Content i;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct LabeledEdge {
  std::string src;
  std::string dst;
  Content i;
};

/// A finite crystal graph with E-direction edges. Nodes are kept sorted by
/// (n, label) and edges by (src, i), so two graphs with the same content are
/// identical objects.
class CrystalGraph {
public:
  CrystalGraph() = default;

  /// Normalizes ordering and checks the invariants: labels unique, at most
  /// one E-edge per (node, i), every edge lowers n by exactly one.
  static CrystalGraph build(std::vector<GraphNode> nodes,
                            std::vector<LabeledEdge> edges);

  const std::vector<GraphNode>& nodes() const& noexcept { return nodes_; }
  std::vector<GraphNode> nodes() && { return std::move(nodes_); }
  const std::vector<GraphEdge>& edges() const& noexcept { return edges_; }
  std::vector<GraphEdge> edges() && { return std::move(edges_); }
  std::optional<std::size_t> find(std::string_view label) const;

  /// Number of nodes per size n = 0, 1, …, max n.
  std::vector<int> size_profile() const;

  friend bool operator==(const CrystalGraph&, const CrystalGraph&) = default;

private:
  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
};

struct IsoResult {
  bool ok = true;
  /// First offending node or edge when !ok.
  std::string certificate;

  explicit operator bool() const noexcept { return ok; }
};

using NodeMap = std::function<std::string(const std::string&)>;

/// True iff `node_map` is a bijection from g1's nodes onto g2's preserving n,
/// weight, and every labeled edge in both directions.
IsoResult isomorphic(const CrystalGraph& g1, const CrystalGraph& g2,
                     const NodeMap& node_map);

std::string to_dot(const CrystalGraph& g);
std::string to_json(const CrystalGraph& g);
/// Inverse of to_json; node weights are recomputed from the labels.
CrystalGraph graph_from_json(std::string_view text);

class Multipartition;

/// Parsers for the canonical node labels. Throw InvalidInput when malformed.
Multisegment multisegment_from_label(std::string_view label);
Multipartition multipartition_from_label(std::string_view label);

/// Box/interval contents encoded by a canonical node label
/// ("∅", "[i,j]+…", or "(p,…|c)…").
ContentMultiset weight_from_label(std::string_view label);

}  // namespace mseg
