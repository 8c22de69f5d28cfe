#include "mseg/crystal_graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <tuple>

#include <nlohmann/json.hpp>

#include "mseg/errors.hpp"
#include "mseg/partitions.hpp"

namespace mseg {

CrystalGraph CrystalGraph::build(std::vector<GraphNode> nodes,
                                 std::vector<LabeledEdge> edges) {
  std::sort(nodes.begin(), nodes.end(), [](const GraphNode& a, const GraphNode& b) {
    return std::tie(a.n, a.label) < std::tie(b.n, b.label);
  });
  CrystalGraph g;
  g.nodes_ = std::move(nodes);
  for (std::size_t k = 1; k < g.nodes_.size(); ++k) {
    if (g.nodes_[k].label == g.nodes_[k - 1].label) {
      throw Error(ErrorKind::InvalidInput,
                  "duplicate node label " + g.nodes_[k].label);
    }
  }

  std::map<std::string_view, std::size_t> index;
  for (std::size_t k = 0; k < g.nodes_.size(); ++k) index[g.nodes_[k].label] = k;
  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) {
      throw Error(ErrorKind::InvalidInput, "edge endpoint " + label + " is not a node");
    }
    return it->second;
  };

  g.edges_.reserve(edges.size());
  for (const auto& e : edges) {
    const std::size_t src = lookup(e.src);
    const std::size_t dst = lookup(e.dst);
    if (g.nodes_[dst].n + 1 != g.nodes_[src].n) {
      throw Error(ErrorKind::InvalidInput,
                  "edge " + e.src + " -> " + e.dst + " does not lower n by 1");
    }
    g.edges_.push_back({src, dst, e.i});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::tie(a.src, a.i) < std::tie(b.src, b.i);
  });
  for (std::size_t k = 1; k < g.edges_.size(); ++k) {
    if (g.edges_[k].src == g.edges_[k - 1].src && g.edges_[k].i == g.edges_[k - 1].i) {
      throw Error(ErrorKind::InvalidInput,
                  "two E_" + std::to_string(g.edges_[k].i) + " edges out of " +
                      g.nodes_[g.edges_[k].src].label);
    }
  }
  return g;
}

std::optional<std::size_t> CrystalGraph::find(std::string_view label) const {
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    if (nodes_[k].label == label) return k;
  }
  return std::nullopt;
}

std::vector<int> CrystalGraph::size_profile() const {
  std::vector<int> profile;
  for (const auto& node : nodes_) {
    const auto n = static_cast<std::size_t>(node.n);
    if (profile.size() <= n) profile.resize(n + 1, 0);
    ++profile[n];
  }
  return profile;
}

IsoResult isomorphic(const CrystalGraph& g1, const CrystalGraph& g2,
                     const NodeMap& node_map) {
  auto fail = [](std::string why) { return IsoResult{false, std::move(why)}; };

  std::map<std::string, std::size_t> index2;
  for (std::size_t k = 0; k < g2.nodes().size(); ++k) index2[g2.nodes()[k].label] = k;

  std::vector<std::size_t> image(g1.nodes().size());
  std::vector<bool> hit(g2.nodes().size(), false);
  for (std::size_t k = 0; k < g1.nodes().size(); ++k) {
    const auto& node = g1.nodes()[k];
    std::string mapped;
    try {
      mapped = node_map(node.label);
    } catch (const Error& e) {
      return fail("node " + node.label + ": map failed: " + e.what());
    }
    auto it = index2.find(mapped);
    if (it == index2.end()) {
      return fail("node " + node.label + " maps to " + mapped + ", not a node of the target");
    }
    const auto& target = g2.nodes()[it->second];
    if (hit[it->second]) {
      return fail("node " + node.label + " maps to " + mapped + ", already hit");
    }
    if (target.n != node.n) return fail("node " + node.label + ": size differs from " + mapped);
    if (target.weight != node.weight) {
      return fail("node " + node.label + ": weight differs from " + mapped);
    }
    hit[it->second] = true;
    image[k] = it->second;
  }
  if (g1.nodes().size() != g2.nodes().size()) {
    for (std::size_t k = 0; k < hit.size(); ++k) {
      if (!hit[k]) return fail("target node " + g2.nodes()[k].label + " not hit");
    }
  }

  std::set<std::tuple<std::size_t, std::size_t, Content>> target_edges;
  for (const auto& e : g2.edges()) target_edges.emplace(e.src, e.dst, e.i);
  for (const auto& e : g1.edges()) {
    auto key = std::make_tuple(image[e.src], image[e.dst], e.i);
    if (target_edges.erase(key) == 0) {
      return fail("edge " + g1.nodes()[e.src].label + " -" + std::to_string(e.i) +
                  "-> " + g1.nodes()[e.dst].label + " missing in target");
    }
  }
  if (!target_edges.empty()) {
    const auto& [s, d, i] = *target_edges.begin();
    return fail("target edge " + g2.nodes()[s].label + " -" + std::to_string(i) +
                "-> " + g2.nodes()[d].label + " has no preimage");
  }
  return {};
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const CrystalGraph& g) {
  std::string out = "digraph crystal {\n";
  for (const auto& node : g.nodes()) out += "  " + dot_quote(node.label) + ";\n";
  for (const auto& e : g.edges()) {
    out += "  " + dot_quote(g.nodes()[e.src].label) + " -> " +
           dot_quote(g.nodes()[e.dst].label) + " [label=" + std::to_string(e.i) + "];\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const CrystalGraph& g) {
  nlohmann::ordered_json doc;
  doc["nodes"] = nlohmann::ordered_json::array();
  for (const auto& node : g.nodes()) {
    doc["nodes"].push_back({{"label", node.label}, {"n", node.n}});
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    doc["edges"].push_back({{"src", e.src}, {"dst", e.dst}, {"i", e.i}});
  }
  return doc.dump() + "\n";
}

CrystalGraph graph_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    std::vector<GraphNode> nodes;
    std::vector<std::string> labels;
    for (const auto& item : doc.at("nodes")) {
      GraphNode node;
      node.label = item.at("label").get<std::string>();
      node.n = item.at("n").get<int>();
      node.weight = weight_from_label(node.label);
      labels.push_back(node.label);
      nodes.push_back(std::move(node));
    }
    std::vector<LabeledEdge> edges;
    for (const auto& item : doc.at("edges")) {
      const auto src = item.at("src").get<std::size_t>();
      const auto dst = item.at("dst").get<std::size_t>();
      if (src >= labels.size() || dst >= labels.size()) {
        throw Error(ErrorKind::InvalidInput, "edge index out of range");
      }
      edges.push_back({labels[src], labels[dst], item.at("i").get<Content>()});
    }
    return CrystalGraph::build(std::move(nodes), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("graph JSON: ") + e.what());
  }
}

namespace {

class LabelReader {
public:
  explicit LabelReader(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void expect(char c) {
    if (peek() != c) bad();
    ++pos_;
  }

  int integer() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{}) bad();
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  [[noreturn]] void bad() const {
    throw Error(ErrorKind::InvalidInput, "malformed node label: " + std::string(text_));
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Multisegment multisegment_from_label(std::string_view label) {
  if (label == "\xE2\x88\x85") return {};
  LabelReader in(label);
  std::vector<Segment> segments;
  while (true) {
    in.expect('[');
    const int a = in.integer();
    in.expect(',');
    const int b = in.integer();
    in.expect(']');
    if (a > b) in.bad();
    segments.emplace_back(a, b);
    if (in.done()) break;
    in.expect('+');
  }
  return Multisegment(std::move(segments));
}

Multipartition multipartition_from_label(std::string_view label) {
  LabelReader in(label);
  std::vector<ColoredPartition> components;
  while (!in.done()) {
    in.expect('(');
    std::vector<int> parts;
    while (in.peek() != '|') {
      parts.push_back(in.integer());
      if (in.peek() != '|') in.expect(',');
    }
    in.expect('|');
    const int color = in.integer();
    in.expect(')');
    components.push_back({Partition(std::move(parts)), color});
  }
  return Multipartition(std::move(components));
}

ContentMultiset weight_from_label(std::string_view label) {
  if (!label.empty() && label.front() == '(') {
    ContentMultiset weight;
    for (const auto& cp : multipartition_from_label(label).components()) {
      weight += box_contents(cp);
    }
    return weight;
  }
  return content_multiset(multisegment_from_label(label));
}

}  // namespace mseg
