#pragma once

#include <algorithm>
#include <concepts>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mseg/crystal_graph.hpp"
#include "mseg/errors.hpp"
#include "mseg/partitions.hpp"
#include "mseg/signature.hpp"

namespace mseg {

template <class T>
concept CrystalElement = std::equality_comparable<T> &&
    requires(const T& x, Content i) {
      { x.eps(i) } -> std::convertible_to<int>;
      { x.phi(i) } -> std::convertible_to<int>;
      { x.e(i) } -> std::same_as<std::optional<T>>;
      { x.f(i) } -> std::same_as<std::optional<T>>;
      { x.label() } -> std::convertible_to<std::string>;
      { x.weight() } -> std::same_as<ContentMultiset>;
      { x.size() } -> std::convertible_to<int>;
    };

/// A node of the level-1 crystal B(Λ_color): Young's lattice with edge labels
/// shifted by the color. eps/phi are 0 or 1.
class LevelOneElement {
public:
  LevelOneElement() = default;
  explicit LevelOneElement(ColoredPartition cp) : cp_(std::move(cp)) {}

  const ColoredPartition& partition() const noexcept { return cp_; }

  int eps(Content i) const { return removable_boxes(cp_).contains(i) ? 1 : 0; }
  int phi(Content i) const { return addable_boxes(cp_).contains(i) ? 1 : 0; }
  std::optional<LevelOneElement> e(Content i) const;
  std::optional<LevelOneElement> f(Content i) const;
  std::string label() const { return label_of(cp_); }
  ContentMultiset weight() const { return box_contents(cp_); }
  int size() const noexcept { return cp_.shape.size(); }

  friend bool operator==(const LevelOneElement&, const LevelOneElement&) = default;

private:
  ColoredPartition cp_;
};

static_assert(CrystalElement<LevelOneElement>);

/// b_1 ⊗* b_2 ⊗* … ⊗* b_r, where B_1 ⊗* B_2 = B_2 ⊗ B_1.
template <CrystalElement T>
struct TensorElement {
  std::vector<T> factors;

  std::string label() const {
    std::string out;
    for (const auto& b : factors) out += b.label();
    return out;
  }
  ContentMultiset weight() const {
    ContentMultiset w;
    for (const auto& b : factors) w += b.weight();
    return w;
  }
  int size() const {
    int n = 0;
    for (const auto& b : factors) n += b.size();
    return n;
  }

  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

namespace detail {

/// Factor k contributes +^{phi} then −^{eps}, its own reduced shape.
template <CrystalElement T>
ReducedSignature tensor_signature(const TensorElement<T>& t, Content i,
                                  bool standard) {
  SignatureWord word;
  for (std::size_t k = 0; k < t.factors.size(); ++k) {
    const int e = t.factors[k].eps(i);
    const int p = t.factors[k].phi(i);
    if (standard) {
      // Standard convention reads −^{eps} +^{phi} and cancels "+−".
      word.insert(word.end(), static_cast<std::size_t>(e), {Sign::Minus, k});
      word.insert(word.end(), static_cast<std::size_t>(p), {Sign::Plus, k});
    } else {
      word.insert(word.end(), static_cast<std::size_t>(p), {Sign::Plus, k});
      word.insert(word.end(), static_cast<std::size_t>(e), {Sign::Minus, k});
    }
  }
  return reduce(word, standard ? Cancellation::PlusMinus : Cancellation::MinusPlus);
}

template <CrystalElement T, class Op>
std::optional<TensorElement<T>> act_on(const TensorElement<T>& t, std::size_t k,
                                       Op op) {
  auto moved = op(t.factors[k]);
  if (!moved) return std::nullopt;
  TensorElement<T> out = t;
  out.factors[k] = std::move(*moved);
  return out;
}

}  // namespace detail

template <CrystalElement T>
int tensor_eps(const TensorElement<T>& t, Content i) {
  return detail::tensor_signature(t, i, false).eps();
}

template <CrystalElement T>
int tensor_phi(const TensorElement<T>& t, Content i) {
  return detail::tensor_signature(t, i, false).phi();
}

/// ⊗* convention: E acts on the factor owning the leftmost uncanceled −.
/// For two factors this is "E b_1 ⊗* b_2 iff eps(b_1) > phi(b_2)".
template <CrystalElement T>
std::optional<TensorElement<T>> tensor_e(const TensorElement<T>& t, Content i) {
  const auto r = detail::tensor_signature(t, i, false);
  if (r.uncanceled_minus.empty()) return std::nullopt;
  return detail::act_on(t, r.uncanceled_minus.front(),
                        [i](const T& b) { return b.e(i); });
}

/// ⊗* convention: F acts on the factor owning the rightmost uncanceled +.
/// For two factors this is "F b_1 ⊗* b_2 iff eps(b_1) ≥ phi(b_2)".
template <CrystalElement T>
std::optional<TensorElement<T>> tensor_f(const TensorElement<T>& t, Content i) {
  const auto r = detail::tensor_signature(t, i, false);
  if (r.uncanceled_plus.empty()) return std::nullopt;
  return detail::act_on(t, r.uncanceled_plus.back(),
                        [i](const T& b) { return b.f(i); });
}

/// Standard (unreversed) tensor convention: E on b_1 ⊗ b_2 acts on b_1 iff
/// phi(b_1) ≥ eps(b_2), i.e. on the rightmost uncanceled − after "+−"
/// cancellation.
template <CrystalElement T>
std::optional<TensorElement<T>> tensor_e_std(const TensorElement<T>& t,
                                             Content i) {
  const auto r = detail::tensor_signature(t, i, true);
  if (r.uncanceled_minus.empty()) return std::nullopt;
  return detail::act_on(t, r.uncanceled_minus.back(),
                        [i](const T& b) { return b.e(i); });
}

template <CrystalElement T>
std::optional<TensorElement<T>> tensor_f_std(const TensorElement<T>& t,
                                             Content i) {
  const auto r = detail::tensor_signature(t, i, true);
  if (r.uncanceled_plus.empty()) return std::nullopt;
  return detail::act_on(t, r.uncanceled_plus.front(),
                        [i](const T& b) { return b.f(i); });
}

template <CrystalElement T>
TensorElement<T> reversed(TensorElement<T> t) {
  std::reverse(t.factors.begin(), t.factors.end());
  return t;
}

/// ∅ ⊗* … ⊗* ∅ in B(Λ_{i_1}) ⊗* … ⊗* B(Λ_{i_r}), colors from λ in stored
/// (descending) order.
TensorElement<LevelOneElement> tensor_highest(const Weight& lambda);

/// Tensor element μ^{(1)} ⊗* … ⊗* μ^{(r)} for a multipartition.
TensorElement<LevelOneElement> tensor_of(const Multipartition& mp);

/// [min color − max_n, max color + max_n]; [−max_n, max_n] for λ = 0.
std::vector<Content> default_contents(const Weight& lambda, int max_n);

/// BFS closure of `start` under tensor_f with labels in `contents`, truncated
/// at size max_n; edges are the tensor_e moves that stay inside the node set.
template <CrystalElement T>
CrystalGraph component_of(const TensorElement<T>& start,
                          const std::vector<Content>& contents, int max_n,
                          const Limits& limits = {}) {
  check_bound(max_n, limits.graphs, "graph max_n");
  std::map<std::string, TensorElement<T>> seen;
  std::deque<TensorElement<T>> queue;
  if (start.size() <= max_n) {
    seen.emplace(start.label(), start);
    queue.push_back(start);
  }
  while (!queue.empty()) {
    TensorElement<T> current = std::move(queue.front());
    queue.pop_front();
    if (current.size() >= max_n) continue;
    for (Content i : contents) {
      auto next = tensor_f(current, i);
      if (!next) continue;
      auto label = next->label();
      if (seen.contains(label)) continue;
      queue.push_back(*next);
      seen.emplace(std::move(label), std::move(*next));
    }
  }

  std::vector<GraphNode> nodes;
  std::vector<LabeledEdge> edges;
  for (const auto& [label, elem] : seen) {
    nodes.push_back({label, elem.size(), elem.weight()});
    for (Content i : contents) {
      auto lower = tensor_e(elem, i);
      if (!lower) continue;
      auto target = lower->label();
      if (seen.contains(target)) edges.push_back({label, std::move(target), i});
    }
  }
  return CrystalGraph::build(std::move(nodes), std::move(edges));
}

}  // namespace mseg
