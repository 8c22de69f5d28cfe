#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mseg/core_types.hpp"
#include "mseg/errors.hpp"

namespace mseg {

/// Weakly decreasing positive parts; the empty list is the empty partition.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const& noexcept { return parts_; }
  std::vector<int> parts() && { return std::move(parts_); }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  /// Row y (1-based); 0 beyond the last row.
  int part(int y) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

/// Box position, rows and columns counted from 1.
struct Box {
  int row;
  int col;
  friend bool operator==(const Box&, const Box&) = default;
};

/// A partition whose (col x, row y) box is filled with color + x − y.
struct ColoredPartition {
  Partition shape;
  Content color = 0;

  Content content_of(const Box& b) const noexcept {
    return color + b.col - b.row;
  }
  friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;
};

/// Keyed by content; a content never has more than one of each, and never
/// both a removable and an addable box.
std::map<Content, Box> removable_boxes(const ColoredPartition& cp);
std::map<Content, Box> addable_boxes(const ColoredPartition& cp);

/// Removes/adds the box at `b` (which must be removable/addable).
ColoredPartition remove_box(const ColoredPartition& cp, const Box& b);
ColoredPartition add_box(const ColoredPartition& cp, const Box& b);

/// Content multiset of the boxes.
ContentMultiset box_contents(const ColoredPartition& cp);

/// Δ(μ, i): row m gives Δ[i−m+1, i−m+μ_m].
Multisegment delta_of(const ColoredPartition& cp);

/// A tuple of colored partitions whose colors are weakly decreasing.
class Multipartition {
public:
  Multipartition() = default;
  explicit Multipartition(std::vector<ColoredPartition> components);

  /// All-empty multipartition colored by `lambda`.
  static Multipartition empty_for(const Weight& lambda);

  const std::vector<ColoredPartition>& components() const& noexcept {
    return components_;
  }
  std::vector<ColoredPartition> components() && { return std::move(components_); }
  Weight lambda() const;
  int size() const noexcept;
  int level() const noexcept { return static_cast<int>(components_.size()); }

  Multipartition with_component(std::size_t k, ColoredPartition cp) const;

  /// "(p1,p2|color)(…|color)…" in component order.
  std::string label() const;

  friend bool operator==(const Multipartition&, const Multipartition&) = default;

private:
  std::vector<ColoredPartition> components_;
};

std::string label_of(const ColoredPartition& cp);

/// Δ(μ̄, λ): union of the component conversions.
Multisegment delta_of_mp(const Multipartition& mp);

/// Inverse of delta_of on level-1 multisegments
/// {Δ[i, b_1], Δ[i−1, b_2], …} with b_1 > b_2 > …. The color is the largest
/// start. Throws MalformedLevel1 (also for ∅, whose color is unknown).
ColoredPartition mu_of_level1(const Multisegment& d);
/// Same with the color fixed; ∅ maps to the empty partition.
ColoredPartition mu_of_level1(const Multisegment& d, Content color);

/// μ^{(t)}_{i_t − i_{t+1} + x} ≤ μ^{(t+1)}_x for all t and x ≥ 1.
bool is_kleshchev(const Multipartition& mp);

/// All partitions of n, in lexicographic order of their parts.
std::vector<Partition> enumerate_partitions(int n, const Limits& limits = {});

/// All λ-colored Kleshchev multipartitions of total size n.
std::vector<Multipartition> enumerate_kleshchev(const Weight& lambda, int n,
                                                const Limits& limits = {});

}  // namespace mseg
