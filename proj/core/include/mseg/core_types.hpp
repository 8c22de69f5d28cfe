#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mseg {

/// Exponent i of q^i. q is generic, so contents are plain integers and no
/// modular reduction ever happens.
using Content = int;

/// The segment Δ[start, end]. The empty segment Δ[j, j-1] is never stored.
class Segment {
public:
  Segment(Content start, Content end);

  Content start() const noexcept { return start_; }
  Content end() const noexcept { return end_; }
  int length() const noexcept { return end_ - start_ + 1; }
  bool contains(Content c) const noexcept { return start_ <= c && c <= end_; }

  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment&, const Segment&) = default;

  std::string to_string() const;

private:
  Content start_;
  Content end_;
};

/// Right order: start descending, ties by end ascending. True when `a` comes
/// strictly before `b` in the weakly decreasing listing.
bool right_order_before(const Segment& a, const Segment& b) noexcept;

/// Left order: end descending, ties by start ascending.
bool left_order_before(const Segment& a, const Segment& b) noexcept;

/// Counts of contents, e.g. the boxes of a diagram or the intervals of a
/// multisegment. Zero counts are never stored.
class ContentMultiset {
public:
  ContentMultiset() = default;

  void add(Content c, int count = 1);
  /// Removes one occurrence; returns false if `c` was absent.
  bool remove_one(Content c);

  int count(Content c) const;
  int total() const noexcept;
  bool empty() const noexcept { return counts_.empty(); }
  const std::map<Content, int>& counts() const noexcept { return counts_; }

  ContentMultiset& operator+=(const ContentMultiset& other);
  friend ContentMultiset operator+(ContentMultiset a, const ContentMultiset& b) {
    return a += b;
  }
  friend bool operator==(const ContentMultiset&, const ContentMultiset&) = default;

private:
  std::map<Content, int> counts_;
};

/// A finite multiset of segments, stored in canonical right order. Equality of
/// multisegments is equality of the canonical lists.
class Multisegment {
public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segments);
  Multisegment(std::initializer_list<Segment> segments);

  /// Segments in right order.
  std::span<const Segment> segments() const& noexcept { return segments_; }
  /// By value on temporaries, so range-for over f().segments() is safe.
  std::vector<Segment> segments() && { return std::move(segments_); }
  bool empty() const noexcept { return segments_.empty(); }
  std::size_t size() const noexcept { return segments_.size(); }

  /// n(Δ): total length.
  int n() const noexcept;
  /// m(Δ): number of segments.
  int m() const noexcept { return static_cast<int>(segments_.size()); }

  /// Replaces one occurrence of `from` with Δ[new_start, new_end], dropping
  /// it when the result would be empty.
  Multisegment with_replaced(const Segment& from, Content new_start,
                             Content new_end) const;
  Multisegment with_added(const Segment& s) const;

  /// Canonical label: "[i,j]+[i,j]+…" in right order, "∅" when empty.
  std::string label() const;

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  friend auto operator<=>(const Multisegment& a, const Multisegment& b) {
    return a.segments_ <=> b.segments_;
  }

private:
  std::vector<Segment> segments_;
};

std::vector<Segment> right_order(const Multisegment& d);
std::vector<Segment> left_order(const Multisegment& d);
inline int n_of(const Multisegment& d) { return d.n(); }
inline int m_of(const Multisegment& d) { return d.m(); }

/// Δ^{(j)}: the segments of `d` ending at `j`.
Multisegment group_by_end(const Multisegment& d, Content j);

/// counts[c] = number of segments whose interval contains c.
ContentMultiset content_multiset(const Multisegment& d);

/// λ = Σ m_i Λ_i. Components list each color with multiplicity, sorted
/// descending (i_1 ≥ i_2 ≥ … ≥ i_r).
class Weight {
public:
  Weight() = default;
  /// Colors in any order, repeated by multiplicity.
  explicit Weight(std::vector<Content> colors);
  Weight(std::initializer_list<Content> colors);

  static Weight from_multiplicities(const std::map<Content, int>& m);

  int multiplicity(Content i) const;
  int level() const noexcept { return static_cast<int>(components_.size()); }
  const std::vector<Content>& components() const& noexcept { return components_; }
  std::vector<Content> components() && { return std::move(components_); }
  const std::map<Content, int>& multiplicities() const noexcept { return mult_; }

  /// "L_3+2L_-1" style, descending colors; "0" for the zero weight.
  std::string to_string() const;

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.components_ == b.components_;
  }

private:
  std::map<Content, int> mult_;
  std::vector<Content> components_;
};

}  // namespace mseg
