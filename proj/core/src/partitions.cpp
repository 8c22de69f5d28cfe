#include "mseg/partitions.hpp"

#include <algorithm>
#include <functional>

namespace mseg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0 || (k > 0 && parts_[k] > parts_[k - 1])) {
      throw Error(ErrorKind::InvalidInput,
                  "partition parts must be positive and weakly decreasing");
    }
  }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

int Partition::size() const noexcept {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

int Partition::part(int y) const noexcept {
  if (y < 1 || y > length()) return 0;
  return parts_[static_cast<std::size_t>(y - 1)];
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  const int width = p.part(1);
  out.reserve(static_cast<std::size_t>(width));
  for (int x = 1; x <= width; ++x) {
    int height = 0;
    while (p.part(height + 1) >= x) ++height;
    out.push_back(height);
  }
  return Partition(std::move(out));
}

std::map<Content, Box> removable_boxes(const ColoredPartition& cp) {
  std::map<Content, Box> out;
  const auto& mu = cp.shape;
  for (int y = 1; y <= mu.length(); ++y) {
    if (mu.part(y) > mu.part(y + 1)) {
      const Box b{y, mu.part(y)};
      out.emplace(cp.content_of(b), b);
    }
  }
  return out;
}

std::map<Content, Box> addable_boxes(const ColoredPartition& cp) {
  std::map<Content, Box> out;
  const auto& mu = cp.shape;
  for (int y = 1; y <= mu.length() + 1; ++y) {
    if (y == 1 || mu.part(y - 1) > mu.part(y)) {
      const Box b{y, mu.part(y) + 1};
      out.emplace(cp.content_of(b), b);
    }
  }
  return out;
}

ColoredPartition remove_box(const ColoredPartition& cp, const Box& b) {
  std::vector<int> parts = cp.shape.parts();
  const auto row = static_cast<std::size_t>(b.row - 1);
  if (b.row < 1 || b.row > cp.shape.length() || parts[row] != b.col ||
      cp.shape.part(b.row + 1) >= b.col) {
    throw Error(ErrorKind::InvalidInput, "box is not removable");
  }
  if (--parts[row] == 0) parts.pop_back();
  return {Partition(std::move(parts)), cp.color};
}

ColoredPartition add_box(const ColoredPartition& cp, const Box& b) {
  std::vector<int> parts = cp.shape.parts();
  if (b.row < 1 || b.row > cp.shape.length() + 1 ||
      cp.shape.part(b.row) + 1 != b.col ||
      (b.row > 1 && cp.shape.part(b.row - 1) < b.col)) {
    throw Error(ErrorKind::InvalidInput, "box is not addable");
  }
  if (b.row == cp.shape.length() + 1) {
    parts.push_back(1);
  } else {
    ++parts[static_cast<std::size_t>(b.row - 1)];
  }
  return {Partition(std::move(parts)), cp.color};
}

ContentMultiset box_contents(const ColoredPartition& cp) {
  ContentMultiset counts;
  for (int y = 1; y <= cp.shape.length(); ++y) {
    for (int x = 1; x <= cp.shape.part(y); ++x) counts.add(cp.content_of({y, x}));
  }
  return counts;
}

Multisegment delta_of(const ColoredPartition& cp) {
  std::vector<Segment> segments;
  const Content i = cp.color;
  for (int m = 1; m <= cp.shape.length(); ++m) {
    segments.emplace_back(i - m + 1, i - m + cp.shape.part(m));
  }
  return Multisegment(std::move(segments));
}

// Multipartition

Multipartition::Multipartition(std::vector<ColoredPartition> components)
    : components_(std::move(components)) {
  for (std::size_t k = 1; k < components_.size(); ++k) {
    if (components_[k].color > components_[k - 1].color) {
      throw Error(ErrorKind::InvalidInput,
                  "multipartition colors must be weakly decreasing");
    }
  }
}

Multipartition Multipartition::empty_for(const Weight& lambda) {
  std::vector<ColoredPartition> components;
  for (Content c : lambda.components()) components.push_back({Partition{}, c});
  return Multipartition(std::move(components));
}

Weight Multipartition::lambda() const {
  std::vector<Content> colors;
  for (const auto& cp : components_) colors.push_back(cp.color);
  return Weight(std::move(colors));
}

int Multipartition::size() const noexcept {
  int total = 0;
  for (const auto& cp : components_) total += cp.shape.size();
  return total;
}

Multipartition Multipartition::with_component(std::size_t k,
                                              ColoredPartition cp) const {
  Multipartition out = *this;
  out.components_.at(k) = std::move(cp);
  return out;
}

std::string label_of(const ColoredPartition& cp) {
  std::string out = "(";
  const auto& parts = cp.shape.parts();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts[k]);
  }
  out += '|';
  out += std::to_string(cp.color);
  out += ')';
  return out;
}

std::string Multipartition::label() const {
  std::string out;
  for (const auto& cp : components_) out += label_of(cp);
  return out;
}

Multisegment delta_of_mp(const Multipartition& mp) {
  std::vector<Segment> all;
  for (const auto& cp : mp.components()) {
    const auto part = delta_of(cp);
    all.insert(all.end(), part.segments().begin(), part.segments().end());
  }
  return Multisegment(std::move(all));
}

ColoredPartition mu_of_level1(const Multisegment& d, Content color) {
  const auto segments = d.segments();  // right order: starts descending
  std::vector<int> parts;
  parts.reserve(segments.size());
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const int m = static_cast<int>(k) + 1;
    const Segment& s = segments[k];
    if (s.start() != color - m + 1) {
      throw Error(ErrorKind::MalformedLevel1,
                  "starts must be " + std::to_string(color) +
                      ", " + std::to_string(color - 1) +
                      ", … each exactly once; got " + d.label());
    }
    if (k > 0 && s.end() >= segments[k - 1].end()) {
      throw Error(ErrorKind::MalformedLevel1,
                  "ends must be strictly decreasing; got " + d.label());
    }
    parts.push_back(s.end() - color + m);
  }
  return {Partition(std::move(parts)), color};
}

ColoredPartition mu_of_level1(const Multisegment& d) {
  if (d.empty()) {
    throw Error(ErrorKind::MalformedLevel1,
                "empty multisegment has no level-1 color");
  }
  return mu_of_level1(d, d.segments().front().start());
}

bool is_kleshchev(const Multipartition& mp) {
  const auto& comps = mp.components();
  for (std::size_t t = 0; t + 1 < comps.size(); ++t) {
    const int shift = comps[t].color - comps[t + 1].color;
    const auto& upper = comps[t].shape;
    const auto& lower = comps[t + 1].shape;
    for (int x = 1; shift + x <= upper.length(); ++x) {
      if (upper.part(shift + x) > lower.part(x)) return false;
    }
  }
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, const Limits& limits) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative partition size");
  check_bound(n, limits.partitions, "partition size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multipartition> enumerate_kleshchev(const Weight& lambda, int n,
                                                const Limits& limits) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative multipartition size");
  check_bound(n, limits.multipartitions, "multipartition size");
  const auto& colors = lambda.components();
  const std::size_t r = colors.size();
  std::vector<Multipartition> out;
  if (r == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }

  std::vector<std::vector<Partition>> by_size;
  for (int k = 0; k <= n; ++k) by_size.push_back(enumerate_partitions(k, limits));

  std::vector<ColoredPartition> current(r);
  std::function<void(std::size_t, int)> rec = [&](std::size_t t, int remaining) {
    if (t + 1 == r) {
      for (const auto& p : by_size[static_cast<std::size_t>(remaining)]) {
        current[t] = {p, colors[t]};
        Multipartition mp(current);
        if (is_kleshchev(mp)) out.push_back(std::move(mp));
      }
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
        current[t] = {p, colors[t]};
        rec(t + 1, remaining - k);
      }
    }
  };
  rec(0, n);
  return out;
}

}  // namespace mseg
