#include "mseg/core_types.hpp"

#include <algorithm>
#include <functional>

#include "mseg/errors.hpp"

namespace mseg {

Segment::Segment(Content start, Content end) : start_(start), end_(end) {
  if (start > end) {
    throw Error(ErrorKind::InvalidInput,
                "segment [" + std::to_string(start) + "," +
                    std::to_string(end) + "] has start > end");
  }
}

std::string Segment::to_string() const {
  return "[" + std::to_string(start_) + "," + std::to_string(end_) + "]";
}

bool right_order_before(const Segment& a, const Segment& b) noexcept {
  if (a.start() != b.start()) return a.start() > b.start();
  return a.end() < b.end();
}

bool left_order_before(const Segment& a, const Segment& b) noexcept {
  if (a.end() != b.end()) return a.end() > b.end();
  return a.start() < b.start();
}

// ContentMultiset

void ContentMultiset::add(Content c, int count) {
  if (count == 0) return;
  int& slot = counts_[c];
  slot += count;
  if (slot == 0) counts_.erase(c);
}

bool ContentMultiset::remove_one(Content c) {
  auto it = counts_.find(c);
  if (it == counts_.end()) return false;
  if (--it->second == 0) counts_.erase(it);
  return true;
}

int ContentMultiset::count(Content c) const {
  auto it = counts_.find(c);
  return it == counts_.end() ? 0 : it->second;
}

int ContentMultiset::total() const noexcept {
  int sum = 0;
  for (const auto& [c, k] : counts_) sum += k;
  return sum;
}

ContentMultiset& ContentMultiset::operator+=(const ContentMultiset& other) {
  for (const auto& [c, k] : other.counts_) add(c, k);
  return *this;
}

// Multisegment

Multisegment::Multisegment(std::vector<Segment> segments)
    : segments_(std::move(segments)) {
  std::sort(segments_.begin(), segments_.end(), right_order_before);
}

Multisegment::Multisegment(std::initializer_list<Segment> segments)
    : Multisegment(std::vector<Segment>(segments)) {}

int Multisegment::n() const noexcept {
  int total = 0;
  for (const auto& s : segments_) total += s.length();
  return total;
}

Multisegment Multisegment::with_replaced(const Segment& from, Content new_start,
                                         Content new_end) const {
  std::vector<Segment> out;
  out.reserve(segments_.size() + 1);
  bool replaced = false;
  for (const auto& s : segments_) {
    if (!replaced && s == from) {
      replaced = true;
      if (new_start <= new_end) out.emplace_back(new_start, new_end);
      continue;
    }
    out.push_back(s);
  }
  if (!replaced) {
    throw Error(ErrorKind::InvalidInput,
                "segment " + from.to_string() + " not present");
  }
  return Multisegment(std::move(out));
}

Multisegment Multisegment::with_added(const Segment& s) const {
  std::vector<Segment> out(segments_.begin(), segments_.end());
  out.insert(std::upper_bound(out.begin(), out.end(), s, right_order_before), s);
  Multisegment result;
  result.segments_ = std::move(out);
  return result;
}

std::string Multisegment::label() const {
  if (segments_.empty()) return "\xE2\x88\x85";  // ∅
  std::string out;
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    if (k) out += '+';
    out += segments_[k].to_string();
  }
  return out;
}

std::vector<Segment> right_order(const Multisegment& d) {
  return {d.segments().begin(), d.segments().end()};
}

std::vector<Segment> left_order(const Multisegment& d) {
  std::vector<Segment> out(d.segments().begin(), d.segments().end());
  std::stable_sort(out.begin(), out.end(), left_order_before);
  return out;
}

Multisegment group_by_end(const Multisegment& d, Content j) {
  std::vector<Segment> out;
  for (const auto& s : d.segments()) {
    if (s.end() == j) out.push_back(s);
  }
  return Multisegment(std::move(out));
}

ContentMultiset content_multiset(const Multisegment& d) {
  ContentMultiset counts;
  for (const auto& s : d.segments()) {
    for (Content c = s.start(); c <= s.end(); ++c) counts.add(c);
  }
  return counts;
}

// Weight

Weight::Weight(std::vector<Content> colors) : components_(std::move(colors)) {
  std::sort(components_.begin(), components_.end(), std::greater<>{});
  for (Content c : components_) ++mult_[c];
}

Weight::Weight(std::initializer_list<Content> colors)
    : Weight(std::vector<Content>(colors)) {}

Weight Weight::from_multiplicities(const std::map<Content, int>& m) {
  std::vector<Content> colors;
  for (const auto& [c, k] : m) {
    if (k < 0) {
      throw Error(ErrorKind::InvalidInput, "negative weight multiplicity");
    }
    colors.insert(colors.end(), static_cast<std::size_t>(k), c);
  }
  return Weight(std::move(colors));
}

int Weight::multiplicity(Content i) const {
  auto it = mult_.find(i);
  return it == mult_.end() ? 0 : it->second;
}

std::string Weight::to_string() const {
  if (mult_.empty()) return "0";
  std::string out;
  for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) {
    if (!out.empty()) out += '+';
    if (it->second != 1) out += std::to_string(it->second);
    out += "L_" + std::to_string(it->first);
  }
  return out;
}

}  // namespace mseg
