#include "mseg/characters.hpp"

#include <algorithm>

namespace mseg {
namespace {

// Adds every interleaving of a and b, weighted by `mult`, to `out`.
void shuffle_words(const CharWord& a, const CharWord& b, std::uint64_t mult,
                   std::map<CharWord, std::uint64_t>& out) {
  const std::size_t n = a.size() + b.size();
  // take[k] == true means position k reads the next letter of a.
  std::vector<bool> take(n, false);
  std::fill(take.begin() + static_cast<std::ptrdiff_t>(b.size()), take.end(), true);
  CharWord w(n);
  do {
    std::size_t ia = 0;
    std::size_t ib = 0;
    for (std::size_t k = 0; k < n; ++k) w[k] = take[k] ? a[ia++] : b[ib++];
    out[w] += mult;
  } while (std::next_permutation(take.begin(), take.end()));
}

void require_single_end(const Multisegment& dj) {
  const auto segs = dj.segments();
  if (segs.empty()) throw Error(ErrorKind::MalformedSingleEnd, "empty multisegment");
  for (const auto& s : segs) {
    if (s.end() != segs.front().end()) {
      throw Error(ErrorKind::MalformedSingleEnd,
                  "segments of " + dj.label() + " do not share an end");
    }
  }
}

}  // namespace

Character Character::of_word(CharWord w) {
  Character c;
  c.length = static_cast<int>(w.size());
  c.terms.emplace(std::move(w), 1);
  return c;
}

std::uint64_t Character::total() const {
  std::uint64_t sum = 0;
  for (const auto& [w, m] : terms) sum += m;
  return sum;
}

Character shuffle(const Character& a, const Character& b) {
  Character out;
  out.length = a.length + b.length;
  for (const auto& [wa, ma] : a.terms) {
    for (const auto& [wb, mb] : b.terms) shuffle_words(wa, wb, ma * mb, out.terms);
  }
  return out;
}

Character char_of_ind(std::span<const Segment> segments, const Limits& limits) {
  int n = 0;
  for (const auto& s : segments) n += s.length();
  check_bound(n, limits.characters, "character length");

  Character acc = Character::of_word({});
  for (const auto& s : segments) {
    CharWord w;
    for (Content c = s.start(); c <= s.end(); ++c) w.push_back(c);
    acc = shuffle(acc, Character::of_word(std::move(w)));
  }
  return acc;
}

std::uint64_t multiplicity(const Character& c, const CharWord& w) {
  if (static_cast<int>(w.size()) != c.length) {
    throw Error(ErrorKind::LengthMismatch, "word length " + std::to_string(w.size()) +
                                               " vs character length " +
                                               std::to_string(c.length));
  }
  auto it = c.terms.find(w);
  return it == c.terms.end() ? 0 : it->second;
}

CharWord q_word(const Multisegment& dj) {
  require_single_end(dj);
  CharWord w;
  for (const auto& s : dj.segments()) {
    for (Content c = s.start(); c <= s.end(); ++c) w.push_back(c);
  }
  std::sort(w.begin(), w.end());
  return w;
}

Partition beta_of(const Multisegment& dj) {
  require_single_end(dj);
  std::vector<int> lengths;
  for (const auto& s : dj.segments()) lengths.push_back(s.length());
  std::sort(lengths.rbegin(), lengths.rend());
  return conjugate(Partition(std::move(lengths)));
}

}  // namespace mseg
