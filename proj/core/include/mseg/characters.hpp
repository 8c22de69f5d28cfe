#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "mseg/core_types.hpp"
#include "mseg/errors.hpp"
#include "mseg/partitions.hpp"

namespace mseg {

/// γ_1 γ_2 ⋯ γ_n, each letter an exponent of q.
using CharWord = std::vector<Content>;

/// Formal sum of words of one common length, stored sparsely.
struct Character {
  std::map<CharWord, std::uint64_t> terms;
  int length = 0;

  /// The character with a single word of multiplicity one.
  static Character of_word(CharWord w);

  std::uint64_t total() const;

  friend bool operator==(const Character&, const Character&) = default;
};

/// Sum over all interleavings of each pair of words, counted with multiplicity.
Character shuffle(const Character& a, const Character& b);

/// Iterated shuffle of the words (i, i+1, …, j), one per segment.
/// Throws BoundExceeded when the total length is above limits.characters.
Character char_of_ind(std::span<const Segment> segments, const Limits& limits = {});

/// Throws LengthMismatch when |w| differs from c.length.
std::uint64_t multiplicity(const Character& c, const CharWord& w);

/// For a multisegment whose segments all end at the same j: the contents in
/// ascending order, with multiplicity. Throws MalformedSingleEnd otherwise.
CharWord q_word(const Multisegment& dj);

/// Conjugate of the segment lengths; same precondition as q_word.
Partition beta_of(const Multisegment& dj);

}  // namespace mseg
