#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mseg {

enum class Sign { Minus, Plus, Blank };

/// One letter of a ± word. `item` refers back to whatever contributed the
/// letter (a segment, a partition component, a tensor factor).
struct SignatureToken {
  Sign kind;
  std::size_t item;
};

using SignatureWord = std::vector<SignatureToken>;

/// MinusPlus cancels adjacent "−+" (E/F on multisegments and multipartitions);
/// PlusMinus cancels "+−" (the hatted operators).
enum class Cancellation { MinusPlus, PlusMinus };

struct ReducedSignature {
  /// Item ids of the uncanceled letters, in word order.
  std::vector<std::size_t> uncanceled_minus;
  std::vector<std::size_t> uncanceled_plus;

  int eps() const noexcept { return static_cast<int>(uncanceled_minus.size()); }
  int phi() const noexcept { return static_cast<int>(uncanceled_plus.size()); }
};

/// Single left-to-right pass with a stack of open letters. Blanks never
/// take part in cancellation.
ReducedSignature reduce(std::span<const SignatureToken> word,
                        Cancellation pattern);

}  // namespace mseg
