#include "mseg/signature.hpp"

namespace mseg {

ReducedSignature reduce(std::span<const SignatureToken> word,
                        Cancellation pattern) {
  // The "opening" letter waits on the stack for a later closing letter.
  const Sign opening =
      pattern == Cancellation::MinusPlus ? Sign::Minus : Sign::Plus;
  const Sign closing =
      pattern == Cancellation::MinusPlus ? Sign::Plus : Sign::Minus;

  std::vector<std::size_t> open;
  std::vector<std::size_t> unmatched_closing;
  for (const auto& token : word) {
    if (token.kind == opening) {
      open.push_back(token.item);
    } else if (token.kind == closing) {
      if (open.empty()) {
        unmatched_closing.push_back(token.item);
      } else {
        open.pop_back();
      }
    }
  }

  ReducedSignature out;
  if (pattern == Cancellation::MinusPlus) {
    out.uncanceled_minus = std::move(open);
    out.uncanceled_plus = std::move(unmatched_closing);
  } else {
    out.uncanceled_plus = std::move(open);
    out.uncanceled_minus = std::move(unmatched_closing);
  }
  return out;
}

}  // namespace mseg
