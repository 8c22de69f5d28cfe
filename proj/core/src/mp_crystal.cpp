#include "mseg/mp_crystal.hpp"

namespace mseg {

ReducedSignature mp_signature(const Multipartition& mp, Content j) {
  SignatureWord word;
  const auto& comps = mp.components();
  word.reserve(comps.size());
  for (std::size_t k = 0; k < comps.size(); ++k) {
    Sign s = Sign::Blank;
    if (removable_boxes(comps[k]).contains(j)) {
      s = Sign::Minus;
    } else if (addable_boxes(comps[k]).contains(j)) {
      s = Sign::Plus;
    }
    word.push_back({s, k});
  }
  return reduce(word, Cancellation::MinusPlus);
}

int eps_mp(const Multipartition& mp, Content j) {
  return mp_signature(mp, j).eps();
}

int phi_mp(const Multipartition& mp, Content j) {
  return mp_signature(mp, j).phi();
}

MpCrystalResult apply_e_mp(const Multipartition& mp, Content j) {
  const auto reduced = mp_signature(mp, j);
  if (reduced.uncanceled_minus.empty()) return std::nullopt;
  const std::size_t k = reduced.uncanceled_minus.front();
  const auto& cp = mp.components()[k];
  return mp.with_component(k, remove_box(cp, removable_boxes(cp).at(j)));
}

MpCrystalResult apply_f_mp(const Multipartition& mp, Content j) {
  const auto reduced = mp_signature(mp, j);
  if (reduced.uncanceled_plus.empty()) return std::nullopt;
  const std::size_t k = reduced.uncanceled_plus.back();
  const auto& cp = mp.components()[k];
  return mp.with_component(k, add_box(cp, addable_boxes(cp).at(j)));
}

}  // namespace mseg
