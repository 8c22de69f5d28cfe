#include "mseg/tensor.hpp"

namespace mseg {

std::optional<LevelOneElement> LevelOneElement::e(Content i) const {
  const auto boxes = removable_boxes(cp_);
  auto it = boxes.find(i);
  if (it == boxes.end()) return std::nullopt;
  return LevelOneElement(remove_box(cp_, it->second));
}

std::optional<LevelOneElement> LevelOneElement::f(Content i) const {
  const auto boxes = addable_boxes(cp_);
  auto it = boxes.find(i);
  if (it == boxes.end()) return std::nullopt;
  return LevelOneElement(add_box(cp_, it->second));
}

TensorElement<LevelOneElement> tensor_highest(const Weight& lambda) {
  return tensor_of(Multipartition::empty_for(lambda));
}

TensorElement<LevelOneElement> tensor_of(const Multipartition& mp) {
  TensorElement<LevelOneElement> t;
  for (const auto& cp : mp.components()) t.factors.emplace_back(cp);
  return t;
}

std::vector<Content> default_contents(const Weight& lambda, int max_n) {
  Content lo = 0;
  Content hi = 0;
  if (lambda.level() > 0) {
    hi = lambda.components().front();
    lo = lambda.components().back();
  }
  std::vector<Content> out;
  for (Content c = lo - max_n; c <= hi + max_n; ++c) out.push_back(c);
  return out;
}

}  // namespace mseg
