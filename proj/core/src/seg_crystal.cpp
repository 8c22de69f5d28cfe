#include "mseg/seg_crystal.hpp"

#include <algorithm>
#include <set>

#include "mseg/errors.hpp"

namespace mseg {
namespace {

SignatureWord e_word(std::span<const Segment> ordered, Content j) {
  SignatureWord word;
  word.reserve(ordered.size());
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    const Content end = ordered[k].end();
    Sign s = Sign::Blank;
    if (end == j) {
      s = Sign::Minus;
    } else if (end == j - 1) {
      s = Sign::Plus;
    }
    word.push_back({s, k});
  }
  return word;
}

SignatureWord e_hat_word(std::span<const Segment> ordered, Content i) {
  SignatureWord word;
  word.reserve(ordered.size());
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    const Content start = ordered[k].start();
    Sign s = Sign::Blank;
    if (start == i) {
      s = Sign::Minus;
    } else if (start == i + 1) {
      s = Sign::Plus;
    }
    word.push_back({s, k});
  }
  return word;
}

}  // namespace

ReducedSignature e_signature(const Multisegment& d, Content j) {
  return reduce(e_word(d.segments(), j), Cancellation::MinusPlus);
}

int eps(const Multisegment& d, Content j) { return e_signature(d, j).eps(); }

int phi(const Multisegment& d, Content j) { return e_signature(d, j).phi(); }

SegCrystalResult apply_e(const Multisegment& d, Content j) {
  const auto reduced = e_signature(d, j);
  if (reduced.uncanceled_minus.empty()) return std::nullopt;
  const Segment& target = d.segments()[reduced.uncanceled_minus.front()];
  return d.with_replaced(target, target.start(), j - 1);
}

Multisegment apply_f(const Multisegment& d, Content j) {
  const auto segments = d.segments();
  const std::size_t virtual_id = segments.size();
  SignatureWord word;
  word.reserve(segments.size() + 1);
  word.push_back({Sign::Plus, virtual_id});
  auto real = e_word(segments, j);
  word.insert(word.end(), real.begin(), real.end());

  const auto reduced = reduce(word, Cancellation::MinusPlus);
  // The virtual letter is leftmost and a +, so it is never cancelled.
  const std::size_t chosen = reduced.uncanceled_plus.back();
  if (chosen == virtual_id) return d.with_added(Segment(j, j));
  const Segment& target = segments[chosen];
  return d.with_replaced(target, target.start(), j);
}

ReducedSignature e_hat_signature(const Multisegment& d, Content i) {
  const auto ordered = left_order(d);
  return reduce(e_hat_word(ordered, i), Cancellation::PlusMinus);
}

int eps_hat(const Multisegment& d, Content i) {
  return e_hat_signature(d, i).eps();
}

int phi_hat(const Multisegment& d, Content i) {
  return e_hat_signature(d, i).phi();
}

SegCrystalResult apply_e_hat(const Multisegment& d, Content i) {
  const auto ordered = left_order(d);
  const auto reduced = reduce(e_hat_word(ordered, i), Cancellation::PlusMinus);
  if (reduced.uncanceled_minus.empty()) return std::nullopt;
  const Segment& target = ordered[reduced.uncanceled_minus.back()];
  return d.with_replaced(target, i + 1, target.end());
}

Multisegment apply_f_hat(const Multisegment& d, Content i) {
  const auto ordered = left_order(d);
  const std::size_t virtual_id = ordered.size();
  auto word = e_hat_word(ordered, i);
  word.push_back({Sign::Plus, virtual_id});

  const auto reduced = reduce(word, Cancellation::PlusMinus);
  const std::size_t chosen = reduced.uncanceled_plus.front();
  if (chosen == virtual_id) return d.with_added(Segment(i, i));
  const Segment& target = ordered[chosen];
  return d.with_replaced(target, i, target.end());
}

namespace {

std::set<Content> starts_of(const Multisegment& d) {
  std::set<Content> starts;
  for (const auto& s : d.segments()) starts.insert(s.start());
  return starts;
}

}  // namespace

bool cyclotomic_check(const Multisegment& d, const Weight& lambda) {
  // eps_hat(d, i) can only be nonzero when some segment starts at i.
  for (Content i : starts_of(d)) {
    if (eps_hat(d, i) > lambda.multiplicity(i)) return false;
  }
  return true;
}

Weight minimal_weight(const Multisegment& d) {
  std::map<Content, int> m;
  for (Content i : starts_of(d)) {
    if (int e = eps_hat(d, i); e > 0) m[i] = e;
  }
  return Weight::from_multiplicities(m);
}

std::vector<Content> hw_path(const Multisegment& d) {
  std::vector<Content> path;
  path.reserve(static_cast<std::size_t>(d.n()));
  Multisegment current = d;
  while (!current.empty()) {
    std::set<Content> ends;
    for (const auto& s : current.segments()) ends.insert(s.end());
    bool moved = false;
    for (Content j : ends) {
      if (auto next = apply_e(current, j)) {
        path.push_back(j);
        current = std::move(*next);
        moved = true;
        break;
      }
    }
    if (!moved) {
      throw Error(ErrorKind::TransportFailure,
                  "no active E_j on nonempty multisegment " + current.label());
    }
  }
  return path;
}

}  // namespace mseg
