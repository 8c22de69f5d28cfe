#include "mseg/transport.hpp"

#include <map>
#include <optional>

#include "mseg/mp_crystal.hpp"
#include "mseg/seg_crystal.hpp"

namespace mseg {

Multipartition seg_to_mp(const Multisegment& d, const Weight& lambda) {
  if (!cyclotomic_check(d, lambda)) {
    throw Error(ErrorKind::NotCyclotomic,
                d.label() + " is not a node of B(" + lambda.to_string() + ")");
  }
  const auto path = hw_path(d);
  return seg_to_mp_along(d, lambda, path);
}

Multipartition seg_to_mp_along(const Multisegment& d, const Weight& lambda,
                               std::span<const Content> path) {
  Multipartition mp = Multipartition::empty_for(lambda);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto next = apply_f_mp(mp, *it);
    if (!next) {
      throw Error(ErrorKind::TransportFailure,
                  "F_" + std::to_string(*it) + " vanished on " + mp.label());
    }
    mp = std::move(*next);
  }
  if (delta_of_mp(mp) != d) {
    throw Error(ErrorKind::TransportFailure,
                "transport of " + d.label() + " produced " + mp.label() +
                    " which maps back to " + delta_of_mp(mp).label());
  }
  return mp;
}

namespace {

// Segments with start a, in right order (shorter first).
using StartBuckets = std::map<Content, std::vector<Segment>>;

std::optional<std::pair<ColoredPartition, ColoredPartition>> try_split(
    const StartBuckets& buckets, Content i, Content h, int s, int u) {
  auto in_window = [](Content a, Content top, int len) {
    return a <= top && a > top - len;
  };
  std::vector<Segment> first;
  std::vector<Segment> second;
  for (const auto& [a, segs] : buckets) {
    const bool in_i = in_window(a, i, s);
    const bool in_h = in_window(a, h, u);
    const std::size_t expected = (in_i ? 1u : 0u) + (in_h ? 1u : 0u);
    if (segs.size() != expected) return std::nullopt;
    if (in_i && in_h) {
      first.push_back(segs[0]);
      second.push_back(segs[1]);
    } else if (in_i) {
      first.push_back(segs[0]);
    } else {
      second.push_back(segs[0]);
    }
  }
  try {
    auto mu = mu_of_level1(Multisegment(std::move(first)), i);
    auto nu = mu_of_level1(Multisegment(std::move(second)), h);
    for (int x = 1; i - h + x <= mu.shape.length(); ++x) {
      if (mu.shape.part(i - h + x) > nu.shape.part(x)) return std::nullopt;
    }
    return std::make_pair(std::move(mu), std::move(nu));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedLevel1) return std::nullopt;
    throw;
  }
}

}  // namespace

std::pair<ColoredPartition, ColoredPartition> decompose_level2(
    const Multisegment& d, Content i, Content h) {
  if (i < h) {
    throw Error(ErrorKind::InvalidInput, "decompose_level2 needs i >= h");
  }
  if (!cyclotomic_check(d, Weight{i, h})) {
    throw Error(ErrorKind::NotCyclotomic,
                d.label() + " is not a node of B(L_" + std::to_string(i) +
                    "+L_" + std::to_string(h) + ")");
  }
  StartBuckets buckets;
  for (const auto& seg : d.segments()) buckets[seg.start()].push_back(seg);

  // The starts form two windows {i, i−1, …} and {h, h−1, …}; their lengths
  // are not determined by the start profile alone when the windows touch,
  // so every consistent split is tried and the Kleshchev one kept.
  const int m = d.m();
  for (int s = 0; s <= m; ++s) {
    if (auto split = try_split(buckets, i, h, s, m - s)) return *split;
  }
  throw Error(ErrorKind::MalformedLevel1,
              "no level-2 split of " + d.label());
}

}  // namespace mseg
