#pragma once

#include <span>
#include <utility>

#include "mseg/partitions.hpp"

namespace mseg {

/// Multisegment → Kleshchev multipartition by crystal-path transport: reduce
/// `d` to ∅ along hw_path, then replay the labels backwards with apply_f_mp
/// from the empty λ-colored multipartition. The result is verified to map
/// back to `d`.
///
/// Throws NotCyclotomic if `d` is not a B(λ) node, TransportFailure if an F
/// step returns 0 or the round trip disagrees.
Multipartition seg_to_mp(const Multisegment& d, const Weight& lambda);

/// Same, along a caller-supplied E-path j_1, …, j_n taking `d` to ∅.
Multipartition seg_to_mp_along(const Multisegment& d, const Weight& lambda,
                               std::span<const Content> path);

/// Direct level-2 decomposition for λ = Λ_i + Λ_h (i ≥ h). Starts in only one
/// color window go to that component; where both windows hold a segment with
/// the same start, the shorter goes to the color-i component and the longer
/// to the color-h component.
std::pair<ColoredPartition, ColoredPartition> decompose_level2(
    const Multisegment& d, Content i, Content h);

}  // namespace mseg
