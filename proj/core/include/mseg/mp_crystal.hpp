#pragma once

#include <optional>

#include "mseg/partitions.hpp"
#include "mseg/signature.hpp"

namespace mseg {

/// std::nullopt is the bold 0. Unlike multisegments, F can be 0 here: the
/// word has no virtual letter, so B(λ) is bounded.
using MpCrystalResult = std::optional<Multipartition>;

/// One letter per component, in stored order: − for a removable j-box, + for
/// an addable j-box, blank otherwise; "−+" cancels. Item ids are component
/// indices.
ReducedSignature mp_signature(const Multipartition& mp, Content j);

int eps_mp(const Multipartition& mp, Content j);
int phi_mp(const Multipartition& mp, Content j);

/// Removes the j-box of the component owning the leftmost uncanceled −.
MpCrystalResult apply_e_mp(const Multipartition& mp, Content j);

/// Adds the j-box to the component owning the rightmost uncanceled +.
MpCrystalResult apply_f_mp(const Multipartition& mp, Content j);

}  // namespace mseg
