#pragma once

#include <vector>

#include "mseg/crystal_graph.hpp"
#include "mseg/partitions.hpp"

namespace mseg {

/// Every multisegment whose segments lie inside `contents` (each segment's
/// whole interval must be in the set), up to size max_n.
std::vector<Multisegment> enumerate_multisegments(const std::vector<Content>& contents,
                                                  int max_n);

/// Truncated B(∞): all multisegments over `contents` with n ≤ max_n, edges
/// by apply_e for labels in `contents`.
CrystalGraph build_binf(const std::vector<Content>& contents, int max_n,
                        const Limits& limits = {});

/// B(λ) inside B(∞): the cyclotomic multisegments with n ≤ max_n over
/// default_contents(λ, max_n), edges by apply_e.
CrystalGraph build_blambda_seg(const Weight& lambda, int max_n,
                               const Limits& limits = {});

/// B(λ) on Kleshchev multipartitions, edges by apply_e_mp.
CrystalGraph build_blambda_mp(const Weight& lambda, int max_n,
                              const Limits& limits = {});

/// Connected component of ∅ ⊗* … ⊗* ∅ in the tensor of level-1 crystals.
CrystalGraph build_tensor_component(const Weight& lambda, int max_n,
                                    const Limits& limits = {});

/// Maps a multipartition label "(…|c)…" to the label of its multisegment.
std::string mp_label_to_seg_label(const std::string& label);

struct VerifyReport {
  bool seg_vs_mp = false;
  bool tensor_vs_mp = false;
  std::string detail;

  bool ok() const noexcept { return seg_vs_mp && tensor_vs_mp; }
};

/// Three-way check: B(λ) on multisegments ≅ B(λ) on multipartitions under
/// delta_of_mp, and the multipartition graph equals the tensor component.
VerifyReport verify_three_way(const Weight& lambda, int max_n,
                              const Limits& limits = {});

}  // namespace mseg
