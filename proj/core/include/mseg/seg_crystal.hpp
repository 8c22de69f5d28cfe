#pragma once

#include <optional>
#include <vector>

#include "mseg/core_types.hpp"
#include "mseg/signature.hpp"

namespace mseg {

/// Result of an E-type operator: std::nullopt is the bold 0, which is not the
/// empty multisegment.
using SegCrystalResult = std::optional<Multisegment>;

// E_j side: right order, end = j gives −, end = j−1 gives +, "−+" cancels.

/// The reduced j-signature of `d`; item ids index right_order(d).
ReducedSignature e_signature(const Multisegment& d, Content j);

int eps(const Multisegment& d, Content j);
/// Uncanceled + count, without the virtual empty segment.
int phi(const Multisegment& d, Content j);

/// Lowers the end of the segment owning the leftmost uncanceled −.
SegCrystalResult apply_e(const Multisegment& d, Content j);

/// Inverse of apply_e. A virtual + for Δ[j, j−1] sits leftmost among the ±
/// letters; the rightmost uncanceled + is raised (or Δ[j, j] is inserted when
/// the virtual letter wins). Total on multisegments.
Multisegment apply_f(const Multisegment& d, Content j);

// Ê_i side: left order, start = i gives −, start = i+1 gives +, "+−" cancels.

/// The reduced hatted i-signature of `d`; item ids index left_order(d).
ReducedSignature e_hat_signature(const Multisegment& d, Content i);

int eps_hat(const Multisegment& d, Content i);
int phi_hat(const Multisegment& d, Content i);

/// Raises the start of the segment owning the rightmost uncanceled −.
SegCrystalResult apply_e_hat(const Multisegment& d, Content i);

/// Inverse of apply_e_hat; virtual + for Δ[i+1, i] sits rightmost and the
/// leftmost uncanceled + is chosen.
Multisegment apply_f_hat(const Multisegment& d, Content i);

/// True iff eps_hat(d, i) ≤ m_i for every content i.
bool cyclotomic_check(const Multisegment& d, const Weight& lambda);

/// The componentwise-minimal weight passing cyclotomic_check.
Weight minimal_weight(const Multisegment& d);

/// Repeatedly apply E_j for the smallest j with eps(d, j) > 0 until ∅.
/// Length equals n(d).
std::vector<Content> hw_path(const Multisegment& d);

}  // namespace mseg
