#pragma once

#include "mteam/eval.hpp"

namespace mteam {

/// Smallest submultiset size that meets `p` for a team of size `total`:
/// ceil(p·total) for ratios, p itself for absolute counts. Throws
/// InputError when the threshold does not fit the configured reading.
Count min_subteam_size(const Count& total, const Threshold& p, ApproxKind kind);

/// Exact test |Y| >= p·|X| (ratio) or |Y| >= p (absolute).
bool meets_threshold(const Count& sub_size, const Count& total, const Threshold& p, ApproxKind kind);

/// Every submultiset (0 <= n(s) <= m(s) on the carrier of `t`) with size at
/// least `min_size`, each exactly once, in a fixed order.
bool enum_bounded_submultisets(const Multiteam& t, const Count& min_size, const TeamVisitor& visit);

/// <p>φ: some large-enough submultiset satisfies φ.
bool eval_exists_frac(const Multistructure& A, const Multiteam& t, const Threshold& p, const Formula& f,
                      const SemanticsConfig& cfg = {});

/// [p]φ: every large-enough submultiset satisfies φ.
bool eval_forall_frac(const Multistructure& A, const Multiteam& t, const Threshold& p, const Formula& f,
                      const SemanticsConfig& cfg = {});

/// (φ ->{p} ψ): every large-enough submultiset satisfying φ satisfies ψ.
bool eval_impl_frac(const Multistructure& A, const Multiteam& t, const Threshold& p, const Formula& f,
                    const Formula& g, const SemanticsConfig& cfg = {});

}  // namespace mteam
