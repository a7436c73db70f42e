#pragma once

#include "mteam/formula.hpp"
#include "mteam/multiteam.hpp"

namespace mteam {

// Dependency atoms. Multiplicities are irrelevant: each of these is
// evaluated on the support of the team. Unknown variables and tuple
// length mismatches throw InputError.

/// dep(x̄; ȳ): rows agreeing on x̄ agree on ȳ.
bool eval_dep(const Multiteam& t, const Tuple& x, const Tuple& y);
/// x̄ ⊆ ȳ: every x̄-value occurs as a ȳ-value.
bool eval_inc(const Multiteam& t, const Tuple& x, const Tuple& y);
/// x̄ | ȳ: no x̄-value occurs as a ȳ-value.
bool eval_excl(const Multiteam& t, const Tuple& x, const Tuple& y);
/// ȳ ⊥_x̄ z̄
bool eval_ci(const Multiteam& t, const Tuple& x, const Tuple& y, const Tuple& z);

// Probabilistic atoms, evaluated on exact counts.

/// x̄ ≤ ȳ: for every realized value ā of x̄, |t_{x̄=ā}| <= |t_{ȳ=ā}|.
bool eval_pinc(const Multiteam& t, const Tuple& x, const Tuple& y);

/// ȳ ⫫_x̄ z̄: |t_{x̄ȳ=s(x̄ȳ)}| · |t_{x̄z̄=s(x̄z̄)}| = |t_{x̄ȳz̄=s(x̄ȳz̄)}| · |t_{x̄=s(x̄)}|
/// for every assignment s of Var(x̄ȳz̄). Only realized combinations are
/// visited; every other s gives 0 = 0.
bool eval_pci(const Multiteam& t, const Tuple& x, const Tuple& y, const Tuple& z);

/// ȳ ⫫_x̄ ȳ, which coincides with dep(x̄; ȳ).
bool eval_pci_as_dep(const Multiteam& t, const Tuple& x, const Tuple& y);

}  // namespace mteam
