#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mteam/formula.hpp"
#include "mteam/multiteam.hpp"
#include "mteam/structure.hpp"

namespace mteam {

enum class TeamKind { Set, Multi };
enum class Strictness { Lax, Strict };
enum class ApproxKind { Ratio, Absolute };

/// Which of the four team semantics to use, and how approximation
/// thresholds are read. Defaults to lax multiteam semantics with ratios.
struct SemanticsConfig {
    TeamKind team_kind = TeamKind::Multi;
    Strictness strictness = Strictness::Lax;
    ApproxKind approx_kind = ApproxKind::Ratio;

    bool set_mode() const { return team_kind == TeamKind::Set; }
    bool strict() const { return strictness == Strictness::Strict; }

    friend bool operator==(const SemanticsConfig&, const SemanticsConfig&) = default;
};

std::string to_string(const SemanticsConfig& cfg);

/// One choice made on the path to a successful check: the split of a
/// disjunction, the supplement of an existential, or the large-enough
/// submultiset of a `<p>` operator.
struct WitnessStep {
    Formula formula;
    Multiteam team;
    std::vector<Multiteam> parts;
};

struct EvalOptions {
    /// Cache results per (subformula, canonical multiteam). Never changes
    /// the answer; false selects the plain exhaustive search.
    bool memo = true;
    /// When set, receives the witness chain of a successful check in
    /// pre-order. Forces `memo` off so that every step is recorded.
    std::vector<WitnessStep>* witness = nullptr;
    /// Upper bound on recursive satisfaction calls; 0 means unbounded.
    /// Exceeding it throws StepLimitExceeded instead of answering.
    std::uint64_t step_limit = 0;
};

class StepLimitExceeded : public std::runtime_error {
public:
    StepLimitExceeded() : std::runtime_error("evaluation step limit exceeded") {}
};

/// A ⊨_t f under `cfg`. Throws InputError when free variables of `f` are
/// missing from the team, team values lie outside the domain support,
/// relation symbols are unknown, thresholds do not match the configured
/// reading, or set mode is given non-unit multiplicities.
bool evaluate(const Multistructure& A, const Multiteam& t, const Formula& f, const SemanticsConfig& cfg = {},
              const EvalOptions& opts = {});

/// Ordinary Tarskian truth of a first-order formula under one assignment,
/// with quantifiers ranging over the domain support.
bool evaluate_classical(const Multistructure& A, const Assignment& s, const Formula& f);

/// Visitors return false to stop the enumeration early. The enumerators
/// return true when they were stopped.
using SplitVisitor = std::function<bool(const Multiteam& left, const Multiteam& right)>;
using TeamVisitor = std::function<bool(const Multiteam&)>;

/// Every pair (Y, Z) admissible for a disjunction over `t`, row by row:
/// lax allows k, l <= m with k + l >= m, strict requires k + l = m. Both
/// parts share the carrier of `t`. Deterministic and duplicate-free.
bool enum_or_splits(const Multiteam& t, const SemanticsConfig& cfg, const SplitVisitor& visit);

/// Every distinct team X[F/x] for an admissible choice function F into the
/// domain `dom`. Throws InputError if `dom` has empty support.
bool enum_supplements(const Multiteam& t, const Var& x, const Multiset& dom, const SemanticsConfig& cfg,
                      const TeamVisitor& visit);

/// (X,m)[(A,n)/x]: row s(a/x) gets the sum over its preimages of m(s)·n(a).
Multiteam extend_universal(const Multiteam& t, const Var& x, const Multiset& dom);

}  // namespace mteam
