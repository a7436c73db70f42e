#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mteam/formula.hpp"
#include "mteam/multiteam.hpp"
#include "mteam/structure.hpp"

namespace mteam {

using Rng = std::mt19937_64;

/// Which atoms and operators a random formula may use.
enum class FormulaClass {
    FirstOrder,   // literals, &, |, E, A
    Dep,          // + dep
    DepIncCi,     // + dep, inc, ind
    PincInc,      // + pinc, inc
    Full,         // every atom, <p>, [p], ->{p}
};

struct StructureBounds {
    std::size_t max_domain = 3;
    /// Domain multiplicities are drawn from 1..max_domain_mult.
    unsigned max_domain_mult = 1;
    bool relations = true;
};

struct TeamBounds {
    std::size_t max_rows = 4;
    /// Multiplicities are drawn from 1..max_mult.
    unsigned max_mult = 3;
    /// Allow the occasional zero-multiplicity row in storage.
    bool zero_rows = false;
};

struct FormulaBounds {
    /// Height of the syntax tree; atoms have depth 1.
    std::size_t max_depth = 4;
    std::size_t max_quantifiers = 2;
    /// Whether Full formulas may use ->{p}.
    bool implication = true;
    /// Thresholds for approximation operators.
    std::vector<Rational> thresholds{Rational(0), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)};
};

/// Domain values "0".."k-1"; relations P/1 and R/2 with random tuples.
Multistructure random_structure(Rng& rng, const StructureBounds& b = {});

/// Team variables x0..x{n-1}.
std::vector<Var> team_vars(std::size_t n);

/// Rows over `vars` with values from the domain support.
Multiteam random_team(Rng& rng, const Multistructure& A, const std::vector<Var>& vars, const TeamBounds& b = {});

/// Free variables are drawn from `scope`; quantifiers bind a scope
/// variable or one of u, v.
Formula random_formula(Rng& rng, FormulaClass cls, const Multistructure& A, const std::vector<Var>& scope,
                       const FormulaBounds& b = {});

/// Uniform integer in [lo, hi].
std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi);

}  // namespace mteam
