#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "mteam/io.hpp"

namespace mteam {

struct Literal {
    Var var;
    /// 0 for x, 1 for ¬x.
    int parity = 0;
    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

struct CnfFormula {
    std::vector<Clause> clauses;

    /// Distinct variables in order of name.
    std::vector<Var> variables() const;
    /// Every clause has exactly `k` literals.
    bool has_width(std::size_t k) const;
};

/// DIMACS CNF: optional `c` comment lines, a `p cnf V C` header, then
/// 0-terminated clauses of signed integers. Variable k becomes `x<k>`.
CnfFormula parse_dimacs(std::string_view text);

/// Team over clause, literal, variable, parity with one row per literal
/// occurrence (clauses and literals numbered from 1), unit multiplicities,
/// a domain of every token used, and the formula
///   <1/3>(dep(clause ; literal) & dep(variable ; parity)).
/// Throws InputError unless every clause has three literals.
Instance encode_3sat(const CnfFormula& phi);

/// Same team for two literals per clause, with the formula
///   dep(clause ; literal) | (dep(clause ; literal) & <frac> dep(variable ; parity)).
Instance encode_maxsat(const CnfFormula& phi, const Rational& frac);

/// Exhaustive over all assignments. Throws InputError beyond 20 variables.
bool sat_oracle(const CnfFormula& phi);
std::size_t maxsat_oracle(const CnfFormula& phi);

}  // namespace mteam
