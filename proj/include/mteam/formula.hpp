#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mteam/numeric.hpp"
#include "mteam/symbol.hpp"

namespace mteam {

using Tuple = std::vector<Var>;

/// Threshold of an approximation operator: a ratio in [0,1] (`2/3`) or an
/// absolute row count (`#5`).
struct Threshold {
    Rational value;
    bool absolute = false;

    static Threshold ratio(Rational p) { return {std::move(p), false}; }
    static Threshold count(Count k) { return {Rational(std::move(k)), true}; }

    friend bool operator==(const Threshold&, const Threshold&) = default;
};

struct FormulaNode;

/// Immutable, shareable handle to a formula AST node.
class Formula {
public:
    explicit Formula(FormulaNode node);

    const FormulaNode& node() const { return *node_; }
    const void* id() const { return node_.get(); }

    friend bool operator==(const Formula& a, const Formula& b);

private:
    std::shared_ptr<const FormulaNode> node_;
};

// Literals
struct Eq { Var lhs, rhs; friend bool operator==(const Eq&, const Eq&) = default; };
struct Neq { Var lhs, rhs; friend bool operator==(const Neq&, const Neq&) = default; };
struct Rel { std::string name; Tuple args; friend bool operator==(const Rel&, const Rel&) = default; };
struct NegRel { std::string name; Tuple args; friend bool operator==(const NegRel&, const NegRel&) = default; };

// Connectives and quantifiers
struct And { Formula lhs, rhs; friend bool operator==(const And&, const And&) = default; };
struct Or { Formula lhs, rhs; friend bool operator==(const Or&, const Or&) = default; };
struct Exists { Var var; Formula body; friend bool operator==(const Exists&, const Exists&) = default; };
struct Forall { Var var; Formula body; friend bool operator==(const Forall&, const Forall&) = default; };

// Dependency atoms; evaluated on the support of the team.
struct Dep { Tuple det, dependent; friend bool operator==(const Dep&, const Dep&) = default; };
struct Inc { Tuple lhs, rhs; friend bool operator==(const Inc&, const Inc&) = default; };
struct Excl { Tuple lhs, rhs; friend bool operator==(const Excl&, const Excl&) = default; };
/// left ⊥_cond right
struct CI { Tuple cond, left, right; friend bool operator==(const CI&, const CI&) = default; };

// Probabilistic atoms; evaluated on multiplicities.
struct PInc { Tuple lhs, rhs; friend bool operator==(const PInc&, const PInc&) = default; };
struct PCI { Tuple cond, left, right; friend bool operator==(const PCI&, const PCI&) = default; };

// Approximation operators
struct ExistsFrac { Threshold p; Formula body; friend bool operator==(const ExistsFrac&, const ExistsFrac&) = default; };
struct ForallFrac { Threshold p; Formula body; friend bool operator==(const ForallFrac&, const ForallFrac&) = default; };
struct ImplFrac {
    Threshold p;
    Formula antecedent, consequent;
    friend bool operator==(const ImplFrac&, const ImplFrac&) = default;
};

struct FormulaNode {
    std::variant<Eq, Neq, Rel, NegRel, And, Or, Exists, Forall, Dep, Inc, Excl, CI, PInc, PCI, ExistsFrac,
                 ForallFrac, ImplFrac>
        v;
    friend bool operator==(const FormulaNode&, const FormulaNode&) = default;
};

template <class Node>
const Node* as(const Formula& f) {
    return std::get_if<Node>(&f.node().v);
}

// Builders.
Formula eq(Var x, Var y);
Formula neq(Var x, Var y);
Formula rel(std::string name, Tuple args);
Formula neg_rel(std::string name, Tuple args);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula exists(Var x, Formula body);
Formula forall(Var x, Formula body);
Formula dep(Tuple det, Tuple dependent);
Formula inc(Tuple lhs, Tuple rhs);
Formula excl(Tuple lhs, Tuple rhs);
Formula ci(Tuple cond, Tuple left, Tuple right);
Formula pinc(Tuple lhs, Tuple rhs);
Formula pci(Tuple cond, Tuple left, Tuple right);
Formula exists_frac(Threshold p, Formula body);
Formula forall_frac(Threshold p, Formula body);
Formula impl_frac(Threshold p, Formula antecedent, Formula consequent);

/// Parses the text syntax. Throws ParseError with line and column.
Formula parse(std::string_view text);

/// Canonical text; parse(print(f)) == f.
std::string print(const Formula& f);

std::set<Var> free_vars(const Formula& f);

/// Height of the AST; atoms have depth 1.
std::size_t depth(const Formula& f);

/// No dependency atoms and no approximation operators.
bool is_first_order(const Formula& f);

/// Short operator name of the root node, e.g. "or", "exists", "<p>".
std::string node_name(const Formula& f);

}  // namespace mteam
