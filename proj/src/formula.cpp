#include "mteam/formula.hpp"

#include <algorithm>

namespace mteam {

Formula::Formula(FormulaNode node) : node_(std::make_shared<const FormulaNode>(std::move(node))) {}

bool operator==(const Formula& a, const Formula& b) {
    return a.node_ == b.node_ || *a.node_ == *b.node_;
}

Formula eq(Var x, Var y) { return Formula({Eq{x, y}}); }
Formula neq(Var x, Var y) { return Formula({Neq{x, y}}); }
Formula rel(std::string name, Tuple args) { return Formula({Rel{std::move(name), std::move(args)}}); }
Formula neg_rel(std::string name, Tuple args) { return Formula({NegRel{std::move(name), std::move(args)}}); }
Formula conj(Formula a, Formula b) { return Formula({And{std::move(a), std::move(b)}}); }
Formula disj(Formula a, Formula b) { return Formula({Or{std::move(a), std::move(b)}}); }
Formula exists(Var x, Formula body) { return Formula({Exists{x, std::move(body)}}); }
Formula forall(Var x, Formula body) { return Formula({Forall{x, std::move(body)}}); }
Formula dep(Tuple det, Tuple dependent) { return Formula({Dep{std::move(det), std::move(dependent)}}); }
Formula inc(Tuple lhs, Tuple rhs) { return Formula({Inc{std::move(lhs), std::move(rhs)}}); }
Formula excl(Tuple lhs, Tuple rhs) { return Formula({Excl{std::move(lhs), std::move(rhs)}}); }
Formula ci(Tuple cond, Tuple left, Tuple right) {
    return Formula({CI{std::move(cond), std::move(left), std::move(right)}});
}
Formula pinc(Tuple lhs, Tuple rhs) { return Formula({PInc{std::move(lhs), std::move(rhs)}}); }
Formula pci(Tuple cond, Tuple left, Tuple right) {
    return Formula({PCI{std::move(cond), std::move(left), std::move(right)}});
}
Formula exists_frac(Threshold p, Formula body) { return Formula({ExistsFrac{std::move(p), std::move(body)}}); }
Formula forall_frac(Threshold p, Formula body) { return Formula({ForallFrac{std::move(p), std::move(body)}}); }
Formula impl_frac(Threshold p, Formula antecedent, Formula consequent) {
    return Formula({ImplFrac{std::move(p), std::move(antecedent), std::move(consequent)}});
}

namespace {

template <class... Fs>
struct Overload : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

void insert_all(std::set<Var>& out, const Tuple& t) { out.insert(t.begin(), t.end()); }

void collect_free(const Formula& f, std::set<Var>& out) {
    std::visit(Overload{
                   [&](const Eq& a) { out.insert({a.lhs, a.rhs}); },
                   [&](const Neq& a) { out.insert({a.lhs, a.rhs}); },
                   [&](const Rel& a) { insert_all(out, a.args); },
                   [&](const NegRel& a) { insert_all(out, a.args); },
                   [&](const And& a) { collect_free(a.lhs, out); collect_free(a.rhs, out); },
                   [&](const Or& a) { collect_free(a.lhs, out); collect_free(a.rhs, out); },
                   [&](const Exists& a) {
                       auto inner = free_vars(a.body);
                       inner.erase(a.var);
                       out.insert(inner.begin(), inner.end());
                   },
                   [&](const Forall& a) {
                       auto inner = free_vars(a.body);
                       inner.erase(a.var);
                       out.insert(inner.begin(), inner.end());
                   },
                   [&](const Dep& a) { insert_all(out, a.det); insert_all(out, a.dependent); },
                   [&](const Inc& a) { insert_all(out, a.lhs); insert_all(out, a.rhs); },
                   [&](const Excl& a) { insert_all(out, a.lhs); insert_all(out, a.rhs); },
                   [&](const CI& a) { insert_all(out, a.cond); insert_all(out, a.left); insert_all(out, a.right); },
                   [&](const PInc& a) { insert_all(out, a.lhs); insert_all(out, a.rhs); },
                   [&](const PCI& a) { insert_all(out, a.cond); insert_all(out, a.left); insert_all(out, a.right); },
                   [&](const ExistsFrac& a) { collect_free(a.body, out); },
                   [&](const ForallFrac& a) { collect_free(a.body, out); },
                   [&](const ImplFrac& a) { collect_free(a.antecedent, out); collect_free(a.consequent, out); },
               },
               f.node().v);
}

// Where a subformula is printed; decides whether it needs parentheses.
enum class Slot { Top, OrLeft, OrRight, AndLeft, AndRight, Operand };

std::string join(const Tuple& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += t[i].name();
    }
    return out;
}

std::string tuples(std::initializer_list<const Tuple*> parts) {
    std::string out;
    const Tuple* prev = nullptr;
    for (const Tuple* part : parts) {
        if (prev) {
            if (!prev->empty()) out += " ";
            out += ";";
            if (!part->empty()) out += " ";
        }
        out += join(*part);
        prev = part;
    }
    return out;
}

std::string print_threshold(const Threshold& p) {
    return p.absolute ? "#" + to_string(numerator_of(p.value)) : to_string(p.value);
}

std::string print_in(const Formula& f, Slot slot);

std::string wrap(std::string s, bool parens) { return parens ? "(" + s + ")" : s; }

std::string print_in(const Formula& f, Slot slot) {
    return std::visit(
        Overload{
            [](const Eq& a) { return a.lhs.name() + " = " + a.rhs.name(); },
            [](const Neq& a) { return a.lhs.name() + " != " + a.rhs.name(); },
            [](const Rel& a) { return a.name + "(" + join(a.args) + ")"; },
            [](const NegRel& a) { return "~" + a.name + "(" + join(a.args) + ")"; },
            [&](const And& a) {
                bool parens = slot == Slot::AndRight || slot == Slot::Operand;
                return wrap(print_in(a.lhs, Slot::AndLeft) + " & " + print_in(a.rhs, Slot::AndRight), parens);
            },
            [&](const Or& a) {
                bool parens = slot != Slot::Top && slot != Slot::OrLeft;
                return wrap(print_in(a.lhs, Slot::OrLeft) + " | " + print_in(a.rhs, Slot::OrRight), parens);
            },
            [&](const Exists& a) { return wrap("E " + a.var.name() + ". " + print_in(a.body, Slot::Top), slot != Slot::Top); },
            [&](const Forall& a) { return wrap("A " + a.var.name() + ". " + print_in(a.body, Slot::Top), slot != Slot::Top); },
            [](const Dep& a) { return "dep(" + tuples({&a.det, &a.dependent}) + ")"; },
            [](const Inc& a) { return "inc(" + tuples({&a.lhs, &a.rhs}) + ")"; },
            [](const Excl& a) { return "excl(" + tuples({&a.lhs, &a.rhs}) + ")"; },
            [](const CI& a) { return "ind(" + tuples({&a.cond, &a.left, &a.right}) + ")"; },
            [](const PInc& a) { return "pinc(" + tuples({&a.lhs, &a.rhs}) + ")"; },
            [](const PCI& a) { return "pind(" + tuples({&a.cond, &a.left, &a.right}) + ")"; },
            [](const ExistsFrac& a) { return "<" + print_threshold(a.p) + "> " + print_in(a.body, Slot::Operand); },
            [](const ForallFrac& a) { return "[" + print_threshold(a.p) + "] " + print_in(a.body, Slot::Operand); },
            [](const ImplFrac& a) {
                return "(" + print_in(a.antecedent, Slot::Top) + " ->{" + print_threshold(a.p) + "} " +
                       print_in(a.consequent, Slot::Top) + ")";
            },
        },
        f.node().v);
}

}  // namespace

std::set<Var> free_vars(const Formula& f) {
    std::set<Var> out;
    collect_free(f, out);
    return out;
}

std::string print(const Formula& f) { return print_in(f, Slot::Top); }

std::size_t depth(const Formula& f) {
    return std::visit(Overload{
                          [](const And& a) { return 1 + std::max(depth(a.lhs), depth(a.rhs)); },
                          [](const Or& a) { return 1 + std::max(depth(a.lhs), depth(a.rhs)); },
                          [](const Exists& a) { return 1 + depth(a.body); },
                          [](const Forall& a) { return 1 + depth(a.body); },
                          [](const ExistsFrac& a) { return 1 + depth(a.body); },
                          [](const ForallFrac& a) { return 1 + depth(a.body); },
                          [](const ImplFrac& a) { return 1 + std::max(depth(a.antecedent), depth(a.consequent)); },
                          [](const auto&) -> std::size_t { return 1; },
                      },
                      f.node().v);
}

bool is_first_order(const Formula& f) {
    return std::visit(Overload{
                          [](const Eq&) { return true; },
                          [](const Neq&) { return true; },
                          [](const Rel&) { return true; },
                          [](const NegRel&) { return true; },
                          [](const And& a) { return is_first_order(a.lhs) && is_first_order(a.rhs); },
                          [](const Or& a) { return is_first_order(a.lhs) && is_first_order(a.rhs); },
                          [](const Exists& a) { return is_first_order(a.body); },
                          [](const Forall& a) { return is_first_order(a.body); },
                          [](const auto&) { return false; },
                      },
                      f.node().v);
}

std::string node_name(const Formula& f) {
    return std::visit(Overload{
                          [](const Eq&) -> std::string { return "="; },
                          [](const Neq&) -> std::string { return "!="; },
                          [](const Rel&) -> std::string { return "rel"; },
                          [](const NegRel&) -> std::string { return "~rel"; },
                          [](const And&) -> std::string { return "and"; },
                          [](const Or&) -> std::string { return "or"; },
                          [](const Exists&) -> std::string { return "exists"; },
                          [](const Forall&) -> std::string { return "forall"; },
                          [](const Dep&) -> std::string { return "dep"; },
                          [](const Inc&) -> std::string { return "inc"; },
                          [](const Excl&) -> std::string { return "excl"; },
                          [](const CI&) -> std::string { return "ind"; },
                          [](const PInc&) -> std::string { return "pinc"; },
                          [](const PCI&) -> std::string { return "pind"; },
                          [](const ExistsFrac& a) -> std::string { return "<" + print_threshold(a.p) + ">"; },
                          [](const ForallFrac& a) -> std::string { return "[" + print_threshold(a.p) + "]"; },
                          [](const ImplFrac& a) -> std::string { return "->{" + print_threshold(a.p) + "}"; },
                      },
                      f.node().v);
}

}  // namespace mteam
