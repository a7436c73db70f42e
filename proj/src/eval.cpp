#include "mteam/eval.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "mteam/approx.hpp"
#include "mteam/atoms.hpp"
#include "mteam/error.hpp"

namespace mteam {

namespace {

// Visits every vector between lo and hi (inclusive, componentwise) in
// lexicographic order, last component fastest. Returns true if stopped.
template <class T, class F>
bool odometer(const std::vector<T>& lo, const std::vector<T>& hi, F&& visit) {
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i]) return false;
    std::vector<T> cur = lo;
    while (true) {
        if (!visit(cur)) return true;
        std::size_t i = cur.size();
        while (true) {
            if (i == 0) return false;
            --i;
            if (cur[i] < hi[i]) {
                ++cur[i];
                break;
            }
            cur[i] = lo[i];
        }
    }
}

// Right-hand multiplicities compatible with a chosen left vector.
void right_bounds(const Multiteam& t, const std::vector<Count>& k, bool strict, std::vector<Count>& lo,
                  std::vector<Count>& hi) {
    lo.resize(k.size());
    hi.resize(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        lo[i] = t.count(i) - k[i];
        hi[i] = strict ? lo[i] : t.count(i);
    }
}

// ---- supplements ---------------------------------------------------------

// Per-row outcome vectors over the domain support for a row of
// multiplicity m: lax allows up to m·n(a) copies of each a with at least m
// in total, strict exactly m in total. Set mode caps every entry at 1.
std::vector<std::vector<Count>> row_outcomes(const Count& m, const std::vector<Count>& n, const SemanticsConfig& cfg) {
    std::vector<Count> lo(n.size(), 0), hi(n.size());
    for (std::size_t a = 0; a < n.size(); ++a) hi[a] = cfg.set_mode() ? Count(1) : Count(m * n[a]);
    if (cfg.strict())
        for (auto& h : hi) h = std::min(h, m);
    std::vector<std::vector<Count>> out;
    odometer(lo, hi, [&](const std::vector<Count>& c) {
        Count total = 0;
        for (const auto& v : c) total += v;
        if (cfg.strict() ? total == m : total >= m) out.push_back(c);
        return true;
    });
    return out;
}

struct SupplementSpace {
    Multiteam base;                                   // all candidate rows, zero counts
    std::vector<std::vector<std::size_t>> row_index;  // [group][value] -> carrier row
    std::vector<std::vector<std::vector<Count>>> options;  // [group] -> distinct outcome vectors
};

SupplementSpace supplement_space(const Multiteam& t, const Var& x, const Multiset& dom, const SemanticsConfig& cfg) {
    const std::vector<Value> values = dom.support();
    if (values.empty()) throw InputError("quantifier over an empty domain");
    std::vector<Count> n;
    for (const auto& a : values) n.push_back(dom.multiplicity(a));

    const auto old_col = t.column(x);
    std::vector<Var> vars;
    for (const auto& v : t.vars())
        if (v != x) vars.push_back(v);
    const std::size_t pos = std::lower_bound(vars.begin(), vars.end(), x) - vars.begin();
    vars.insert(vars.begin() + static_cast<std::ptrdiff_t>(pos), x);

    // Rows agreeing outside x become indistinguishable once x is reassigned.
    std::map<Row, std::vector<Count>> groups;
    for (std::size_t i = 0; i < t.row_count(); ++i) {
        if (t.count(i) == 0) continue;
        Row key = t.row(i);
        if (old_col) key.erase(key.begin() + static_cast<std::ptrdiff_t>(*old_col));
        groups[key].push_back(t.count(i));
    }

    auto extended = [&](const Row& key, const Value& a) {
        Row r = key;
        r.insert(r.begin() + static_cast<std::ptrdiff_t>(pos), a);
        return r;
    };
    std::vector<std::pair<Row, Count>> rows;
    for (const auto& [key, members] : groups)
        for (const auto& a : values) rows.emplace_back(extended(key, a), 0);

    SupplementSpace space{Multiteam(vars, std::move(rows)), {}, {}};
    const auto& carrier = space.base.rows();
    for (const auto& [key, members] : groups) {
        std::vector<std::size_t> idx;
        for (const auto& a : values)
            idx.push_back(std::lower_bound(carrier.begin(), carrier.end(), extended(key, a)) - carrier.begin());
        space.row_index.push_back(std::move(idx));

        // Merged rows behave like one row of the summed multiplicity (a
        // flow argument splits any such outcome back over the members). In
        // set mode the outcomes are unions: any nonempty set, or under
        // strict semantics one of at most as many values as members.
        if (cfg.set_mode()) {
            std::vector<std::vector<Count>> opts;
            odometer(std::vector<Count>(values.size(), 0), std::vector<Count>(values.size(), 1),
                     [&](const std::vector<Count>& c) {
                         Count total = 0;
                         for (const auto& v : c) total += v;
                         if (total >= 1 && (!cfg.strict() || total <= members.size())) opts.push_back(c);
                         return true;
                     });
            space.options.push_back(std::move(opts));
        } else {
            Count m = 0;
            for (const auto& c : members) m += c;
            space.options.push_back(row_outcomes(m, n, cfg));
        }
    }
    return space;
}

// ---- precondition checks ---------------------------------------------------

void check_threshold(const Threshold& p, const SemanticsConfig& cfg) {
    if (cfg.approx_kind == ApproxKind::Ratio && p.absolute)
        throw InputError("absolute threshold #" + to_string(p.value) + " used in ratio mode");
    if (cfg.approx_kind == ApproxKind::Absolute && !p.absolute)
        throw InputError("ratio threshold " + to_string(p.value) + " used in absolute mode (write #k)");
    if (!p.absolute && (p.value < 0 || p.value > 1))
        throw InputError("threshold " + to_string(p.value) + " outside [0,1]");
}

void check_formula(const Multistructure& A, const Formula& f, const SemanticsConfig& cfg) {
    std::visit(
        [&](const auto& n) {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, Rel> || std::is_same_v<N, NegRel>) {
                const Relation& r = A.relation(n.name);
                if (r.arity != n.args.size())
                    throw InputError("relation " + n.name + " has arity " + std::to_string(r.arity) + ", used with " +
                                     std::to_string(n.args.size()) + " arguments");
            } else if constexpr (std::is_same_v<N, And> || std::is_same_v<N, Or>) {
                check_formula(A, n.lhs, cfg);
                check_formula(A, n.rhs, cfg);
            } else if constexpr (std::is_same_v<N, Exists> || std::is_same_v<N, Forall>) {
                check_formula(A, n.body, cfg);
            } else if constexpr (std::is_same_v<N, ExistsFrac> || std::is_same_v<N, ForallFrac>) {
                check_threshold(n.p, cfg);
                check_formula(A, n.body, cfg);
            } else if constexpr (std::is_same_v<N, ImplFrac>) {
                check_threshold(n.p, cfg);
                check_formula(A, n.antecedent, cfg);
                check_formula(A, n.consequent, cfg);
            } else if constexpr (std::is_same_v<N, Inc> || std::is_same_v<N, Excl> || std::is_same_v<N, PInc>) {
                if (n.lhs.size() != n.rhs.size()) throw InputError(node_name(f) + ": tuples have different lengths");
            }
        },
        f.node().v);
}

void check_team(const Multistructure& A, const Multiteam& t, const Formula& f, const SemanticsConfig& cfg) {
    for (const auto& v : free_vars(f))
        if (!t.has_var(v)) throw InputError("free variable '" + v.name() + "' is not in the team domain");
    for (std::size_t i = 0; i < t.row_count(); ++i) {
        if (t.count(i) == 0) continue;
        if (cfg.set_mode() && t.count(i) != 1)
            throw InputError("set semantics requires multiplicity 1, row " + std::to_string(i) + " has " +
                             to_string(t.count(i)));
        for (const auto& a : t.row(i))
            if (!A.domain().contains(a)) throw InputError("team value '" + a.name() + "' is not in the domain");
    }
    if (cfg.set_mode())
        for (const auto& [a, m] : A.domain().entries())
            if (m > 1) throw InputError("set semantics requires domain multiplicity 1, '" + a.name() + "' has " + to_string(m));
}

// ---- memo --------------------------------------------------------------------

struct MemoKey {
    const void* node;
    std::vector<const void*> cells;
    std::vector<Count> counts;
    friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
        std::size_t h = std::hash<const void*>{}(k.node);
        for (auto p : k.cells) h = h * 1000003u ^ std::hash<const void*>{}(p);
        for (const auto& c : k.counts) h = h * 1000003u ^ static_cast<std::size_t>(c.convert_to<unsigned long long>());
        return h;
    }
};

bool memoizable(const Formula& f) {
    return as<Or>(f) || as<Exists>(f) || as<Forall>(f) || as<ExistsFrac>(f) || as<ForallFrac>(f) || as<ImplFrac>(f);
}

Multiteam cap_to_set(const Multiteam& t) {
    std::vector<Count> counts = t.counts();
    for (auto& c : counts)
        if (c > 1) c = 1;
    return t.with_counts(std::move(counts));
}

// ---- evaluator -----------------------------------------------------------------

class Evaluator {
public:
    Evaluator(const Multistructure& A, const SemanticsConfig& cfg, const EvalOptions& opts)
        : A_(A), cfg_(cfg), memo_on_(opts.memo && !opts.witness), witness_(opts.witness), limit_(opts.step_limit) {}

    bool sat(const Formula& f, const Multiteam& t) {
        if (limit_ && ++steps_ > limit_) throw StepLimitExceeded();
        if (!memo_on_ || !memoizable(f)) return dispatch(f, t);
        MemoKey key{f.id(), {}, {}};
        for (const auto& v : t.vars()) key.cells.push_back(v.id());
        for (std::size_t i = 0; i < t.row_count(); ++i) {
            if (t.count(i) == 0) continue;
            for (const auto& a : t.row(i)) key.cells.push_back(a.id());
            key.counts.push_back(t.count(i));
        }
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool r = dispatch(f, t);
        memo_.emplace(std::move(key), r);
        return r;
    }

private:
    bool dispatch(const Formula& f, const Multiteam& t) {
        return std::visit([&](const auto& n) { return on(n, f, t); }, f.node().v);
    }

    template <class Pred>
    bool all_rows(const Multiteam& t, Pred&& pred) {
        for (std::size_t i = 0; i < t.row_count(); ++i)
            if (t.count(i) > 0 && !pred(t.row(i))) return false;
        return true;
    }

    bool on(const Eq& n, const Formula&, const Multiteam& t) {
        auto cx = t.column_of(n.lhs), cy = t.column_of(n.rhs);
        return all_rows(t, [&](const Row& r) { return r[cx] == r[cy]; });
    }
    bool on(const Neq& n, const Formula&, const Multiteam& t) {
        auto cx = t.column_of(n.lhs), cy = t.column_of(n.rhs);
        return all_rows(t, [&](const Row& r) { return r[cx] != r[cy]; });
    }
    bool on(const Rel& n, const Formula&, const Multiteam& t) {
        auto cols = columns_of(t, n.args);
        return all_rows(t, [&](const Row& r) { return A_.holds(n.name, project(r, cols)); });
    }
    bool on(const NegRel& n, const Formula&, const Multiteam& t) {
        auto cols = columns_of(t, n.args);
        return all_rows(t, [&](const Row& r) { return !A_.holds(n.name, project(r, cols)); });
    }
    bool on(const And& n, const Formula&, const Multiteam& t) { return sat(n.lhs, t) && sat(n.rhs, t); }

    bool on(const Or& n, const Formula& f, const Multiteam& t) {
        const std::vector<Count> zero(t.row_count(), 0);
        std::vector<Count> lo, hi;
        return odometer(zero, t.counts(), [&](const std::vector<Count>& k) {
            Multiteam left = t.with_counts(k);
            const std::size_t mark = open_step(f, t, {left});
            if (!sat(n.lhs, left)) {
                close_step(mark);
                return true;
            }
            right_bounds(t, k, cfg_.strict(), lo, hi);
            bool found = odometer(lo, hi, [&](const std::vector<Count>& l) {
                Multiteam right = t.with_counts(l);
                const std::size_t inner = witness_ ? witness_->size() : 0;
                if (witness_) (*witness_)[mark].parts = {left, right};
                if (sat(n.rhs, right)) return false;
                close_step(inner);
                return true;
            });
            if (found) return false;
            close_step(mark);
            return true;
        });
    }

    bool on(const Exists& n, const Formula& f, const Multiteam& t) {
        return enum_supplements(t, n.var, A_.domain(), cfg_, [&](const Multiteam& s) {
            const std::size_t mark = open_step(f, t, {s});
            if (sat(n.body, s)) return false;
            close_step(mark);
            return true;
        });
    }

    bool on(const Forall& n, const Formula&, const Multiteam& t) {
        Multiteam ext = extend_universal(t, n.var, A_.domain());
        return sat(n.body, cfg_.set_mode() ? cap_to_set(ext) : ext);
    }

    bool on(const Dep& n, const Formula&, const Multiteam& t) { return eval_dep(t, n.det, n.dependent); }
    bool on(const Inc& n, const Formula&, const Multiteam& t) { return eval_inc(t, n.lhs, n.rhs); }
    bool on(const Excl& n, const Formula&, const Multiteam& t) { return eval_excl(t, n.lhs, n.rhs); }
    bool on(const CI& n, const Formula&, const Multiteam& t) { return eval_ci(t, n.cond, n.left, n.right); }
    bool on(const PInc& n, const Formula&, const Multiteam& t) { return eval_pinc(t, n.lhs, n.rhs); }
    bool on(const PCI& n, const Formula&, const Multiteam& t) { return eval_pci(t, n.cond, n.left, n.right); }

    bool on(const ExistsFrac& n, const Formula& f, const Multiteam& t) {
        return enum_bounded_submultisets(t, min_subteam_size(t.size(), n.p, cfg_.approx_kind), [&](const Multiteam& y) {
            const std::size_t mark = open_step(f, t, {y});
            if (sat(n.body, y)) return false;
            close_step(mark);
            return true;
        });
    }

    bool on(const ForallFrac& n, const Formula&, const Multiteam& t) {
        return !enum_bounded_submultisets(t, min_subteam_size(t.size(), n.p, cfg_.approx_kind),
                                          [&](const Multiteam& y) { return sat(n.body, y); });
    }

    bool on(const ImplFrac& n, const Formula&, const Multiteam& t) {
        return !enum_bounded_submultisets(t, min_subteam_size(t.size(), n.p, cfg_.approx_kind), [&](const Multiteam& y) {
            return !sat(n.antecedent, y) || sat(n.consequent, y);
        });
    }

    std::size_t open_step(const Formula& f, const Multiteam& t, std::vector<Multiteam> parts) {
        if (!witness_) return 0;
        witness_->push_back({f, t, std::move(parts)});
        return witness_->size() - 1;
    }
    void close_step(std::size_t mark) {
        if (witness_) witness_->erase(witness_->begin() + static_cast<std::ptrdiff_t>(mark), witness_->end());
    }

    const Multistructure& A_;
    SemanticsConfig cfg_;
    bool memo_on_;
    std::vector<WitnessStep>* witness_;
    std::uint64_t limit_;
    std::uint64_t steps_ = 0;
    std::unordered_map<MemoKey, bool, MemoHash> memo_;
};

bool classical(const Multistructure& A, const Assignment& s, const Formula& f) {
    return std::visit(
        [&](const auto& n) -> bool {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, Eq>) {
                return s[n.lhs] == s[n.rhs];
            } else if constexpr (std::is_same_v<N, Neq>) {
                return s[n.lhs] != s[n.rhs];
            } else if constexpr (std::is_same_v<N, Rel> || std::is_same_v<N, NegRel>) {
                Row r;
                for (const auto& v : n.args) r.push_back(s[v]);
                return A.holds(n.name, r) == std::is_same_v<N, Rel>;
            } else if constexpr (std::is_same_v<N, And>) {
                return classical(A, s, n.lhs) && classical(A, s, n.rhs);
            } else if constexpr (std::is_same_v<N, Or>) {
                return classical(A, s, n.lhs) || classical(A, s, n.rhs);
            } else if constexpr (std::is_same_v<N, Exists>) {
                return std::any_of(A.universe().begin(), A.universe().end(),
                                   [&](const Value& a) { return classical(A, s.updated(n.var, a), n.body); });
            } else if constexpr (std::is_same_v<N, Forall>) {
                return std::all_of(A.universe().begin(), A.universe().end(),
                                   [&](const Value& a) { return classical(A, s.updated(n.var, a), n.body); });
            } else {
                throw InputError("not a first-order formula: " + node_name(f));
            }
        },
        f.node().v);
}

}  // namespace

std::string to_string(const SemanticsConfig& cfg) {
    std::string s = cfg.set_mode() ? "set" : "multi";
    s += cfg.strict() ? "/strict" : "/lax";
    s += cfg.approx_kind == ApproxKind::Ratio ? "/ratio" : "/absolute";
    return s;
}

bool evaluate(const Multistructure& A, const Multiteam& t, const Formula& f, const SemanticsConfig& cfg,
              const EvalOptions& opts) {
    check_formula(A, f, cfg);
    check_team(A, t, f, cfg);
    if (opts.witness) opts.witness->clear();
    return Evaluator(A, cfg, opts).sat(f, t);
}

bool evaluate_classical(const Multistructure& A, const Assignment& s, const Formula& f) {
    if (!is_first_order(f)) throw InputError("not a first-order formula: " + print(f));
    return classical(A, s, f);
}

bool enum_or_splits(const Multiteam& t, const SemanticsConfig& cfg, const SplitVisitor& visit) {
    const std::vector<Count> zero(t.row_count(), 0);
    std::vector<Count> lo, hi;
    return odometer(zero, t.counts(), [&](const std::vector<Count>& k) {
        Multiteam left = t.with_counts(k);
        right_bounds(t, k, cfg.strict(), lo, hi);
        return !odometer(lo, hi, [&](const std::vector<Count>& l) { return visit(left, t.with_counts(l)); });
    });
}

bool enum_supplements(const Multiteam& t, const Var& x, const Multiset& dom, const SemanticsConfig& cfg,
                      const TeamVisitor& visit) {
    const SupplementSpace space = supplement_space(t, x, dom, cfg);
    const std::size_t groups = space.options.size();
    std::vector<std::size_t> lo(groups, 0), hi(groups);
    for (std::size_t g = 0; g < groups; ++g) hi[g] = space.options[g].size() - 1;
    std::vector<Count> counts(space.base.row_count());
    return odometer(lo, hi, [&](const std::vector<std::size_t>& choice) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t g = 0; g < groups; ++g) {
            const auto& c = space.options[g][choice[g]];
            for (std::size_t a = 0; a < c.size(); ++a) counts[space.row_index[g][a]] = c[a];
        }
        return visit(space.base.with_counts(counts));
    });
}

Multiteam extend_universal(const Multiteam& t, const Var& x, const Multiset& dom) {
    const std::vector<Value> values = dom.support();
    if (values.empty()) throw InputError("quantifier over an empty domain");
    const auto old_col = t.column(x);
    std::vector<Var> vars = t.vars();
    if (!old_col) vars.push_back(x);
    const std::size_t xcol = old_col ? *old_col : vars.size() - 1;
    std::vector<std::pair<Row, Count>> rows;
    for (std::size_t i = 0; i < t.row_count(); ++i) {
        if (t.count(i) == 0) continue;
        for (const auto& a : values) {
            Row r = t.row(i);
            if (old_col) r[xcol] = a;
            else r.push_back(a);
            rows.emplace_back(std::move(r), t.count(i) * dom.multiplicity(a));
        }
    }
    return Multiteam(std::move(vars), std::move(rows));
}

}  // namespace mteam
